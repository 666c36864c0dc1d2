#include "resonance/service.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Stateless resonance analysis HTTP service", "resonance_service"};
    std::string host = "127.0.0.1";
    int port = 8080;
    app.add_option("--host", host, "listen address")->envname("RESONANCE_HOST")->capture_default_str();
    app.add_option("--port", port, "listen port")->envname("RESONANCE_PORT")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    httplib::Server server;
    resonance::service::mount(server);
    std::cerr << "listening on " << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
        std::cerr << "failed to bind " << host << ":" << port << "\n";
        return 1;
    }
    return 0;
}
