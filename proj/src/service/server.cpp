#include "githru/service/server.hpp"

#include "httplib.h"

namespace githru::service {

bool serve(Service& service, const std::string& host, int port) {
    httplib::Server server;
    auto route = [&service](const httplib::Request& req, httplib::Response& res) {
        Request request{req.method, req.path, {}, req.body};
        for (const auto& [k, v] : req.params) request.query.emplace(k, v);
        const auto response = service.handle(request);
        res.status = response.status;
        res.set_content(response.text(), "application/json");
    };
    server.Get(".*", route);
    server.Post(".*", route);
    return server.listen(host, port);
}

}  // namespace githru::service
