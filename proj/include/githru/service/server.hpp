#pragma once

#include <string>

#include "githru/service/service.hpp"

namespace githru::service {

/// Blocking HTTP server serving `service` under /api. Returns false if the
/// port cannot be bound.
bool serve(Service& service, const std::string& host, int port);

}  // namespace githru::service
