#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace httplib {
class Server;
}

namespace chordal {

using Json = nlohmann::json;

// Payloads shared by the CLI --json output and the HTTP service. Geometry
// is always on the canonical frame: unit side, origin center, phase 0.
Json construction_json(int n, double d);
Json solve_json(int n, double m, double tol = 1e-9);
Json catalog_json(bool verify);

struct HttpReply {
    int status = 200;
    std::string body;
};

using QueryParams = std::map<std::string, std::string>;

// Routes GET /api/construction, /api/solve and /api/catalog. Domain errors
// map to 400 with {"error": reason}; unknown paths to 404.
HttpReply handle_api(const std::string& path, const QueryParams& query);

inline constexpr int kDefaultPort = 8037;

// Flag wins over CHORDAL_PORT, which wins over the default.
int resolve_port(int flag_port);

std::unique_ptr<httplib::Server> make_server();

// Blocks until the server stops.
bool serve(const std::string& host, int port);

struct CommandResult {
    int exit_code = 0;  // 0 ok, 2 usage, 3 domain/math
    std::string stdout_payload;
    std::string stderr_payload;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// argv excludes the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace chordal
