#include "chordal/service.hpp"

#include <charconv>
#include <cstdlib>
#include <system_error>

#include <httplib.h>

#include "chordal/catalog.hpp"
#include "chordal/chordal.hpp"
#include "chordal/solver.hpp"

namespace chordal {

namespace {

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json ring_json(const Polygon& poly) {
    Json ring = Json::array();
    for (const Point& p : poly.vertices()) ring.push_back(point_json(p));
    return ring;
}

class BadRequest : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::string& require(const QueryParams& query, const std::string& key) {
    const auto it = query.find(key);
    if (it == query.end()) throw BadRequest("missing query parameter '" + key + "'");
    return it->second;
}

template <typename T>
T parse_number(const QueryParams& query, const std::string& key) {
    const std::string& text = require(query, key);
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw BadRequest("query parameter '" + key + "' is not a number");
    return value;
}

HttpReply error_reply(int status, const std::string& reason) {
    return HttpReply{status, Json{{"error", reason}}.dump()};
}

}  // namespace

Json construction_json(int n, double d) {
    const RegularPolygonSpec spec{.n = n, .side = 1.0};
    const ChordalSystem system = build_chordal_system(spec, d);
    const SubPolygonResult result = sub_polygon(system);

    Json chords = Json::array();
    for (const Chord& chord : system.chords) {
        chords.push_back(Json::array({point_json(chord.start), point_json(chord.end)}));
    }
    return Json{
        {"n", n},
        {"d", d},
        {"outer", ring_json(regular_polygon(spec))},
        {"chords", std::move(chords)},
        {"inner", ring_json(result.inner)},
        {"t", result.t},
        {"ratio", result.ratio},
    };
}

Json solve_json(int n, double m, double tol) {
    const SolveOutcome outcome = solve_d(n, m, tol);
    return Json{
        {"n", n},
        {"m", m},
        {"d", outcome.d},
        {"residual", outcome.residual},
        {"iterations", outcome.iterations},
        {"bracket", Json::array({outcome.bracket.first, outcome.bracket.second})},
    };
}

Json catalog_json(bool verify) {
    Json entries = Json::array();
    if (!verify) {
        for (const CatalogEntry& e : known_triples()) {
            entries.push_back(Json{
                {"n", e.triple.n},
                {"d", e.triple.d},
                {"m", e.triple.m},
                {"d_is_exact", e.triple.d_is_exact},
                {"d_printed_digits", e.d_printed_digits},
                {"provenance", e.provenance},
            });
        }
        return entries;
    }
    for (const CatalogCheck& c : verify_catalog()) {
        Json row{
            {"n", c.entry.triple.n},
            {"d", c.entry.triple.d},
            {"m", c.entry.triple.m},
            {"d_is_exact", c.entry.triple.d_is_exact},
            {"d_printed_digits", c.entry.d_printed_digits},
            {"provenance", c.entry.provenance},
            {"observed_m", c.observed_m},
            {"deviation", c.deviation},
            {"pass", c.pass},
        };
        if (!c.entry.triple.d_is_exact) row["solved_d"] = c.solved_d;
        if (!c.reason.empty()) row["reason"] = c.reason;
        entries.push_back(std::move(row));
    }
    return entries;
}

HttpReply handle_api(const std::string& path, const QueryParams& query) {
    try {
        if (path == "/api/construction") {
            return {200, construction_json(parse_number<int>(query, "n"), parse_number<double>(query, "d")).dump()};
        }
        if (path == "/api/solve") {
            const int n = parse_number<int>(query, "n");
            const double m = parse_number<double>(query, "m");
            const double tol = query.contains("tol") ? parse_number<double>(query, "tol") : 1e-9;
            return {200, solve_json(n, m, tol).dump()};
        }
        if (path == "/api/catalog") {
            const auto it = query.find("verify");
            const bool verify = it != query.end() && (it->second == "1" || it->second == "true");
            return {200, catalog_json(verify).dump()};
        }
        return error_reply(404, "no such endpoint: " + path);
    } catch (const BadRequest& e) {
        return error_reply(400, e.what());
    } catch (const GeometryError& e) {
        return error_reply(400, std::string(to_string(e.kind())) + ": " + e.what());
    }
}

int resolve_port(int flag_port) {
    if (flag_port > 0) return flag_port;
    if (const char* env = std::getenv("CHORDAL_PORT")) {
        int port = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), port);
        if (ec == std::errc{} && ptr == text.data() + text.size() && port > 0 && port < 65536) return port;
    }
    return kDefaultPort;
}

std::unique_ptr<httplib::Server> make_server() {
    auto server = std::make_unique<httplib::Server>();
    const auto handler = [](const httplib::Request& req, httplib::Response& res) {
        QueryParams query;
        for (const auto& [key, value] : req.params) query.emplace(key, value);
        const HttpReply reply = handle_api(req.path, query);
        res.status = reply.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(reply.body, "application/json; charset=utf-8");
    };
    server->Get("/api/construction", handler);
    server->Get("/api/solve", handler);
    server->Get("/api/catalog", handler);
    return server;
}

bool serve(const std::string& host, int port) {
    auto server = make_server();
    return server->listen(host, port);
}

}  // namespace chordal
