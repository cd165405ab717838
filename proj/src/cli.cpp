#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chordal/catalog.hpp"
#include "chordal/render.hpp"
#include "chordal/service.hpp"
#include "chordal/solver.hpp"

namespace chordal {

namespace {

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string triple_text(int n, double d, double m) {
    std::ostringstream out;
    out << "(" << n << ", " << fixed9(d) << ", " << m << ")";
    return out.str();
}

struct Args {
    int n = 0;
    double d = 0.0;
    double m = 0.0;
    double tol = 1e-9;
    double verify_tol = 1e-6;
    int k = 2;
    int depth = 1;
    int port = 0;
    std::string host = "127.0.0.1";
    std::string out;
    bool json = false;
    bool verify = false;
    bool labels = false;
};

void run_ratio(const Args& a, std::ostream& out) {
    if (a.json) {
        out << construction_json(a.n, a.d).dump(2) << '\n';
        return;
    }
    const double m = area_ratio(a.n, a.d);
    out << "m = " << fixed9(m) << '\n';
}

void run_solve(const Args& a, std::ostream& out) {
    const Json solved = solve_json(a.n, a.m, a.tol);
    if (a.json) {
        out << solved.dump(2) << '\n';
        return;
    }
    out << "d = " << fixed9(solved["d"].get<double>()) << '\n'
        << "residual = " << sci(solved["residual"].get<double>()) << '\n'
        << "iterations = " << solved["iterations"].get<int>() << '\n';
}

// Returns false when the triple does not verify.
bool run_verify(const Args& a, std::ostream& out) {
    const VerificationReport report = verify_triple(ChordalTriple{a.n, a.d, a.m, true}, a.verify_tol);
    if (a.json) {
        Json doc{{"n", a.n}, {"d", a.d}, {"m", a.m}, {"observed", report.observed},
                 {"deviation", report.deviation}, {"pass", report.pass}};
        if (!report.reason.empty()) doc["reason"] = report.reason;
        out << doc.dump(2) << '\n';
        return report.pass;
    }
    out << (report.pass ? "PASS " : "FAIL ") << triple_text(a.n, a.d, a.m) << ": observed m = "
        << fixed9(report.observed) << ", deviation = " << sci(report.deviation);
    if (!report.pass) out << " (" << report.reason << ")";
    out << '\n';
    return report.pass;
}

bool run_catalog(const Args& a, std::ostream& out) {
    if (a.json) {
        out << catalog_json(a.verify).dump(2) << '\n';
    }
    if (!a.verify) {
        if (!a.json) {
            out << " n  d              m     provenance\n";
            for (const CatalogEntry& e : known_triples()) {
                char line[160];
                std::snprintf(line, sizeof line, "%2d  %-13.10g  %-4g  %s\n", e.triple.n, e.triple.d, e.triple.m,
                              e.provenance.c_str());
                out << line;
            }
        }
        return true;
    }
    const std::vector<CatalogCheck> checks = verify_catalog();
    const auto passed = std::count_if(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.pass; });
    if (!a.json) {
        out << " n  d              m     observed m        check\n";
        for (const CatalogCheck& c : checks) {
            char line[200];
            std::snprintf(line, sizeof line, "%2d  %-13.10g  %-4g  %-16.9f  %s", c.entry.triple.n, c.entry.triple.d,
                          c.entry.triple.m, c.observed_m, c.pass ? "PASS" : "FAIL");
            out << line;
            if (!c.entry.triple.d_is_exact) out << " (solved d = " << fixed9(c.solved_d) << ")";
            if (!c.pass) out << " " << c.reason;
            out << '\n';
        }
        out << passed << "/" << checks.size() << " triples verified\n";
    }
    return passed == static_cast<long>(checks.size());
}

void run_replicate(const Args& a, std::ostream& out) {
    const double m = area_ratio(a.n, a.d);
    const std::vector<ChordalTriple> chain = replicate(ChordalTriple{a.n, a.d, m, true}, a.k);
    if (a.json) {
        Json doc = Json::array();
        for (const ChordalTriple& t : chain) doc.push_back(Json{{"n", t.n}, {"d", t.d}, {"m", t.m}});
        out << doc.dump(2) << '\n';
        return;
    }
    for (const ChordalTriple& t : chain) out << triple_text(t.n, t.d, t.m) << '\n';
}

void run_render(const Args& a, std::ostream& out) {
    RenderOptions opts;
    opts.depth = a.depth;
    opts.show_labels = a.labels;
    const std::string svg = render_svg(a.n, a.d, opts);
    if (a.out.empty() || a.out == "-") {
        out << svg;
        return;
    }
    std::ofstream file(a.out, std::ios::binary);
    if (!file || !(file << svg)) throw std::runtime_error("cannot write " + a.out);
    out << "wrote " << a.out << '\n';
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Area chordal systems in regular polygons", "chordal"};
    app.require_subcommand(1);
    Args a;

    auto* ratio = app.add_subcommand("ratio", "area ratio m = (P)/(T) for side distance d");
    ratio->add_option("--n", a.n, "number of sides")->required();
    ratio->add_option("--d", a.d, "side distance in sides")->required();
    ratio->add_flag("--json", a.json, "emit the full construction as JSON");

    auto* solve = app.add_subcommand("solve", "side distance d realizing ratio m");
    solve->add_option("--n", a.n, "number of sides")->required();
    solve->add_option("--m", a.m, "target ratio")->required();
    solve->add_option("--tol", a.tol, "ratio residual tolerance");
    solve->add_flag("--json", a.json);

    auto* verify = app.add_subcommand("verify", "check a chordal triple (n, d, m)");
    verify->add_option("--n", a.n)->required();
    verify->add_option("--d", a.d)->required();
    verify->add_option("--m", a.m)->required();
    verify->add_option("--tol", a.verify_tol, "allowed |observed m - m|");
    verify->add_flag("--json", a.json);

    auto* catalog = app.add_subcommand("catalog", "list the known triples");
    catalog->add_flag("--verify", a.verify, "verify every entry");
    catalog->add_flag("--json", a.json);

    auto* repl = app.add_subcommand("replicate", "triples (n, d_j, m^j) for j = 2..k");
    repl->add_option("--n", a.n)->required();
    repl->add_option("--d", a.d)->required();
    repl->add_option("--k", a.k)->required();
    repl->add_flag("--json", a.json);

    auto* render = app.add_subcommand("render", "write the construction as SVG");
    render->add_option("--n", a.n)->required();
    render->add_option("--d", a.d)->required();
    render->add_option("--depth", a.depth, "replication levels");
    render->add_option("--out", a.out, "output path, '-' for stdout");
    render->add_flag("--labels", a.labels, "label outer vertices");

    auto* srv = app.add_subcommand("serve", "start the JSON service");
    srv->add_option("--port", a.port, "listen port (default 8037 or $CHORDAL_PORT)");
    srv->add_option("--host", a.host, "bind address");

    std::ostringstream out;
    std::ostringstream err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return CommandResult{code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
    }

    try {
        bool ok = true;
        if (ratio->parsed()) run_ratio(a, out);
        else if (solve->parsed()) run_solve(a, out);
        else if (verify->parsed()) ok = run_verify(a, out);
        else if (catalog->parsed()) ok = run_catalog(a, out);
        else if (repl->parsed()) run_replicate(a, out);
        else if (render->parsed()) run_render(a, out);
        else if (srv->parsed()) {
            const int port = resolve_port(a.port);
            std::cerr << "listening on http://" << a.host << ":" << port << '\n';
            if (!serve(a.host, port)) {
                return CommandResult{kExitDomain, out.str(), "error: cannot listen on port " + std::to_string(port) + "\n"};
            }
        }
        return CommandResult{ok ? kExitOk : kExitDomain, out.str(), err.str()};
    } catch (const GeometryError& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return CommandResult{kExitDomain, out.str(), err.str()};
}

}  // namespace chordal
