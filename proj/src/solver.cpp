#include "chordal/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace chordal {

namespace {

constexpr double kMeasurableRatio = 1e12;

}  // namespace

SolveOutcome solve_d(int n, double m, const SolveOptions& opts) {
    if (n < 3) throw GeometryError(ErrorKind::invalid_spec, "regular polygon needs n >= 3");
    if (!(m > 1.0) || !std::isfinite(m)) {
        throw GeometryError(ErrorKind::domain, "target ratio m must exceed 1");
    }
    if (!(opts.tol > 0.0)) throw GeometryError(ErrorKind::domain, "solver tolerance must be positive");

    // Near n/2 the inner polygon can be too small to measure. Its ratio is
    // then above 1e12, which settles the sign of g only for smaller targets.
    const auto g = [&](double d) {
        try {
            return area_ratio(n, d) - m;
        } catch (const GeometryError& e) {
            if (e.kind() != ErrorKind::vanishing_inner) throw;
            if (m >= kMeasurableRatio) {
                throw GeometryError(ErrorKind::bracket_failure, "target ratio beyond the measurable range");
            }
            return std::numeric_limits<double>::infinity();
        }
    };

    double lo = 1.0 + kBracketGuard;
    double hi = n / 2.0 - kBracketGuard;
    double g_lo = g(lo);
    const double g_hi = g(hi);
    if (!(g_lo < 0.0 && g_hi > 0.0)) {
        std::ostringstream msg;
        msg << "bracket [" << lo << ", " << hi << "] does not straddle m = " << m << " (ratios "
            << g_lo + m << ", " << g_hi + m << ")";
        throw GeometryError(ErrorKind::bracket_failure, msg.str());
    }

    SolveOutcome best{lo, std::abs(g_lo), 0, {lo, hi}};
    if (std::abs(g_hi) < best.residual) best.d = hi, best.residual = std::abs(g_hi);

    int iterations = 0;
    while (best.residual > opts.tol && hi - lo >= opts.interval_floor && iterations < opts.max_iterations) {
        const double mid = lo + 0.5 * (hi - lo);
        const double g_mid = g(mid);
        ++iterations;
        if (std::abs(g_mid) < best.residual) {
            best.d = mid;
            best.residual = std::abs(g_mid);
        }
        if (g_mid < 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    best.iterations = iterations;
    best.bracket = {lo, hi};

    if (best.residual > opts.tol && iterations < opts.max_iterations) {
        std::ostringstream msg;
        msg << "bisection stalled at d = " << best.d << " with residual " << best.residual;
        throw GeometryError(ErrorKind::no_convergence, msg.str());
    }
    return best;
}

SolveOutcome solve_d(int n, double m, double tol) { return solve_d(n, m, SolveOptions{.tol = tol}); }

VerificationReport verify_triple(const ChordalTriple& triple, double tol) {
    VerificationReport report;
    try {
        report.observed = area_ratio(triple.n, triple.d);
    } catch (const GeometryError& e) {
        report.reason = e.what();
        return report;
    }
    report.deviation = std::abs(report.observed - triple.m);
    report.pass = report.deviation <= tol;
    if (!report.pass) {
        std::ostringstream msg;
        msg << "observed ratio " << report.observed << " differs from " << triple.m << " by "
            << report.deviation;
        report.reason = msg.str();
    }
    return report;
}

std::vector<ChordalTriple> replicate(const ChordalTriple& base, int k) {
    if (k < 2) throw GeometryError(ErrorKind::domain, "replication needs k >= 2");
    const VerificationReport check = verify_triple(base, 1e-6);
    if (!check.pass) throw GeometryError(ErrorKind::domain, "base triple does not verify: " + check.reason);

    std::vector<ChordalTriple> out;
    double power = base.m;
    for (int j = 2; j <= k; ++j) {
        power *= base.m;
        SolveOutcome solved;
        try {
            solved = solve_d(base.n, power, 1e-9);
        } catch (const GeometryError& e) {
            // Absolute 1e-9 is beyond double reach for large m^j.
            if (e.kind() != ErrorKind::no_convergence) throw;
            solved = solve_d(base.n, power, 1e-10 * power);
        }
        out.push_back(ChordalTriple{base.n, solved.d, power, false});
    }
    return out;
}

std::vector<SubPolygonResult> nested_construction(const RegularPolygonSpec& spec, double d, int k) {
    if (k < 1) throw GeometryError(ErrorKind::depth, "nesting depth must be at least 1");
    if (k > kMaxNestingDepth) throw GeometryError(ErrorKind::depth, "nesting depth limited to 8");

    std::vector<SubPolygonResult> chain;
    chain.reserve(k);
    RegularPolygonSpec host = spec;
    for (int j = 0; j < k; ++j) {
        SubPolygonResult level = sub_polygon(build_chordal_system(host, d));
        const Point v0 = level.inner[0];
        host = RegularPolygonSpec{
            .n = spec.n,
            .side = level.t,
            .center = spec.center,
            .phase = std::atan2(v0.y - spec.center.y, v0.x - spec.center.x),
        };
        chain.push_back(std::move(level));
    }
    return chain;
}

std::vector<SubPolygonResult> nested_construction(int n, double d, int k) {
    return nested_construction(RegularPolygonSpec{.n = n, .side = 1.0}, d, k);
}

}  // namespace chordal
