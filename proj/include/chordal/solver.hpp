#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chordal/chordal.hpp"

namespace chordal {

struct ChordalTriple {
    int n = 4;
    double d = 1.5;
    double m = 5.0;
    bool d_is_exact = true;  // d is a closed-form rational rather than a solved value
};

struct SolveOptions {
    double tol = 1e-9;  // bound on |area_ratio(n, d) - m|
    double interval_floor = 1e-13;
    int max_iterations = 200;
};

struct SolveOutcome {
    double d = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::pair<double, double> bracket;  // final straddling interval
};

// Offset of the initial bracket [1 + g, n/2 - g] from the domain ends.
inline constexpr double kBracketGuard = 1e-6;

// Bisection on area_ratio(n, d) - m over (1, n/2). The returned d is the
// best iterate seen, so the residual never grows with more iterations.
SolveOutcome solve_d(int n, double m, const SolveOptions& opts = {});
SolveOutcome solve_d(int n, double m, double tol);

struct VerificationReport {
    double observed = 0.0;
    double deviation = 0.0;
    bool pass = false;
    std::string reason;  // empty on pass
};

VerificationReport verify_triple(const ChordalTriple& triple, double tol);

// Triples (n, d_j, m^j) for j = 2..k, each d_j solved at m^j to within 1e-9,
// or 1e-10 * m^j when m^j is too large for that.
std::vector<ChordalTriple> replicate(const ChordalTriple& base, int k);

inline constexpr int kMaxNestingDepth = 8;

// T_1 ... T_k, where T_{j+1} is the sub-polygon of the same system <d>
// built inside T_j.
std::vector<SubPolygonResult> nested_construction(const RegularPolygonSpec& spec, double d, int k);
std::vector<SubPolygonResult> nested_construction(int n, double d, int k);

}  // namespace chordal
