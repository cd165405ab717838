#pragma once

#include <string>
#include <vector>

#include "chordal/solver.hpp"

namespace chordal {

struct CatalogEntry {
    ChordalTriple triple;
    std::string provenance;
    // Significant digits of a truncated decimal d; 0 when d is exact.
    int d_printed_digits = 0;
    // Allowed gap between the solved d and the printed digits (truncated entries only).
    double d_tolerance = 0.0;
};

// The fourteen published triples, repeating decimals stored as rationals.
const std::vector<CatalogEntry>& known_triples();

struct CatalogCheck {
    CatalogEntry entry;
    double observed_m = 0.0;   // area_ratio at the catalog d
    double solved_d = 0.0;     // truncated entries only
    double deviation = 0.0;    // |observed m - m| or |solved d - printed d|
    bool pass = false;
    std::string reason;
};

// Exact entries are checked on m at tol; truncated entries by solving for d
// and comparing to the printed digits.
std::vector<CatalogCheck> verify_catalog(double tol = 1e-6);

}  // namespace chordal
