#include "chordal/error.hpp"

namespace chordal {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_spec: return "invalid-spec";
        case ErrorKind::parallel_lines: return "parallel-lines";
        case ErrorKind::empty_result: return "empty-result";
        case ErrorKind::domain: return "domain";
        case ErrorKind::center_chord: return "center-chord";
        case ErrorKind::degenerate_result:
        case ErrorKind::vanishing_inner: return "degenerate-result";
        case ErrorKind::bracket_failure: return "bracket-failure";
        case ErrorKind::no_convergence: return "no-convergence";
        case ErrorKind::depth: return "depth";
        case ErrorKind::invalid_options: return "invalid-options";
    }
    return "unknown";
}

}  // namespace chordal
