#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordal {

enum class ErrorKind {
    invalid_spec,
    parallel_lines,
    empty_result,
    domain,
    center_chord,
    degenerate_result,
    vanishing_inner,  // inner area below 1e-12 of the outer; reported as degenerate-result
    bracket_failure,
    no_convergence,
    depth,
    invalid_options,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every geometric and numeric failure; callers
// dispatch on kind() when they need to.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace chordal
