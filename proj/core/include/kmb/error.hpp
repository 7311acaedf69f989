#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmb {

enum class Errc {
    division_by_zero,
    not_invertible,
    dimension_mismatch,
    determinant_not_one,
    window_violation,
    not_traceless,
    zero_matrix,
    non_unimodular,
    search_exhausted,
    repeated_points,
    degree_too_large,
    not_primitive,
    non_quadratic,
    reducible_polynomial,
    invalid_argument,
    parse_error,
    unknown_variable,
    verification_failed,
};

std::string_view to_string(Errc code);

/// Every recoverable failure in the library carries one of the codes above so
/// callers (the CLI in particular) can tell input errors from math errors.
class MathError : public std::runtime_error {
   public:
    MathError(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

/// Raised by the expression parser; `position` is a 0-based byte offset.
class ParseError : public MathError {
   public:
    ParseError(Errc code, std::size_t position, const std::string& what)
        : MathError(code, what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace kmb
