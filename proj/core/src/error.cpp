#include "kmb/error.hpp"

namespace kmb {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::division_by_zero: return "division by zero";
        case Errc::not_invertible: return "not invertible";
        case Errc::dimension_mismatch: return "dimension mismatch";
        case Errc::determinant_not_one: return "determinant is not 1";
        case Errc::window_violation: return "index outside the variable window";
        case Errc::not_traceless: return "matrix is not traceless";
        case Errc::zero_matrix: return "zero matrix";
        case Errc::non_unimodular: return "generator is not unimodular";
        case Errc::search_exhausted: return "search cap exceeded";
        case Errc::repeated_points: return "repeated interpolation points";
        case Errc::degree_too_large: return "degree too large";
        case Errc::not_primitive: return "element is not primitive";
        case Errc::non_quadratic: return "field is not quadratic";
        case Errc::reducible_polynomial: return "polynomial is reducible";
        case Errc::invalid_argument: return "invalid argument";
        case Errc::parse_error: return "syntax error";
        case Errc::unknown_variable: return "unknown variable";
        case Errc::verification_failed: return "verification failed";
    }
    return "unknown error";
}

}  // namespace kmb
