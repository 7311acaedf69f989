#pragma once

#include <concepts>
#include <optional>
#include <string>

namespace kmb {

/// Per-ring hooks used by the generic matrix code. Every supported ring
/// specializes this with `is_zero`, `unit_inverse` (nullopt for non-units)
/// and `to_string` (the canonical, re-parseable form).
template <class R>
struct Scalar;

template <class R>
concept ExactRing = requires(const R& a, const R& b) {
    R(0);
    R(1);
    R(a + b);
    R(a - b);
    R(a * b);
    R(-a);
    { a == b } -> std::convertible_to<bool>;
    { Scalar<R>::is_zero(a) } -> std::convertible_to<bool>;
    { Scalar<R>::unit_inverse(a) } -> std::same_as<std::optional<R>>;
    { Scalar<R>::to_string(a) } -> std::convertible_to<std::string>;
    { Scalar<R>::is_field } -> std::convertible_to<bool>;
};

template <class R>
concept ExactField = ExactRing<R> && Scalar<R>::is_field;

}  // namespace kmb
