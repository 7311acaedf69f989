#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kmb/matrix.hpp"
#include "kmb/number_field.hpp"
#include "kmb/sl2.hpp"

namespace kmb {

using NFMatrix = Matrix<NFElement>;

/// 1, y, ..., y^{n-1} span L over Q.
bool is_primitive(const NFElement& y, const NumberField& field);

struct PrimitiveSearchResult {
    NFElement y;
    /// y = a + offset.
    long offset = 0;
    std::size_t candidates_tried = 0;
};

inline constexpr std::size_t kDefaultSearchCap = 10000;

/// First y = a + i (i = 0, 1, ...) such that y, y^2, ..., y^powers are all
/// primitive. Throws search_exhausted after `cap` candidates.
PrimitiveSearchResult primitive_power_search(const FieldPtr& field, int powers, std::size_t cap = kDefaultSearchCap);

/// Coefficients c_i with sum_i c_i (t - points[i])^k = target, where target is
/// given constant term first with degree <= k and points.size() == k + 1.
std::vector<Rational> vandermonde_span_solve(const std::vector<Rational>& points, int k,
                                             const std::vector<Rational>& target);

/// r_0..r_{n-1} with l = sum_i r_i x^{2i}; requires x^2 primitive.
std::vector<Rational> even_power_coordinates(const NFElement& l, const NFElement& x, const NumberField& field);

enum class FactorTag { rational, v_member };

std::string to_string(FactorTag tag);

struct CertificateFactor {
    FactorTag tag;
    NFMatrix matrix;
    std::string label;
};

/// Bounded-generation budget: three factors per elementary matrix.
inline constexpr std::size_t kBoundedGenerationBudget = 3 * kElementaryBudget;

struct DecompositionCertificate {
    std::vector<CertificateFactor> factors;
    std::size_t budget = kBoundedGenerationBudget;
    long level = 2;

    NFMatrix product() const;
};

/// Member of the principal congruence subgroup of level `level` in SL_2(Z[a]).
bool is_congruence_member(const NFMatrix& m, long level);

/// Writes g in SL_2(L) as at most 33 factors from SL_2(Q) or the level-N
/// congruence subgroup: each irrational elementary u(l) of the Bruhat word is
/// replaced by diag((aq)^{-1}, aq) u(a^2 q^2 l) diag(aq, (aq)^{-1}) (with the
/// diagonal conjugators swapped for u_-), where q clears the denominators of
/// l and a = N. The result is verified before it is returned.
DecompositionCertificate decompose_3n0(const NFMatrix& g, const FieldPtr& field, long level = 2);

/// Checks length, tags and exact product; returns a description of the first
/// failure, or an empty string.
std::string verify_certificate(const DecompositionCertificate& cert, const NFMatrix& g);

enum class OrbitVerdict { preserves, moves };

struct DoubleEmbeddingResult {
    OrbitVerdict verdict;
    /// block-diag(g, sigma(g)).
    NFMatrix psi;
    /// Images of (1,0,1,0) and (0,1,0,1) under v -> v psi.
    std::array<std::vector<NFElement>, 2> images;
};

/// Does psi(g) = block-diag(g, sigma(g)) map U = <(1,0,1,0), (0,1,0,1)> to
/// itself? Quadratic fields only.
DoubleEmbeddingResult double_embedding_orbit(const NFMatrix& g, const FieldPtr& field);

}  // namespace kmb
