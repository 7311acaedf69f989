#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kmb/adjoint.hpp"
#include "kmb/laurent.hpp"
#include "kmb/matrix.hpp"

namespace kmb {

using LaurentMatrix = Matrix<LaurentPolynomial>;

/// Entrywise maxima of the two t-valuations over the nonzero entries of a
/// matrix.
struct DegreeProfile {
    int deg_t = 0;
    int deg_tinv = 0;

    /// max(|deg_t|, |deg_tinv|).
    int magnitude() const;
    bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile degree_profile(const LaurentMatrix& g);

struct GrowthRow {
    std::size_t length = 0;
    /// Distinct elements of word length <= length (identity included).
    std::size_t count = 0;
    int max_abs_deg_t = 0;
    int max_abs_deg_tinv = 0;
    bool operator==(const GrowthRow&) const = default;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool operator==(const GrowthReport&) const = default;
};

/// Breadth-first enumeration of the ball of radius max_length in the group
/// generated by `generators` (inverses adjoined), deduplicated by canonical
/// serialization. Generators must have determinant exactly 1.
GrowthReport growth_explore(const std::vector<LaurentMatrix>& generators, std::size_t max_length);

enum class CyclicVerdict { bounded, unbounded, undetermined };

struct CyclicCertificate {
    CyclicVerdict verdict = CyclicVerdict::undetermined;
    /// For bounded verdicts: |deg| of every power is at most this.
    std::optional<int> bound;
    std::string reason;
};

/// Closed-form verdict for the cyclic group generated by g when g is
/// diagonal (powers diag(a_i^l t^{l e_i})) or unipotent triangular
/// (powers sum_j C(l, j) N^j with N nilpotent).
CyclicCertificate certify_cyclic(const LaurentMatrix& g);

struct UnboundednessWitness {
    int target_degree = 0;
    std::string element_word;
    DegreeProfile profile;

    int witness_degree() const { return profile.magnitude(); }
};

/// Witness from torus_probe(D): its image has a nonzero t^D component, so
/// the degree profile reaches |D|. Requires |D| <= spec.window.
UnboundednessWitness certify_unbounded_embedding(const EmbeddingSpec& spec, int target_degree);

}  // namespace kmb
