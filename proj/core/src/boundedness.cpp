#include "kmb/boundedness.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

namespace kmb {

int DegreeProfile::magnitude() const { return std::max(std::abs(deg_t), std::abs(deg_tinv)); }

DegreeProfile degree_profile(const LaurentMatrix& g) {
    std::optional<DegreeProfile> profile;
    for (const auto& entry : g.entries()) {
        auto d = laurent_degrees(entry);
        if (!d) continue;
        if (!profile) {
            profile = DegreeProfile{d->deg_t, d->deg_tinv};
        } else {
            profile->deg_t = std::max(profile->deg_t, d->deg_t);
            profile->deg_tinv = std::max(profile->deg_tinv, d->deg_tinv);
        }
    }
    if (!profile) throw MathError(Errc::zero_matrix, "degree profile of the zero matrix");
    return *profile;
}

GrowthReport growth_explore(const std::vector<LaurentMatrix>& generators, std::size_t max_length) {
    if (generators.empty()) throw MathError(Errc::invalid_argument, "growth exploration needs generators");
    const std::size_t n = generators.front().size();
    std::vector<LaurentMatrix> steps;
    for (const auto& g : generators) {
        if (g.size() != n) throw MathError(Errc::dimension_mismatch, "generators have different sizes");
        if (!(determinant(g) == LaurentPolynomial(1)))
            throw MathError(Errc::non_unimodular, "generator " + to_string(g) + " does not have determinant 1");
        steps.push_back(g);
        steps.push_back(inverse(g));
    }

    std::unordered_set<std::string> seen;
    std::vector<LaurentMatrix> frontier{LaurentMatrix::identity(n)};
    seen.insert(to_string(frontier.front()));
    int max_t = 0;
    int max_tinv = 0;

    GrowthReport report;
    for (std::size_t length = 1; length <= max_length; ++length) {
        std::vector<LaurentMatrix> next;
        for (const auto& element : frontier)
            for (const auto& step : steps) {
                LaurentMatrix product = element * step;
                if (!seen.insert(to_string(product)).second) continue;
                const DegreeProfile p = degree_profile(product);
                max_t = std::max(max_t, std::abs(p.deg_t));
                max_tinv = std::max(max_tinv, std::abs(p.deg_tinv));
                next.push_back(std::move(product));
            }
        frontier = std::move(next);
        report.rows.push_back({length, seen.size(), max_t, max_tinv});
    }
    return report;
}

namespace {

bool is_diagonal(const LaurentMatrix& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j && !g(i, j).is_zero()) return false;
    return true;
}

bool is_unipotent_triangular(const LaurentMatrix& g) {
    bool upper = true;
    bool lower = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(g(i, i) == LaurentPolynomial(1))) return false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g(i, j).is_zero()) continue;
            if (i > j) upper = false;
            if (i < j) lower = false;
        }
    }
    return upper || lower;
}

}  // namespace

CyclicCertificate certify_cyclic(const LaurentMatrix& g) {
    if (is_diagonal(g)) {
        for (const auto& entry : g.entries())
            if (!entry.is_zero() && entry.coefficients().size() != 1)
                return {CyclicVerdict::undetermined, std::nullopt, "diagonal entry is not a unit of k[t,t^-1]"};
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g(i, i).min_exponent() != 0)
                return {CyclicVerdict::unbounded, std::nullopt,
                        "diagonal entry t^" + std::to_string(g(i, i).min_exponent()) + " grows linearly under powers"};
        return {CyclicVerdict::bounded, 0, "diagonal with constant entries"};
    }
    if (is_unipotent_triangular(g)) {
        const LaurentMatrix nilpotent = g - LaurentMatrix::identity(g.size());
        LaurentMatrix power = nilpotent;
        int bound = 0;
        for (std::size_t j = 1; j < g.size() && !power.is_zero(); ++j) {
            for (const auto& entry : power.entries())
                if (!entry.is_zero())
                    bound = std::max({bound, std::abs(entry.min_exponent()), std::abs(entry.max_exponent())});
            power = power * nilpotent;
        }
        return {CyclicVerdict::bounded, bound, "unipotent: powers are binomial combinations of fixed nilpotent powers"};
    }
    return {CyclicVerdict::undetermined, std::nullopt, "no closed-form power pattern"};
}

UnboundednessWitness certify_unbounded_embedding(const EmbeddingSpec& spec, int target_degree) {
    spec.validate();
    if (std::abs(target_degree) > spec.window)
        throw MathError(Errc::window_violation, "target degree " + std::to_string(target_degree) +
                                                    " exceeds window radius " + std::to_string(spec.window) +
                                                    "; enlarge the window");
    const Matrix<RationalFunction> g = torus_probe(target_degree, spec);
    const SemidirectElement image = embed_element(g, spec);
    UnboundednessWitness w{target_degree, "torus(x_" + std::to_string(target_degree) + ")",
                           degree_profile(image.block_matrix())};
    if (w.witness_degree() < std::abs(target_degree))
        throw MathError(Errc::verification_failed, "torus probe did not reach the target degree");
    return w;
}

}  // namespace kmb
