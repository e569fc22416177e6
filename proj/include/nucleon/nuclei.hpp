#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nucleon/finite_algebra.hpp"
#include "nucleon/terms.hpp"

namespace nucleon {

/// A self-map on a finite algebra, stored as values[i] = gamma(i).
/// `verified` records that the map passed nucleus_violation.
struct NucleusMap {
    std::vector<int> values;
    bool verified = false;
};

struct NucleusViolation {
    std::string law; // extensive | monotone | idempotent | mul-compatible |
                     // residuation-equation
    std::vector<int> witness;
};

/// First violated nucleus law in a fixed order, or nullopt when the map is a
/// nucleus. The closure-operator laws are checked individually before the
/// residuation equation so the reported law is as specific as possible.
std::optional<NucleusViolation> nucleus_violation(const FiniteAlgebra& a,
                                                  const std::vector<int>& values);

bool is_nucleus_map(const FiniteAlgebra& a, const std::vector<int>& values);

/// gamma(x) = meet over b in subset of (x -> b) -> b. The empty subset gives
/// the constant-top map. Always returns a verified nucleus.
NucleusMap nucleus_from_subset(const FiniteAlgebra& a,
                               const std::vector<int>& subset);

/// Every nucleus on the algebra: the maps x |-> meet{(x->b)->b : b in B}
/// over all subsets B, deduplicated by value vector and sorted
/// lexicographically. Sizes above the cap are refused.
std::vector<NucleusMap> enumerate_nuclei(const FiniteAlgebra& a,
                                         int size_cap = 20);

/// Independent oracle: tests all n^n self-maps. Sizes above the cap refused.
std::vector<NucleusMap> brute_force_nuclei(const FiniteAlgebra& a,
                                           int size_cap = 7);

struct NuclearImage {
    FiniteAlgebra algebra;
    std::vector<int> inclusion; // image index -> index in the base algebra
    int gamma_bot;              // gamma(bot) as a base-algebra index
};

/// The residuated lattice on the fixed points of gamma: meet and imp are
/// inherited, join and mul are composed with gamma, bottom is gamma(bot).
NuclearImage nuclear_image(const FiniteAlgebra& a, const NucleusMap& gamma);

struct DenseFilter {
    std::vector<int> members; // elements with gamma = top, ascending
};

DenseFilter dense_filter(const FiniteAlgebra& a, const NucleusMap& gamma);

struct GlivenkoResult {
    bool holds = false;
    std::optional<int> witness;   // a with gamma(gamma(a) -> a) != top
    bool homomorphism = false;    // gamma is a homomorphism onto the image
    std::optional<std::vector<int>> quotient_iso; // quotient class -> image index
};

/// gamma(gamma(a) -> a) = top for all a? When it holds, additionally checks
/// that gamma maps the algebra homomorphically onto its nuclear image and
/// exhibits an isomorphism between the quotient by the dense filter and the
/// image.
GlivenkoResult glivenko_check(const FiniteAlgebra& a, const NucleusMap& gamma);

/// Pointwise interpretation of a one-variable term as a self-map.
std::vector<int> term_values(const FiniteAlgebra& a, const TermExpr& t);

/// "id", "double_neg", "join_const" or "other"; used in reports.
std::string nucleus_kind(const FiniteAlgebra& a, const std::vector<int>& values);

} // namespace nucleon
