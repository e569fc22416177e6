#pragma once

#include <random>
#include <string>
#include <vector>

#include "nucleon/chains.hpp"
#include "nucleon/finite_algebra.hpp"
#include "nucleon/standard_algebras.hpp"
#include "nucleon/terms.hpp"

namespace testutil {

struct NamedAlgebra {
    std::string name;
    nucleon::FiniteAlgebra algebra;
};

inline nucleon::FiniteAlgebra materialized(const std::string& descriptor) {
    return nucleon::materialize_finite(nucleon::parse_descriptor(descriptor)).algebra;
}

/// The finite corpus used across suites: MV chains, Goedel chains, small
/// ordinal sums and the non-divisible collapse chains.
inline std::vector<NamedAlgebra> finite_corpus() {
    std::vector<NamedAlgebra> out;
    for (int n = 1; n <= 8; ++n) {
        out.push_back({"mv_chain(" + std::to_string(n) + ")", nucleon::mv_chain(n)});
    }
    for (int s = 2; s <= 6; ++s) {
        out.push_back({"godel_chain(" + std::to_string(s) + ")", nucleon::godel_chain(s)});
    }
    out.push_back({"[S1 + S3]", materialized("S1 + S3")});
    out.push_back({"[S2 + S2]", materialized("S2 + S2")});
    for (int n = 3; n <= 6; ++n) {
        out.push_back({"middle_collapse(" + std::to_string(n) + ")",
                       nucleon::middle_collapse_chain(n)});
    }
    return out;
}

inline std::vector<NamedAlgebra> small_corpus(int max_size) {
    std::vector<NamedAlgebra> out;
    for (NamedAlgebra& a : finite_corpus()) {
        if (a.algebra.size() <= max_size) out.push_back(std::move(a));
    }
    return out;
}

/// Uniformly random term over {/\, \/, *, ->, 0, 1} and the given variables.
inline nucleon::TermPtr random_term(std::mt19937& rng,
                                    const std::vector<std::string>& vars,
                                    int depth) {
    using nucleon::TermExpr;
    std::uniform_int_distribution<int> leaf(0, static_cast<int>(vars.size()) + 1);
    if (depth == 0) {
        const int pick = leaf(rng);
        if (pick == 0) return TermExpr::bot();
        if (pick == 1) return TermExpr::top();
        return TermExpr::var(vars[pick - 2]);
    }
    std::uniform_int_distribution<int> node(0, 5);
    switch (node(rng)) {
    case 0:
        return TermExpr::meet(random_term(rng, vars, depth - 1),
                              random_term(rng, vars, depth - 1));
    case 1:
        return TermExpr::join(random_term(rng, vars, depth - 1),
                              random_term(rng, vars, depth - 1));
    case 2:
        return TermExpr::fuse(random_term(rng, vars, depth - 1),
                              random_term(rng, vars, depth - 1));
    case 3:
        return TermExpr::imp(random_term(rng, vars, depth - 1),
                             random_term(rng, vars, depth - 1));
    default:
        return random_term(rng, vars, 0);
    }
}

} // namespace testutil
