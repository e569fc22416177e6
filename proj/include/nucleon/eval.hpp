#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nucleon/errors.hpp"
#include "nucleon/terms.hpp"

namespace nucleon {

/// Anything exposing Elem, leq/meet/join/mul/imp and bot/top works as a
/// carrier: FiniteAlgebra (Elem = int) and ChainOps (Elem = ChainElement).
template <class Ops>
using EnvOf = std::map<std::string, typename Ops::Elem>;

inline constexpr std::uint64_t kDefaultAssignmentCap = 10'000'000;

template <class Ops>
typename Ops::Elem eval_term(const TermExpr& t, const Ops& ops,
                             const EnvOf<Ops>& env) {
    switch (t.kind()) {
    case TermExpr::Kind::Var: {
        auto it = env.find(t.name());
        if (it == env.end()) throw EvalError("unbound variable: " + t.name());
        return it->second;
    }
    case TermExpr::Kind::Bot:
        return ops.bot();
    case TermExpr::Kind::Top:
        return ops.top();
    case TermExpr::Kind::Meet:
        return ops.meet(eval_term(*t.lhs(), ops, env), eval_term(*t.rhs(), ops, env));
    case TermExpr::Kind::Join:
        return ops.join(eval_term(*t.lhs(), ops, env), eval_term(*t.rhs(), ops, env));
    case TermExpr::Kind::Fuse:
        return ops.mul(eval_term(*t.lhs(), ops, env), eval_term(*t.rhs(), ops, env));
    case TermExpr::Kind::Imp:
        return ops.imp(eval_term(*t.lhs(), ops, env), eval_term(*t.rhs(), ops, env));
    }
    throw EvalError("corrupt term");
}

template <class Ops>
struct IdentityCounterexample {
    EnvOf<Ops> env;
    typename Ops::Elem lhs, rhs;
};

/// Exhaustive check of lhs = rhs over every assignment of the terms' free
/// variables to `domain`. Assignments run in lexicographic order (first
/// variable most significant) and the first failure is returned, so results
/// are deterministic. Throws SizeCapError when |domain|^vars exceeds the cap.
template <class Ops>
std::optional<IdentityCounterexample<Ops>> find_identity_counterexample(
    const TermExpr& lhs, const TermExpr& rhs, const Ops& ops,
    const std::vector<typename Ops::Elem>& domain,
    std::uint64_t max_assignments = kDefaultAssignmentCap) {
    std::set<std::string> vars = free_vars(lhs);
    for (const std::string& v : free_vars(rhs)) vars.insert(v);
    std::vector<std::string> names(vars.begin(), vars.end());
    const std::uint64_t d = domain.size();
    if (d == 0) throw StructuralError("empty evaluation domain");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (total > max_assignments / d) {
            throw SizeCapError("identity check refused: assignment count exceeds cap");
        }
        total *= d;
    }
    std::vector<std::size_t> odo(names.size(), 0);
    EnvOf<Ops> env;
    for (std::uint64_t step = 0; step < total; ++step) {
        env.clear();
        for (std::size_t i = 0; i < names.size(); ++i) {
            env.emplace(names[i], domain[odo[i]]);
        }
        auto l = eval_term(lhs, ops, env);
        auto r = eval_term(rhs, ops, env);
        if (!(l == r)) return IdentityCounterexample<Ops>{env, l, r};
        // advance odometer, last variable fastest
        for (std::size_t i = names.size(); i-- > 0;) {
            if (++odo[i] < d) break;
            odo[i] = 0;
        }
    }
    return std::nullopt;
}

template <class Ops>
struct NucleusTermCounterexample {
    typename Ops::Elem a, b;
    typename Ops::Elem lhs; // t(a) -> t(b)
    typename Ops::Elem rhs; // a -> t(b)
};

/// A one-variable term t defines a nucleus exactly when
/// t(a) -> t(b) = a -> t(b) for all a, b. This scans `domain` x `domain` in
/// order and reports the first failing pair. Constant terms (no variable)
/// are allowed; they define constant maps.
template <class Ops>
std::optional<NucleusTermCounterexample<Ops>> find_term_nucleus_counterexample(
    const TermExpr& t, const Ops& ops,
    const std::vector<typename Ops::Elem>& domain) {
    const std::set<std::string> vars = free_vars(t);
    if (vars.size() > 1) {
        throw EvalError("nucleus term must have exactly one free variable");
    }
    const std::string x = vars.empty() ? std::string("x") : *vars.begin();
    std::vector<typename Ops::Elem> image;
    image.reserve(domain.size());
    EnvOf<Ops> env;
    for (const auto& e : domain) {
        env.clear();
        env.emplace(x, e);
        image.push_back(eval_term(t, ops, env));
    }
    for (std::size_t i = 0; i < domain.size(); ++i) {
        for (std::size_t j = 0; j < domain.size(); ++j) {
            auto l = ops.imp(image[i], image[j]);
            auto r = ops.imp(domain[i], image[j]);
            if (!(l == r)) {
                return NucleusTermCounterexample<Ops>{domain[i], domain[j], l, r};
            }
        }
    }
    return std::nullopt;
}

} // namespace nucleon
