#include "nucleon/nuclei.hpp"

#include <algorithm>
#include <set>

#include "nucleon/eval.hpp"

namespace nucleon {

std::optional<NucleusViolation> nucleus_violation(const FiniteAlgebra& a,
                                                  const std::vector<int>& values) {
    const int n = a.size();
    if (static_cast<int>(values.size()) != n) {
        throw StructuralError("nucleus map must assign a value to every element");
    }
    for (int v : values) {
        if (v < 0 || v >= n) throw StructuralError("nucleus value out of range");
    }
    for (int x = 0; x < n; ++x) {
        if (!a.leq(x, values[x])) return NucleusViolation{"extensive", {x}};
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (a.leq(x, y) && !a.leq(values[x], values[y])) {
                return NucleusViolation{"monotone", {x, y}};
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        if (values[values[x]] != values[x]) {
            return NucleusViolation{"idempotent", {x}};
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!a.leq(a.mul(values[x], values[y]), values[a.mul(x, y)])) {
                return NucleusViolation{"mul-compatible", {x, y}};
            }
        }
    }
    // Single equation equivalent to all of the above; re-checked so that any
    // disagreement between the two routes would surface here.
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (a.imp(x, values[y]) != a.imp(values[x], values[y])) {
                return NucleusViolation{"residuation-equation", {x, y}};
            }
        }
    }
    return std::nullopt;
}

bool is_nucleus_map(const FiniteAlgebra& a, const std::vector<int>& values) {
    return !nucleus_violation(a, values).has_value();
}

namespace {

// rel[b][x] = (x -> b) -> b
ElemTable relative_negation_tables(const FiniteAlgebra& a) {
    const int n = a.size();
    ElemTable rel(n, std::vector<int>(n));
    for (int b = 0; b < n; ++b) {
        for (int x = 0; x < n; ++x) {
            rel[b][x] = a.imp(a.imp(x, b), b);
        }
    }
    return rel;
}

} // namespace

NucleusMap nucleus_from_subset(const FiniteAlgebra& a,
                               const std::vector<int>& subset) {
    const int n = a.size();
    std::vector<int> values(n, a.top());
    for (int b : subset) {
        if (b < 0 || b >= n) throw StructuralError("subset element out of range");
        for (int x = 0; x < n; ++x) {
            const int r = a.imp(a.imp(x, b), b);
            const int m = a.meet(values[x], r);
            if (m < 0) throw StructuralError("meet undefined; algebra invalid");
            values[x] = m;
        }
    }
    NucleusMap out{std::move(values), false};
    if (auto v = nucleus_violation(a, out.values)) {
        throw StructuralError("subset construction produced a non-nucleus (" +
                              v->law + "); algebra is not a valid residuated lattice");
    }
    out.verified = true;
    return out;
}

namespace {

void collect_subset_meets(const FiniteAlgebra& a, const ElemTable& rel, int next,
                          std::vector<int>& current,
                          std::set<std::vector<int>>& seen) {
    if (next == a.size()) {
        seen.insert(current);
        return;
    }
    collect_subset_meets(a, rel, next + 1, current, seen);
    std::vector<int> with(current);
    bool changed = false;
    for (int x = 0; x < a.size(); ++x) {
        const int m = a.meet(with[x], rel[next][x]);
        if (m < 0) throw StructuralError("meet undefined; algebra invalid");
        if (m != with[x]) changed = true;
        with[x] = m;
    }
    // An element that refines nothing would only duplicate the exclude branch.
    if (changed) {
        current.swap(with);
        collect_subset_meets(a, rel, next + 1, current, seen);
        current.swap(with);
    }
}

} // namespace

std::vector<NucleusMap> enumerate_nuclei(const FiniteAlgebra& a, int size_cap) {
    const int n = a.size();
    if (n > size_cap) {
        throw SizeCapError("nucleus enumeration refused: size " +
                           std::to_string(n) + " exceeds cap " +
                           std::to_string(size_cap));
    }
    const ElemTable rel = relative_negation_tables(a);
    std::set<std::vector<int>> seen;
    std::vector<int> all_top(n, a.top()); // the empty meet: constant top
    collect_subset_meets(a, rel, 0, all_top, seen);
    std::vector<NucleusMap> out;
    for (const std::vector<int>& v : seen) {
        if (auto viol = nucleus_violation(a, v)) {
            throw StructuralError("enumeration produced a non-nucleus (" +
                                  viol->law + "); algebra is not valid");
        }
        out.push_back(NucleusMap{v, true});
    }
    // std::set already yields lexicographic order.
    return out;
}

std::vector<NucleusMap> brute_force_nuclei(const FiniteAlgebra& a, int size_cap) {
    const int n = a.size();
    if (n > size_cap) {
        throw SizeCapError("brute force nucleus search refused: size " +
                           std::to_string(n) + " exceeds cap " +
                           std::to_string(size_cap));
    }
    std::vector<NucleusMap> out;
    std::vector<int> values(n, 0);
    while (true) {
        if (!nucleus_violation(a, values)) out.push_back(NucleusMap{values, true});
        int i = n - 1;
        while (i >= 0 && values[i] == n - 1) values[i--] = 0;
        if (i < 0) break;
        ++values[i];
    }
    std::sort(out.begin(), out.end(),
              [](const NucleusMap& x, const NucleusMap& y) {
                  return x.values < y.values;
              });
    return out;
}

NuclearImage nuclear_image(const FiniteAlgebra& a, const NucleusMap& gamma) {
    if (!gamma.verified) throw StructuralError("nucleus map not verified");
    const int n = a.size();
    std::vector<int> fixed;
    std::vector<int> back(n, -1);
    for (int x = 0; x < n; ++x) {
        if (gamma.values[x] == x) {
            back[x] = static_cast<int>(fixed.size());
            fixed.push_back(x);
        }
    }
    const int m = static_cast<int>(fixed.size());
    BoolTable leq(m, std::vector<bool>(m));
    ElemTable mul(m, std::vector<int>(m)), imp(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            leq[i][j] = a.leq(fixed[i], fixed[j]);
            mul[i][j] = back[gamma.values[a.mul(fixed[i], fixed[j])]];
            imp[i][j] = back[a.imp(fixed[i], fixed[j])]; // imp is inherited
        }
    }
    const int bot = back[gamma.values[a.bot()]];
    const int top = back[a.top()];
    FiniteAlgebra alg(m, std::move(leq), std::move(mul), std::move(imp), bot, top);
    return {std::move(alg), std::move(fixed), gamma.values[a.bot()]};
}

DenseFilter dense_filter(const FiniteAlgebra& a, const NucleusMap& gamma) {
    if (!gamma.verified) throw StructuralError("nucleus map not verified");
    DenseFilter f;
    for (int x = 0; x < a.size(); ++x) {
        if (gamma.values[x] == a.top()) f.members.push_back(x);
    }
    return f;
}

GlivenkoResult glivenko_check(const FiniteAlgebra& a, const NucleusMap& gamma) {
    if (!gamma.verified) throw StructuralError("nucleus map not verified");
    GlivenkoResult r;
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        if (gamma.values[a.imp(gamma.values[x], x)] != a.top()) {
            r.holds = false;
            r.witness = x;
            return r;
        }
    }
    r.holds = true;
    // gamma must now be a homomorphism onto the nuclear image, whose
    // operations are meet, gamma-composed join and mul, inherited imp.
    const auto& g = gamma.values;
    r.homomorphism = true;
    for (int x = 0; x < n && r.homomorphism; ++x) {
        for (int y = 0; y < n; ++y) {
            const int mx = a.meet(x, y);
            if (g[mx] != a.meet(g[x], g[y]) ||
                g[a.join(x, y)] != g[a.join(g[x], g[y])] ||
                g[a.mul(x, y)] != g[a.mul(g[x], g[y])] ||
                g[a.imp(x, y)] != a.imp(g[x], g[y])) {
                r.homomorphism = false;
                break;
            }
        }
    }
    NuclearImage img = nuclear_image(a, gamma);
    ImplicativeFilter dense{dense_filter(a, gamma).members};
    Quotient q = quotient(a, dense);
    r.quotient_iso = find_isomorphism(q.algebra, img.algebra);
    return r;
}

std::vector<int> term_values(const FiniteAlgebra& a, const TermExpr& t) {
    const std::set<std::string> vars = free_vars(t);
    if (vars.size() > 1) {
        throw EvalError("term map needs at most one free variable");
    }
    const std::string x = vars.empty() ? std::string("x") : *vars.begin();
    std::vector<int> out(a.size());
    for (int e = 0; e < a.size(); ++e) {
        EnvOf<FiniteAlgebra> env{{x, e}};
        out[e] = eval_term(t, a, env);
    }
    return out;
}

std::string nucleus_kind(const FiniteAlgebra& a, const std::vector<int>& values) {
    const int n = a.size();
    bool is_id = true, is_dn = true, is_join = true;
    const int c = values[a.bot()];
    for (int x = 0; x < n; ++x) {
        if (values[x] != x) is_id = false;
        if (values[x] != a.neg(a.neg(x))) is_dn = false;
        if (values[x] != a.join(x, c)) is_join = false;
    }
    if (is_id) return "id";
    if (is_dn) return "double_neg";
    if (is_join) return "join_const";
    return "other";
}

} // namespace nucleon
