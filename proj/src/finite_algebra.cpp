#include "nucleon/finite_algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nucleon {

namespace {

void check_square(const char* name, std::size_t n, std::size_t rows) {
    if (rows != n) {
        std::ostringstream os;
        os << name << " table must have " << n << " rows, got " << rows;
        throw StructuralError(os.str());
    }
}

template <class Table>
void check_shape(const char* name, int n, const Table& t) {
    check_square(name, static_cast<std::size_t>(n), t.size());
    for (const auto& row : t) {
        if (row.size() != static_cast<std::size_t>(n)) {
            std::ostringstream os;
            os << name << " table row has length " << row.size()
               << ", expected " << n;
            throw StructuralError(os.str());
        }
    }
}

void check_entries(const char* name, int n, const ElemTable& t) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (t[i][j] < 0 || t[i][j] >= n) {
                std::ostringstream os;
                os << name << "[" << i << "][" << j << "] = " << t[i][j]
                   << " is out of range 0.." << n - 1;
                throw StructuralError(os.str());
            }
        }
    }
}

// Greatest element of {z : pred(z)}, or -1 when the set has no maximum.
template <class Pred>
int max_of(int n, const BoolTable& leq, Pred pred) {
    int best = -1;
    for (int z = 0; z < n; ++z) {
        if (!pred(z)) continue;
        if (best == -1 || leq[best][z]) best = z;
    }
    if (best < 0) return -1;
    // best must dominate every member.
    for (int z = 0; z < n; ++z) {
        if (pred(z) && !leq[z][best]) return -1;
    }
    return best;
}

int meet_of(int n, const BoolTable& leq, int a, int b) {
    return max_of(n, leq, [&](int z) { return leq[z][a] && leq[z][b]; });
}

int join_of(int n, const BoolTable& leq, int a, int b) {
    // Least upper bound = greatest element of the set of lower bounds of all
    // upper bounds; computed directly as the minimum of the upper-bound set.
    int best = -1;
    for (int z = 0; z < n; ++z) {
        if (!(leq[a][z] && leq[b][z])) continue;
        if (best == -1 || leq[z][best]) best = z;
    }
    if (best < 0) return -1;
    for (int z = 0; z < n; ++z) {
        if (leq[a][z] && leq[b][z] && !leq[best][z]) return -1;
    }
    return best;
}

} // namespace

ElemTable residuum_from_mul(const BoolTable& leq, const ElemTable& mul,
                            int /*bot*/, int /*top*/) {
    const int n = static_cast<int>(leq.size());
    ElemTable imp(n, std::vector<int>(n, 0));
    for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
            int m = max_of(n, leq, [&](int z) { return leq[mul[b][z]][c]; });
            if (m < 0) {
                std::ostringstream os;
                os << "no residuum: {z : " << b << ".z <= " << c
                   << "} has no maximum";
                throw NotResiduatedError(b, c, os.str());
            }
            imp[b][c] = m;
        }
    }
    return imp;
}

FiniteAlgebra::FiniteAlgebra(int size, BoolTable leq, ElemTable mul,
                             std::optional<ElemTable> imp, int bot, int top)
    : n_(size), leq_(std::move(leq)), mul_(std::move(mul)),
      bot_(bot), top_(top) {
    if (n_ < 1) throw StructuralError("algebra size must be positive");
    check_shape("leq", n_, leq_);
    check_shape("mul", n_, mul_);
    check_entries("mul", n_, mul_);
    if (bot_ < 0 || bot_ >= n_ || top_ < 0 || top_ >= n_) {
        throw StructuralError("bot/top index out of range");
    }
    if (imp) {
        imp_ = std::move(*imp);
        check_shape("imp", n_, imp_);
        check_entries("imp", n_, imp_);
    } else {
        imp_ = residuum_from_mul(leq_, mul_, bot_, top_);
    }
    meet_.assign(n_, std::vector<int>(n_, -1));
    join_.assign(n_, std::vector<int>(n_, -1));
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            meet_[a][b] = meet_of(n_, leq_, a, b);
            join_[a][b] = join_of(n_, leq_, a, b);
        }
    }
}

bool FiniteAlgebra::operator==(const FiniteAlgebra& other) const {
    return n_ == other.n_ && leq_ == other.leq_ && mul_ == other.mul_ &&
           imp_ == other.imp_ && bot_ == other.bot_ && top_ == other.top_;
}

namespace {

void fail(ValidationReport& r, std::string axiom, std::vector<int> witness,
          std::string detail = {}) {
    r.failures.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

void check_order_laws(const FiniteAlgebra& a, ValidationReport& r) {
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        if (!a.leq(x, x)) fail(r, "leq-reflexive", {x});
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x != y && a.leq(x, y) && a.leq(y, x)) {
                fail(r, "leq-antisymmetric", {x, y});
            }
            for (int z = 0; z < n; ++z) {
                if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z)) {
                    fail(r, "leq-transitive", {x, y, z});
                    return; // transitivity failures cascade; one is enough
                }
            }
        }
    }
}

void check_bounds_and_lattice(const FiniteAlgebra& a, ValidationReport& r) {
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        if (!a.leq(a.bot(), x)) fail(r, "bot-least", {x});
        if (!a.leq(x, a.top())) fail(r, "top-greatest", {x});
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (a.meet(x, y) < 0) fail(r, "meet-exists", {x, y});
            if (a.join(x, y) < 0) fail(r, "join-exists", {x, y});
        }
    }
}

void check_monoid(const FiniteAlgebra& a, ValidationReport& r) {
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        if (a.mul(x, a.top()) != x) fail(r, "mul-unit", {x});
        for (int y = 0; y < n; ++y) {
            if (a.mul(x, y) != a.mul(y, x)) fail(r, "mul-commutative", {x, y});
            for (int z = 0; z < n; ++z) {
                if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z))) {
                    fail(r, "mul-associative", {x, y, z});
                }
            }
        }
    }
}

void check_residuation(const FiniteAlgebra& a, ValidationReport& r) {
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (a.leq(a.mul(x, y), z) != a.leq(x, a.imp(y, z))) {
                    fail(r, "adjunction", {x, y, z});
                }
            }
        }
    }
    // Independent check: imp(b,c) is the maximum of {z : b.z <= c}.
    for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
            const int w = a.imp(b, c);
            if (!a.leq(a.mul(b, w), c)) {
                fail(r, "residuum-max", {b, c}, "imp(b,c) not in the set");
                continue;
            }
            for (int z = 0; z < n; ++z) {
                if (a.leq(a.mul(b, z), c) && !a.leq(z, w)) {
                    fail(r, "residuum-max", {b, c},
                         "z=" + std::to_string(z) + " exceeds imp(b,c)");
                    break;
                }
            }
        }
    }
}

// Derived facts that hold in every residuated lattice; evaluated as an extra
// safety net once the defining laws pass.
void check_derived_properties(const FiniteAlgebra& a, ValidationReport& r) {
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        if (a.imp(a.top(), x) != x) fail(r, "prop-top-imp", {x});
        for (int y = 0; y < n; ++y) {
            if (a.leq(x, y) != (a.imp(x, y) == a.top())) {
                fail(r, "prop-leq-iff-imp-top", {x, y});
            }
            if (!a.leq(a.mul(x, y), a.meet(x, y))) {
                fail(r, "prop-mul-below-meet", {x, y});
            }
            if (!a.leq(y, a.imp(x, a.mul(x, y))) ||
                !a.leq(a.imp(x, a.mul(x, y)), a.imp(x, y))) {
                fail(r, "prop-imp-mul-expansion", {x, y});
            }
            if (!a.leq(a.mul(x, a.imp(x, y)), a.meet(x, y))) {
                fail(r, "prop-mul-imp-below-meet", {x, y});
            }
            if (!a.leq(a.join(x, y), a.imp(a.imp(x, y), y))) {
                fail(r, "prop-join-below-relneg", {x, y});
            }
            if (a.imp(a.imp(a.imp(x, y), y), y) != a.imp(x, y)) {
                fail(r, "prop-triple-relneg", {x, y});
            }
            for (int z = 0; z < n; ++z) {
                if (a.leq(x, y)) {
                    if (!a.leq(a.mul(x, z), a.mul(y, z)) ||
                        !a.leq(a.imp(y, z), a.imp(x, z)) ||
                        !a.leq(a.imp(z, x), a.imp(z, y))) {
                        fail(r, "prop-monotonicity", {x, y, z});
                    }
                }
                const int curried = a.imp(x, a.imp(y, z));
                if (curried != a.imp(a.mul(x, y), z) ||
                    curried != a.imp(y, a.imp(x, z))) {
                    fail(r, "prop-currying", {x, y, z});
                }
            }
        }
    }
}

} // namespace

ValidationReport validate_axioms(const FiniteAlgebra& a) {
    ValidationReport r;
    check_order_laws(a, r);
    check_bounds_and_lattice(a, r);
    check_monoid(a, r);
    check_residuation(a, r);
    if (r.ok()) check_derived_properties(a, r);
    return r;
}

AlgebraClassFlags classify_algebra(const FiniteAlgebra& a) {
    const int n = a.size();
    AlgebraClassFlags f;
    f.is_chain = true;
    f.is_prelinear = true;
    f.is_divisible = true;
    f.is_involutive = true;
    f.is_idempotent = true;
    for (int x = 0; x < n; ++x) {
        if (a.mul(x, x) != x) f.is_idempotent = false;
        if (a.neg(a.neg(x)) != x) f.is_involutive = false;
        for (int y = 0; y < n; ++y) {
            if (!a.leq(x, y) && !a.leq(y, x)) f.is_chain = false;
            if (a.join(a.imp(x, y), a.imp(y, x)) != a.top()) {
                f.is_prelinear = false;
            }
            if (a.mul(x, a.imp(x, y)) != a.meet(x, y)) f.is_divisible = false;
        }
    }
    f.is_bl = f.is_prelinear && f.is_divisible;
    f.is_mv = f.is_bl && f.is_involutive;
    return f;
}

Subalgebra generated_subalgebra(const FiniteAlgebra& a,
                                const std::vector<int>& seed) {
    const int n = a.size();
    std::vector<bool> in(n, false);
    in[a.bot()] = in[a.top()] = true;
    for (int s : seed) {
        if (s < 0 || s >= n) throw StructuralError("seed element out of range");
        in[s] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x) {
            if (!in[x]) continue;
            for (int y = 0; y < n; ++y) {
                if (!in[y]) continue;
                for (int v : {a.meet(x, y), a.join(x, y), a.mul(x, y),
                              a.imp(x, y)}) {
                    if (v >= 0 && !in[v]) {
                        in[v] = true;
                        grew = true;
                    }
                }
            }
        }
    }
    std::vector<int> embed;
    std::vector<int> back(n, -1);
    for (int x = 0; x < n; ++x) {
        if (in[x]) {
            back[x] = static_cast<int>(embed.size());
            embed.push_back(x);
        }
    }
    const int m = static_cast<int>(embed.size());
    BoolTable leq(m, std::vector<bool>(m));
    ElemTable mul(m, std::vector<int>(m)), imp(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            leq[i][j] = a.leq(embed[i], embed[j]);
            mul[i][j] = back[a.mul(embed[i], embed[j])];
            imp[i][j] = back[a.imp(embed[i], embed[j])];
        }
    }
    FiniteAlgebra sub(m, std::move(leq), std::move(mul), std::move(imp),
                      back[a.bot()], back[a.top()]);
    return {std::move(sub), std::move(embed)};
}

bool is_implicative_filter(const FiniteAlgebra& a,
                           const std::vector<int>& members) {
    const int n = a.size();
    std::vector<bool> in(n, false);
    for (int x : members) {
        if (x < 0 || x >= n) return false;
        in[x] = true;
    }
    if (!in[a.top()]) return false;
    for (int x = 0; x < n; ++x) {
        if (!in[x]) continue;
        for (int y = 0; y < n; ++y) {
            if (a.leq(x, y) && !in[y]) return false;
            if (in[y] && !in[a.mul(x, y)]) return false;
        }
    }
    return true;
}

namespace {

std::uint64_t filter_closure(const FiniteAlgebra& a, std::uint64_t set) {
    const int n = a.size();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x) {
            if (!(set >> x & 1)) continue;
            for (int y = 0; y < n; ++y) {
                if (a.leq(x, y) && !(set >> y & 1)) {
                    set |= std::uint64_t{1} << y;
                    grew = true;
                }
                if ((set >> y & 1)) {
                    const int p = a.mul(x, y);
                    if (!(set >> p & 1)) {
                        set |= std::uint64_t{1} << p;
                        grew = true;
                    }
                }
            }
        }
    }
    return set;
}

} // namespace

std::vector<ImplicativeFilter> enumerate_filters(const FiniteAlgebra& a,
                                                 int size_cap) {
    const int n = a.size();
    if (n > size_cap || n > 64) {
        throw SizeCapError("filter enumeration refused: size " +
                           std::to_string(n) + " exceeds cap " +
                           std::to_string(std::min(size_cap, 64)));
    }
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue;
    const std::uint64_t triv = filter_closure(a, std::uint64_t{1} << a.top());
    seen.insert(triv);
    queue.push_back(triv);
    while (!queue.empty()) {
        const std::uint64_t f = queue.back();
        queue.pop_back();
        for (int x = 0; x < n; ++x) {
            if (f >> x & 1) continue;
            const std::uint64_t g =
                filter_closure(a, f | (std::uint64_t{1} << x));
            if (seen.insert(g).second) queue.push_back(g);
        }
    }
    std::vector<ImplicativeFilter> out;
    for (std::uint64_t mask : seen) {
        ImplicativeFilter f;
        for (int x = 0; x < n; ++x) {
            if (mask >> x & 1) f.members.push_back(x);
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const ImplicativeFilter& x, const ImplicativeFilter& y) {
                  if (x.members.size() != y.members.size()) {
                      return x.members.size() < y.members.size();
                  }
                  return x.members < y.members;
              });
    return out;
}

Quotient quotient(const FiniteAlgebra& a, const ImplicativeFilter& f) {
    if (!is_implicative_filter(a, f.members)) {
        throw StructuralError("quotient requested by a non-filter set");
    }
    const int n = a.size();
    std::vector<bool> in(n, false);
    for (int x : f.members) in[x] = true;
    auto related = [&](int x, int y) {
        return in[a.imp(x, y)] && in[a.imp(y, x)];
    };
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (cls[x] != -1) continue;
        cls[x] = static_cast<int>(reps.size());
        for (int y = x + 1; y < n; ++y) {
            if (cls[y] == -1 && related(x, y)) cls[y] = cls[x];
        }
        reps.push_back(x);
    }
    const int m = static_cast<int>(reps.size());
    BoolTable leq(m, std::vector<bool>(m));
    ElemTable mul(m, std::vector<int>(m)), imp(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            leq[i][j] = in[a.imp(reps[i], reps[j])];
            mul[i][j] = cls[a.mul(reps[i], reps[j])];
            imp[i][j] = cls[a.imp(reps[i], reps[j])];
        }
    }
    FiniteAlgebra q(m, std::move(leq), std::move(mul), std::move(imp),
                    cls[a.bot()], cls[a.top()]);
    return {std::move(q), std::move(cls)};
}

namespace {

// Cheap invariants that any isomorphism must preserve.
struct ElementProfile {
    int below;       // number of elements <= x
    bool idempotent;
    int power_orbit; // number of distinct powers x, x^2, ...
    bool operator==(const ElementProfile&) const = default;
};

ElementProfile profile(const FiniteAlgebra& a, int x) {
    ElementProfile p{};
    for (int y = 0; y < a.size(); ++y) {
        if (a.leq(y, x)) ++p.below;
    }
    p.idempotent = a.mul(x, x) == x;
    std::set<int> powers;
    int v = x;
    while (powers.insert(v).second) v = a.mul(v, x);
    p.power_orbit = static_cast<int>(powers.size());
    return p;
}

bool full_check(const FiniteAlgebra& a, const FiniteAlgebra& b,
                const std::vector<int>& map) {
    const int n = a.size();
    if (map[a.bot()] != b.bot() || map[a.top()] != b.top()) return false;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
            if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
            if (map[a.imp(x, y)] != b.imp(map[x], map[y])) return false;
        }
    }
    return true;
}

bool extend(const FiniteAlgebra& a, const FiniteAlgebra& b,
            std::vector<int>& map, std::vector<bool>& used, int next,
            const std::vector<ElementProfile>& pa,
            const std::vector<ElementProfile>& pb) {
    const int n = a.size();
    if (next == n) return full_check(a, b, map);
    if (map[next] != -1) return extend(a, b, map, used, next + 1, pa, pb);
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || !(pa[next] == pb[cand])) continue;
        map[next] = cand;
        used[cand] = true;
        // Partial consistency against everything assigned so far; products
        // whose value is not yet assigned are settled by full_check.
        bool consistent = true;
        for (int x = 0; x < n && consistent; ++x) {
            if (map[x] == -1) continue;
            if (a.leq(next, x) != b.leq(cand, map[x]) ||
                a.leq(x, next) != b.leq(map[x], cand)) {
                consistent = false;
                break;
            }
            const int p1 = map[a.mul(next, x)];
            if (p1 != -1 && p1 != b.mul(cand, map[x])) consistent = false;
            const int p2 = map[a.imp(next, x)];
            if (p2 != -1 && p2 != b.imp(cand, map[x])) consistent = false;
            const int p3 = map[a.imp(x, next)];
            if (p3 != -1 && p3 != b.imp(map[x], cand)) consistent = false;
        }
        if (consistent && extend(a, b, map, used, next + 1, pa, pb)) {
            return true;
        }
        map[next] = -1;
        used[cand] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b) {
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.size();
    std::vector<ElementProfile> pa(n), pb(n);
    for (int x = 0; x < n; ++x) {
        pa[x] = profile(a, x);
        pb[x] = profile(b, x);
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    map[a.bot()] = b.bot();
    used[b.bot()] = true;
    if (a.top() != a.bot()) {
        if (b.top() == b.bot()) return std::nullopt;
        map[a.top()] = b.top();
        used[b.top()] = true;
    }
    if (!(pa[a.bot()] == pb[b.bot()]) || !(pa[a.top()] == pb[b.top()])) {
        return std::nullopt;
    }
    if (!extend(a, b, map, used, 0, pa, pb)) return std::nullopt;
    return map;
}

} // namespace nucleon
