// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "nucleon/eval.hpp"
#include "nucleon/json_io.hpp"
#include "nucleon/nuclei.hpp"
#include "nucleon/standard_algebras.hpp"
#include "nucleon/variety.hpp"

using namespace nucleon;

namespace {

struct NamedAlgebra {
    std::string name;
    FiniteAlgebra algebra;
};

std::vector<NamedAlgebra> axiom_corpus() {
    std::vector<NamedAlgebra> out;
    for (int n = 1; n <= 8; ++n) {
        out.push_back({"mv_chain(" + std::to_string(n) + ")", mv_chain(n)});
    }
    for (int s = 3; s <= 6; ++s) {
        out.push_back({"godel_chain(" + std::to_string(s) + ")", godel_chain(s)});
    }
    out.push_back({"[S1 + S3]",
                   materialize_finite(parse_descriptor("S1 + S3")).algebra});
    out.push_back({"[S2 + S2]",
                   materialize_finite(parse_descriptor("S2 + S2")).algebra});
    for (int n = 3; n <= 6; ++n) {
        out.push_back({"middle_collapse(" + std::to_string(n) + ")",
                       middle_collapse_chain(n)});
    }
    return out;
}

std::vector<int> all_elements(const FiniteAlgebra& a) {
    std::vector<int> out(a.size());
    for (int i = 0; i < a.size(); ++i) out[i] = i;
    return out;
}

std::set<std::vector<int>> value_set(const std::vector<NucleusMap>& maps) {
    std::set<std::vector<int>> out;
    for (const NucleusMap& m : maps) out.insert(m.values);
    return out;
}

bool fail(std::string& why, const std::string& message) {
    why = message;
    return false;
}

// --------------------------------------------------------------------------
// 1. Axiom suite with random single-entry mutations
// --------------------------------------------------------------------------
bool criterion1(std::string& why) {
    std::mt19937 rng(20250809);
    for (const auto& [name, a] : axiom_corpus()) {
        if (!validate_axioms(a).ok()) {
            return fail(why, name + " failed validation");
        }
        std::uniform_int_distribution<int> pick_table(0, 2);
        std::uniform_int_distribution<int> pick_index(0, a.size() - 1);
        for (int round = 0; round < 100; ++round) {
            BoolTable leq = a.leq_table();
            ElemTable mul = a.mul_table();
            ElemTable imp = a.imp_table();
            const int i = pick_index(rng), j = pick_index(rng);
            const int which = pick_table(rng);
            if (which == 0) {
                leq[i][j] = !leq[i][j];
            } else {
                ElemTable& t = which == 1 ? mul : imp;
                std::uniform_int_distribution<int> pick_value(0, a.size() - 2);
                int v = pick_value(rng);
                if (v >= t[i][j]) ++v; // anything except the old value
                t[i][j] = v;
            }
            const FiniteAlgebra mutated(a.size(), leq, mul, imp, a.bot(), a.top());
            const ValidationReport r = validate_axioms(mutated);
            if (r.ok()) {
                std::ostringstream os;
                os << name << " mutation round " << round
                   << " (table " << which << ", entry " << i << "," << j
                   << ") was not rejected";
                return fail(why, os.str());
            }
            if (r.failures.front().axiom.empty() ||
                r.failures.front().witness.empty()) {
                return fail(why, name + " rejection lacks axiom name or witness");
            }
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 2. Oracle equivalence with pinned counts
// --------------------------------------------------------------------------
bool criterion2(std::string& why) {
    for (const auto& [name, a] : axiom_corpus()) {
        if (a.size() > 6) continue;
        if (value_set(enumerate_nuclei(a)) != value_set(brute_force_nuclei(a))) {
            return fail(why, name + ": enumeration disagrees with the oracle");
        }
    }
    if (enumerate_nuclei(mv_chain(2)).size() != 3) {
        return fail(why, "mv_chain(2) should have 3 nuclei");
    }
    if (enumerate_nuclei(mv_chain(3)).size() != 4) {
        return fail(why, "mv_chain(3) should have 4 nuclei");
    }
    if (enumerate_nuclei(godel_chain(3)).size() != 4) {
        return fail(why, "godel_chain(3) should have 4 nuclei");
    }
    return true;
}

// --------------------------------------------------------------------------
// 3. MV law: gamma(a) = a \/ gamma(bot), exactly
// --------------------------------------------------------------------------
bool criterion3(std::string& why) {
    bool saw_mv = false;
    for (const auto& [name, a] : axiom_corpus()) {
        if (!classify_algebra(a).is_mv) continue;
        saw_mv = true;
        for (const NucleusMap& g : enumerate_nuclei(a)) {
            const int c = g.values[a.bot()];
            for (int x = 0; x < a.size(); ++x) {
                if (g.values[x] != a.join(x, c)) {
                    return fail(why, name + ": nucleus is not a relative join");
                }
            }
        }
    }
    return saw_mv || fail(why, "no MV algebra in the corpus");
}

// --------------------------------------------------------------------------
// 4. The square relative negation on the collapse chains
// --------------------------------------------------------------------------
bool criterion4(std::string& why) {
    const TermPtr t = terms::square_relative_negation();
    for (int n = 3; n <= 6; ++n) {
        const FiniteAlgebra a = middle_collapse_chain(n);
        if (find_term_nucleus_counterexample(*t, a, all_elements(a))) {
            return fail(why, "term rejected on middle_collapse(" +
                                 std::to_string(n) + ")");
        }
        const std::vector<int> tv = term_values(a, *t);
        if (tv[a.bot()] != a.bot()) return fail(why, "t(bot) != bot");
        const int a2 = 2, an = n;
        const bool witness = a.leq(a2, tv[a2]) && a2 != tv[a2] &&
                             tv[a2] == an && an != a.top() &&
                             a.neg(a.neg(a2)) == a.top();
        if (!witness) {
            return fail(why, "strictness chain a_2 < t(a_2) = a_n < ~~a_2 broken");
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 5. Variety classification end to end at window 16
// --------------------------------------------------------------------------
bool criterion5(std::string& why) {
    const int W = 16;
    struct Case {
        std::vector<std::string> gens;
        CatalogCase expected;
        int m;
        std::vector<std::string> in_catalog;
        std::vector<std::string> refuted;
    };
    const std::vector<Case> cases{
        {{"S1 + S1 + Sw"}, CatalogCase::II, 1, {"s_m"}, {"t_m"}},
        {{"S1 + Sw + S1"}, CatalogCase::III, 1, {"t_m"}, {"s_m"}},
        {{"S1 + S1", "S1 + Sw"}, CatalogCase::IV, 1, {"s_m", "t_m"}, {}},
        {{"S1 + S1w"}, CatalogCase::I, 0, {}, {"s_m", "t_m"}},
        {{"S1 + S3", "S1 + S2 + Sw"}, CatalogCase::II, 3, {"s_m"}, {"t_m"}},
    };
    for (const Case& c : cases) {
        VarietyDescriptor v;
        std::string label;
        for (const std::string& g : c.gens) {
            v.generators.push_back(parse_descriptor(g));
            label += "[" + g + "]";
        }
        const VerificationReport r = verify_classification(v, W);
        if (r.catalog.case_id != c.expected) {
            return fail(why, label + ": wrong case " + to_string(r.catalog.case_id));
        }
        if (c.m > 0 && r.catalog.m != c.m) {
            return fail(why, label + ": wrong m");
        }
        for (const std::string& name : c.in_catalog) {
            bool found = false;
            for (const CatalogEntry& e : r.catalog.entries) found |= e.name == name;
            if (!found) return fail(why, label + ": catalog misses " + name);
        }
        for (const std::string& name : c.refuted) {
            bool refuted = false;
            for (const VerificationCheck& ck : r.checks) {
                if (ck.term == name &&
                    ck.expectation == "refuted on some generator" &&
                    ck.status == CheckStatus::Ok && !ck.witness.empty()) {
                    refuted = true;
                }
            }
            if (!refuted) return fail(why, label + ": " + name + " not refuted");
        }
        for (const VerificationCheck& ck : r.checks) {
            if (ck.status == CheckStatus::InconclusiveWindow) {
                return fail(why, label + ": inconclusive window for " + ck.term);
            }
            if (ck.status == CheckStatus::Failed) {
                return fail(why, label + ": failed check for " + ck.term);
            }
        }
    }
    // wrong exponent: s_1 must be refuted on [S1 + S3] while s_3 passes
    const ChainDescriptor d = parse_descriptor("S1 + S3");
    const ChainOps ops(d);
    const auto w = enumerate_window(d, W);
    if (find_term_nucleus_counterexample(*terms::s_m(3), ops, w)) {
        return fail(why, "s_3 rejected on [S1 + S3]");
    }
    if (!find_term_nucleus_counterexample(*terms::s_m(1), ops, w)) {
        return fail(why, "s_1 not refuted on [S1 + S3]");
    }
    return true;
}

// --------------------------------------------------------------------------
// 6. Glivenko identity and the decomposition identity for catalog terms
// --------------------------------------------------------------------------
bool criterion6(std::string& why) {
    const std::vector<std::vector<std::string>> varieties{
        {"S1 + S1 + Sw"},
        {"S1 + Sw + S1"},
        {"S1 + S1", "S1 + Sw"},
        {"S1 + S1w"},
        {"S1 + S3", "S1 + S2 + Sw"}};
    for (const auto& gens : varieties) {
        VarietyDescriptor v;
        for (const std::string& g : gens) v.generators.push_back(parse_descriptor(g));
        const NucleusCatalog cat = classify(v);
        for (const ChainDescriptor& g : v.generators) {
            const ChainOps ops(g);
            const auto w = enumerate_window(g, 16);
            for (const CatalogEntry& e : cat.entries) {
                const TermPtr gliv = substitute(
                    *e.term, "x", TermExpr::imp(e.term, terms::identity()));
                if (find_identity_counterexample(*gliv, *terms::top(), ops, w)) {
                    return fail(why, "Glivenko identity fails for " + e.name +
                                         " on " + to_string(g));
                }
                const ChainElement at_bot =
                    eval_term(*e.term, ops, {{"x", ops.bot()}});
                if (!(at_bot == ops.bot())) continue; // decomposition needs t(0)=0
                const TermPtr dn = terms::double_negation();
                const TermPtr decomp = TermExpr::fuse(
                    TermExpr::fuse(dn, TermExpr::imp(dn, e.term)),
                    TermExpr::imp(e.term, terms::identity()));
                if (find_identity_counterexample(*decomp, *terms::identity(),
                                                 ops, w)) {
                    return fail(why, "decomposition fails for " + e.name +
                                         " on " + to_string(g));
                }
            }
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 7. s/t lattice identities on the criterion-5 varieties with defined m
// --------------------------------------------------------------------------
bool criterion7(std::string& why) {
    const std::vector<std::pair<std::vector<std::string>, int>> cases{
        {{"S1 + S1 + Sw"}, 1},
        {{"S1 + Sw + S1"}, 1},
        {{"S1 + S1", "S1 + Sw"}, 1},
        {{"S1 + S3", "S1 + S2 + Sw"}, 3}};
    for (const auto& [gens, m] : cases) {
        const TermPtr s = terms::s_m(m), t = terms::t_m(m);
        for (const std::string& gtext : gens) {
            const ChainDescriptor d = parse_descriptor(gtext);
            const ChainOps ops(d);
            const auto w = enumerate_window(d, 16);
            if (find_identity_counterexample(*TermExpr::meet(s, t),
                                             *terms::identity(), ops, w)) {
                return fail(why, "s /\\ t != x on " + gtext);
            }
            if (find_identity_counterexample(*TermExpr::join(s, t),
                                             *terms::double_negation(), ops, w)) {
                return fail(why, "s \\/ t != ~~x on " + gtext);
            }
            const TermPtr rhs = TermExpr::meet(
                terms::double_negation(), TermExpr::imp(t, terms::identity()));
            if (find_identity_counterexample(*s, *rhs, ops, w)) {
                return fail(why, "s != ~~x /\\ (t -> x) on " + gtext);
            }
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 8. Nucleus-theory property suite on the finite corpus
// --------------------------------------------------------------------------
bool criterion8(std::string& why) {
    for (const auto& [name, a] : axiom_corpus()) {
        const auto nuclei = enumerate_nuclei(a);
        const auto all = value_set(nuclei);
        for (const NucleusMap& nm : nuclei) {
            const auto& g = nm.values;
            for (int x = 0; x < a.size(); ++x) {
                const int gb = g[a.bot()];
                if (!a.leq(a.join(x, gb), g[x]) ||
                    !a.leq(g[x], a.imp(a.imp(x, gb), gb))) {
                    return fail(why, name + ": bound sandwich fails");
                }
                for (int y = 0; y < a.size(); ++y) {
                    if (g[a.mul(x, y)] != g[a.mul(g[x], y)] ||
                        g[a.mul(x, y)] != g[a.mul(g[x], g[y])]) {
                        return fail(why, name + ": product compatibility fails");
                    }
                    if (!a.leq(g[a.imp(x, y)], a.imp(g[x], g[y])) ||
                        !a.leq(a.imp(g[x], g[y]), a.imp(x, g[y]))) {
                        return fail(why, name + ": residuum comparison fails");
                    }
                    if (g[a.imp(x, g[y])] != a.imp(x, g[y])) {
                        return fail(why, name + ": closed residuum not fixed");
                    }
                    if (a.leq(g[y], g[x]) &&
                        (!a.leq(a.join(x, g[y]), g[x]) ||
                         !a.leq(g[x], a.imp(a.imp(x, g[y]), g[y])))) {
                        return fail(why, name + ": conditional sandwich fails");
                    }
                }
            }
            for (int x = 0; x < a.size(); ++x) {
                bool below_all = true;
                for (int b = 0; b < a.size(); ++b) {
                    if (!a.leq(g[b], a.imp(a.imp(b, x), x))) below_all = false;
                }
                if ((g[x] == x) != below_all) {
                    return fail(why, name + ": image characterization fails");
                }
                int least = -1;
                for (int b = 0; b < a.size(); ++b) {
                    if (g[b] != b) continue;
                    const int r = a.imp(a.imp(x, b), b);
                    if (least == -1 || a.leq(r, least)) least = r;
                }
                if (least != g[x]) {
                    return fail(why, name + ": least relative negation fails");
                }
            }
            if (!validate_axioms(nuclear_image(a, nm).algebra).ok()) {
                return fail(why, name + ": nuclear image fails validation");
            }
            const GlivenkoResult gl = glivenko_check(a, nm);
            if (gl.holds && (!gl.homomorphism || !gl.quotient_iso)) {
                return fail(why, name + ": Glivenko holds but no verified quotient");
            }
        }
        for (const NucleusMap& m1 : nuclei) {
            for (const NucleusMap& m2 : nuclei) {
                std::vector<int> meet(a.size());
                for (int x = 0; x < a.size(); ++x) {
                    meet[x] = a.meet(m1.values[x], m2.values[x]);
                }
                if (all.count(meet) != 1) {
                    return fail(why, name + ": nucleus meet escapes the set");
                }
            }
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 9. Idempotent collapse on Goedel chains
// --------------------------------------------------------------------------
bool criterion9(std::string& why) {
    for (int size = 2; size <= 6; ++size) {
        const FiniteAlgebra g = godel_chain(size);
        const auto dom = all_elements(g);
        for (int m = 1; m <= 3; ++m) {
            if (find_identity_counterexample(*terms::s_m(m), *terms::identity(),
                                             g, dom)) {
                return fail(why, "s_" + std::to_string(m) + " != x on size " +
                                     std::to_string(size));
            }
            if (find_identity_counterexample(*terms::t_m(m),
                                             *terms::double_negation(), g, dom)) {
                return fail(why, "t_" + std::to_string(m) + " != ~~x on size " +
                                     std::to_string(size));
            }
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 10. The homomorphism identity for 200 random two-variable terms
// --------------------------------------------------------------------------
TermPtr random_term(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> leaf(0, 3);
    if (depth == 0) {
        switch (leaf(rng)) {
        case 0: return TermExpr::bot();
        case 1: return TermExpr::top();
        case 2: return TermExpr::var("x");
        default: return TermExpr::var("y");
        }
    }
    std::uniform_int_distribution<int> node(0, 5);
    switch (node(rng)) {
    case 0: return TermExpr::meet(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 1: return TermExpr::join(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 2: return TermExpr::fuse(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 3: return TermExpr::imp(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default: return random_term(rng, 0);
    }
}

bool criterion10(std::string& why) {
    std::mt19937 rng(271828);
    for (const std::string desc : {"S1 + S2", "S1 + S1"}) {
        const FiniteAlgebra a =
            materialize_finite(parse_descriptor(desc)).algebra;
        const std::vector<int> tv = term_values(a, *terms::double_negation());
        for (int round = 0; round < 200; ++round) {
            const TermPtr phi = random_term(rng, 4);
            for (int x = 0; x < a.size(); ++x) {
                for (int y = 0; y < a.size(); ++y) {
                    const int lhs = tv[eval_term(*phi, a, {{"x", x}, {"y", y}})];
                    const int rhs =
                        tv[eval_term(*phi, a, {{"x", tv[x]}, {"y", tv[y]}})];
                    if (lhs != rhs) {
                        return fail(why, "homomorphism identity fails on " + desc +
                                             " for " + print_term(*phi));
                    }
                }
            }
        }
    }
    return true;
}

struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::string&)> run;
    double budget_seconds; // 0 = no stated budget
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "axiom suite accepts the corpus and rejects 100 mutations each",
         criterion1, 5.0},
        {2, "nucleus enumeration equals the brute-force oracle (counts 3/4/4)",
         criterion2, 30.0},
        {3, "every nucleus on an MV algebra is a relative join", criterion3, 0},
        {4, "square relative negation is a nontrivial nucleus on collapse chains",
         criterion4, 0},
        {5, "variety classification end-to-end at window 16", criterion5, 10.0},
        {6, "Glivenko and decomposition identities for catalog terms",
         criterion6, 0},
        {7, "s/t lattice identities at window 16", criterion7, 0},
        {8, "nucleus-theory property suite on the finite corpus", criterion8, 0},
        {9, "s/t collapse on idempotent chains", criterion9, 0},
        {10, "homomorphism identity for 200 random terms", criterion10, 0},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            ok = false;
            std::ostringstream os;
            os << "exceeded budget of " << c.budget_seconds << " s";
            why = os.str();
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
             << c.label << " (" << seconds << " s)";
        if (!ok) line << " -- " << why;
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(failures) + " CRITERIA FAILED")
              << "\n";
    return failures;
}
