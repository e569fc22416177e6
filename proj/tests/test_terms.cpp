#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nucleon/eval.hpp"
#include "nucleon/standard_algebras.hpp"
#include "nucleon/terms.hpp"
#include "test_util.hpp"

using namespace nucleon;

namespace {

std::vector<int> all_elements(const FiniteAlgebra& a) {
    std::vector<int> out(a.size());
    for (int i = 0; i < a.size(); ++i) out[i] = i;
    return out;
}

} // namespace

TEST_CASE("parser shapes") {
    SUBCASE("double negation sugar") {
        const TermPtr t = parse_term("~~x");
        REQUIRE(t->kind() == TermExpr::Kind::Imp);
        CHECK(t->rhs()->kind() == TermExpr::Kind::Bot);
        CHECK(t->lhs()->kind() == TermExpr::Kind::Imp);
        CHECK(t->lhs()->lhs()->kind() == TermExpr::Kind::Var);
        CHECK(same_term(*t, *terms::double_negation()));
    }
    SUBCASE("the s_2 term comes out of the grammar") {
        const TermPtr t = parse_term("~~x /\\ ((x^2 -> x^3) -> x)");
        CHECK(same_term(*t, *terms::s_m(2)));
    }
    SUBCASE("implication is right associative") {
        const TermPtr t = parse_term("x -> y -> z");
        REQUIRE(t->kind() == TermExpr::Kind::Imp);
        CHECK(t->lhs()->kind() == TermExpr::Kind::Var);
        CHECK(t->rhs()->kind() == TermExpr::Kind::Imp);
    }
    SUBCASE("precedence: -> < \\/ < /\\ < * < ~ and ^") {
        const TermPtr t = parse_term("x \\/ y /\\ z * ~w -> 0");
        REQUIRE(t->kind() == TermExpr::Kind::Imp);
        const TermExpr& body = *t->lhs();
        REQUIRE(body.kind() == TermExpr::Kind::Join);
        REQUIRE(body.rhs()->kind() == TermExpr::Kind::Meet);
        CHECK(body.rhs()->rhs()->kind() == TermExpr::Kind::Fuse);
    }
    SUBCASE("powers expand to products") {
        CHECK(same_term(*parse_term("x^3"), *parse_term("x * x * x")));
        CHECK(same_term(*parse_term("x^1"), *parse_term("x")));
        CHECK(same_term(*parse_term("x^0"), *parse_term("1")));
        CHECK(same_term(*parse_term("~x^2"), *parse_term("x * x -> 0")));
    }
    SUBCASE("errors carry positions") {
        CHECK_THROWS_AS(parse_term("x ->"), ParseError);
        CHECK_THROWS_AS(parse_term("(x"), ParseError);
        CHECK_THROWS_AS(parse_term("x y"), ParseError);
        CHECK_THROWS_AS(parse_term(""), ParseError);
        CHECK_THROWS_AS(parse_term("x ^ 99999999999"), ParseError);
        try {
            parse_term("x @ y");
        } catch (const ParseError& e) {
            CHECK(e.position == 2);
        }
    }
}

TEST_CASE("printer round trip") {
    SUBCASE("hand-picked shapes") {
        for (const std::string src :
             {"~~x", "x -> y -> z", "(x -> y) -> z", "x \\/ (y /\\ z)",
              "x * (y \\/ z)", "~(x * y)", "0 -> 1", "x^4 /\\ ~~y"}) {
            const TermPtr t = parse_term(src);
            const TermPtr back = parse_term(print_term(*t));
            CHECK(same_term(*t, *back));
        }
    }
    SUBCASE("seeded random terms") {
        std::mt19937 rng(20240811);
        for (int i = 0; i < 300; ++i) {
            const TermPtr t = testutil::random_term(rng, {"x", "y", "zq"}, 4);
            const TermPtr back = parse_term(print_term(*t));
            CHECK(same_term(*t, *back));
        }
    }
    SUBCASE("negation prints compactly") {
        CHECK(print_term(*terms::double_negation()) == "~~x");
        CHECK(print_term(*parse_term("x -> 0")) == "~x");
    }
}

TEST_CASE("substitution") {
    const TermPtr t = substitute(*parse_term("(x -> c) -> c"), "c",
                                 parse_term("y * y"));
    CHECK(same_term(*t, *parse_term("(x -> y * y) -> y * y")));
}

TEST_CASE("evaluation on finite algebras") {
    SUBCASE("the square relative negation moves a_2 to a_n") {
        for (int n = 3; n <= 6; ++n) {
            const FiniteAlgebra a = middle_collapse_chain(n);
            const EnvOf<FiniteAlgebra> env{{"x", 2}}; // a_2
            CHECK(eval_term(*terms::square_relative_negation(), a, env) == n);
        }
    }
    SUBCASE("top is a unit for implication") {
        for (const auto& [name, a] : testutil::small_corpus(7)) {
            INFO(name);
            const TermPtr t = parse_term("1 -> x");
            for (int e = 0; e < a.size(); ++e) {
                CHECK(eval_term(*t, a, {{"x", e}}) == e);
            }
        }
    }
    SUBCASE("unbound variables are reported") {
        CHECK_THROWS_AS(eval_term(*parse_term("x -> y"), godel_chain(3), {{"x", 0}}),
                        EvalError);
    }
}

TEST_CASE("evaluation on chains") {
    const ChainDescriptor d = parse_descriptor("S1 + S1 + Sw");
    const ChainOps ops(d);
    const ChainElement e = ChainElement::power(2, 1);
    CHECK(eval_term(*terms::s_m(1), ops, {{"x", e}}) == ChainElement::top());
    CHECK(eval_term(*terms::t_m(1), ops, {{"x", e}}) == e);
}

TEST_CASE("identity checking") {
    SUBCASE("s_1 collapses to x on MV chains") {
        for (int n = 1; n <= 6; ++n) {
            const FiniteAlgebra a = mv_chain(n);
            CHECK_FALSE(find_identity_counterexample(*terms::s_m(1),
                                                     *terms::identity(), a,
                                                     all_elements(a)));
        }
    }
    SUBCASE("t_1 collapses to double negation on an idempotent chain") {
        const FiniteAlgebra g = godel_chain(3);
        CHECK_FALSE(find_identity_counterexample(*terms::t_m(1),
                                                 *terms::double_negation(), g,
                                                 all_elements(g)));
    }
    SUBCASE("involution fails above the first component") {
        const ChainDescriptor d = parse_descriptor("S1 + Sw");
        const ChainOps ops(d);
        const auto cex = find_identity_counterexample(
            *terms::double_negation(), *terms::identity(), ops,
            enumerate_window(d, 16));
        REQUIRE(cex.has_value());
        CHECK(cex->env.at("x") == ChainElement::power(1, 1));
        CHECK(cex->lhs == ChainElement::top());
        CHECK(cex->rhs == ChainElement::power(1, 1));
    }
    SUBCASE("assignment cap refuses huge products") {
        const FiniteAlgebra g = godel_chain(10);
        const TermPtr lhs = parse_term("a -> b -> c -> d -> e -> f -> g -> h");
        CHECK_THROWS_AS(find_identity_counterexample(*lhs, *parse_term("x"), g,
                                                     all_elements(g)),
                        SizeCapError);
    }
}

TEST_CASE("s/t lattice identities on stabilized descriptors") {
    // every finite tail component has k <= m
    const std::vector<std::pair<std::string, int>> cases{
        {"S1 + S1 + Sw", 1}, {"S1 + S3", 3}, {"S2 + S2", 2},
        {"S1 + Sw", 1},      {"S1 + Sw + S1", 1}};
    for (const auto& [desc, m] : cases) {
        INFO(desc);
        const ChainDescriptor d = parse_descriptor(desc);
        const ChainOps ops(d);
        const auto w = enumerate_window(d, 8);
        const TermPtr s = terms::s_m(m), t = terms::t_m(m);
        CHECK_FALSE(find_identity_counterexample(
            *TermExpr::meet(s, t), *terms::identity(), ops, w));
        CHECK_FALSE(find_identity_counterexample(
            *TermExpr::join(s, t), *terms::double_negation(), ops, w));
        const TermPtr rhs = TermExpr::meet(
            terms::double_negation(), TermExpr::imp(t, terms::identity()));
        CHECK_FALSE(find_identity_counterexample(*s, *rhs, ops, w));
    }
}

TEST_CASE("pointwise residuation facts hold for random term values") {
    std::mt19937 rng(99);
    const FiniteAlgebra a = mv_chain(3);
    for (int i = 0; i < 100; ++i) {
        const TermPtr p = testutil::random_term(rng, {"x", "y"}, 3);
        const TermPtr q = testutil::random_term(rng, {"x", "y"}, 3);
        for (int x = 0; x < a.size(); ++x) {
            for (int y = 0; y < a.size(); ++y) {
                const EnvOf<FiniteAlgebra> env{{"x", x}, {"y", y}};
                const int vp = eval_term(*p, a, env);
                const int vq = eval_term(*q, a, env);
                // b <= a -> (a.b) <= a -> b
                CHECK(a.leq(vq, a.imp(vp, a.mul(vp, vq))));
                CHECK(a.leq(a.imp(vp, a.mul(vp, vq)), a.imp(vp, vq)));
            }
        }
    }
}
