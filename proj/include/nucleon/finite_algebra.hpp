#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nucleon/errors.hpp"

namespace nucleon {

using BoolTable = std::vector<std::vector<bool>>;
using ElemTable = std::vector<std::vector<int>>;

/// One failed law, with the tuple of elements that witnesses the failure.
struct AxiomFailure {
    std::string axiom;
    std::vector<int> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Derive the residuum table imp(b,c) = max{z : mul(b,z) <= c} from a lattice
/// order and a monoid table. Throws NotResiduatedError if some pair has no
/// maximum.
ElemTable residuum_from_mul(const BoolTable& leq, const ElemTable& mul,
                            int bot, int top);

/// A bounded commutative integral residuated lattice on {0..n-1}, given by
/// explicit tables. Construction checks only structure (shapes and ranges);
/// whether the tables satisfy the axioms is the business of validate_axioms.
/// Meet/join tables are derived from leq up front; pairs without a greatest
/// lower (least upper) bound are recorded as absent and surface as axiom
/// failures, not crashes. Instances are immutable.
class FiniteAlgebra {
public:
    using Elem = int;

    /// If imp is not supplied it is derived via residuum_from_mul.
    FiniteAlgebra(int size, BoolTable leq, ElemTable mul,
                  std::optional<ElemTable> imp, int bot, int top);

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int imp(int a, int b) const { return imp_[a][b]; }
    int neg(int a) const { return imp_[a][bot_]; }
    int bot() const { return bot_; }
    int top() const { return top_; }

    /// -1 when the pair has no meet/join in leq (invalid algebra).
    int meet(int a, int b) const { return meet_[a][b]; }
    int join(int a, int b) const { return join_[a][b]; }

    const BoolTable& leq_table() const { return leq_; }
    const ElemTable& mul_table() const { return mul_; }
    const ElemTable& imp_table() const { return imp_; }

    bool operator==(const FiniteAlgebra& other) const;

private:
    int n_;
    BoolTable leq_;
    ElemTable mul_, imp_;
    ElemTable meet_, join_;
    int bot_, top_;
};

/// Check every defining law of a bounded commutative integral residuated
/// lattice, plus a battery of derived properties that any valid algebra must
/// satisfy (the derived checks run only when the core laws pass, to keep
/// reports readable). Empty report iff the algebra is valid.
ValidationReport validate_axioms(const FiniteAlgebra& a);

struct AlgebraClassFlags {
    bool is_bl = false;
    bool is_mv = false;
    bool is_idempotent = false; // x^2 = x everywhere (Heyting)
    bool is_prelinear = false;
    bool is_divisible = false;
    bool is_involutive = false;
    bool is_chain = false;
};

/// Exhaustively evaluates each defining identity. Expects a valid algebra.
AlgebraClassFlags classify_algebra(const FiniteAlgebra& a);

struct Subalgebra {
    FiniteAlgebra algebra;
    std::vector<int> embedding; // new index -> index in the parent
};

/// Smallest subuniverse containing the seed set together with bot and top,
/// closed under meet, join, mul and imp.
Subalgebra generated_subalgebra(const FiniteAlgebra& a,
                                const std::vector<int>& seed);

struct ImplicativeFilter {
    std::vector<int> members; // ascending
};

/// True iff members contains top, is upward closed and closed under mul.
bool is_implicative_filter(const FiniteAlgebra& a,
                           const std::vector<int>& members);

/// All implicative filters, ordered by size then lexicographically.
/// Refuses algebras larger than the cap.
std::vector<ImplicativeFilter> enumerate_filters(const FiniteAlgebra& a,
                                                 int size_cap = 64);

struct Quotient {
    FiniteAlgebra algebra;
    std::vector<int> projection; // parent index -> class index
};

/// Quotient by the congruence a ~ b iff a->b and b->a both lie in f.
/// Throws StructuralError if f is not an implicative filter.
Quotient quotient(const FiniteAlgebra& a, const ImplicativeFilter& f);

/// Searches for a bijection preserving leq, mul, imp, bot and top.
/// Backtracking over candidates compatible with cheap per-element invariants.
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b);

} // namespace nucleon
