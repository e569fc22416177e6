#pragma once

#include <memory>
#include <set>
#include <string>

#include "nucleon/errors.hpp"

namespace nucleon {

class TermExpr;
using TermPtr = std::shared_ptr<const TermExpr>;

/// Terms over {/\, \/, *, ->, 0, 1} and variables. Negation and powers are
/// sugar: ~t is t -> 0 and t^n is the n-fold product (t^0 is 1), expanded at
/// construction so evaluators only see the six node kinds.
class TermExpr {
public:
    enum class Kind { Var, Bot, Top, Meet, Join, Fuse, Imp };

    static TermPtr var(std::string name);
    static TermPtr bot();
    static TermPtr top();
    static TermPtr meet(TermPtr l, TermPtr r);
    static TermPtr join(TermPtr l, TermPtr r);
    static TermPtr fuse(TermPtr l, TermPtr r);
    static TermPtr imp(TermPtr l, TermPtr r);
    static TermPtr neg(TermPtr t) { return imp(std::move(t), bot()); }
    static TermPtr pow(TermPtr t, int n);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const TermPtr& lhs() const { return lhs_; }
    const TermPtr& rhs() const { return rhs_; }

    TermExpr(Kind k, std::string name, TermPtr l, TermPtr r)
        : kind_(k), name_(std::move(name)), lhs_(std::move(l)), rhs_(std::move(r)) {}

private:
    Kind kind_;
    std::string name_;
    TermPtr lhs_, rhs_;
};

bool same_term(const TermExpr& a, const TermExpr& b);
std::set<std::string> free_vars(const TermExpr& t);

/// Replace every occurrence of a variable by a term.
TermPtr substitute(const TermExpr& t, const std::string& var, const TermPtr& replacement);

/// Grammar (loosest to tightest):
///   term  := or ('->' term)?          -> is right associative
///   or    := and ('\/' and)*
///   and   := fus ('/\' fus)*
///   fus   := unary ('*' unary)*
///   unary := '~' unary | atom ('^' nat)?
///   atom  := '0' | '1' | ident | '(' term ')'
TermPtr parse_term(const std::string& src);

/// Minimal-parenthesis form under the same precedence table; t -> 0 prints
/// as ~t. parse_term(print_term(t)) reproduces t node for node.
std::string print_term(const TermExpr& t);

namespace terms {

/// x
TermPtr identity();
/// 1
TermPtr top();
/// ~~x
TermPtr double_negation();
/// ~~x /\ ((x^m -> x^{m+1}) -> x)
TermPtr s_m(int m);
/// ~~x /\ (x^m -> x^{m+1})
TermPtr t_m(int m);
/// (x -> c) -> c; bind c to a fixed element to get the double negation
/// relative to that element.
TermPtr relative_double_negation();
/// x \/ c; bind c likewise.
TermPtr join_constant();
/// (x -> x^2) -> x^2
TermPtr square_relative_negation();

} // namespace terms

} // namespace nucleon
