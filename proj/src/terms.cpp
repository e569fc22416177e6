#include "nucleon/terms.hpp"

#include <cctype>
#include <sstream>

namespace nucleon {

TermPtr TermExpr::var(std::string name) {
    return std::make_shared<TermExpr>(Kind::Var, std::move(name), nullptr, nullptr);
}
TermPtr TermExpr::bot() {
    return std::make_shared<TermExpr>(Kind::Bot, "", nullptr, nullptr);
}
TermPtr TermExpr::top() {
    return std::make_shared<TermExpr>(Kind::Top, "", nullptr, nullptr);
}
TermPtr TermExpr::meet(TermPtr l, TermPtr r) {
    return std::make_shared<TermExpr>(Kind::Meet, "", std::move(l), std::move(r));
}
TermPtr TermExpr::join(TermPtr l, TermPtr r) {
    return std::make_shared<TermExpr>(Kind::Join, "", std::move(l), std::move(r));
}
TermPtr TermExpr::fuse(TermPtr l, TermPtr r) {
    return std::make_shared<TermExpr>(Kind::Fuse, "", std::move(l), std::move(r));
}
TermPtr TermExpr::imp(TermPtr l, TermPtr r) {
    return std::make_shared<TermExpr>(Kind::Imp, "", std::move(l), std::move(r));
}

TermPtr TermExpr::pow(TermPtr t, int n) {
    if (n < 0) throw ParseError("negative exponent", 0);
    if (n == 0) return top();
    TermPtr acc = t;
    for (int i = 1; i < n; ++i) acc = fuse(acc, t);
    return acc;
}

bool same_term(const TermExpr& a, const TermExpr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case TermExpr::Kind::Var:
        return a.name() == b.name();
    case TermExpr::Kind::Bot:
    case TermExpr::Kind::Top:
        return true;
    default:
        return same_term(*a.lhs(), *b.lhs()) && same_term(*a.rhs(), *b.rhs());
    }
}

namespace {

void collect_vars(const TermExpr& t, std::set<std::string>& out) {
    switch (t.kind()) {
    case TermExpr::Kind::Var:
        out.insert(t.name());
        return;
    case TermExpr::Kind::Bot:
    case TermExpr::Kind::Top:
        return;
    default:
        collect_vars(*t.lhs(), out);
        collect_vars(*t.rhs(), out);
    }
}

} // namespace

std::set<std::string> free_vars(const TermExpr& t) {
    std::set<std::string> out;
    collect_vars(t, out);
    return out;
}

TermPtr substitute(const TermExpr& t, const std::string& var,
                   const TermPtr& replacement) {
    switch (t.kind()) {
    case TermExpr::Kind::Var:
        return t.name() == var
                   ? replacement
                   : TermExpr::var(t.name());
    case TermExpr::Kind::Bot:
        return TermExpr::bot();
    case TermExpr::Kind::Top:
        return TermExpr::top();
    default: {
        TermPtr l = substitute(*t.lhs(), var, replacement);
        TermPtr r = substitute(*t.rhs(), var, replacement);
        return std::make_shared<TermExpr>(t.kind(), "", std::move(l), std::move(r));
    }
    }
}

// --------------------------------------------------------------------------
// Parser
// --------------------------------------------------------------------------

namespace {

constexpr int kMaxExponent = 1 << 20;

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    TermPtr run() {
        TermPtr t = term();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    TermPtr term() {
        TermPtr l = or_expr();
        if (eat("->")) return TermExpr::imp(std::move(l), term());
        return l;
    }

    TermPtr or_expr() {
        TermPtr l = and_expr();
        while (eat("\\/")) l = TermExpr::join(std::move(l), and_expr());
        return l;
    }

    TermPtr and_expr() {
        TermPtr l = fus_expr();
        while (eat("/\\")) l = TermExpr::meet(std::move(l), fus_expr());
        return l;
    }

    TermPtr fus_expr() {
        TermPtr l = unary();
        while (eat("*")) l = TermExpr::fuse(std::move(l), unary());
        return l;
    }

    TermPtr unary() {
        if (eat("~")) return TermExpr::neg(unary());
        TermPtr a = atom();
        if (eat("^")) {
            const std::size_t at = pos_;
            const long long n = natural();
            if (n > kMaxExponent) throw ParseError("exponent too large", at);
            return TermExpr::pow(std::move(a), static_cast<int>(n));
        }
        return a;
    }

    TermPtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '0') {
            ++pos_;
            return TermExpr::bot();
        }
        if (c == '1') {
            ++pos_;
            return TermExpr::top();
        }
        if (c == '(') {
            ++pos_;
            TermPtr t = term();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_')) {
                ++pos_;
            }
            return TermExpr::var(src_.substr(start, pos_ - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    long long natural() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an exponent", start);
        if (pos_ - start > 9) throw ParseError("exponent too large", start);
        return std::stoll(src_.substr(start, pos_ - start));
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (src_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

} // namespace

TermPtr parse_term(const std::string& src) { return Parser(src).run(); }

// --------------------------------------------------------------------------
// Printer
// --------------------------------------------------------------------------

namespace {

// Precedence levels: -> 1, \/ 2, /\ 3, * 4, ~ 5, atoms 6.
void print_at(const TermExpr& t, int ctx, std::ostream& os) {
    auto wrap = [&](int prec, auto emit) {
        if (prec < ctx) {
            os << "(";
            emit();
            os << ")";
        } else {
            emit();
        }
    };
    switch (t.kind()) {
    case TermExpr::Kind::Var:
        os << t.name();
        return;
    case TermExpr::Kind::Bot:
        os << "0";
        return;
    case TermExpr::Kind::Top:
        os << "1";
        return;
    case TermExpr::Kind::Imp:
        if (t.rhs()->kind() == TermExpr::Kind::Bot) {
            wrap(5, [&] {
                os << "~";
                print_at(*t.lhs(), 5, os);
            });
            return;
        }
        wrap(1, [&] {
            print_at(*t.lhs(), 2, os); // left side binds tighter
            os << " -> ";
            print_at(*t.rhs(), 1, os); // right associative
        });
        return;
    case TermExpr::Kind::Join:
        wrap(2, [&] {
            print_at(*t.lhs(), 2, os);
            os << " \\/ ";
            print_at(*t.rhs(), 3, os);
        });
        return;
    case TermExpr::Kind::Meet:
        wrap(3, [&] {
            print_at(*t.lhs(), 3, os);
            os << " /\\ ";
            print_at(*t.rhs(), 4, os);
        });
        return;
    case TermExpr::Kind::Fuse:
        wrap(4, [&] {
            print_at(*t.lhs(), 4, os);
            os << " * ";
            print_at(*t.rhs(), 5, os);
        });
        return;
    }
}

} // namespace

std::string print_term(const TermExpr& t) {
    std::ostringstream os;
    print_at(t, 1, os);
    return os.str();
}

// --------------------------------------------------------------------------
// Named terms
// --------------------------------------------------------------------------

namespace terms {

TermPtr identity() { return TermExpr::var("x"); }

TermPtr top() { return TermExpr::top(); }

TermPtr double_negation() { return TermExpr::neg(TermExpr::neg(TermExpr::var("x"))); }

TermPtr s_m(int m) {
    if (m < 1) throw ParseError("s_m needs m >= 1", 0);
    TermPtr x = TermExpr::var("x");
    TermPtr step = TermExpr::imp(TermExpr::pow(x, m), TermExpr::pow(x, m + 1));
    return TermExpr::meet(double_negation(), TermExpr::imp(std::move(step), x));
}

TermPtr t_m(int m) {
    if (m < 1) throw ParseError("t_m needs m >= 1", 0);
    TermPtr x = TermExpr::var("x");
    TermPtr step = TermExpr::imp(TermExpr::pow(x, m), TermExpr::pow(x, m + 1));
    return TermExpr::meet(double_negation(), std::move(step));
}

TermPtr relative_double_negation() {
    TermPtr x = TermExpr::var("x");
    TermPtr c = TermExpr::var("c");
    return TermExpr::imp(TermExpr::imp(std::move(x), c), c);
}

TermPtr join_constant() {
    return TermExpr::join(TermExpr::var("x"), TermExpr::var("c"));
}

TermPtr square_relative_negation() {
    TermPtr x = TermExpr::var("x");
    TermPtr sq = TermExpr::pow(x, 2);
    return TermExpr::imp(TermExpr::imp(std::move(x), sq), sq);
}

} // namespace terms

} // namespace nucleon
