#include "nucleon/chains.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace nucleon {

bool is_bounded_component(const ComponentKind& c) {
    return !std::holds_alternative<OmegaHoop>(c);
}

// --------------------------------------------------------------------------
// Descriptor text form
// --------------------------------------------------------------------------

ChainDescriptor parse_descriptor(const std::string& text) {
    ChainDescriptor d;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        const std::size_t start = pos;
        while (pos < n && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '+') {
            ++pos;
        }
        const std::string tok = text.substr(start, pos - start);
        if (tok == "Sw") {
            d.components.push_back(OmegaHoop{});
        } else if (tok == "S1w") {
            d.components.push_back(ChangHoop{});
        } else if (tok.size() >= 2 && tok[0] == 'S' &&
                   std::all_of(tok.begin() + 1, tok.end(), [](char c) {
                       return std::isdigit(static_cast<unsigned char>(c));
                   })) {
            if (tok.size() > 7) throw ParseError("component index too large", start);
            const int k = std::stoi(tok.substr(1));
            if (k < 1) throw ParseError("S<k> needs k >= 1", start);
            d.components.push_back(FiniteMV{k});
        } else {
            throw ParseError("expected S<k>, Sw or S1w, got '" + tok + "'", start);
        }
        skip_ws();
        if (pos == n) break;
        if (text[pos] != '+') throw ParseError("expected '+'", pos);
        ++pos;
    }
    if (!is_bounded_component(d.components.front())) {
        throw ParseError("first component must be bounded (not Sw)", 0);
    }
    return d;
}

std::string to_string(const ChainDescriptor& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (i) os << " + ";
        const ComponentKind& c = d.components[i];
        if (const auto* mv = std::get_if<FiniteMV>(&c)) {
            os << "S" << mv->k;
        } else if (std::holds_alternative<OmegaHoop>(c)) {
            os << "Sw";
        } else {
            os << "S1w";
        }
    }
    return os.str();
}

// --------------------------------------------------------------------------
// Element text form
// --------------------------------------------------------------------------

std::string to_string(const ChainElement& e) {
    switch (e.kind()) {
    case ChainElement::Kind::Top:
        return "top";
    case ChainElement::Kind::Power: {
        std::ostringstream os;
        os << "(" << e.comp() << "," << e.code() << ")";
        return os.str();
    }
    case ChainElement::Kind::ChangLow: {
        std::ostringstream os;
        os << "(" << e.comp() << ",(0," << e.code() << "))";
        return os.str();
    }
    case ChainElement::Kind::ChangHigh: {
        std::ostringstream os;
        os << "(" << e.comp() << ",(1,-" << e.code() << "))";
        return os.str();
    }
    }
    return {};
}

namespace {

class ElementScanner {
public:
    explicit ElementScanner(const std::string& s) : s_(s) {}
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }
    long long number() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", start);
        return std::stoll(s_.substr(start, pos_ - start));
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void done() {
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

ChainElement parse_element(const std::string& text) {
    std::string trimmed = text;
    trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), [](char c) {
                      return std::isspace(static_cast<unsigned char>(c));
                  }),
                  trimmed.end());
    if (trimmed == "top") return ChainElement::top();
    ElementScanner sc(text);
    sc.expect('(');
    const long long comp = sc.number();
    sc.expect(',');
    if (sc.peek('(')) {
        sc.expect('(');
        const long long limb = sc.number();
        sc.expect(',');
        const long long k = sc.number();
        sc.expect(')');
        sc.expect(')');
        sc.done();
        if (limb == 0) {
            if (k < 0) throw ParseError("(0,k) needs k >= 0", 0);
            return ChainElement::chang_low(static_cast<int>(comp), k);
        }
        if (limb == 1) {
            if (k >= 0) throw ParseError("(1,-k) needs a negative code", 0);
            return ChainElement::chang_high(static_cast<int>(comp), -k);
        }
        throw ParseError("limb must be 0 or 1", 0);
    }
    const long long i = sc.number();
    sc.expect(')');
    sc.done();
    if (i < 1) throw ParseError("power code must be >= 1", 0);
    return ChainElement::power(static_cast<int>(comp), i);
}

// --------------------------------------------------------------------------
// Order and operations
// --------------------------------------------------------------------------

bool chain_leq(const ChainElement& x, const ChainElement& y) {
    if (y.is_top()) return true;
    if (x.is_top()) return false;
    if (x.comp() != y.comp()) return x.comp() < y.comp();
    using K = ChainElement::Kind;
    if (x.kind() == K::Power) return x.code() >= y.code();
    if (x.kind() == K::ChangLow) {
        return y.kind() == K::ChangHigh || x.code() <= y.code();
    }
    // x is ChangHigh: below only higher ChangHigh codes' images, i.e.
    // (1,-j) <= (1,-k) iff j >= k; never below a ChangLow.
    return y.kind() == K::ChangHigh && x.code() >= y.code();
}

ChainOps::ChainOps(ChainDescriptor d) : desc_(std::move(d)), bot_(ChainElement::top()) {
    if (desc_.components.empty()) {
        throw StructuralError("descriptor needs at least one component");
    }
    const ComponentKind& first = desc_.components.front();
    if (const auto* mv = std::get_if<FiniteMV>(&first)) {
        bot_ = ChainElement::power(0, mv->k);
    } else if (std::holds_alternative<ChangHoop>(first)) {
        bot_ = ChainElement::chang_low(0, 0);
    } else {
        throw StructuralError("first component must be bounded");
    }
    for (const ComponentKind& c : desc_.components) {
        if (const auto* mv = std::get_if<FiniteMV>(&c); mv && mv->k < 1) {
            throw StructuralError("FiniteMV component needs k >= 1");
        }
    }
}

void ChainOps::check_member(const ChainElement& x) const {
    if (x.is_top()) return;
    if (x.comp() < 0 ||
        x.comp() >= static_cast<int>(desc_.components.size())) {
        throw StructuralError("element component " + std::to_string(x.comp()) +
                              " out of range");
    }
    const ComponentKind& c = desc_.components[x.comp()];
    using K = ChainElement::Kind;
    if (const auto* mv = std::get_if<FiniteMV>(&c)) {
        if (x.kind() != K::Power || x.code() < 1 || x.code() > mv->k) {
            throw StructuralError("bad code for S" + std::to_string(mv->k) +
                                  " component: " + to_string(x));
        }
    } else if (std::holds_alternative<OmegaHoop>(c)) {
        if (x.kind() != K::Power || x.code() < 1) {
            throw StructuralError("bad code for Sw component: " + to_string(x));
        }
    } else {
        if (x.kind() == K::ChangLow) {
            if (x.code() < 0) throw StructuralError("(0,k) needs k >= 0");
        } else if (x.kind() == K::ChangHigh) {
            if (x.code() < 1) throw StructuralError("(1,-k) needs k >= 1");
        } else {
            throw StructuralError("bad code for S1w component: " + to_string(x));
        }
    }
}

bool ChainOps::leq(const ChainElement& x, const ChainElement& y) const {
    check_member(x);
    check_member(y);
    return chain_leq(x, y);
}

ChainElement ChainOps::meet(const ChainElement& x, const ChainElement& y) const {
    return leq(x, y) ? x : y;
}

ChainElement ChainOps::join(const ChainElement& x, const ChainElement& y) const {
    return leq(x, y) ? y : x;
}

ChainElement ChainOps::local_mul(const ChainElement& x, const ChainElement& y) const {
    const ComponentKind& c = desc_.components[x.comp()];
    using K = ChainElement::Kind;
    if (const auto* mv = std::get_if<FiniteMV>(&c)) {
        return ChainElement::power(
            x.comp(), std::min(x.code() + y.code(), static_cast<long long>(mv->k)));
    }
    if (std::holds_alternative<OmegaHoop>(c)) {
        return ChainElement::power(x.comp(), x.code() + y.code());
    }
    // Chang component.
    if (x.kind() == K::ChangLow && y.kind() == K::ChangLow) {
        return ChainElement::chang_low(x.comp(), 0);
    }
    if (x.kind() == K::ChangHigh && y.kind() == K::ChangHigh) {
        return ChainElement::chang_high(x.comp(), x.code() + y.code());
    }
    const ChainElement& low = x.kind() == K::ChangLow ? x : y;   // (0,j)
    const ChainElement& high = x.kind() == K::ChangLow ? y : x;  // (1,-k)
    if (high.code() > low.code()) return ChainElement::chang_low(x.comp(), 0);
    return ChainElement::chang_low(x.comp(), low.code() - high.code());
}

// Precondition: x > y in the same component, so the local residuum is never
// the local top.
ChainElement ChainOps::local_imp(const ChainElement& x, const ChainElement& y) const {
    const ComponentKind& c = desc_.components[x.comp()];
    using K = ChainElement::Kind;
    if (!std::holds_alternative<ChangHoop>(c)) {
        // a^i -> a^j = a^{j-i} when i < j
        return ChainElement::power(x.comp(), y.code() - x.code());
    }
    if (x.kind() == K::ChangLow) {
        // (0,j) -> (0,k), j > k, gives (1,-(j-k))
        return ChainElement::chang_high(x.comp(), x.code() - y.code());
    }
    if (y.kind() == K::ChangLow) {
        // (1,-j) -> (0,k) gives (0,j+k)
        return ChainElement::chang_low(x.comp(), x.code() + y.code());
    }
    // (1,-j) -> (1,-k), j < k, gives (1,-(k-j))
    return ChainElement::chang_high(x.comp(), y.code() - x.code());
}

ChainElement ChainOps::mul(const ChainElement& x, const ChainElement& y) const {
    check_member(x);
    check_member(y);
    if (x.is_top()) return y;
    if (y.is_top()) return x;
    if (x.comp() < y.comp()) return x;
    if (x.comp() > y.comp()) return y;
    return local_mul(x, y);
}

ChainElement ChainOps::imp(const ChainElement& x, const ChainElement& y) const {
    check_member(x);
    check_member(y);
    if (chain_leq(x, y)) return ChainElement::top();
    if (x.is_top()) return y;
    if (x.comp() > y.comp()) return y;
    return local_imp(x, y);
}

// --------------------------------------------------------------------------
// Windows
// --------------------------------------------------------------------------

std::vector<ChainElement> enumerate_window(const ChainDescriptor& d, int window) {
    if (window < 1) throw StructuralError("window must be >= 1");
    ChainOps ops(d); // validates the descriptor
    std::vector<ChainElement> out;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
        const ComponentKind& k = d.components[c];
        if (const auto* mv = std::get_if<FiniteMV>(&k)) {
            for (int i = 1; i <= mv->k; ++i) out.push_back(ChainElement::power(c, i));
        } else if (std::holds_alternative<OmegaHoop>(k)) {
            for (int i = 1; i <= window; ++i) out.push_back(ChainElement::power(c, i));
        } else {
            for (int i = 0; i <= window; ++i) out.push_back(ChainElement::chang_low(c, i));
            for (int i = 1; i <= window; ++i) out.push_back(ChainElement::chang_high(c, i));
        }
    }
    out.push_back(ChainElement::top());
    return out;
}

// --------------------------------------------------------------------------
// Generated subalgebras
// --------------------------------------------------------------------------

namespace {

bool locally_idempotent(const ComponentKind& c, const ChainElement& x) {
    using K = ChainElement::Kind;
    if (const auto* mv = std::get_if<FiniteMV>(&c)) {
        return x.code() == mv->k;
    }
    if (std::holds_alternative<OmegaHoop>(c)) return false;
    return x.kind() == K::ChangLow && x.code() == 0;
}

bool infinite_order(const ComponentKind& c, const ChainElement& x) {
    if (std::holds_alternative<OmegaHoop>(c)) return true;
    if (std::holds_alternative<ChangHoop>(c)) {
        return x.kind() == ChainElement::Kind::ChangHigh;
    }
    return false;
}

} // namespace

GeneratedChain generated_subalgebra_descriptor(
    const ChainDescriptor& d, const std::vector<ChainElement>& generators) {
    ChainOps ops(d);
    std::map<int, const ChainElement*> by_comp;
    for (const ChainElement& g : generators) {
        ops.check_member(g);
        if (g.is_top() || g.comp() == 0) {
            throw UnsupportedGeneratorError(
                "generator " + to_string(g) +
                " must lie in a component other than the first");
        }
        if (!by_comp.emplace(g.comp(), &g).second) {
            throw UnsupportedGeneratorError(
                "two generators in component " + std::to_string(g.comp()));
        }
    }
    GeneratedChain out;
    out.descriptor.components.push_back(FiniteMV{1}); // {bot, top}
    std::map<int, int> comp_of;
    for (const auto& [comp, g] : by_comp) {
        const ComponentKind& c = d.components[comp];
        if (locally_idempotent(c, *g)) {
            out.descriptor.components.push_back(FiniteMV{1});
        } else if (infinite_order(c, *g)) {
            out.descriptor.components.push_back(OmegaHoop{});
        } else {
            throw UnsupportedGeneratorError(
                "generator " + to_string(*g) +
                " has finite order but is not idempotent");
        }
        comp_of[comp] = static_cast<int>(out.descriptor.components.size()) - 1;
    }
    for (const ChainElement& g : generators) {
        out.generator_components.push_back(comp_of[g.comp()]);
    }
    return out;
}

// --------------------------------------------------------------------------
// Materialization
// --------------------------------------------------------------------------

MaterializedChain materialize_finite(const ChainDescriptor& d) {
    ChainOps ops(d);
    std::vector<ChainElement> elems;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
        const auto* mv = std::get_if<FiniteMV>(&d.components[c]);
        if (!mv) {
            throw NotFiniteError("descriptor " + to_string(d) +
                                 " has an infinite component");
        }
        for (int i = mv->k; i >= 1; --i) elems.push_back(ChainElement::power(c, i));
    }
    elems.push_back(ChainElement::top());
    const int n = static_cast<int>(elems.size());
    auto index_of = [&](const ChainElement& e) {
        for (int i = 0; i < n; ++i) {
            if (elems[i] == e) return i;
        }
        throw StructuralError("internal: element not in carrier");
    };
    BoolTable leq(n, std::vector<bool>(n));
    ElemTable mul(n, std::vector<int>(n)), imp(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            leq[i][j] = ops.leq(elems[i], elems[j]);
            mul[i][j] = index_of(ops.mul(elems[i], elems[j]));
            imp[i][j] = index_of(ops.imp(elems[i], elems[j]));
        }
    }
    FiniteAlgebra alg(n, std::move(leq), std::move(mul), std::move(imp), 0, n - 1);
    return {std::move(alg), std::move(elems)};
}

} // namespace nucleon
