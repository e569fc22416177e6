#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nucleon/errors.hpp"
#include "nucleon/finite_algebra.hpp"

namespace nucleon {

// ---------------------------------------------------------------------------
// Component alphabet for ordinal sums of totally ordered Wajsberg hoops.
//
//   FiniteMV{k}  the k+1 element hoop on powers a^0..a^k of one generator,
//                a^i.a^j = a^{min(i+j,k)}            (bounded)
//   OmegaHoop    the free cancellative hoop on a, a^i.a^j = a^{i+j}
//                                                    (unbounded)
//   ChangHoop    the bounded hoop on {(0,k) : k>=0} u {(1,-k) : k>=0} with
//                (1,0) as top and (0,0) as first element
// ---------------------------------------------------------------------------

struct FiniteMV {
    int k; // k >= 1
    bool operator==(const FiniteMV&) const = default;
};
struct OmegaHoop {
    bool operator==(const OmegaHoop&) const = default;
};
struct ChangHoop {
    bool operator==(const ChangHoop&) const = default;
};

using ComponentKind = std::variant<FiniteMV, OmegaHoop, ChangHoop>;

bool is_bounded_component(const ComponentKind& c);

/// An ordinal-sum recipe. The first component must be bounded so that the
/// sum carries a least element.
struct ChainDescriptor {
    std::vector<ComponentKind> components;
    bool operator==(const ChainDescriptor&) const = default;
};

/// Grammar: components joined by '+'; tokens are S<k> (e.g. S3), Sw, S1w.
ChainDescriptor parse_descriptor(const std::string& text);
std::string to_string(const ChainDescriptor& d);

// ---------------------------------------------------------------------------
// Elements. Local tops are excluded from the coding; the ordinal sum has one
// shared Top, so equality of codes is equality of elements.
//
//   Power(c, i)      a^i in component c (FiniteMV or OmegaHoop), i >= 1
//   ChangLow(c, k)   (0,k) in a ChangHoop component, k >= 0
//   ChangHigh(c, k)  (1,-k) in a ChangHoop component, k >= 1
// ---------------------------------------------------------------------------

class ChainElement {
public:
    enum class Kind : std::uint8_t { Top, Power, ChangLow, ChangHigh };

    static ChainElement top() { return ChainElement(Kind::Top, -1, 0); }
    static ChainElement power(int comp, long long i) {
        return ChainElement(Kind::Power, comp, i);
    }
    static ChainElement chang_low(int comp, long long k) {
        return ChainElement(Kind::ChangLow, comp, k);
    }
    static ChainElement chang_high(int comp, long long k) {
        return ChainElement(Kind::ChangHigh, comp, k);
    }

    Kind kind() const { return kind_; }
    bool is_top() const { return kind_ == Kind::Top; }
    int comp() const { return comp_; }
    long long code() const { return code_; }

    bool operator==(const ChainElement&) const = default;

private:
    ChainElement(Kind k, int comp, long long code)
        : kind_(k), comp_(comp), code_(code) {}
    Kind kind_;
    int comp_;
    long long code_;
};

/// "top", "(c,i)", "(c,(0,k))" or "(c,(1,-k))".
std::string to_string(const ChainElement& e);
ChainElement parse_element(const std::string& text);

/// The chain order, decidable from the codes alone: Top is greatest, lower
/// components sit below higher ones, and within a component the local hoop
/// order applies.
bool chain_leq(const ChainElement& x, const ChainElement& y);

/// Exact operations of the ordinal sum described by a descriptor. All
/// arithmetic is integer arithmetic on codes; no approximation anywhere.
class ChainOps {
public:
    using Elem = ChainElement;

    explicit ChainOps(ChainDescriptor d);

    const ChainDescriptor& descriptor() const { return desc_; }

    /// Throws StructuralError when the element does not belong to the
    /// descriptor (bad component index or out-of-range code).
    void check_member(const ChainElement& x) const;

    bool leq(const ChainElement& x, const ChainElement& y) const;
    ChainElement meet(const ChainElement& x, const ChainElement& y) const;
    ChainElement join(const ChainElement& x, const ChainElement& y) const;
    ChainElement mul(const ChainElement& x, const ChainElement& y) const;
    ChainElement imp(const ChainElement& x, const ChainElement& y) const;
    ChainElement neg(const ChainElement& x) const { return imp(x, bot()); }

    ChainElement bot() const { return bot_; }
    ChainElement top() const { return ChainElement::top(); }

private:
    ChainElement local_mul(const ChainElement& x, const ChainElement& y) const;
    ChainElement local_imp(const ChainElement& x, const ChainElement& y) const;

    ChainDescriptor desc_;
    ChainElement bot_;
};

/// Finite slice used for bounded quantification: Top, every element of each
/// FiniteMV component, a^1..a^W of each OmegaHoop, and (0,0)..(0,W) plus
/// (1,-1)..(1,-W) of each ChangHoop. Order: by component, code ascending
/// (ChangLow before ChangHigh), Top last.
std::vector<ChainElement> enumerate_window(const ChainDescriptor& d, int window);

struct GeneratedChain {
    ChainDescriptor descriptor;
    /// For each generator, the index of its component in `descriptor`.
    std::vector<int> generator_components;
};

/// Descriptor of the subalgebra generated by one element in each of several
/// distinct non-first components, every generator being either idempotent or
/// of infinite order. Anything else throws UnsupportedGeneratorError.
GeneratedChain generated_subalgebra_descriptor(
    const ChainDescriptor& d, const std::vector<ChainElement>& generators);

struct MaterializedChain {
    FiniteAlgebra algebra;
    std::vector<ChainElement> elements; // index -> element, ascending order
};

/// Table form of an all-finite descriptor (carrier 1 + sum of the k_i).
/// Throws NotFiniteError if any component is infinite.
MaterializedChain materialize_finite(const ChainDescriptor& d);

} // namespace nucleon
