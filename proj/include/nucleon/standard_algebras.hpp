#pragma once

#include "nucleon/finite_algebra.hpp"

namespace nucleon {

/// One-element residuated lattice (bot = top).
FiniteAlgebra trivial_algebra();

/// The (n+1)-element MV chain: powers of one generator a with
/// a^i . a^j = a^{min(i+j,n)} and a^i -> a^j = a^{max(j-i,0)}.
/// Indexed in ascending order, so index i is a^{n-i}; bot = 0, top = n.
FiniteAlgebra mv_chain(int n);

/// Totally ordered Heyting (Goedel) algebra with `size` elements:
/// mul = min, with the residuum derived.
FiniteAlgebra godel_chain(int size);

/// The chain bot < a_1 < ... < a_n < top in which the product of any two
/// middle elements collapses to a_1 (and is min otherwise). For n >= 2 this
/// is a totally ordered residuated lattice that is not divisible.
FiniteAlgebra middle_collapse_chain(int n);

/// Componentwise product of two algebras; index = a * |B| + b.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

} // namespace nucleon
