#include "nucleon/standard_algebras.hpp"

#include <algorithm>

namespace nucleon {

FiniteAlgebra trivial_algebra() {
    return FiniteAlgebra(1, {{true}}, {{0}}, ElemTable{{0}}, 0, 0);
}

FiniteAlgebra mv_chain(int n) {
    if (n < 1) throw StructuralError("mv_chain needs n >= 1");
    const int size = n + 1;
    BoolTable leq(size, std::vector<bool>(size));
    ElemTable mul(size, std::vector<int>(size)), imp(size, std::vector<int>(size));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            leq[i][j] = i <= j;
            mul[i][j] = std::max(i + j - n, 0);     // a^{n-i} . a^{n-j}
            imp[i][j] = std::min(n - i + j, n);     // a^{n-i} -> a^{n-j}
        }
    }
    return FiniteAlgebra(size, std::move(leq), std::move(mul), std::move(imp),
                         0, n);
}

FiniteAlgebra godel_chain(int size) {
    if (size < 1) throw StructuralError("godel_chain needs size >= 1");
    BoolTable leq(size, std::vector<bool>(size));
    ElemTable mul(size, std::vector<int>(size));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            leq[i][j] = i <= j;
            mul[i][j] = std::min(i, j);
        }
    }
    return FiniteAlgebra(size, std::move(leq), std::move(mul), std::nullopt,
                         0, size - 1);
}

FiniteAlgebra middle_collapse_chain(int n) {
    if (n < 1) throw StructuralError("middle_collapse_chain needs n >= 1");
    const int size = n + 2; // bot, a_1..a_n, top
    BoolTable leq(size, std::vector<bool>(size));
    ElemTable mul(size, std::vector<int>(size));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            leq[i][j] = i <= j;
            const bool i_mid = i > 0 && i < size - 1;
            const bool j_mid = j > 0 && j < size - 1;
            mul[i][j] = (i_mid && j_mid) ? 1 : std::min(i, j);
        }
    }
    return FiniteAlgebra(size, std::move(leq), std::move(mul), std::nullopt,
                         0, size - 1);
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    const int na = a.size(), nb = b.size(), n = na * nb;
    auto idx = [nb](int x, int y) { return x * nb + y; };
    BoolTable leq(n, std::vector<bool>(n));
    ElemTable mul(n, std::vector<int>(n)), imp(n, std::vector<int>(n));
    for (int x1 = 0; x1 < na; ++x1) {
        for (int y1 = 0; y1 < nb; ++y1) {
            for (int x2 = 0; x2 < na; ++x2) {
                for (int y2 = 0; y2 < nb; ++y2) {
                    const int i = idx(x1, y1), j = idx(x2, y2);
                    leq[i][j] = a.leq(x1, x2) && b.leq(y1, y2);
                    mul[i][j] = idx(a.mul(x1, x2), b.mul(y1, y2));
                    imp[i][j] = idx(a.imp(x1, x2), b.imp(y1, y2));
                }
            }
        }
    }
    return FiniteAlgebra(n, std::move(leq), std::move(mul), std::move(imp),
                         idx(a.bot(), b.bot()), idx(a.top(), b.top()));
}

} // namespace nucleon
