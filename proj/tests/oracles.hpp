// Test-side oracles, deliberately independent of the library's enumeration
// path: the Weyl group is rebuilt by plain set closure over action matrices
// (no word bookkeeping), and lengths are recomputed as inversion counts from
// scratch. Used to certify the degrees table and the small frozen examples
// before the library's own machinery is trusted.
#pragma once

#include <unordered_set>
#include <vector>

#include "motcell/intmat.hpp"
#include "motcell/poly.hpp"
#include "motcell/root_system.hpp"

namespace oracle {

using motcell::IntMat;
using motcell::IntMatHash;
using motcell::IntPoly;
using motcell::RootSystem;
using motcell::Vec;

// Closure of the simple reflections under multiplication; order-free.
inline std::vector<IntMat> weyl_closure(const RootSystem& rs) {
    std::vector<IntMat> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(rs.simple_reflection_matrix(i));

    std::unordered_set<IntMat, IntMatHash> seen;
    std::vector<IntMat> elements;
    elements.push_back(IntMat::identity(rs.rank()));
    seen.insert(elements[0]);
    for (size_t head = 0; head < elements.size(); ++head)
        for (const IntMat& g : gens) {
            IntMat m = elements[head] * g;
            if (seen.insert(m).second) elements.push_back(std::move(m));
        }
    return elements;
}

inline int inversions(const RootSystem& rs, const IntMat& w) {
    int count = 0;
    for (const Vec& b : rs.positive_roots())
        if (!rs.is_positive_root(w.apply(b))) ++count;
    return count;
}

// Sum of t^{inversions(w)} over the closure.
inline IntPoly closure_length_polynomial(const RootSystem& rs) {
    IntPoly p;
    for (const IntMat& w : weyl_closure(rs)) p = p + IntPoly::monomial(inversions(rs, w));
    return p;
}

} // namespace oracle
