// Weyl group enumeration by breadth-first word growth with dedup on action
// matrices. Output is grouped by length; inside a length class elements are
// ordered by their lexicographically smallest reduced word, which is exactly
// the word this enumeration stores.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "motcell/errors.hpp"
#include "motcell/poly.hpp"
#include "motcell/root_system.hpp"

namespace motcell {

inline constexpr long long kDefaultWeylCap = 1'000'000;

struct WeylElement {
    std::vector<int> word; // simple-reflection indices, 1-based; lex-min reduced word
    IntMat action;         // on root coordinates

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }

    std::string word_string() const {
        if (word.empty()) return "e";
        std::string s;
        for (size_t k = 0; k < word.size(); ++k) {
            if (k) s.push_back('.');
            s += std::to_string(word[k]);
        }
        return s;
    }
};

// Number of positive roots sent to negative roots; equals reduced-word
// length but is computed without reference to any word.
inline int inversion_length(const RootSystem& rs, const IntMat& action) {
    int inv = 0;
    for (const Vec& b : rs.positive_roots())
        if (!rs.is_positive_root(action.apply(b))) ++inv;
    return inv;
}

inline int inversion_length(const RootSystem& rs, const WeylElement& w) {
    return inversion_length(rs, w.action);
}

// All |W| elements, lengths ascending, lex reduced word inside each length.
// The group order is known from the degrees table, so the cap check happens
// before any work is done.
inline std::vector<WeylElement> enumerate_weyl(const RootSystem& rs,
                                               long long cap = kDefaultWeylCap) {
    if (rs.weyl_order() > cap)
        throw CapExceeded(rs.name() + ": |W| = " + std::to_string(rs.weyl_order()) +
                          " exceeds enumeration cap " + std::to_string(cap));

    std::vector<WeylElement> out;
    out.push_back(WeylElement{{}, IntMat::identity(rs.rank())});

    std::vector<IntMat> gen;
    for (int i = 1; i <= rs.rank(); ++i) gen.push_back(rs.simple_reflection_matrix(i));

    std::unordered_map<IntMat, int, IntMatHash> seen;
    seen.emplace(out[0].action, 0);

    // Parents of each BFS level are already sorted by word, so candidates
    // w.word + [s] arrive in lex order and first insertion wins.
    size_t level_begin = 0;
    while (level_begin < out.size()) {
        const size_t level_end = out.size();
        for (size_t k = level_begin; k < level_end; ++k)
            for (int s = 1; s <= rs.rank(); ++s) {
                IntMat m = out[k].action * gen[static_cast<size_t>(s - 1)];
                if (seen.count(m)) continue;
                std::vector<int> word = out[k].word;
                word.push_back(s);
                seen.emplace(m, static_cast<int>(out.size()));
                out.push_back(WeylElement{std::move(word), std::move(m)});
            }
        level_begin = level_end;
    }
    return out;
}

inline const WeylElement& longest_element(const std::vector<WeylElement>& w) {
    return w.back();
}

// Sum of t^{l(w)} over the given elements.
inline IntPoly length_polynomial(const std::vector<WeylElement>& elements) {
    IntPoly p;
    for (const WeylElement& w : elements) p = p + IntPoly::monomial(w.length());
    return p;
}

// prod_i (t^{d_i} - 1)/(t - 1) from the stored fundamental degrees.
inline IntPoly degrees_product_polynomial(const RootSystem& rs) {
    IntPoly p = IntPoly::one();
    for (int d : rs.degrees()) p = p * IntPoly::geometric(d);
    return p;
}

// Reflection matrices, one per positive root, in positive-root order.
inline std::vector<IntMat> all_reflections(const RootSystem& rs) {
    std::vector<IntMat> refl;
    refl.reserve(rs.positive_roots().size());
    for (const Vec& b : rs.positive_roots()) {
        IntMat m = IntMat::identity(rs.rank());
        for (int j = 1; j <= rs.rank(); ++j) {
            // column j-1 of the reflection: e_j - <alpha_j, beta^vee> beta
            const long long c = rs.pair_root_coroot(rs.simple_root(j), b);
            for (int i = 0; i < rs.rank(); ++i) m.at(i, j - 1) -= c * b[static_cast<size_t>(i)];
        }
        refl.push_back(std::move(m));
    }
    return refl;
}

} // namespace motcell
