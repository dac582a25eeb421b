// Minimal coset representatives W^P, Bruhat covers on the quotient, and the
// Schubert cell decomposition of G/P.
//
// A ParabolicSubset lists the simple indices generating the Levi, so the
// Borel case is the empty set and the full set gives G/G = point. The
// maximal parabolic "at node i" (one crossed node) is the complement set;
// see maximal_parabolic_at.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "motcell/bb_engine.hpp"
#include "motcell/errors.hpp"
#include "motcell/weyl.hpp"

namespace motcell {

struct ParabolicSubset {
    std::vector<int> indices; // 1-based simple indices, sorted, unique

    ParabolicSubset() = default;
    explicit ParabolicSubset(std::vector<int> idx) : indices(std::move(idx)) {
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    }

    static ParabolicSubset borel() { return ParabolicSubset{}; }

    bool contains(int i) const {
        return std::binary_search(indices.begin(), indices.end(), i);
    }

    void validate(const RootSystem& rs) const {
        for (int i : indices)
            if (i < 1 || i > rs.rank())
                throw InvalidSpec("parabolic index " + std::to_string(i) + " out of range for " + rs.name());
    }

    std::string str() const {
        if (indices.empty()) return "B";
        std::string s = "P[";
        for (size_t k = 0; k < indices.size(); ++k) {
            if (k) s.push_back(',');
            s += std::to_string(indices[k]);
        }
        s.push_back(']');
        return s;
    }
};

// Levi = all simple indices except the crossed node.
inline ParabolicSubset maximal_parabolic_at(const RootSystem& rs, int node) {
    if (node < 1 || node > rs.rank())
        throw InvalidSpec("node " + std::to_string(node) + " out of range for " + rs.name());
    std::vector<int> idx;
    for (int i = 1; i <= rs.rank(); ++i)
        if (i != node) idx.push_back(i);
    return ParabolicSubset(std::move(idx));
}

inline std::string flag_space_name(const RootSystem& rs, const ParabolicSubset& P) {
    return rs.name() + "/" + P.str();
}

// Positive roots of the Levi: support contained in the parabolic indices.
inline std::vector<Vec> levi_positive_roots(const RootSystem& rs, const ParabolicSubset& P) {
    std::vector<Vec> out;
    for (const Vec& b : rs.positive_roots()) {
        bool inside = true;
        for (int j = 0; j < rs.rank(); ++j)
            if (b[static_cast<size_t>(j)] != 0 && !P.contains(j + 1)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(b);
    }
    return out;
}

// Exactly the w with w(alpha_i) positive for every i in P; inherits the
// enumeration order (length ascending, lex reduced word inside a length).
inline std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, const ParabolicSubset& P,
                                                   long long cap = kDefaultWeylCap) {
    P.validate(rs);
    std::vector<WeylElement> reps;
    for (WeylElement& w : enumerate_weyl(rs, cap)) {
        bool minimal = true;
        for (int i : P.indices)
            if (!rs.is_positive_root(w.action.apply(rs.simple_root(i)))) {
                minimal = false;
                break;
            }
        if (minimal) reps.push_back(std::move(w));
    }
    return reps;
}

struct HasseDiagram {
    std::vector<WeylElement> nodes;
    std::vector<std::pair<int, int>> edges; // (lower index, upper index), l(upper) = l(lower)+1
};

// Covers of the quotient Bruhat order: u is covered by w iff u = w*t for a
// reflection t, u lands back in W^P, and the lengths differ by one. One pass
// over all |Phi+| reflections per node.
inline HasseDiagram bruhat_hasse(const RootSystem& rs, const std::vector<WeylElement>& reps) {
    HasseDiagram h;
    h.nodes = reps;
    std::unordered_map<IntMat, int, IntMatHash> index;
    for (size_t i = 0; i < reps.size(); ++i) index.emplace(reps[i].action, static_cast<int>(i));

    const std::vector<IntMat> reflections = all_reflections(rs);
    for (size_t wi = 0; wi < reps.size(); ++wi)
        for (const IntMat& t : reflections) {
            IntMat u = reps[wi].action * t;
            auto it = index.find(u);
            if (it == index.end()) continue;
            if (reps[static_cast<size_t>(it->second)].length() + 1 == reps[wi].length())
                h.edges.emplace_back(it->second, static_cast<int>(wi));
        }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

// One cell per minimal representative, of dimension l(w). The sign data
// records, for each tangent root beta in w(Phi- \ Phi-_P), whether it is
// positive; the count of positives equals l(w) for minimal reps, which keeps
// this route free of any cocharacter arithmetic (the BB engine provides the
// independent computation).
inline CellDecomposition schubert_cells(const RootSystem& rs, const ParabolicSubset& P,
                                        long long cap = kDefaultWeylCap) {
    const std::vector<WeylElement> reps = minimal_coset_reps(rs, P, cap);
    const std::vector<Vec> levi = levi_positive_roots(rs, P);
    std::set<Vec> levi_set(levi.begin(), levi.end());

    CellDecomposition out;
    out.space_name = flag_space_name(rs, P);
    out.ambient_dimension = rs.num_positive() - static_cast<int>(levi.size());

    for (const WeylElement& w : reps) {
        Cell c;
        c.fixed_point = w.word_string();
        for (const Vec& b : rs.positive_roots()) {
            if (levi_set.count(b)) continue;
            const Vec img = w.action.apply(negated(b));
            c.weight_signs.push_back(rs.is_positive_root(img) ? '+' : '-');
        }
        c.dimension = w.length();
        if (Cell::plus_count(c.weight_signs) != c.dimension)
            throw std::logic_error("Schubert sign data disagrees with Bruhat length at " + c.fixed_point);
        out.cells.push_back(std::move(c));
    }
    std::sort(out.cells.begin(), out.cells.end(), [](const Cell& a, const Cell& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.fixed_point < b.fixed_point;
    });
    for (size_t i = 0; i < out.cells.size(); ++i) out.cells[i].index = static_cast<int>(i);
    out.check_invariants();
    return out;
}

// G/P as a torus-action model: fixed points are the cosets wP, tangent
// weights at wP are w(Phi- \ Phi-_P) in simple-root coordinates.
inline TorusModel flag_torus_model(const RootSystem& rs, const ParabolicSubset& P,
                                   long long cap = kDefaultWeylCap) {
    const std::vector<WeylElement> reps = minimal_coset_reps(rs, P, cap);
    const std::vector<Vec> levi = levi_positive_roots(rs, P);
    std::set<Vec> levi_set(levi.begin(), levi.end());

    TorusModel model;
    model.name = flag_space_name(rs, P);
    model.torus_rank = rs.rank();
    for (const WeylElement& w : reps) {
        TorusModel::FixedPoint fp;
        fp.label = w.word_string();
        for (const Vec& b : rs.positive_roots()) {
            if (levi_set.count(b)) continue;
            fp.weights.push_back(w.action.apply(negated(b)));
        }
        model.fixed_points.push_back(std::move(fp));
    }
    model.validate();
    return model;
}

} // namespace motcell
