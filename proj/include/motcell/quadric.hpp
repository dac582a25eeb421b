// The split even-dimensional quadric Q_{2n} in P^{2n+1}, cut out by
// sum_i x_i y_i. Two independent routes to its cell structure live here:
//
//  * quadric_torus_model: the full diagonal torus t.x_i = t_i x_i,
//    t.y_i = t_i^{-1} y_i preserves the form and acts with the 2n+2
//    coordinate points as isolated fixed points; tangent weights are read
//    off the affine chart with the form solved for the opposite coordinate.
//  * quadric_two_stage_ledger: the two-stage route through Q \ Z_x ~ P^n
//    (a rank-n bundle over Z_y) followed by one cell attachment per
//    hyperplane-section step.
//
// The D-type cross-check uses the parabolic crossing node 1 of D_{n+1}
// (Bourbaki numbering, node 1 = first chain node); see
// quadric_schubert_parabolic. Pinned by the n = 2 test: dims {0,1,2,2,3,4}.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motcell/bb_engine.hpp"
#include "motcell/errors.hpp"
#include "motcell/parabolic.hpp"
#include "motcell/root_system.hpp"

namespace motcell {

struct QuadricSpec {
    int n;

    explicit QuadricSpec(int n_) : n(n_) {
        if (n < 1) throw InvalidSpec("quadric Q_{2n} requires n >= 1");
    }

    int dimension() const { return 2 * n; }
    std::string name() const { return "Q" + std::to_string(2 * n); }
};

inline TorusModel quadric_torus_model(const QuadricSpec& spec) {
    const int n = spec.n;
    TorusModel model;
    model.name = spec.name();
    model.torus_rank = n + 1;

    auto chi = [&](int i, long long sign) {
        Vec v(static_cast<size_t>(n) + 1, 0);
        v[static_cast<size_t>(i)] = sign;
        return v;
    };
    // weights at X_j: {chi_i - chi_j} u {-chi_i - chi_j}, i != j;
    // at Y_j the same set negated.
    for (int j = 0; j <= n; ++j) {
        TorusModel::FixedPoint fp;
        fp.label = "X" + std::to_string(j);
        for (int i = 0; i <= n; ++i) {
            if (i == j) continue;
            Vec w = chi(i, 1);
            w[static_cast<size_t>(j)] -= 1;
            fp.weights.push_back(std::move(w));
        }
        for (int i = 0; i <= n; ++i) {
            if (i == j) continue;
            Vec w = chi(i, -1);
            w[static_cast<size_t>(j)] -= 1;
            fp.weights.push_back(std::move(w));
        }
        model.fixed_points.push_back(std::move(fp));
    }
    for (int j = 0; j <= n; ++j) {
        TorusModel::FixedPoint fp;
        fp.label = "Y" + std::to_string(j);
        const auto& mirror = model.fixed_points[static_cast<size_t>(j)];
        for (const Vec& w : mirror.weights) fp.weights.push_back(negated(w));
        model.fixed_points.push_back(std::move(fp));
    }
    model.validate();
    return model;
}

// Stage (a): the cells of Q \ Z_x ~ P^n, one entry per cell d = 0..n with
// symbol S^{2d,d}. Stage (b): for k = n down to 0, the sequence
// A^{2n-k}\{0} -> Q\P^k -> Q\P^{k-1} attaches a cell with symbol
// S^{2(2n-k),2n-k}. Total multiset: {0..n} u {n..2n} with n twice.
inline CofiberLedger quadric_two_stage_ledger(const QuadricSpec& spec) {
    const int n = spec.n;
    CofiberLedger ledger;
    ledger.space_name = spec.name();
    ledger.ambient_dimension = 2 * n;
    ledger.note = spec.name() + " \\ Z_x is a rank-" + std::to_string(n) +
                  " bundle over Z_y ~ P" + std::to_string(n) +
                  "; cells of P" + std::to_string(n) + " first, then one attachment per linear section";

    int step = 0;
    for (int d = 0; d <= n; ++d) {
        CofiberEntry e;
        e.step = step++;
        e.cell_dim = d;
        e.base = (d == 0);
        e.open_before = (d == 0) ? "(empty)" : "P^" + std::to_string(d - 1);
        e.open_after = "P^" + std::to_string(d);
        e.spheres = {SphereSymbol{2ll * d, d}};
        ledger.entries.push_back(std::move(e));
    }
    for (int k = n; k >= 0; --k) {
        CofiberEntry e;
        e.step = step++;
        e.cell_dim = 2ll * n - k;
        e.open_before = spec.name() + "\\P^" + std::to_string(k);
        e.open_after = (k == 0) ? spec.name() : spec.name() + "\\P^" + std::to_string(k - 1);
        e.spheres = {SphereSymbol{2ll * (2ll * n - k), 2ll * n - k}};
        ledger.entries.push_back(std::move(e));
    }
    return ledger;
}

// Q_{2n} = (D_{n+1} modulo the parabolic crossing node 1). Degenerate case
// n = 1: D_2 is A1 x A1 and the vector weight is already regular there, so
// the stabilizer is the Borel.
inline std::pair<RootSystemSpec, ParabolicSubset> quadric_schubert_parabolic(int n) {
    if (n < 1) throw InvalidSpec("quadric Q_{2n} requires n >= 1");
    RootSystemSpec spec(Family::D, n + 1);
    if (n == 1) return {spec, ParabolicSubset::borel()};
    std::vector<int> levi;
    for (int i = 2; i <= n + 1; ++i) levi.push_back(i);
    return {spec, ParabolicSubset(std::move(levi))};
}

} // namespace motcell
