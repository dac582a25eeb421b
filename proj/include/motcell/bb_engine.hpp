// The fixed-point engine: given any torus-action model (isolated fixed
// points, integer tangent weights), pick a one-parameter subgroup pairing
// nonzero against every weight, count strictly positive pairings per fixed
// point, order the filtration, and emit the cofiber ledger.
//
// Sign convention, pinned by the flag-variety test "identity coset has
// dimension 0 under a dominant regular cocharacter": a stratum's dimension
// counts the strictly positive pairings at its fixed point. Models whose
// natural weights disagree must negate their weights, not the engine.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "motcell/errors.hpp"
#include "motcell/intmat.hpp"

namespace motcell {

// Common input shape for every model: isolated fixed points with one integer
// weight vector per tangent direction. The weight count must be constant
// across fixed points (it is the dimension of the variety).
struct TorusModel {
    struct FixedPoint {
        std::string label;
        std::vector<Vec> weights;
    };

    std::string name;
    int torus_rank = 0;
    std::vector<FixedPoint> fixed_points;

    int ambient_dimension() const {
        return fixed_points.empty() ? 0 : static_cast<int>(fixed_points.front().weights.size());
    }

    void validate() const {
        if (fixed_points.empty()) throw std::invalid_argument(name + ": model has no fixed points");
        const size_t dim = fixed_points.front().weights.size();
        for (const auto& fp : fixed_points) {
            if (fp.weights.size() != dim)
                throw std::invalid_argument(name + ": tangent weight count varies across fixed points");
            for (const Vec& u : fp.weights)
                if (u.size() != static_cast<size_t>(torus_rank))
                    throw std::invalid_argument(name + ": tangent weight of wrong torus rank");
        }
    }
};

struct Cell {
    int index = 0;
    std::string fixed_point;
    int dimension = 0;
    std::string weight_signs; // '+'/'-' per tangent direction

    static int plus_count(const std::string& signs) {
        return static_cast<int>(std::count(signs.begin(), signs.end(), '+'));
    }
};

struct CellDecomposition {
    std::string space_name;
    int ambient_dimension = 0;
    std::vector<Cell> cells; // ordered by index
    Vec cocharacter_used;

    std::vector<int> dimension_multiset() const {
        std::vector<int> d;
        d.reserve(cells.size());
        for (const Cell& c : cells) d.push_back(c.dimension);
        std::sort(d.begin(), d.end());
        return d;
    }

    void check_invariants() const {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].index != static_cast<int>(i))
                throw std::logic_error("cell indices not contiguous");
            if (!cells[i].weight_signs.empty() &&
                Cell::plus_count(cells[i].weight_signs) != cells[i].dimension)
                throw std::logic_error("cell dimension disagrees with its weight signs");
            if (i > 0 && cells[i].dimension < cells[i - 1].dimension)
                throw std::logic_error("cell dimensions not nondecreasing");
        }
    }
};

struct SphereSymbol {
    long long p = 0;
    long long q = 0; // S^{p,q}, p >= q >= 0

    std::string str() const { return "S^{" + std::to_string(p) + "," + std::to_string(q) + "}"; }
    friend bool operator==(const SphereSymbol& a, const SphereSymbol& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const SphereSymbol& a, const SphereSymbol& b) {
        return a.q != b.q ? a.q < b.q : a.p < b.p;
    }
};

// One filtration step. For isolated fixed points the Thom space resolves to
// a wedge of spheres (trivial normal bundle over a point); otherwise the
// entry stays symbolic in thom_label.
struct CofiberEntry {
    int step = 0;
    std::string open_before;
    std::string open_after;
    bool resolved = true;
    std::vector<SphereSymbol> spheres;
    std::string thom_label; // set when unresolved: "Th(N_i over Z_i)"
    bool base = false;      // degenerate entry identifying the deepest open piece
    long long cell_dim = 0; // dimension of the stratum glued at this step
};

struct CofiberLedger {
    std::string space_name;
    int ambient_dimension = 0;
    std::string note; // free-form context line printed ahead of the entries
    std::vector<CofiberEntry> entries;

    bool fully_resolved() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const CofiberEntry& e) { return e.resolved; });
    }

    std::vector<SphereSymbol> sphere_multiset() const {
        std::vector<SphereSymbol> s;
        for (const CofiberEntry& e : entries)
            for (const SphereSymbol& sym : e.spheres) s.push_back(sym);
        std::sort(s.begin(), s.end());
        return s;
    }

    std::vector<long long> cell_dimension_multiset() const {
        std::vector<long long> d;
        for (const CofiberEntry& e : entries) d.push_back(e.cell_dim);
        std::sort(d.begin(), d.end());
        return d;
    }
};

// Deterministic generic-cocharacter search: try lambda_B = (1, B, B^2, ...)
// for B = 2, 3, ..., then single-coordinate +-1 perturbations of each
// lambda_B, up to the given bound on B. The first vector pairing nonzero
// against every tangent weight wins.
inline Vec generic_cocharacter(const TorusModel& model, long long bound = 1'000'000) {
    model.validate();
    const int r = model.torus_rank;

    for (const auto& fp : model.fixed_points)
        for (const Vec& u : fp.weights)
            if (std::all_of(u.begin(), u.end(), [](long long x) { return x == 0; }))
                throw NoGenericFound(model.name + ": zero tangent weight at fixed point " + fp.label +
                                     "; no cocharacter can be generic");

    auto generic = [&](const Vec& lambda) {
        for (const auto& fp : model.fixed_points)
            for (const Vec& u : fp.weights)
                if (dot(u, lambda) == 0) return false;
        return true;
    };
    auto powers = [&](long long base) {
        Vec lambda(static_cast<size_t>(r));
        long long p = 1;
        for (int i = 0; i < r; ++i) {
            lambda[static_cast<size_t>(i)] = p;
            if (i + 1 < r) {
                if (p > (1ll << 40)) return Vec{}; // entries too large to be useful
                p *= base;
            }
        }
        return lambda;
    };

    for (long long base = 2; base <= bound; ++base) {
        Vec lambda = powers(base);
        if (lambda.empty()) break;
        if (generic(lambda)) return lambda;
    }
    for (long long base = 2; base <= bound; ++base) {
        Vec lambda = powers(base);
        if (lambda.empty()) break;
        for (int k = 0; k < r; ++k)
            for (long long delta : {1ll, -1ll}) {
                Vec mu = lambda;
                mu[static_cast<size_t>(k)] += delta;
                if (generic(mu)) return mu;
            }
    }
    throw NoGenericFound(model.name + ": generic cocharacter search exhausted bound " +
                         std::to_string(bound));
}

// One cell per fixed point; dimension = number of strictly positive
// pairings. Cells sorted by dimension, ties broken by fixed-point label.
inline CellDecomposition bb_cells(const TorusModel& model, const Vec& lambda,
                                  const std::string& name = "") {
    model.validate();
    CellDecomposition out;
    out.space_name = name.empty() ? model.name : name;
    out.ambient_dimension = model.ambient_dimension();
    out.cocharacter_used = lambda;

    for (const auto& fp : model.fixed_points) {
        Cell c;
        c.fixed_point = fp.label;
        for (const Vec& u : fp.weights) {
            const long long p = dot(u, lambda);
            if (p == 0)
                throw NonGenericCocharacter(out.space_name + ": cocharacter pairs to zero with a tangent weight at " +
                                            fp.label);
            c.weight_signs.push_back(p > 0 ? '+' : '-');
        }
        c.dimension = Cell::plus_count(c.weight_signs);
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

// Reindex ascending by dimension with the deterministic tie-break;
// idempotent on already-ordered input.
inline CellDecomposition order_filtration(CellDecomposition cells) {
    std::stable_sort(cells.cells.begin(), cells.cells.end(), [](const Cell& a, const Cell& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.fixed_point < b.fixed_point;
    });
    for (size_t i = 0; i < cells.cells.size(); ++i) cells.cells[i].index = static_cast<int>(i);
    return cells;
}

// Open-complement ledger of an ordered filtration: step i glues in the cell
// of dimension d_i, and the Thom space over its (isolated) fixed point is a
// single sphere S^{2m,m} with m = dim X - d_i. The last step is the base
// case X \ X_{m-1} = (empty).
inline CofiberLedger cofiber_ledger(const CellDecomposition& cells) {
    cells.check_invariants();
    CofiberLedger ledger;
    ledger.space_name = cells.space_name;
    ledger.ambient_dimension = cells.ambient_dimension;
    const int m = static_cast<int>(cells.cells.size());
    for (int i = 0; i < m; ++i) {
        CofiberEntry e;
        e.step = i;
        e.cell_dim = cells.cells[static_cast<size_t>(i)].dimension;
        const long long codim = cells.ambient_dimension - e.cell_dim;
        e.open_before = (i == m - 1) ? "(empty)" : "X\\X_" + std::to_string(i);
        e.open_after = (i == 0) ? "X" : "X\\X_" + std::to_string(i - 1);
        e.spheres = {SphereSymbol{2 * codim, codim}};
        e.base = (i == m - 1);
        ledger.entries.push_back(std::move(e));
    }
    return ledger;
}

} // namespace motcell
