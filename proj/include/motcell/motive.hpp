// Reports derived from a cell decomposition: the Tate-motive decomposition,
// the weight-gap check that justifies it, Poincare polynomials, the
// plus-localized wedge report, the stable homology shift table, and the
// stratum inventory of the group itself.
//
// Reports that depend on hypotheses this artifact cannot verify carry the
// hypothesis inline as text and never assert it as checked.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "motcell/bb_engine.hpp"
#include "motcell/errors.hpp"
#include "motcell/poly.hpp"
#include "motcell/weyl.hpp"

namespace motcell {

struct MotivicDecomposition {
    struct Summand {
        long long twist = 0;        // Z(twist)[shift]
        long long shift = 0;        // always 2 * twist
        long long multiplicity = 0;
    };

    std::string space_name;
    std::vector<Summand> summands; // sorted by twist

    long long total_multiplicity() const {
        long long m = 0;
        for (const auto& s : summands) m += s.multiplicity;
        return m;
    }

    std::vector<long long> twist_multiset() const {
        std::vector<long long> t;
        for (const auto& s : summands)
            for (long long k = 0; k < s.multiplicity; ++k) t.push_back(s.twist);
        return t;
    }
};

namespace detail {

inline MotivicDecomposition aggregate_twists(std::string space, std::vector<long long> dims) {
    std::map<long long, long long> mult;
    for (long long d : dims) ++mult[d];
    MotivicDecomposition out;
    out.space_name = std::move(space);
    for (const auto& [twist, m] : mult)
        out.summands.push_back({twist, 2 * twist, m});
    return out;
}

} // namespace detail

// One summand Z(d)[2d] per cell of dimension d, multiplicities aggregated.
inline MotivicDecomposition motivic_decomposition(const CellDecomposition& cells) {
    std::vector<long long> dims;
    for (const Cell& c : cells.cells) dims.push_back(c.dimension);
    return detail::aggregate_twists(cells.space_name, std::move(dims));
}

// Ledger variant: only meaningful when every Thom entry is resolved; a
// symbolic ledger carries strictly more information than a Tate sum, so the
// honest answer there is the ledger itself.
inline MotivicDecomposition motivic_decomposition(const CofiberLedger& ledger) {
    if (!ledger.fully_resolved())
        throw InvalidSpec(ledger.space_name +
                          ": ledger contains unresolved Thom entries; report the ledger, not a Tate sum");
    return detail::aggregate_twists(ledger.space_name, ledger.cell_dimension_multiset());
}

struct WeightCheckReport {
    struct Step {
        int step = 0;
        long long source_weight = 0;     // weight of the attaching sphere
        long long target_max_weight = 0; // largest weight already present
        bool trivial_by_weight = false;  // source >= target
    };

    std::string space_name;
    std::vector<Step> steps;

    bool all_trivial() const {
        return std::all_of(steps.begin(), steps.end(),
                           [](const Step& s) { return s.trivial_by_weight; });
    }
};

// Walks the filtration in the order given (deliberately not re-sorting, so a
// shuffled decomposition produces a failing report). Step i attaches a
// sphere of weight dim X - d_i against the cells not yet glued in, whose
// maximal weight is max_{j>i}(dim X - d_j).
inline WeightCheckReport verify_weight_monotone(const CellDecomposition& cells) {
    WeightCheckReport report;
    report.space_name = cells.space_name;
    const int m = static_cast<int>(cells.cells.size());
    for (int i = 0; i + 1 < m; ++i) {
        WeightCheckReport::Step s;
        s.step = i;
        s.source_weight = cells.ambient_dimension - cells.cells[static_cast<size_t>(i)].dimension;
        long long target = 0;
        bool first = true;
        for (int j = i + 1; j < m; ++j) {
            const long long w = cells.ambient_dimension - cells.cells[static_cast<size_t>(j)].dimension;
            target = first ? w : std::max(target, w);
            first = false;
        }
        s.target_max_weight = target;
        s.trivial_by_weight = s.source_weight >= s.target_max_weight;
        report.steps.push_back(s);
    }
    return report;
}

// Coefficient of t^d = number of cells of dimension d.
inline IntPoly poincare_polynomial(const CellDecomposition& cells) {
    std::vector<long long> coeffs(static_cast<size_t>(cells.ambient_dimension) + 1, 0);
    for (const Cell& c : cells.cells) {
        if (c.dimension >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(c.dimension) + 1, 0);
        ++coeffs[static_cast<size_t>(c.dimension)];
    }
    return IntPoly(std::move(coeffs));
}

struct QPlusReport {
    std::string space_name;
    std::vector<SphereSymbol> wedge;
    std::string hypothesis; // stated assumption, never asserted as checked
};

inline QPlusReport qplus_report(const CellDecomposition& cells) {
    QPlusReport report;
    report.space_name = cells.space_name;
    for (const Cell& c : cells.cells)
        report.wedge.push_back(SphereSymbol{2ll * c.dimension, c.dimension});
    std::sort(report.wedge.begin(), report.wedge.end());
    report.hypothesis =
        "assumes Hom(S^{2i-1,i}, S^{2j,j}) = 0 in the plus-localized rational stable category "
        "for all i > j+1; stated hypothesis, not verified by this computation";
    return report;
}

struct SA1Report {
    std::string space_name;
    std::string caveat;
    std::vector<std::pair<long long, long long>> shifts; // (shift, multiplicity), sorted by shift
};

inline SA1Report sa1_homology_report(const CellDecomposition& cells) {
    SA1Report report;
    report.space_name = cells.space_name;
    report.caveat =
        "shift table of a free bigraded module over the stable homology of the base point; "
        "attaching data is not captured, and the comparison with the singular homology of a "
        "complex realization is lossy and not asserted";
    std::map<long long, long long> mult;
    for (const Cell& c : cells.cells) ++mult[c.dimension];
    for (const auto& [shift, m] : mult) report.shifts.emplace_back(shift, m);
    return report;
}

struct GroupStrataReport {
    struct Stratum {
        std::string word;    // Weyl word of the underlying cell
        long long affine_dim; // the A^{l(w)} factor
    };

    std::string group_name;
    long long dim_borel = 0; // |Phi+| + rank
    long long dim_group = 0; // 2|Phi+| + rank
    std::vector<Stratum> strata;
    // Cellularity holds stratum by stratum; no wedge splitting of the group
    // itself is claimed by this report.
};

// Strata A^{l(w)} x B over the cells of G/B, one per Weyl element.
inline GroupStrataReport group_strata(const RootSystem& rs, long long cap = kDefaultWeylCap) {
    GroupStrataReport report;
    report.group_name = "G(" + rs.name() + ")";
    report.dim_borel = rs.num_positive() + rs.rank();
    report.dim_group = 2ll * rs.num_positive() + rs.rank();
    for (const WeylElement& w : enumerate_weyl(rs, cap))
        report.strata.push_back({w.word_string(), w.length()});
    return report;
}

} // namespace motcell
