// Cross-oracle suites: every suite pits two independently computed answers
// against each other (enumeration vs degree products, BB sign counts vs
// Bruhat lengths, BB polynomials vs h-vectors, coordinate quadric vs
// two-stage ledger vs D-type Schubert cells). The CLI `check` subcommand and
// the acceptance binary both run these.
#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "motcell/bb_engine.hpp"
#include "motcell/motive.hpp"
#include "motcell/parabolic.hpp"
#include "motcell/poly.hpp"
#include "motcell/quadric.hpp"
#include "motcell/root_system.hpp"
#include "motcell/toric.hpp"
#include "motcell/weyl.hpp"

namespace motcell {

struct CheckCase {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckCase> cases;

    bool all_pass() const {
        return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
    }
};

namespace checkdetail {

template <typename T>
std::string multiset_str(const std::vector<T>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "}";
    return os.str();
}

// Deterministic draw in [-9,9]^r, rejected until generic for the model.
inline Vec random_generic_cocharacter(const TorusModel& model, std::mt19937_64& rng) {
    for (int tries = 0; tries < 100000; ++tries) {
        Vec lambda(static_cast<size_t>(model.torus_rank));
        for (auto& x : lambda) x = static_cast<long long>(rng() % 19) - 9;
        bool ok = true;
        for (const auto& fp : model.fixed_points) {
            for (const Vec& u : fp.weights)
                if (dot(u, lambda) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return lambda;
    }
    throw std::logic_error(model.name + ": could not sample a generic cocharacter");
}

inline std::vector<TorusModel> corpus_models(long long cap = kDefaultWeylCap) {
    std::vector<TorusModel> models;
    for (int n = 1; n <= 3; ++n) models.push_back(toric_torus_model(fan_projective_space(n)));
    models.push_back(toric_torus_model(fan_product(fan_projective_space(1), fan_projective_space(1))));
    models.push_back(toric_torus_model(fan_product(fan_projective_space(2), fan_projective_space(1))));
    for (long long a = 0; a <= 3; ++a) models.push_back(toric_torus_model(fan_hirzebruch(a)));
    for (int n = 1; n <= 4; ++n) models.push_back(quadric_torus_model(QuadricSpec(n)));

    const std::vector<std::pair<RootSystemSpec, ParabolicSubset>> flags = {
        {RootSystemSpec(Family::A, 2), ParabolicSubset::borel()},
        {RootSystemSpec(Family::A, 2), ParabolicSubset({1})},
        {RootSystemSpec(Family::A, 3), ParabolicSubset({2})},
        {RootSystemSpec(Family::B, 2), ParabolicSubset::borel()},
        {RootSystemSpec(Family::B, 3), ParabolicSubset({1, 3})},
        {RootSystemSpec(Family::D, 3), ParabolicSubset({2, 3})},
        {RootSystemSpec(Family::D, 4), ParabolicSubset({2, 3, 4})},
    };
    for (const auto& [spec, P] : flags) {
        RootSystem rs(spec);
        models.push_back(flag_torus_model(rs, P, cap));
    }
    return models;
}

} // namespace checkdetail

// Sum of t^{l(w)} over W equals the product of t-analogues of the degrees.
inline CheckReport check_weyl_product(long long cap = kDefaultWeylCap) {
    CheckReport report{"weyl-product", {}};
    const std::vector<RootSystemSpec> specs = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
        {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3},
        {Family::D, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4},
        {Family::E, 6},
    };
    for (const auto& spec : specs) {
        RootSystem rs(spec);
        const IntPoly lhs = length_polynomial(enumerate_weyl(rs, cap));
        const IntPoly rhs = degrees_product_polynomial(rs);
        CheckCase c;
        c.label = rs.name();
        c.pass = (lhs == rhs);
        c.detail = c.pass ? "length polynomial = degree product"
                          : "mismatch: " + lhs.str() + " vs " + rhs.str();
        report.cases.push_back(std::move(c));
    }
    return report;
}

// BB dimension at each coset under a dominant regular cocharacter equals the
// Bruhat length, coset by coset.
inline CheckReport check_schubert_bb(long long cap = kDefaultWeylCap) {
    CheckReport report{"schubert-bb", {}};
    const std::vector<RootSystemSpec> specs = {
        {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
        {Family::B, 3}, {Family::D, 3}, {Family::D, 4},
    };
    for (const auto& spec : specs) {
        RootSystem rs(spec);
        std::vector<ParabolicSubset> parabolics = {ParabolicSubset::borel()};
        for (int i = 1; i <= rs.rank(); ++i) parabolics.push_back(ParabolicSubset({i}));
        for (const auto& P : parabolics) {
            const CellDecomposition schubert = schubert_cells(rs, P, cap);
            const TorusModel model = flag_torus_model(rs, P, cap);
            const Cocharacter lambda = dominant_regular_cocharacter(rs);
            const CellDecomposition bb = bb_cells(model, lambda.coords);

            std::map<std::string, int> schubert_dims, bb_dims;
            for (const Cell& c : schubert.cells) schubert_dims[c.fixed_point] = c.dimension;
            for (const Cell& c : bb.cells) bb_dims[c.fixed_point] = c.dimension;

            CheckCase c;
            c.label = flag_space_name(rs, P);
            c.pass = (schubert_dims == bb_dims);
            c.detail = c.pass ? std::to_string(bb.cells.size()) + " cosets, BB dim = Bruhat length"
                              : "cosetwise dimension mismatch";
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

// BB cell polynomial equals the fan's h-vector for many random generic
// cocharacters.
inline CheckReport check_toric_h(int seeds_per_fan = 20) {
    CheckReport report{"toric-h", {}};
    std::vector<Fan> fans;
    for (int n = 1; n <= 6; ++n) fans.push_back(fan_projective_space(n));
    fans.push_back(fan_product(fan_projective_space(1), fan_projective_space(1)));
    fans.push_back(fan_product(fan_projective_space(2), fan_projective_space(1)));
    for (long long a = 0; a <= 3; ++a) fans.push_back(fan_hirzebruch(a));

    uint64_t seed = 0x5eed0;
    for (const Fan& fan : fans) {
        const TorusModel model = toric_torus_model(fan);
        const IntPoly h = h_vector(fan);
        std::mt19937_64 rng(seed++);
        bool pass = true;
        std::string detail = std::to_string(seeds_per_fan) + " generic cocharacters, BB polynomial = h";
        for (int s = 0; s < seeds_per_fan && pass; ++s) {
            const Vec lambda = checkdetail::random_generic_cocharacter(model, rng);
            const IntPoly p = poincare_polynomial(bb_cells(model, lambda));
            if (p != h) {
                pass = false;
                detail = "mismatch at seed " + std::to_string(s) + ": " + p.str() + " vs h = " + h.str();
            }
        }
        report.cases.push_back({fan.name, pass, detail});
    }
    return report;
}

// Cell-dimension multisets of the coordinate model, the two-stage ledger and
// the D-type Schubert decomposition agree.
inline CheckReport check_quadric_triple(int n_max = 5, long long cap = kDefaultWeylCap) {
    CheckReport report{"quadric-triple", {}};
    for (int n = 1; n <= n_max; ++n) {
        QuadricSpec spec(n);
        const TorusModel model = quadric_torus_model(spec);
        const CellDecomposition bb = bb_cells(model, generic_cocharacter(model));
        std::vector<long long> model_dims;
        for (const Cell& c : bb.cells) model_dims.push_back(c.dimension);
        std::sort(model_dims.begin(), model_dims.end());

        const std::vector<long long> ledger_dims = quadric_two_stage_ledger(spec).cell_dimension_multiset();

        const auto [rs_spec, P] = quadric_schubert_parabolic(n);
        RootSystem rs(rs_spec);
        std::vector<long long> schubert_dims;
        for (const Cell& c : schubert_cells(rs, P, cap).cells) schubert_dims.push_back(c.dimension);
        std::sort(schubert_dims.begin(), schubert_dims.end());

        CheckCase c;
        c.label = spec.name();
        c.pass = (model_dims == ledger_dims) && (model_dims == schubert_dims);
        c.detail = c.pass ? "model = ledger = " + rs.name() + " Schubert: " +
                                checkdetail::multiset_str(model_dims)
                          : "model " + checkdetail::multiset_str(model_dims) + ", ledger " +
                                checkdetail::multiset_str(ledger_dims) + ", Schubert " +
                                checkdetail::multiset_str(schubert_dims);
        report.cases.push_back(std::move(c));
    }
    return report;
}

// Dimension multiset does not depend on the choice of generic cocharacter,
// and negating the cocharacter sends d to dim X - d.
inline CheckReport check_lambda_independence(int seeds_per_model = 20, long long cap = kDefaultWeylCap) {
    CheckReport report{"lambda-independence", {}};
    uint64_t seed = 0xfeed0;
    for (const TorusModel& model : checkdetail::corpus_models(cap)) {
        std::mt19937_64 rng(seed++);
        const Vec base = generic_cocharacter(model);
        const std::vector<int> reference = bb_cells(model, base).dimension_multiset();

        bool pass = true;
        std::string detail = std::to_string(seeds_per_model) + " cocharacters, multiset stable + dual";
        for (int s = 0; s < seeds_per_model && pass; ++s) {
            const Vec lambda = checkdetail::random_generic_cocharacter(model, rng);
            if (bb_cells(model, lambda).dimension_multiset() != reference) {
                pass = false;
                detail = "multiset changed at seed " + std::to_string(s);
                break;
            }
            std::vector<int> dual = bb_cells(model, negated(lambda)).dimension_multiset();
            for (int& d : dual) d = model.ambient_dimension() - d;
            std::sort(dual.begin(), dual.end());
            if (dual != reference) {
                pass = false;
                detail = "duality failed at seed " + std::to_string(s);
            }
        }
        report.cases.push_back({model.name, pass, detail});
    }
    return report;
}

// Every ordered filtration in the corpus passes the weight-gap check, and a
// deliberately reversed filtration is caught.
inline CheckReport check_weight_monotone(long long cap = kDefaultWeylCap) {
    CheckReport report{"weight-monotone", {}};
    CellDecomposition sample; // reused below for the sensitivity test
    for (const TorusModel& model : checkdetail::corpus_models(cap)) {
        const CellDecomposition cells = order_filtration(bb_cells(model, generic_cocharacter(model)));
        const WeightCheckReport wr = verify_weight_monotone(cells);
        report.cases.push_back({model.name, wr.all_trivial(),
                                wr.all_trivial() ? "all steps trivial-by-weight" : "weight gap violated"});
        if (model.name == "Q4") sample = cells;
    }
    if (!sample.cells.empty()) {
        CellDecomposition reversed = sample;
        std::reverse(reversed.cells.begin(), reversed.cells.end());
        for (size_t i = 0; i < reversed.cells.size(); ++i) reversed.cells[i].index = static_cast<int>(i);
        const bool caught = !verify_weight_monotone(reversed).all_trivial();
        report.cases.push_back({"reversed filtration (sensitivity)", caught,
                                caught ? "checker flags descending filtration" : "checker missed the reversal"});
    }
    return report;
}

// Cell counts: |W^P| for flags, number of maximal cones for fans, 2n+2 for
// quadrics.
inline CheckReport check_euler(long long cap = kDefaultWeylCap) {
    CheckReport report{"euler", {}};
    const std::vector<RootSystemSpec> specs = {
        {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
        {Family::B, 3}, {Family::D, 3}, {Family::D, 4},
    };
    for (const auto& spec : specs) {
        RootSystem rs(spec);
        std::vector<ParabolicSubset> parabolics = {ParabolicSubset::borel()};
        for (int i = 1; i <= rs.rank(); ++i) parabolics.push_back(ParabolicSubset({i}));
        for (const auto& P : parabolics) {
            const auto all = enumerate_weyl(rs, cap);
            long long levi_order = 0;
            for (const WeylElement& w : all) {
                bool in_levi = std::all_of(w.word.begin(), w.word.end(),
                                           [&](int i) { return P.contains(i); });
                if (in_levi) ++levi_order;
            }
            const TorusModel model = flag_torus_model(rs, P, cap);
            const CellDecomposition bb = bb_cells(model, dominant_regular_cocharacter(rs).coords);
            const long long expected = static_cast<long long>(all.size()) / levi_order;
            const bool pass = static_cast<long long>(bb.cells.size()) == expected;
            report.cases.push_back({flag_space_name(rs, P), pass,
                                    std::to_string(bb.cells.size()) + " cells, |W|/|W_P| = " +
                                        std::to_string(expected)});
        }
    }
    std::vector<Fan> fans;
    for (int n = 1; n <= 4; ++n) fans.push_back(fan_projective_space(n));
    fans.push_back(fan_product(fan_projective_space(2), fan_projective_space(1)));
    for (long long a = 0; a <= 3; ++a) fans.push_back(fan_hirzebruch(a));
    for (const Fan& fan : fans) {
        const TorusModel model = toric_torus_model(fan);
        const CellDecomposition bb = bb_cells(model, generic_cocharacter(model));
        const bool pass = bb.cells.size() == fan.max_cones.size();
        report.cases.push_back({fan.name, pass,
                                std::to_string(bb.cells.size()) + " cells, " +
                                    std::to_string(fan.max_cones.size()) + " maximal cones"});
    }
    for (int n = 1; n <= 5; ++n) {
        QuadricSpec spec(n);
        const TorusModel model = quadric_torus_model(spec);
        const CellDecomposition bb = bb_cells(model, generic_cocharacter(model));
        const bool pass = static_cast<int>(bb.cells.size()) == 2 * n + 2;
        report.cases.push_back({spec.name(), pass,
                                std::to_string(bb.cells.size()) + " cells, expected " +
                                    std::to_string(2 * n + 2)});
    }
    return report;
}

// 27 cells with top dimension 16 for the minuscule node of E6.
inline CheckReport check_e6_minuscule(long long cap = kDefaultWeylCap) {
    CheckReport report{"e6-minuscule", {}};
    RootSystem rs(RootSystemSpec(Family::E, 6));
    const CellDecomposition cells = schubert_cells(rs, maximal_parabolic_at(rs, 1), cap);
    const int top = cells.cells.empty() ? -1 : cells.cells.back().dimension;
    const bool pass = cells.cells.size() == 27 && top == 16;
    report.cases.push_back({"E6 node 1", pass,
                            std::to_string(cells.cells.size()) + " cells, top dimension " +
                                std::to_string(top)});
    return report;
}

inline std::vector<CheckReport> run_suite(const std::string& name, long long cap = kDefaultWeylCap) {
    if (name == "weyl-product") return {check_weyl_product(cap)};
    if (name == "toric-h") return {check_toric_h()};
    if (name == "quadric-triple") return {check_quadric_triple(5, cap)};
    if (name == "lambda-independence") return {check_lambda_independence(20, cap)};
    if (name == "weight-monotone") return {check_weight_monotone(cap)};
    if (name == "all")
        return {check_weyl_product(cap), check_toric_h(), check_quadric_triple(5, cap),
                check_lambda_independence(20, cap), check_weight_monotone(cap)};
    throw UnknownSuite("unknown check suite \"" + name +
                       "\"; expected weyl-product, toric-h, quadric-triple, lambda-independence, "
                       "weight-monotone or all");
}

} // namespace motcell
