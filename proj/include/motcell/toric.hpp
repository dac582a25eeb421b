// Fans of smooth complete toric varieties: JSON ingestion, validation,
// the torus-action model (fixed points = maximal cones, tangent weights =
// dual basis of each cone's ray generators), and the h-vector oracle.
//
// Completeness is enforced by the wall condition (every facet of a maximal
// cone shared with exactly one other) together with a palindromic h-vector,
// not by a support-covering test; a fan sneaking past both is still caught
// by the BB/h cross-check.
#pragma once

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "motcell/bb_engine.hpp"
#include "motcell/errors.hpp"
#include "motcell/intmat.hpp"
#include "motcell/poly.hpp"

namespace motcell {

inline constexpr int kMaxFanRank = 8;

struct Fan {
    std::string name = "fan";
    int lattice_rank = 0;
    std::vector<Vec> rays;                   // primitive integer vectors
    std::vector<std::vector<int>> max_cones; // 0-based ray indices, each of size lattice_rank

    void validate() const;
};

namespace detail {

inline long long gcd_abs(const Vec& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

inline std::string index_str(const std::vector<int>& idx) {
    std::string s = "(";
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) s.push_back(',');
        s += std::to_string(idx[k]);
    }
    s.push_back(')');
    return s;
}

inline std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) s.push_back(',');
        s += std::to_string(v[k]);
    }
    s.push_back(')');
    return s;
}

inline IntMat cone_generator_matrix(const Fan& fan, const std::vector<int>& cone) {
    IntMat m(fan.lattice_rank);
    for (int j = 0; j < fan.lattice_rank; ++j) {
        const Vec& ray = fan.rays[static_cast<size_t>(cone[static_cast<size_t>(j)])];
        for (int i = 0; i < fan.lattice_rank; ++i) m.at(i, j) = ray[static_cast<size_t>(i)];
    }
    return m;
}

} // namespace detail

// h(t) = sum_j f_j (t-1)^{n-j} where f_j counts j-dimensional cones
// (faces of maximal cones, deduplicated; f_0 = 1 for the origin).
inline IntPoly h_vector(const Fan& fan) {
    const int n = fan.lattice_rank;
    std::vector<long long> f(static_cast<size_t>(n) + 1, 0);
    f[0] = 1;
    std::set<std::vector<int>> faces;
    for (const std::vector<int>& cone : fan.max_cones) {
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> face;
            for (int k = 0; k < n; ++k)
                if (mask & (1u << k)) face.push_back(sorted[static_cast<size_t>(k)]);
            if (faces.insert(face).second) ++f[face.size()];
        }
    }
    const IntPoly t_minus_1({-1, 1});
    IntPoly h;
    IntPoly power = IntPoly::one(); // (t-1)^{n-j}, built up as j descends
    for (int j = n; j >= 0; --j) {
        h = h + IntPoly({f[static_cast<size_t>(j)]}) * power;
        power = power * t_minus_1;
    }
    return h;
}

inline void Fan::validate() const {
    if (lattice_rank < 1 || lattice_rank > kMaxFanRank)
        throw ParseError(name + ": lattice_rank must be between 1 and " + std::to_string(kMaxFanRank));
    std::set<Vec> distinct;
    for (const Vec& r : rays) {
        if (r.size() != static_cast<size_t>(lattice_rank))
            throw ParseError(name + ": ray of wrong length");
        if (detail::gcd_abs(r) != 1)
            throw NonPrimitiveRay(name + ": ray " + detail::vec_str(r) + " is not primitive");
        if (!distinct.insert(r).second)
            throw ParseError(name + ": duplicate ray " + detail::vec_str(r));
    }
    if (max_cones.empty()) throw ParseError(name + ": no maximal cones");
    std::map<std::vector<int>, int> wall_count;
    std::set<std::vector<int>> cone_dedup;
    for (const std::vector<int>& cone : max_cones) {
        if (cone.size() != static_cast<size_t>(lattice_rank))
            throw ParseError(name + ": maximal cone " + detail::index_str(cone) + " of wrong size");
        for (int i : cone)
            if (i < 0 || i >= static_cast<int>(rays.size()))
                throw ParseError(name + ": ray index out of range in cone " + detail::index_str(cone));
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(name + ": repeated ray index in cone " + detail::index_str(cone));
        if (!cone_dedup.insert(sorted).second)
            throw ParseError(name + ": duplicate maximal cone " + detail::index_str(cone));
        const long long d = det(detail::cone_generator_matrix(*this, sorted));
        if (d != 1 && d != -1)
            throw NonSmoothCone(name + ": cone " + detail::index_str(cone) +
                                " has generator determinant " + std::to_string(d));
        for (size_t drop = 0; drop < sorted.size(); ++drop) {
            std::vector<int> facet;
            for (size_t k = 0; k < sorted.size(); ++k)
                if (k != drop) facet.push_back(sorted[k]);
            ++wall_count[facet];
        }
    }
    for (const auto& [facet, count] : wall_count)
        if (count != 2)
            throw WallConditionFailed(name + ": facet " + detail::index_str(facet) + " lies in " +
                                      std::to_string(count) + " maximal cones (expected 2)");
    // completeness proxy, second half
    if (!h_vector(*this).palindromic())
        throw WallConditionFailed(name + ": h-vector is not palindromic; fan cannot be complete");
}

// Strict schema: {"lattice_rank": n, "rays": [[...]], "max_cones": [[...]]},
// no unknown fields.
inline Fan parse_fan(const std::string& document, const std::string& name = "fan") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(name + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(name + ": top level must be an object");
    for (const auto& [key, _] : j.items())
        if (key != "lattice_rank" && key != "rays" && key != "max_cones")
            throw ParseError(name + ": unknown field \"" + key + "\"");
    if (!j.contains("lattice_rank") || !j.contains("rays") || !j.contains("max_cones"))
        throw ParseError(name + ": required fields are lattice_rank, rays, max_cones");

    Fan fan;
    fan.name = name;
    try {
        fan.lattice_rank = j.at("lattice_rank").get<int>();
        fan.rays = j.at("rays").get<std::vector<Vec>>();
        fan.max_cones = j.at("max_cones").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(name + ": " + e.what());
    }
    fan.validate();
    return fan;
}

inline TorusModel toric_torus_model(const Fan& fan) {
    TorusModel model;
    model.name = fan.name;
    model.torus_rank = fan.lattice_rank;
    for (const std::vector<int>& cone : fan.max_cones) {
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        TorusModel::FixedPoint fp;
        fp.label = "sigma" + detail::index_str(sorted);
        const IntMat inv = inverse_unimodular(detail::cone_generator_matrix(fan, sorted));
        for (int i = 0; i < fan.lattice_rank; ++i) fp.weights.push_back(inv.row(i));
        model.fixed_points.push_back(std::move(fp));
    }
    std::sort(model.fixed_points.begin(), model.fixed_points.end(),
              [](const TorusModel::FixedPoint& a, const TorusModel::FixedPoint& b) {
                  return a.label < b.label;
              });
    model.validate();
    return model;
}

// --- builtin fans -----------------------------------------------------------

inline Fan fan_projective_space(int n) {
    if (n < 1 || n > kMaxFanRank) throw InvalidSpec("projective_space(n) requires 1 <= n <= 8");
    Fan fan;
    fan.name = "P" + std::to_string(n);
    fan.lattice_rank = n;
    for (int i = 0; i < n; ++i) {
        Vec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        fan.rays.push_back(std::move(e));
    }
    fan.rays.push_back(Vec(static_cast<size_t>(n), -1));
    for (int drop = 0; drop <= n; ++drop) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != drop) cone.push_back(i);
        fan.max_cones.push_back(std::move(cone));
    }
    fan.validate();
    return fan;
}

inline Fan fan_product(const Fan& a, const Fan& b) {
    Fan fan;
    fan.name = a.name + "x" + b.name;
    fan.lattice_rank = a.lattice_rank + b.lattice_rank;
    if (fan.lattice_rank > kMaxFanRank) throw InvalidSpec("product fan exceeds rank 8");
    for (const Vec& r : a.rays) {
        Vec v = r;
        v.resize(static_cast<size_t>(fan.lattice_rank), 0);
        fan.rays.push_back(std::move(v));
    }
    for (const Vec& r : b.rays) {
        Vec v(static_cast<size_t>(a.lattice_rank), 0);
        v.insert(v.end(), r.begin(), r.end());
        fan.rays.push_back(std::move(v));
    }
    for (const auto& ca : a.max_cones)
        for (const auto& cb : b.max_cones) {
            std::vector<int> cone = ca;
            for (int i : cb) cone.push_back(i + static_cast<int>(a.rays.size()));
            fan.max_cones.push_back(std::move(cone));
        }
    fan.validate();
    return fan;
}

// Rays (1,0), (0,1), (-1,a), (0,-1); a = 0 recovers P1 x P1 up to relabeling.
inline Fan fan_hirzebruch(long long a) {
    if (a < 0) throw InvalidSpec("hirzebruch(a) requires a >= 0");
    Fan fan;
    fan.name = "F" + std::to_string(a);
    fan.lattice_rank = 2;
    fan.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    fan.validate();
    return fan;
}

} // namespace motcell
