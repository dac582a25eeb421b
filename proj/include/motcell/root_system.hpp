// Reduced crystallographic root systems of types A-G in simple-root
// coordinates. All pairings go through the Cartan matrix, so the whole
// module is integer-exact.
//
// Conventions used throughout:
//   * a root beta is the coefficient vector of beta in the simple roots;
//   * cartan(i,j) = <alpha_j, alpha_i^vee>, so the pairing of beta with the
//     i-th simple coroot is row i of the Cartan matrix dotted with beta;
//   * cocharacters are stored in fundamental-coweight coordinates (the basis
//     dual to the simple roots), so <beta, lambda> is a plain dot product.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "motcell/errors.hpp"
#include "motcell/intmat.hpp"

namespace motcell {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: throw InvalidSpec(std::string("unknown family '") + c + "'");
    }
}

struct RootSystemSpec {
    Family family;
    int rank;

    RootSystemSpec(Family f, int r) : family(f), rank(r) { validate(); }
    RootSystemSpec(char f, int r) : RootSystemSpec(family_from_char(f), r) {}

    std::string name() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

private:
    void validate() const {
        if (rank <= 0) throw InvalidSpec(name() + ": rank must be positive");
        switch (family) {
            case Family::A:
                break;
            case Family::B:
            case Family::C:
                if (rank < 2) throw InvalidSpec(name() + ": family requires rank >= 2");
                break;
            case Family::D:
                // D2 = A1 x A1 is admitted as a documented degenerate case; the
                // even quadric Q2 lives there and every formula below (degrees,
                // root count) specializes correctly.
                if (rank < 2) throw InvalidSpec(name() + ": family D requires rank >= 2");
                break;
            case Family::E:
                if (rank < 6 || rank > 8) throw InvalidSpec(name() + ": family E requires rank in {6,7,8}");
                break;
            case Family::F:
                if (rank != 4) throw InvalidSpec(name() + ": family F requires rank 4");
                break;
            case Family::G:
                if (rank != 2) throw InvalidSpec(name() + ": family G requires rank 2");
                break;
        }
    }
};

struct Cocharacter {
    Vec coords; // fundamental-coweight coordinates
};

namespace detail {

// cartan(i,j) = 2(alpha_i, alpha_j)/(alpha_i, alpha_i); Bourbaki numbering.
inline IntMat cartan_matrix(const RootSystemSpec& spec) {
    const int n = spec.rank;
    IntMat c(n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    auto bond = [&](int i, int j) { // single edge between nodes i+1, j+1
        c.at(i, j) = -1;
        c.at(j, i) = -1;
    };
    switch (spec.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B: // alpha_n short
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c.at(n - 1, n - 2) = -2;
            break;
        case Family::C: // alpha_n long
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c.at(n - 2, n - 1) = -2;
            break;
        case Family::D:
            if (n == 2) break; // two orthogonal A1 nodes
            for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            // chain 1-3-4-...-n with node 2 attached to node 4
            bond(0, 2);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Family::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            bond(0, 1);
            bond(2, 3);
            c.at(1, 2) = -1;
            c.at(2, 1) = -2;
            break;
        case Family::G: // alpha_1 short, alpha_2 long
            c.at(0, 1) = -3;
            c.at(1, 0) = -1;
            break;
    }
    return c;
}

// d_i with d_i * cartan(i,j) symmetric (squared root lengths up to scale).
inline Vec symmetrizer(const RootSystemSpec& spec) {
    const int n = spec.rank;
    Vec d(static_cast<size_t>(n), 1);
    switch (spec.family) {
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) d[static_cast<size_t>(i)] = 2;
            break;
        case Family::C:
            d[static_cast<size_t>(n - 1)] = 2;
            break;
        case Family::F:
            d[0] = d[1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

inline std::vector<int> fundamental_degrees(const RootSystemSpec& spec) {
    const int n = spec.rank;
    std::vector<int> d;
    switch (spec.family) {
        case Family::A:
            for (int k = 2; k <= n + 1; ++k) d.push_back(k);
            break;
        case Family::B:
        case Family::C:
            for (int k = 1; k <= n; ++k) d.push_back(2 * k);
            break;
        case Family::D:
            for (int k = 1; k <= n - 1; ++k) d.push_back(2 * k);
            d.push_back(n);
            break;
        case Family::E:
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            else d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case Family::F:
            d = {2, 6, 8, 12};
            break;
        case Family::G:
            d = {2, 6};
            break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace detail

class RootSystem {
public:
    explicit RootSystem(const RootSystemSpec& spec)
        : spec_(spec),
          cartan_(detail::cartan_matrix(spec)),
          symmetrizer_(detail::symmetrizer(spec)),
          degrees_(detail::fundamental_degrees(spec)) {
        weyl_order_ = 1;
        for (int d : degrees_) weyl_order_ *= d;
        generate_roots();
    }

    const RootSystemSpec& spec() const { return spec_; }
    Family family() const { return spec_.family; }
    int rank() const { return spec_.rank; }
    std::string name() const { return spec_.name(); }
    const IntMat& cartan() const { return cartan_; }
    const std::vector<int>& degrees() const { return degrees_; }
    long long weyl_order() const { return weyl_order_; }

    const std::vector<Vec>& positive_roots() const { return positive_roots_; }
    int num_positive() const { return static_cast<int>(positive_roots_.size()); }

    std::vector<Vec> all_roots() const {
        std::vector<Vec> r = positive_roots_;
        for (const Vec& b : positive_roots_) r.push_back(negated(b));
        return r;
    }

    Vec simple_root(int i) const { // 1-based
        Vec v(static_cast<size_t>(rank()), 0);
        v[static_cast<size_t>(i - 1)] = 1;
        return v;
    }

    // <beta, alpha_i^vee> for 1-based i.
    long long pair_coroot(const Vec& beta, int i) const {
        long long s = 0;
        for (int j = 0; j < rank(); ++j) s += cartan_.at(i - 1, j) * beta[static_cast<size_t>(j)];
        return s;
    }

    Vec reflect_simple(int i, Vec beta) const { // 1-based
        const long long p = pair_coroot(beta, i);
        beta[static_cast<size_t>(i - 1)] -= p;
        return beta;
    }

    IntMat simple_reflection_matrix(int i) const { // 1-based
        IntMat m = IntMat::identity(rank());
        for (int j = 0; j < rank(); ++j) m.at(i - 1, j) -= cartan_.at(i - 1, j);
        return m;
    }

    // W-invariant symmetric form in simple-root coordinates.
    long long bilinear(const Vec& x, const Vec& y) const {
        long long s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                s += symmetrizer_[static_cast<size_t>(i)] * cartan_.at(i, j) *
                     x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        return s;
    }

    // <gamma, beta^vee> = 2(gamma,beta)/(beta,beta); exact for roots beta.
    long long pair_root_coroot(const Vec& gamma, const Vec& beta) const {
        const long long num = 2 * bilinear(gamma, beta);
        const long long den = bilinear(beta, beta);
        return num / den;
    }

    bool is_root(const Vec& v) const { return root_set_.count(v) > 0 || root_set_.count(negated(v)) > 0; }
    bool is_positive_root(const Vec& v) const { return root_set_.count(v) > 0; }

private:
    void generate_roots() {
        // Orbit of the simple roots under the simple reflections; for a
        // finite crystallographic system this is the whole root set.
        std::map<Vec, bool> seen;
        std::vector<Vec> frontier;
        for (int i = 1; i <= rank(); ++i) {
            Vec a = simple_root(i);
            seen[a] = true;
            seen[negated(a)] = true;
            frontier.push_back(a);
            frontier.push_back(negated(a));
        }
        while (!frontier.empty()) {
            std::vector<Vec> next;
            for (const Vec& b : frontier)
                for (int i = 1; i <= rank(); ++i) {
                    Vec r = reflect_simple(i, b);
                    if (seen.emplace(r, true).second) next.push_back(r);
                }
            frontier = std::move(next);
        }
        for (const auto& [v, _] : seen) {
            bool nonneg = std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
            bool nonpos = std::all_of(v.begin(), v.end(), [](long long x) { return x <= 0; });
            if (!nonneg && !nonpos)
                throw std::logic_error("root with mixed-sign coordinates generated");
            if (nonneg) positive_roots_.push_back(v);
        }
        auto height = [](const Vec& v) { return std::accumulate(v.begin(), v.end(), 0ll); };
        std::sort(positive_roots_.begin(), positive_roots_.end(),
                  [&](const Vec& x, const Vec& y) {
                      long long hx = height(x), hy = height(y);
                      if (hx != hy) return hx < hy;
                      return x < y;
                  });
        for (const Vec& b : positive_roots_) root_set_.emplace(b, true);
    }

    RootSystemSpec spec_;
    IntMat cartan_;
    Vec symmetrizer_;
    std::vector<int> degrees_;
    long long weyl_order_ = 1;
    std::vector<Vec> positive_roots_;
    std::map<Vec, bool> root_set_; // positive roots only
};

inline RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem(spec); }

inline long long pair_cocharacter(const Vec& root, const Cocharacter& lambda) {
    return dot(root, lambda.coords);
}

// Sum of the fundamental coweights: pairs to the height of each root, hence
// strictly positive on every positive root.
inline Cocharacter dominant_regular_cocharacter(const RootSystem& rs) {
    return Cocharacter{Vec(static_cast<size_t>(rs.rank()), 1)};
}

inline bool is_regular(const RootSystem& rs, const Cocharacter& lambda) {
    for (const Vec& b : rs.positive_roots())
        if (pair_cocharacter(b, lambda) == 0) return false;
    return true;
}

} // namespace motcell
