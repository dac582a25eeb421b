// Small square integer matrices with exact determinants and unimodular
// inverses. Sizes stay below 10 (rank of the largest root system / fan we
// accept), so dense row-major storage and Bareiss elimination are plenty.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace motcell {

using Vec = std::vector<long long>;

inline long long dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec negated(Vec v) {
    for (auto& x : v) x = -x;
    return v;
}

struct IntMat {
    int n = 0;
    std::vector<long long> a; // row-major, n*n entries

    IntMat() = default;
    explicit IntMat(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

    static IntMat identity(int size) {
        IntMat m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    Vec row(int i) const {
        return Vec(a.begin() + static_cast<long>(i) * n, a.begin() + static_cast<long>(i + 1) * n);
    }
    Vec col(int j) const {
        Vec c(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = at(i, j);
        return c;
    }

    Vec apply(const Vec& v) const {
        Vec r(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s += at(i, j) * v[static_cast<size_t>(j)];
            r[static_cast<size_t>(i)] = s;
        }
        return r;
    }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        IntMat r(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                long long v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }

    friend bool operator==(const IntMat& x, const IntMat& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator!=(const IntMat& x, const IntMat& y) { return !(x == y); }
};

// Fraction-free Bareiss determinant; exact for the small integer matrices
// used here.
inline long long det(const IntMat& m) {
    const int n = m.n;
    if (n == 0) return 1;
    std::vector<long long> w = m.a;
    auto at = [&](int i, int j) -> long long& { return w[static_cast<size_t>(i) * n + j]; };
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

// Inverse of a matrix with determinant +-1 (adjugate divided by det).
// Throws std::invalid_argument otherwise; callers validate unimodularity
// as part of their own error reporting.
inline IntMat inverse_unimodular(const IntMat& m) {
    const long long d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    const int n = m.n;
    IntMat inv(n);
    if (n == 1) {
        inv.at(0, 0) = d; // 1/m = m when m = +-1
        return inv;
    }
    IntMat minor(n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int r = 0;
            for (int ii = 0; ii < n; ++ii) {
                if (ii == i) continue;
                int c = 0;
                for (int jj = 0; jj < n; ++jj) {
                    if (jj == j) continue;
                    minor.at(r, c) = m.at(ii, jj);
                    ++c;
                }
                ++r;
            }
            long long cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(j, i) = cof * d; // adjugate transposed, divided by det = *d
        }
    return inv;
}

struct IntMatHash {
    size_t operator()(const IntMat& m) const noexcept {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(m.n);
        for (long long v : m.a) {
            uint64_t x = static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            h ^= x ^ (x >> 31);
            h *= 0x2545f4914f6cdd1dull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace motcell
