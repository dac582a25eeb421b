// Dense univariate polynomials over the integers. Everything here is exact;
// coefficient comparisons are the test oracle for most of the library, so no
// floating point is allowed anywhere near this type.
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace motcell {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly monomial(int degree, long long coeff = 1) {
        std::vector<long long> c(static_cast<size_t>(degree) + 1, 0);
        c.back() = coeff;
        return IntPoly(std::move(c));
    }
    // 1 + t + ... + t^{d-1}; the t-analogue of the integer d.
    static IntPoly geometric(int d) {
        return IntPoly(std::vector<long long>(static_cast<size_t>(d), 1));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : 0;
    }
    const std::vector<long long>& coeffs() const { return c_; }

    long long eval(long long t) const {
        long long acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    bool palindromic() const {
        if (c_.empty()) return true;
        for (size_t i = 0, j = c_.size() - 1; i < j; ++i, --j)
            if (c_[i] != c_[j]) return false;
        return true;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    // Exact division; nullopt if b does not divide a over Z.
    static std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) return std::nullopt;
        if (a.is_zero()) return IntPoly();
        if (a.degree() < b.degree()) return std::nullopt;
        std::vector<long long> rem = a.c_;
        std::vector<long long> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
        const long long lead = b.c_.back();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            long long top = rem[static_cast<size_t>(k + b.degree())];
            if (top % lead != 0) return std::nullopt;
            long long q = top / lead;
            quot[static_cast<size_t>(k)] = q;
            for (int i = 0; i <= b.degree(); ++i)
                rem[static_cast<size_t>(k + i)] -= q * b.c_[static_cast<size_t>(i)];
        }
        for (long long r : rem)
            if (r != 0) return std::nullopt;
        return IntPoly(std::move(quot));
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c_.size(); ++k) {
            long long a = c_[k];
            if (a == 0) continue;
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            long long m = a > 0 ? a : -a;
            if (k == 0) os << m;
            else {
                if (m != 1) os << m << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<long long> c_;
};

} // namespace motcell
