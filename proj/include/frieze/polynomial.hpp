#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frieze/error.hpp"
#include "frieze/intmath.hpp"

namespace frieze {

/// Dense univariate polynomial with 64-bit integer coefficients, stored
/// lowest degree first.  Canonical form has no trailing zeros; the zero
/// polynomial is the empty vector and reports degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial constant(std::int64_t v) {
        return v == 0 ? IntPolynomial() : IntPolynomial({v});
    }

    static IntPolynomial monomial(int degree, std::int64_t coeff = 1) {
        if (coeff == 0) return IntPolynomial();
        std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
        c.back() = coeff;
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    std::int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0;
    }

    std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = checked::add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = checked::sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = checked::add(r[i + j], checked::mul(a.c_[i], b.c_[j]));
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, std::int64_t k) {
        std::vector<std::int64_t> r(a.c_);
        for (auto& v : r) v = checked::mul(v, k);
        return IntPolynomial(std::move(r));
    }

    /// Long division by a monic divisor; throws if the division is not exact.
    /// Integer-only: nothing here ever leaves Z[x].
    IntPolynomial divide_exact(const IntPolynomial& divisor) const {
        if (divisor.is_zero() || divisor.leading() != 1)
            throw FriezeError(ErrorKind::PreconditionViolation,
                              "divide_exact requires a monic divisor");
        std::vector<std::int64_t> rem(c_);
        int dd = divisor.degree();
        int qd = degree() - dd;
        if (qd < 0) {
            if (!is_zero())
                throw FriezeError(ErrorKind::PreconditionViolation, "inexact polynomial division");
            return IntPolynomial();
        }
        std::vector<std::int64_t> q(static_cast<std::size_t>(qd) + 1, 0);
        for (int i = qd; i >= 0; --i) {
            std::int64_t lead = rem[static_cast<std::size_t>(i + dd)];
            q[static_cast<std::size_t>(i)] = lead;
            if (lead == 0) continue;
            for (int k = 0; k <= dd; ++k)
                rem[static_cast<std::size_t>(i + k)] =
                    checked::sub(rem[static_cast<std::size_t>(i + k)],
                                 checked::mul(lead, divisor.coeff(k)));
        }
        for (std::int64_t v : rem)
            if (v != 0)
                throw FriezeError(ErrorKind::PreconditionViolation, "inexact polynomial division");
        return IntPolynomial(std::move(q));
    }

    /// Human-readable form, highest degree first, e.g. "x^3-2x".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            std::int64_t v = coeff(i);
            if (v == 0) continue;
            bool neg = v < 0;
            std::uint64_t mag = neg ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? "-" : "+";
            if (mag != 1 || i == 0) out += std::to_string(mag);
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::int64_t> c_;  // c_[i] multiplies x^i
};

/// n-th cyclotomic polynomial, built by exact division:
/// Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n.
inline IntPolynomial cyclotomic(std::int64_t n) {
    if (n < 1)
        throw FriezeError(ErrorKind::PreconditionViolation, "cyclotomic index must be positive");
    std::map<std::int64_t, IntPolynomial> memo;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        IntPolynomial num = IntPolynomial::monomial(static_cast<int>(d)) - IntPolynomial::constant(1);
        for (auto& [e, phi] : memo)
            if (d % e == 0) num = num.divide_exact(phi);
        memo.emplace(d, std::move(num));
    }
    return memo.at(n);
}

/// Polynomial D_k with D_k(2 cos a) = 2 cos(k a):
/// D_0 = 2, D_1 = y, D_k = y*D_{k-1} - D_{k-2}.
inline IntPolynomial cos_multiple(std::int64_t k) {
    if (k < 0) throw FriezeError(ErrorKind::PreconditionViolation, "cos_multiple needs k >= 0");
    IntPolynomial prev = IntPolynomial::constant(2);
    if (k == 0) return prev;
    IntPolynomial cur = IntPolynomial::monomial(1);
    const IntPolynomial y = cur;
    for (std::int64_t i = 2; i <= k; ++i) {
        IntPolynomial next = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Minimal polynomial of 2 cos(pi/N) over Q, monic of degree phi(2N)/2.
///
/// Phi_{2N} is self-reciprocal of even degree 2d, so
///   x^{-d} Phi_{2N}(x) = p_d + sum_{k=1..d} p_{d+k} (x^k + x^{-k}),
/// and substituting x^k + x^{-k} = D_k(y) with y = x + 1/x turns the
/// palindrome into a degree-d polynomial in y whose root is 2 cos(pi/N).
inline IntPolynomial minimal_poly_two_cos(std::int64_t N) {
    if (N < 3)
        throw FriezeError(ErrorKind::PreconditionViolation, "ring modulus must be at least 3");
    IntPolynomial phi = cyclotomic(2 * N);
    int d = phi.degree() / 2;
    IntPolynomial psi = IntPolynomial::constant(phi.coeff(d));
    for (int k = 1; k <= d; ++k) {
        std::int64_t p = phi.coeff(d + k);
        if (p != 0) psi = psi + cos_multiple(k) * p;
    }
    return psi;
}

}  // namespace frieze
