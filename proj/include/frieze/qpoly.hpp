#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "frieze/error.hpp"
#include "frieze/intmath.hpp"
#include "frieze/pattern.hpp"
#include "frieze/polynomial.hpp"
#include "frieze/ring.hpp"

namespace frieze {

/// Continuant polynomials of the constant-weight frieze:
/// Q_0 = 1, Q_1 = x, Q_n = x Q_{n-1} - Q_{n-2}.
/// Row i of the diagonal-free n-gon frieze is Q_i evaluated at the n-gon
/// weight, and Q_{n-2}(w_n) = 1, Q_{n-1}(w_n) = 0 close the pattern.
inline IntPolynomial q_recurrence(int n) {
    if (n < 0) throw FriezeError(ErrorKind::PreconditionViolation, "q index must be >= 0");
    IntPolynomial prev = IntPolynomial::constant(1);
    if (n == 0) return prev;
    IntPolynomial cur = IntPolynomial::monomial(1);
    const IntPolynomial x = cur;
    for (int i = 2; i <= n; ++i) {
        IntPolynomial next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Same polynomial in closed form:
/// Q_n = sum over 0 <= k <= n/2 of (-1)^k C(n-k, k) x^{n-2k}.
inline IntPolynomial q_closed_form(int n) {
    if (n < 0) throw FriezeError(ErrorKind::PreconditionViolation, "q index must be >= 0");
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; 2 * k <= n; ++k) {
        std::int64_t b = binomial(n - k, k);
        c[static_cast<std::size_t>(n - 2 * k)] = (k % 2 == 0) ? b : checked::neg(b);
    }
    return IntPolynomial(std::move(c));
}

/// Horner evaluation of an integer polynomial at a ring element.
inline RingElement eval_in_ring(const IntPolynomial& p, const RingElement& x) {
    RingElement acc = RingElement::zero(x.ring());
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

/// Constant-weight frieze built from the alternate root 2 cos(k*pi/n)
/// instead of 2 cos(pi/n).  For odd k coprime to n the closure identities
/// still hold, but interior rows pick up negative entries.
struct AltRootReport {
    FriezePattern pattern;
    std::vector<std::vector<Sign>> interior_signs;  // rows 1..w of the pattern
    bool has_negative;
};

inline AltRootReport alt_root_entries(int n, int k) {
    if (n < 4)
        throw FriezeError(ErrorKind::PreconditionViolation, "alternate roots need n >= 4");
    if (k < 3 || k >= n)
        throw FriezeError(ErrorKind::PreconditionViolation,
                          "alternate root index must satisfy 3 <= k < n");
    if (k % 2 == 0)
        throw FriezeError(ErrorKind::PreconditionViolation, "alternate root index must be odd");
    if (std::gcd(k, n) != 1)
        throw FriezeError(ErrorKind::PreconditionViolation,
                          "alternate root index must be coprime to n");

    Ring ring = make_ring(n);
    RingElement u = two_cos_pi_multiple(ring, k);
    std::vector<RingElement> first(static_cast<std::size_t>(n), u);
    FriezePattern f = generate(first);  // ClosureFailure would propagate

    std::vector<std::vector<Sign>> signs;
    bool neg = false;
    for (int i = 1; i <= f.width(); ++i) {
        std::vector<Sign> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            Sign s = sign(f.entry(i, j));
            if (s == Sign::Negative) neg = true;
            row.push_back(s);
        }
        signs.push_back(std::move(row));
    }
    return AltRootReport{std::move(f), std::move(signs), neg};
}

}  // namespace frieze
