#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "frieze/error.hpp"
#include "frieze/intmath.hpp"
#include "frieze/polynomial.hpp"

namespace frieze {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "Negative";
        case Sign::Zero: return "Zero";
        case Sign::Positive: return "Positive";
    }
    return "?";
}

/// Immutable description of the ring Z[c] with c = 2 cos(pi/N): the modulus N
/// and the minimal polynomial of c.  Elements are integer vectors in the
/// power basis 1, c, ..., c^{degree-1}; everything stays exact.
struct RingSpec {
    std::int64_t conductor;  // N
    IntPolynomial minpoly;   // monic, degree phi(2N)/2
    int degree;
};

using Ring = std::shared_ptr<const RingSpec>;

inline Ring make_ring(std::int64_t N) {
    IntPolynomial psi = minimal_poly_two_cos(N);
    int d = psi.degree();
    return std::make_shared<RingSpec>(RingSpec{N, std::move(psi), d});
}

namespace detail {

// RAII wrapper for a single mpfr number.
class Big {
  public:
    explicit Big(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Big() { mpfr_clear(v_); }
    Big(const Big&) = delete;
    Big& operator=(const Big&) = delete;
    Big(Big&&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with directed rounding on every operation.
struct Interval {
    Big lo, hi;
    explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

/// Enclosure of 2 cos(pi/N) at the given working precision.  cos is
/// decreasing on [0, pi], so bounds on pi/N map to swapped bounds on cos.
inline void enclose_generator(Interval& out, std::int64_t N, mpfr_prec_t prec) {
    Big pi_lo(prec), pi_hi(prec), x_lo(prec), x_hi(prec);
    mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
    mpfr_div_si(x_lo.get(), pi_lo.get(), static_cast<long>(N), MPFR_RNDD);
    mpfr_div_si(x_hi.get(), pi_hi.get(), static_cast<long>(N), MPFR_RNDU);
    mpfr_cos(out.lo.get(), x_hi.get(), MPFR_RNDD);
    mpfr_cos(out.hi.get(), x_lo.get(), MPFR_RNDU);
    mpfr_mul_2ui(out.lo.get(), out.lo.get(), 1, MPFR_RNDD);
    mpfr_mul_2ui(out.hi.get(), out.hi.get(), 1, MPFR_RNDU);
}

// out = a * b with outward rounding; intervals may contain zero or be
// entirely negative, so take min/max over all four endpoint products.
inline void interval_mul(Interval& out, const Interval& a, const Interval& b, mpfr_prec_t prec) {
    Big p(prec), best_lo(prec), best_hi(prec);
    mpfr_srcptr as[2] = {a.lo.get(), a.hi.get()};
    mpfr_srcptr bs[2] = {b.lo.get(), b.hi.get()};
    bool first = true;
    for (auto av : as)
        for (auto bv : bs) {
            mpfr_mul(p.get(), av, bv, MPFR_RNDD);
            if (first || mpfr_cmp(p.get(), best_lo.get()) < 0) mpfr_set(best_lo.get(), p.get(), MPFR_RNDD);
            mpfr_mul(p.get(), av, bv, MPFR_RNDU);
            if (first || mpfr_cmp(p.get(), best_hi.get()) > 0) mpfr_set(best_hi.get(), p.get(), MPFR_RNDU);
            first = false;
        }
    mpfr_set(out.lo.get(), best_lo.get(), MPFR_RNDD);
    mpfr_set(out.hi.get(), best_hi.get(), MPFR_RNDU);
}

/// Horner evaluation of an integer-coefficient polynomial over an interval
/// enclosure of the argument.
inline void interval_eval(Interval& acc, const std::vector<std::int64_t>& coeffs,
                          const Interval& x, mpfr_prec_t prec) {
    mpfr_set_zero(acc.lo.get(), 1);
    mpfr_set_zero(acc.hi.get(), 1);
    Interval tmp(prec);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        interval_mul(tmp, acc, x, prec);
        mpfr_add_si(acc.lo.get(), tmp.lo.get(), static_cast<long>(*it), MPFR_RNDD);
        mpfr_add_si(acc.hi.get(), tmp.hi.get(), static_cast<long>(*it), MPFR_RNDU);
    }
}

/// Test helper: evaluate `coeffs` at 2 cos(pi/N) with enough working
/// precision that the returned enclosure has width below 2^-bits; reports
/// whether that enclosure contains zero.
inline bool encloses_zero_within(const std::vector<std::int64_t>& coeffs, std::int64_t N,
                                 mpfr_prec_t bits) {
    mpfr_prec_t prec = bits + 64;
    for (;;) {
        Interval x(prec), v(prec);
        enclose_generator(x, N, prec);
        interval_eval(v, coeffs, x, prec);
        Big width(prec);
        mpfr_sub(width.get(), v.hi.get(), v.lo.get(), MPFR_RNDU);
        Big bound(prec);
        mpfr_set_ui_2exp(bound.get(), 1, -bits, MPFR_RNDN);
        if (mpfr_cmp(width.get(), bound.get()) < 0)
            return mpfr_sgn(v.lo.get()) <= 0 && mpfr_sgn(v.hi.get()) >= 0;
        prec *= 2;
        if (prec > (mpfr_prec_t{1} << 24))
            throw FriezeError(ErrorKind::PreconditionViolation,
                              "interval evaluation failed to converge");
    }
}

}  // namespace detail

/// Element of Z[2 cos(pi/N)], reduced modulo the ring's minimal polynomial.
/// Coefficient arithmetic is 64-bit and overflow-checked; two elements
/// interoperate when their rings have the same modulus.
class RingElement {
  public:
    RingElement(Ring ring, std::vector<std::int64_t> coeffs)
        : ring_(std::move(ring)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != ring_->degree)
            throw FriezeError(ErrorKind::PreconditionViolation,
                              "coefficient vector length must equal the ring degree");
    }

    static RingElement constant(const Ring& ring, std::int64_t v) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(ring->degree), 0);
        // Degree-1 rings (N = 3) collapse c to an integer: reduce v * 1.
        c[0] = v;
        return RingElement(ring, std::move(c));
    }

    static RingElement zero(const Ring& ring) { return constant(ring, 0); }
    static RingElement one(const Ring& ring) { return constant(ring, 1); }

    /// The ring generator c = 2 cos(pi/N) itself.
    static RingElement generator(const Ring& ring) {
        if (ring->degree == 1) {
            // c is rational here (N = 3, c = 1): reduce x mod (y - 1).
            return constant(ring, 1);
        }
        std::vector<std::int64_t> c(static_cast<std::size_t>(ring->degree), 0);
        c[1] = 1;
        return RingElement(ring, std::move(c));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (std::int64_t v : c_)
            if (v != 0) return false;
        return true;
    }

    /// True when the element lies in Z, i.e. only the constant coefficient
    /// is populated.
    bool is_integer() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    std::int64_t integer_value() const {
        if (!is_integer())
            throw FriezeError(ErrorKind::PreconditionViolation, "element is not an integer");
        return c_[0];
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_->conductor == b.ring_->conductor && a.c_ == b.c_;
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        check_same(a, b);
        std::vector<std::int64_t> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::add(a.c_[i], b.c_[i]);
        return RingElement(a.ring_, std::move(r));
    }

    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        check_same(a, b);
        std::vector<std::int64_t> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::sub(a.c_[i], b.c_[i]);
        return RingElement(a.ring_, std::move(r));
    }

    friend RingElement operator-(const RingElement& a) {
        std::vector<std::int64_t> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::neg(a.c_[i]);
        return RingElement(a.ring_, std::move(r));
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        check_same(a, b);
        const int d = a.ring_->degree;
        std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * d - 1), 0);
        for (int i = 0; i < d; ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < d; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    checked::add(prod[static_cast<std::size_t>(i + j)],
                                 checked::mul(a.c_[static_cast<std::size_t>(i)],
                                              b.c_[static_cast<std::size_t>(j)]));
        }
        reduce(prod, *a.ring_);
        prod.resize(static_cast<std::size_t>(d));
        return RingElement(a.ring_, std::move(prod));
    }

    friend RingElement operator*(const RingElement& a, std::int64_t k) {
        std::vector<std::int64_t> r(a.c_);
        for (auto& v : r) v = checked::mul(v, k);
        return RingElement(a.ring_, std::move(r));
    }

    friend RingElement operator+(const RingElement& a, std::int64_t k) {
        std::vector<std::int64_t> r(a.c_);
        r[0] = checked::add(r[0], k);
        return RingElement(a.ring_, std::move(r));
    }

    friend RingElement operator-(const RingElement& a, std::int64_t k) {
        return a + (-k);
    }

    /// Power-basis rendering, e.g. "c^3-2c".
    std::string power_basis_string() const {
        return IntPolynomial(c_).to_string("c");
    }

  private:
    static void check_same(const RingElement& a, const RingElement& b) {
        if (a.ring_ != b.ring_ && a.ring_->conductor != b.ring_->conductor)
            throw FriezeError(ErrorKind::SpecMismatch,
                              "elements of Z[2cos(pi/" + std::to_string(a.ring_->conductor) +
                                  ")] and Z[2cos(pi/" + std::to_string(b.ring_->conductor) +
                                  ")] cannot be combined");
    }

    // Reduce a raw power-basis vector modulo the (monic) minimal polynomial:
    // integer-only column operations, highest term first.
    static void reduce(std::vector<std::int64_t>& v, const RingSpec& spec) {
        const int d = spec.degree;
        for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
            std::int64_t q = v[static_cast<std::size_t>(i)];
            if (q == 0) continue;
            v[static_cast<std::size_t>(i)] = 0;
            for (int k = 0; k < d; ++k)
                v[static_cast<std::size_t>(i - d + k)] =
                    checked::sub(v[static_cast<std::size_t>(i - d + k)],
                                 checked::mul(q, spec.minpoly.coeff(k)));
        }
    }

    Ring ring_;
    std::vector<std::int64_t> c_;
};

/// Element equal to 2 cos(k*pi/N), computed by the D_k recurrence inside the
/// ring (no polynomial reduction round trip).
inline RingElement two_cos_pi_multiple(const Ring& ring, std::int64_t k) {
    if (k < 0)
        throw FriezeError(ErrorKind::PreconditionViolation, "angle multiple must be >= 0");
    RingElement prev = RingElement::constant(ring, 2);
    if (k == 0) return prev;
    RingElement cur = RingElement::generator(ring);
    const RingElement c = cur;
    for (std::int64_t i = 2; i <= k; ++i) {
        RingElement next = c * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Weight of an n-gon part, w_n = 2 cos(pi/n), expressed in the given ring.
/// Triangles weigh exactly 1 and embed in any ring; larger parts need n to
/// divide the ring modulus.
inline RingElement embed_part_weight(std::int64_t n, const Ring& ring) {
    if (n < 3)
        throw FriezeError(ErrorKind::PreconditionViolation, "parts have at least 3 vertices");
    if (n == 3) return RingElement::one(ring);
    if (ring->conductor % n != 0)
        throw FriezeError(ErrorKind::NotDivisor,
                          "part size " + std::to_string(n) + " does not divide the ring modulus " +
                              std::to_string(ring->conductor));
    return two_cos_pi_multiple(ring, ring->conductor / n);
}

/// Exact sign.  Zero is structural (all coefficients vanish); otherwise the
/// element is evaluated over an interval enclosure of the generator, doubling
/// the working precision from 64 bits until the interval excludes zero.
/// Termination is guaranteed because a nonzero element has nonzero value.
inline Sign sign(const RingElement& a) {
    if (a.is_zero()) return Sign::Zero;
    if (a.is_integer()) return a.integer_value() > 0 ? Sign::Positive : Sign::Negative;
    const std::int64_t N = a.ring()->conductor;
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        detail::Interval x(prec), v(prec);
        detail::enclose_generator(x, N, prec);
        detail::interval_eval(v, a.coeffs(), x, prec);
        if (mpfr_sgn(v.lo.get()) > 0) return Sign::Positive;
        if (mpfr_sgn(v.hi.get()) < 0) return Sign::Negative;
        if (prec > (mpfr_prec_t{1} << 24))
            throw FriezeError(ErrorKind::PreconditionViolation,
                              "sign determination failed to converge");
    }
}

/// Decimal approximation with `digits` fractional digits (display only; all
/// decisions in the library go through sign()).
inline std::string decimal(const RingElement& a, int digits) {
    if (digits < 0) digits = 0;
    mpfr_prec_t prec = 64 + 4 * static_cast<mpfr_prec_t>(digits);
    detail::Interval x(prec), v(prec);
    detail::enclose_generator(x, a.ring()->conductor, prec);
    detail::interval_eval(v, a.coeffs(), x, prec);
    detail::Big mid(prec);
    mpfr_add(mid.get(), v.lo.get(), v.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rf", digits, mid.get());
    return std::string(buf);
}

}  // namespace frieze
