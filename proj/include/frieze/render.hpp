#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frieze/error.hpp"
#include "frieze/intmath.hpp"
#include "frieze/ring.hpp"

namespace frieze {

/// A named part weight used for display: `part_size` = n and the symbol that
/// stands for 2 cos(pi/n).  Triangles (weight 1) never need a symbol.
struct GeneratorName {
    std::string name;
    std::int64_t part_size;
};

/// Default symbol table: s for the square weight, t for the pentagon weight,
/// g<n> beyond that.  `unicode_sqrt2` swaps s for its literal value.
inline std::vector<GeneratorName> default_generators(const std::vector<std::int64_t>& part_sizes,
                                                     bool unicode_sqrt2 = false) {
    std::vector<GeneratorName> out;
    for (std::int64_t n : part_sizes) {
        if (n <= 3) continue;
        std::string name = n == 4 ? (unicode_sqrt2 ? "√2" : "s")
                                  : n == 5 ? "t" : "g" + std::to_string(n);
        out.push_back({std::move(name), n});
    }
    return out;
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

/// Exponent tuples 0 <= e_i < deg(g_i) in odometer order with the first
/// generator cycling fastest, so the monomial list starts 1, g1, g2, g1 g2.
inline std::vector<std::vector<int>> monomial_exponents(const std::vector<int>& degrees) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(degrees.size(), 0);
    for (;;) {
        out.push_back(e);
        std::size_t i = 0;
        while (i < e.size()) {
            if (++e[i] < degrees[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == e.size()) break;
    }
    return out;
}

inline std::string monomial_text(const std::vector<GeneratorName>& gens,
                                 const std::vector<int>& exps) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (exps[i] == 0) continue;
        out += gens[i].name;
        if (exps[i] >= 2) out += "^" + std::to_string(exps[i]);
    }
    return out;
}

inline std::string rational_text(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

/// Solve sum(lambda_k * monomial_k) = target over Q by Gauss-Jordan
/// elimination on the d x (K+1) augmented system.  Returns false when the
/// target is outside the span.  Free columns get lambda = 0, which prefers
/// the earlier (lower-order) monomials.
inline bool solve_rational(const std::vector<std::vector<std::int64_t>>& columns,
                           const std::vector<std::int64_t>& target,
                           std::vector<Rational>& lambda) {
    const std::size_t d = target.size();
    const std::size_t K = columns.size();
    std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(K + 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < K; ++c) aug[r][c] = columns[c][r];
        aug[r][K] = target[r];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < K && rank < d; ++c) {
        std::size_t p = rank;
        while (p < d && aug[p][c] == 0) ++p;
        if (p == d) continue;
        std::swap(aug[p], aug[rank]);
        Rational inv = aug[rank][c];
        for (auto& v : aug[rank]) v /= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == rank || aug[r][c] == 0) continue;
            Rational f = aug[r][c];
            for (std::size_t cc = c; cc <= K; ++cc) aug[r][cc] -= f * aug[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < d; ++r)
        if (aug[r][K] != 0) return false;  // inconsistent: target not in span

    lambda.assign(K, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) lambda[pivot_col[r]] = aug[r][K];
    return true;
}

}  // namespace detail

/// Express `a` as a rational combination of the generator monomials
/// {prod g_i^{e_i} : 0 <= e_i < deg g_i} and format it, e.g. "1+s+st" or
/// "t+2st".  When `a` lies outside the monomial span the power-basis form is
/// returned instead, annotated with the ring modulus.
inline std::string render(const RingElement& a, const std::vector<GeneratorName>& generators) {
    const Ring& ring = a.ring();
    std::vector<RingElement> gen_values;
    std::vector<int> degrees;
    for (const GeneratorName& g : generators) {
        gen_values.push_back(embed_part_weight(g.part_size, ring));
        degrees.push_back(static_cast<int>(euler_phi(2 * g.part_size) / 2));
    }

    auto exps = detail::monomial_exponents(degrees);
    std::vector<std::vector<std::int64_t>> columns;
    columns.reserve(exps.size());
    for (const auto& e : exps) {
        RingElement mono = RingElement::one(ring);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) mono = mono * gen_values[i];
        columns.push_back(mono.coeffs());
    }

    std::vector<detail::Rational> lambda;
    if (!detail::solve_rational(columns, a.coeffs(), lambda))
        return a.power_basis_string() + " [c=2cos(pi/" + std::to_string(ring->conductor) + ")]";

    std::string out;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] == 0) continue;
        bool neg = lambda[k] < 0;
        detail::Rational mag = neg ? -lambda[k] : lambda[k];
        std::string mono = detail::monomial_text(generators, exps[k]);
        std::string coeff;
        if (!(mag == 1 && !mono.empty())) {
            coeff = detail::rational_text(mag);
            if (!mono.empty() && denominator(mag) != 1) coeff = "(" + coeff + ")";
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
        out += coeff + mono;
    }
    return out.empty() ? "0" : out;
}

/// Inverse of render() for combinations of generator monomials (the fallback
/// power-basis form is not accepted).  Whitespace-tolerant.
inline RingElement parse_rendered(const std::string& text,
                                  const std::vector<GeneratorName>& generators,
                                  const Ring& ring) {
    using detail::Rational;
    std::vector<RingElement> gen_values;
    for (const GeneratorName& g : generators)
        gen_values.push_back(embed_part_weight(g.part_size, ring));

    // Longest-match generator lookup so g10 is not read as g1 followed by 0.
    auto match_gen = [&](std::size_t pos) -> std::pair<int, std::size_t> {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const std::string& n = generators[i].name;
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = static_cast<int>(i);
                best_len = n.size();
            }
        }
        return {best, best_len};
    };

    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    auto parse_uint = [&]() -> std::int64_t {
        std::size_t start = pos;
        std::int64_t v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            v = checked::add(checked::mul(v, 10), text[pos++] - '0');
        if (pos == start)
            throw FriezeError(ErrorKind::SyntaxError, "expected a number in '" + text + "'");
        return v;
    };

    std::vector<Rational> acc_coeffs(static_cast<std::size_t>(ring->degree), Rational(0));
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
        } else if (!first) {
            throw FriezeError(ErrorKind::SyntaxError, "expected + or - in '" + text + "'");
        }
        skip_ws();
        first = false;

        Rational coeff(1);
        bool saw_coeff = false;
        bool paren = pos < text.size() && text[pos] == '(';
        if (paren) ++pos;
        if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            std::int64_t num = parse_uint();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                coeff = Rational(num, parse_uint());
            } else {
                coeff = num;
            }
            saw_coeff = true;
        }
        if (paren) {
            if (pos >= text.size() || text[pos] != ')')
                throw FriezeError(ErrorKind::SyntaxError, "unbalanced parenthesis in '" + text + "'");
            ++pos;
        }

        RingElement term = RingElement::one(ring);
        bool saw_gen = false;
        for (;;) {
            auto [gi, len] = match_gen(pos);
            if (gi < 0) break;
            pos += len;
            std::int64_t e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = parse_uint();
            }
            for (std::int64_t k = 0; k < e; ++k) term = term * gen_values[static_cast<std::size_t>(gi)];
            saw_gen = true;
        }
        if (!saw_coeff && !saw_gen)
            throw FriezeError(ErrorKind::SyntaxError, "empty term in '" + text + "'");

        if (neg) coeff = -coeff;
        for (int i = 0; i < ring->degree; ++i)
            acc_coeffs[static_cast<std::size_t>(i)] += coeff * term.coeffs()[static_cast<std::size_t>(i)];
        skip_ws();
    }
    if (first) throw FriezeError(ErrorKind::SyntaxError, "empty expression");

    std::vector<std::int64_t> out(static_cast<std::size_t>(ring->degree));
    for (int i = 0; i < ring->degree; ++i) {
        const Rational& v = acc_coeffs[static_cast<std::size_t>(i)];
        if (denominator(v) != 1)
            throw FriezeError(ErrorKind::SyntaxError,
                              "combination is not integral in the power basis");
        boost::multiprecision::cpp_int n = numerator(v);
        if (n > std::numeric_limits<std::int64_t>::max() ||
            n < std::numeric_limits<std::int64_t>::min())
            throw FriezeError(ErrorKind::Overflow, "coefficient exceeds 64 bits");
        out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(n);
    }
    return RingElement(ring, std::move(out));
}

}  // namespace frieze
