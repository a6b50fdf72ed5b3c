#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/dissection.hpp"
#include "frieze/error.hpp"
#include "frieze/ring.hpp"

namespace frieze {

/// Raised when a diagonal of the candidate pattern fails to return to the
/// bordering 1 and 0.  Carries the full offending diagonal.
class ClosureFailure : public FriezeError {
  public:
    ClosureFailure(int position, int row, std::vector<RingElement> diagonal,
                   const std::string& msg)
        : FriezeError(ErrorKind::ClosureFailure, msg),
          position_(position),
          row_(row),
          diagonal_(std::move(diagonal)) {}

    int position() const { return position_; }   // which diagonal (start column j)
    int row() const { return row_; }              // first row index that went wrong
    const std::vector<RingElement>& diagonal() const { return diagonal_; }

  private:
    int position_;
    int row_;
    std::vector<RingElement> diagonal_;
};

/// A closed frieze pattern of width w on m columns, stored diagonal-major:
/// entry(i, j) is the i-th element (row i) of the diagonal whose row-1 entry
/// sits at position j.  Rows run 0..w+2: units, w interior rows, units,
/// zeros.  Rendering places entry(i, j) at physical half-column 2j + i.
class FriezePattern {
  public:
    int column_count() const { return m_; }
    int width() const { return m_ - 3; }
    const Ring& ring() const { return ring_; }

    const RingElement& entry(int i, int j) const {
        if (i < 0 || i > width() + 2)
            throw FriezeError(ErrorKind::IndexOutOfRange,
                              "row " + std::to_string(i) + " outside 0.." +
                                  std::to_string(width() + 2));
        int jj = j % m_;
        if (jj < 0) jj += m_;
        return cols_[static_cast<std::size_t>(jj)][static_cast<std::size_t>(i)];
    }

    std::vector<RingElement> row(int i) const {
        if (i < 0 || i > width() + 2)
            throw FriezeError(ErrorKind::IndexOutOfRange,
                              "row " + std::to_string(i) + " outside 0.." +
                                  std::to_string(width() + 2));
        std::vector<RingElement> r;
        r.reserve(static_cast<std::size_t>(m_));
        for (int j = 0; j < m_; ++j)
            r.push_back(cols_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        return r;
    }

    std::vector<RingElement> first_row() const { return row(1); }

    /// Assemble a pattern from raw diagonals without running the recurrence
    /// or the closure check.  Intended for tests that need a broken pattern.
    static FriezePattern from_columns(Ring ring, std::vector<std::vector<RingElement>> cols) {
        return FriezePattern(std::move(ring), std::move(cols));
    }

    FriezePattern with_entry(int i, int j, RingElement v) const {
        FriezePattern copy(*this);
        copy.cols_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(v);
        return copy;
    }

  private:
    FriezePattern(Ring ring, std::vector<std::vector<RingElement>> cols)
        : ring_(std::move(ring)), cols_(std::move(cols)), m_(static_cast<int>(cols_.size())) {}

    Ring ring_;
    std::vector<std::vector<RingElement>> cols_;  // cols_[j][i] = entry(i, j)
    int m_;
};

/// Run the diagonal recurrence v_{i+1} = a_{j+i} v_i - v_{i-1} from every
/// start position and demand that each diagonal closes with 1, 0.  Throws
/// ClosureFailure otherwise.  Entries may have any sign; positivity is a
/// separate check.
inline FriezePattern generate(const std::vector<RingElement>& first_row) {
    const int m = static_cast<int>(first_row.size());
    if (m < 3)
        throw FriezeError(ErrorKind::PreconditionViolation,
                          "a frieze needs at least 3 columns");
    const Ring& ring = first_row[0].ring();
    const int w = m - 3;
    const RingElement one = RingElement::one(ring);
    const RingElement zero = RingElement::zero(ring);

    std::vector<std::vector<RingElement>> cols;
    cols.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        std::vector<RingElement> v;
        v.reserve(static_cast<std::size_t>(w) + 3);
        v.push_back(one);
        v.push_back(first_row[static_cast<std::size_t>(j)]);
        for (int i = 1; i <= w + 1; ++i)
            v.push_back(first_row[static_cast<std::size_t>((j + i) % m)] * v[static_cast<std::size_t>(i)] -
                        v[static_cast<std::size_t>(i - 1)]);
        if (!(v[static_cast<std::size_t>(w + 1)] == one)) {
            std::string msg = "diagonal at position " + std::to_string(j) +
                              " does not close: row " + std::to_string(w + 1) + " is " +
                              v[static_cast<std::size_t>(w + 1)].power_basis_string() +
                              ", expected 1";
            throw ClosureFailure(j, w + 1, std::move(v), msg);
        }
        if (!(v[static_cast<std::size_t>(w + 2)] == zero)) {
            std::string msg = "diagonal at position " + std::to_string(j) +
                              " does not close: row " + std::to_string(w + 2) + " is " +
                              v[static_cast<std::size_t>(w + 2)].power_basis_string() +
                              ", expected 0";
            throw ClosureFailure(j, w + 2, std::move(v), msg);
        }
        cols.push_back(std::move(v));
    }
    return FriezePattern::from_columns(ring, std::move(cols));
}

inline FriezePattern generate(const WeightSequence& first_row) {
    return generate(first_row.entries);
}

struct DiamondIndex {
    int i;  // row of the left/right entries
    int k;  // position of the left entry
};

/// First diamond b c / a d with bc - ad != 1, if any.  The scan covers
/// 1 <= i <= w+1 and every position.
inline std::optional<DiamondIndex> find_unimodular_violation(const FriezePattern& f) {
    const RingElement one = RingElement::one(f.ring());
    for (int i = 1; i <= f.width() + 1; ++i)
        for (int k = 0; k < f.column_count(); ++k) {
            RingElement det = f.entry(i, k) * f.entry(i, k + 1) -
                              f.entry(i - 1, k + 1) * f.entry(i + 1, k);
            if (!(det == one)) return DiamondIndex{i, k};
        }
    return std::nullopt;
}

inline bool verify_unimodular(const FriezePattern& f) {
    return !find_unimodular_violation(f).has_value();
}

/// Exact positivity of every interior entry (rows 1..w).
inline bool verify_positive(const FriezePattern& f) {
    for (int i = 1; i <= f.width(); ++i)
        for (int j = 0; j < f.column_count(); ++j)
            if (sign(f.entry(i, j)) != Sign::Positive) return false;
    return true;
}

/// Smallest p >= 1 with entry(i, j+p) = entry(i, j) for all i, j.  The
/// period of a cyclic sequence always divides its length.
inline int pattern_period(const FriezePattern& f) {
    const int m = f.column_count();
    for (int p = 1; p <= m; ++p) {
        bool ok = true;
        for (int i = 1; ok && i <= f.width() + 1; ++i)
            for (int j = 0; j < m; ++j)
                if (!(f.entry(i, j) == f.entry(i, j + p))) {
                    ok = false;
                    break;
                }
        if (ok) return p;
    }
    return m;
}

inline int row_period(const FriezePattern& f, int i) {
    const int m = f.column_count();
    auto r = f.row(i);  // bounds-checked
    for (int p = 1; p <= m; ++p) {
        bool ok = true;
        for (int j = 0; j < m; ++j)
            if (!(r[static_cast<std::size_t>(j)] == r[static_cast<std::size_t>((j + p) % m)])) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return m;
}

/// Dissection -> frieze: weights in Z[2cos(pi/N)] with N = lcm of the part
/// sizes (or any caller-supplied ring the weights embed into).
inline FriezePattern build_from_dissection(const PolygonDissection& d, const Ring& ring) {
    return generate(vertex_weights(d, ring));
}

inline FriezePattern build_from_dissection(const PolygonDissection& d) {
    return build_from_dissection(d, make_ring(conductor_for(d)));
}

}  // namespace frieze
