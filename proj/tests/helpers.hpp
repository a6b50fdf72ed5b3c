#pragma once

#include <cstdint>
#include <vector>

#include <frieze/frieze.hpp>

namespace helpers {

using namespace frieze;

inline std::vector<std::int64_t> int_row(const FriezePattern& f, int i) {
    std::vector<std::int64_t> out;
    for (const RingElement& e : f.row(i)) out.push_back(e.integer_value());
    return out;
}

/// a is a cyclic rotation of b.
template <class T>
bool is_rotation(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t j = 0; ok && j < n; ++j) ok = a[j] == b[(j + r) % n];
        if (ok) return true;
    }
    return false;
}

template <class T>
std::vector<T> reversed(std::vector<T> v) {
    return {v.rbegin(), v.rend()};
}

template <class T>
bool is_rotation_or_reflection(const std::vector<T>& a, const std::vector<T>& b) {
    return is_rotation(a, b) || is_rotation(a, reversed(b));
}

/// The whole interior (rows 1..w) matches `rows` after rotating columns by
/// some fixed r: rows[i][j] == f.entry(i+1, (j+r) mod m).
inline bool table_matches_rotation(const FriezePattern& f,
                                   const std::vector<std::vector<RingElement>>& rows) {
    const int m = f.column_count();
    if (static_cast<int>(rows.size()) != f.width()) return false;
    for (int r = 0; r < m; ++r) {
        bool ok = true;
        for (int i = 0; ok && i < f.width(); ++i)
            for (int j = 0; ok && j < m; ++j)
                ok = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                     f.entry(i + 1, (j + r) % m);
        if (ok) return true;
    }
    return false;
}

/// Same, allowing a left-right flip of the table.  Reflecting half-column
/// x = 2j + i to -x sends column j of row i to column -i-j, so the flipped
/// read-out is rows[i][j] == f.entry(i+1, (r - (i+1) - j) mod m).
inline bool table_matches_dihedral(const FriezePattern& f,
                                   const std::vector<std::vector<RingElement>>& rows) {
    if (table_matches_rotation(f, rows)) return true;
    const int m = f.column_count();
    if (static_cast<int>(rows.size()) != f.width()) return false;
    for (int r = 0; r < m; ++r) {
        bool ok = true;
        for (int i = 0; ok && i < f.width(); ++i)
            for (int j = 0; ok && j < m; ++j) {
                int jj = ((r - (i + 1) - j) % m + m) % m;
                ok = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                     f.entry(i + 1, jj);
            }
        if (ok) return true;
    }
    return false;
}

inline std::vector<RingElement> constants(const Ring& ring, const std::vector<std::int64_t>& v) {
    std::vector<RingElement> out;
    for (std::int64_t x : v) out.push_back(RingElement::constant(ring, x));
    return out;
}

/// Parse a whole expected table in generator notation, one string per cell.
inline std::vector<std::vector<RingElement>> parse_rows(
    const std::vector<std::vector<std::string>>& texts, const std::vector<GeneratorName>& gens,
    const Ring& ring) {
    std::vector<std::vector<RingElement>> out;
    for (const auto& row : texts) {
        std::vector<RingElement> r;
        for (const auto& s : row) r.push_back(parse_rendered(s, gens, ring));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace helpers
