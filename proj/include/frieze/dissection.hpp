#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frieze/error.hpp"
#include "frieze/intmath.hpp"
#include "frieze/ring.hpp"

namespace frieze {

using Chord = std::pair<int, int>;  // normalized: first < second

/// Validation error that remembers which diagonal in the caller's list was
/// the offender, so text front ends can point at it.
class DissectionError : public FriezeError {
  public:
    DissectionError(ErrorKind kind, const std::string& msg, Chord offending, int input_index)
        : FriezeError(kind, msg), offending_(offending), input_index_(input_index) {}

    Chord offending() const { return offending_; }
    int input_index() const { return input_index_; }

  private:
    Chord offending_;
    int input_index_;
};

inline bool chords_cross(Chord a, Chord b) {
    if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
        return false;  // shared endpoint: they touch, never cross
    auto inside = [&](int x) { return a.first < x && x < a.second; };
    return inside(b.first) != inside(b.second);
}

/// A convex m-gon (vertices 0..m-1, counterclockwise) together with a set of
/// pairwise non-crossing diagonals.  Construction goes through validate();
/// instances are immutable and always well formed.
class PolygonDissection {
  public:
    static PolygonDissection validate(int m, const std::vector<Chord>& diagonals) {
        if (m < 3)
            throw FriezeError(ErrorKind::PreconditionViolation,
                              "a polygon needs at least 3 vertices");
        std::vector<Chord> norm;
        norm.reserve(diagonals.size());
        for (std::size_t idx = 0; idx < diagonals.size(); ++idx) {
            auto [a, b] = diagonals[idx];
            int i = static_cast<int>(idx);
            if (a < 0 || a >= m || b < 0 || b >= m)
                throw DissectionError(ErrorKind::OutOfRange,
                                      "vertex in " + chord_text({a, b}) + " outside 0.." +
                                          std::to_string(m - 1),
                                      {a, b}, i);
            Chord c{std::min(a, b), std::max(a, b)};
            int gap = c.second - c.first;
            if (gap == 0)
                throw DissectionError(ErrorKind::AdjacentEndpoints,
                                      "degenerate diagonal " + chord_text(c), c, i);
            if (gap < 2 || gap > m - 2)
                throw DissectionError(ErrorKind::AdjacentEndpoints,
                                      chord_text(c) + " joins adjacent vertices", c, i);
            for (const Chord& prev : norm) {
                if (prev == c)
                    throw DissectionError(ErrorKind::Duplicate,
                                          "diagonal " + chord_text(c) + " listed twice", c, i);
                if (chords_cross(prev, c))
                    throw DissectionError(ErrorKind::Crossing,
                                          "diagonal " + chord_text(c) + " crosses " +
                                              chord_text(prev),
                                          c, i);
            }
            norm.push_back(c);
        }
        std::sort(norm.begin(), norm.end());
        return PolygonDissection(m, std::move(norm));
    }

    int vertex_count() const { return m_; }
    const std::vector<Chord>& diagonals() const { return diagonals_; }
    bool is_trivial() const { return diagonals_.empty(); }
    bool is_triangulation() const { return static_cast<int>(diagonals_.size()) == m_ - 3; }

    bool has_diagonal(int a, int b) const {
        Chord c{std::min(a, b), std::max(a, b)};
        return std::binary_search(diagonals_.begin(), diagonals_.end(), c);
    }

    friend bool operator==(const PolygonDissection& a, const PolygonDissection& b) {
        return a.m_ == b.m_ && a.diagonals_ == b.diagonals_;
    }

    static std::string chord_text(Chord c) {
        return std::to_string(c.first) + "-" + std::to_string(c.second);
    }

  private:
    PolygonDissection(int m, std::vector<Chord> diagonals)
        : m_(m), diagonals_(std::move(diagonals)) {}

    int m_;
    std::vector<Chord> diagonals_;  // sorted
};

/// Compact one-line form, e.g. "8: 0-4, 1-4"; the trivial triangle is "3:".
inline std::string to_compact(const PolygonDissection& d) {
    std::string out = std::to_string(d.vertex_count()) + ":";
    bool first = true;
    for (const Chord& c : d.diagonals()) {
        out += first ? " " : ", ";
        out += PolygonDissection::chord_text(c);
        first = false;
    }
    return out;
}

/// One tile of a dissection: its vertices in counterclockwise order, rotated
/// so the smallest index comes first.
struct Part {
    std::vector<int> vertices;

    int size() const { return static_cast<int>(vertices.size()); }

    /// Consecutive boundary pair k -> k+1 (cyclic).
    Chord boundary_pair(int k) const {
        int n = size();
        return {vertices[static_cast<std::size_t>(k)],
                vertices[static_cast<std::size_t>((k + 1) % n)]};
    }
};

namespace detail {

inline std::vector<int> canonical_cycle(std::vector<int> v) {
    auto it = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), it, v.end());
    return v;
}

}  // namespace detail

/// Split the polygon along its diagonals and return the tiles.  Sizes always
/// satisfy sum(size - 2) = m - 2.  Parts are sorted by vertex list, so output
/// order is deterministic.
inline std::vector<Part> extract_parts(const PolygonDissection& d) {
    struct Region {
        std::vector<int> verts;   // cyclic, ccw
        std::vector<Chord> diags; // strictly inside this region
    };

    std::vector<int> all(static_cast<std::size_t>(d.vertex_count()));
    for (int i = 0; i < d.vertex_count(); ++i) all[static_cast<std::size_t>(i)] = i;

    std::vector<Part> parts;
    std::vector<Region> stack;
    stack.push_back({std::move(all), d.diagonals()});

    while (!stack.empty()) {
        Region r = std::move(stack.back());
        stack.pop_back();
        if (r.diags.empty()) {
            parts.push_back(Part{detail::canonical_cycle(std::move(r.verts))});
            continue;
        }
        Chord cut = r.diags.back();
        r.diags.pop_back();

        auto pos = [&](int v) {
            return static_cast<std::size_t>(
                std::find(r.verts.begin(), r.verts.end(), v) - r.verts.begin());
        };
        std::size_t pa = pos(cut.first), pb = pos(cut.second);

        auto segment = [&](std::size_t from, std::size_t to) {
            std::vector<int> seg;
            for (std::size_t k = from;; k = (k + 1) % r.verts.size()) {
                seg.push_back(r.verts[k]);
                if (k == to) break;
            }
            return seg;
        };
        Region side1{segment(pa, pb), {}};
        Region side2{segment(pb, pa), {}};

        // Every remaining diagonal lies entirely in one side (non-crossing).
        for (const Chord& c : r.diags) {
            bool in1 = std::find(side1.verts.begin(), side1.verts.end(), c.first) !=
                           side1.verts.end() &&
                       std::find(side1.verts.begin(), side1.verts.end(), c.second) !=
                           side1.verts.end();
            (in1 ? side1 : side2).diags.push_back(c);
        }
        stack.push_back(std::move(side1));
        stack.push_back(std::move(side2));
    }

    std::sort(parts.begin(), parts.end(),
              [](const Part& a, const Part& b) { return a.vertices < b.vertices; });
    return parts;
}

/// Least common multiple of the part sizes: the modulus of the ring in which
/// the dissection's weights live.
inline std::int64_t conductor_for(const PolygonDissection& d) {
    std::int64_t n = 1;  // every part has >= 3 vertices, so the lcm is >= 3
    for (const Part& p : extract_parts(d)) n = lcm64(n, p.size());
    return n;
}

/// First row of the frieze: entries indexed by vertex.
struct WeightSequence {
    std::vector<RingElement> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

/// Weight of vertex v = sum of w_n over the parts containing v, where
/// w_n = 2 cos(pi/n).  Part sizes above 3 must divide the ring modulus.
inline WeightSequence vertex_weights(const PolygonDissection& d, const Ring& ring) {
    auto parts = extract_parts(d);
    std::map<int, RingElement> weight_of_size;
    for (const Part& p : parts) {
        if (p.size() > 3 && ring->conductor % p.size() != 0)
            throw FriezeError(ErrorKind::RingMismatch,
                              "part size " + std::to_string(p.size()) +
                                  " does not divide the ring modulus " +
                                  std::to_string(ring->conductor));
        weight_of_size.try_emplace(p.size(), embed_part_weight(p.size(), ring));
    }
    std::vector<RingElement> acc(static_cast<std::size_t>(d.vertex_count()),
                                 RingElement::zero(ring));
    for (const Part& p : parts) {
        const RingElement& w = weight_of_size.at(p.size());
        for (int v : p.vertices) acc[static_cast<std::size_t>(v)] = acc[static_cast<std::size_t>(v)] + w;
    }
    return WeightSequence{std::move(acc)};
}

/// An ear (a part bordered by exactly one diagonal) together with the
/// dissection that remains after slicing it off.
struct EarCut {
    Part ear;
    int anchor_first;             // endpoint of the ear's diagonal that precedes
                                  // the ear's private vertices (ccw)
    int anchor_second;            // the other endpoint
    PolygonDissection cut;        // remaining polygon, vertices relabeled 0..m'-1
    std::vector<int> cut_to_orig; // cut label -> original vertex
    int position;                 // cut label of anchor_first
};

/// Pick the ear whose canonical vertex list is lexicographically least (that
/// list starts at the part's lowest vertex).  Trivial dissections have no
/// diagonal and therefore no ear.
inline EarCut find_ear_part(const PolygonDissection& d) {
    auto parts = extract_parts(d);
    if (parts.size() < 2)
        throw FriezeError(ErrorKind::NoEar, "trivial dissection has no ear");

    const Part* ear = nullptr;
    int diag_at = -1;
    for (const Part& p : parts) {
        int count = 0, where = -1;
        for (int k = 0; k < p.size(); ++k) {
            Chord bp = p.boundary_pair(k);
            if (d.has_diagonal(bp.first, bp.second)) {
                ++count;
                where = k;
            }
        }
        if (count == 1) {  // parts are sorted, so the first hit wins ties
            ear = &p;
            diag_at = where;
            break;
        }
    }
    // Every non-trivial dissection has at least two ears.
    if (ear == nullptr)
        throw FriezeError(ErrorKind::NoEar, "internal: no ear found");

    // Boundary pair (u, v): v follows u in ccw order, and the ear's private
    // vertices run from v counterclockwise back to u.
    int u = ear->vertices[static_cast<std::size_t>(diag_at)];
    int v = ear->vertices[static_cast<std::size_t>((diag_at + 1) % ear->size())];

    std::vector<bool> is_private(static_cast<std::size_t>(d.vertex_count()), false);
    for (int w : ear->vertices)
        if (w != u && w != v) is_private[static_cast<std::size_t>(w)] = true;

    std::vector<int> survivors;
    std::vector<int> orig_to_cut(static_cast<std::size_t>(d.vertex_count()), -1);
    for (int w = 0; w < d.vertex_count(); ++w)
        if (!is_private[static_cast<std::size_t>(w)]) {
            orig_to_cut[static_cast<std::size_t>(w)] = static_cast<int>(survivors.size());
            survivors.push_back(w);
        }

    std::vector<Chord> remaining;
    Chord cut_chord{std::min(u, v), std::max(u, v)};
    for (const Chord& c : d.diagonals()) {
        if (c == cut_chord) continue;
        remaining.push_back({orig_to_cut[static_cast<std::size_t>(c.first)],
                             orig_to_cut[static_cast<std::size_t>(c.second)]});
    }
    PolygonDissection cut =
        PolygonDissection::validate(static_cast<int>(survivors.size()), remaining);

    return EarCut{*ear, v, u, std::move(cut), std::move(survivors),
                  orig_to_cut[static_cast<std::size_t>(v)]};
}

/// Slicing off an ear of size r and re-inserting it must reproduce the full
/// weight row: the cut row's segment (a_i, a_{i+1}) turns into
/// (a_i + t, t, ..., t, a_{i+1} + t) with r-2 middle copies, t = w_r.
/// Exact check; trivial dissections pass vacuously.
inline bool ear_insertion_consistent(const PolygonDissection& d, const Ring& ring) {
    if (d.is_trivial()) return true;
    EarCut ec = find_ear_part(d);
    const int m = d.vertex_count();
    const int mc = ec.cut.vertex_count();
    RingElement t = embed_part_weight(ec.ear.size(), ring);

    WeightSequence full = vertex_weights(d, ring);
    WeightSequence cut = vertex_weights(ec.cut, ring);

    std::vector<RingElement> expected;
    expected.reserve(static_cast<std::size_t>(m));
    std::vector<int> orig_to_cut(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < mc; ++i)
        orig_to_cut[static_cast<std::size_t>(ec.cut_to_orig[static_cast<std::size_t>(i)])] = i;
    for (int v = 0; v < m; ++v) {
        int cv = orig_to_cut[static_cast<std::size_t>(v)];
        if (cv < 0) {
            expected.push_back(t);  // private ear vertex
        } else if (v == ec.anchor_first || v == ec.anchor_second) {
            expected.push_back(cut.entries[static_cast<std::size_t>(cv)] + t);
        } else {
            expected.push_back(cut.entries[static_cast<std::size_t>(cv)]);
        }
    }
    return expected == full.entries;
}

}  // namespace frieze
