#pragma once

#include <cstdint>
#include <list>
#include <string>
#include <vector>

#include "frieze/dissection.hpp"
#include "frieze/error.hpp"

namespace frieze {

/// First row of an integer frieze: the triangle count at each vertex of a
/// triangulated polygon.
struct QuidditySequence {
    std::vector<std::int64_t> entries;

    int size() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const QuidditySequence& a, const QuidditySequence& b) {
        return a.entries == b.entries;
    }
};

/// Triangle count per vertex.  Rejects dissections with a part larger than a
/// triangle.  Agrees entrywise with vertex_weights in the degree-1 ring.
inline QuidditySequence cc_weights(const PolygonDissection& d) {
    if (!d.is_triangulation())
        throw FriezeError(ErrorKind::NotATriangulation,
                          "quiddity is defined for triangulations only (" +
                              std::to_string(d.diagonals().size()) + " diagonals on a " +
                              std::to_string(d.vertex_count()) + "-gon)");
    std::vector<std::int64_t> count(static_cast<std::size_t>(d.vertex_count()), 0);
    for (const Part& p : extract_parts(d))
        for (int v : p.vertices) ++count[static_cast<std::size_t>(v)];
    return QuidditySequence{std::move(count)};
}

/// Invert cc_weights by ear reduction: repeatedly find the lowest-indexed
/// entry equal to 1, record the triangle it spans, delete the vertex and
/// decrement both neighbors.  Any impossible step (no 1 anywhere, or a
/// neighbor dropping below 1) means the input is not a quiddity sequence.
inline PolygonDissection reconstruct(const QuidditySequence& q) {
    const int m = q.size();
    if (m < 3)
        throw FriezeError(ErrorKind::NotAQuiddity, "quiddity needs at least 3 entries");
    for (std::int64_t v : q.entries)
        if (v < 1) throw FriezeError(ErrorKind::NotAQuiddity, "entries must be positive");

    struct Node {
        int label;
        std::int64_t value;
    };
    std::list<Node> live;
    for (int i = 0; i < m; ++i) live.push_back({i, q.entries[static_cast<std::size_t>(i)]});

    std::vector<Chord> diagonals;
    while (live.size() > 3) {
        auto ear = live.end();
        for (auto it = live.begin(); it != live.end(); ++it)
            if (it->value == 1 && (ear == live.end() || it->label < ear->label)) ear = it;
        if (ear == live.end())
            throw FriezeError(ErrorKind::NotAQuiddity, "no ear: no entry equals 1");

        auto prev = ear == live.begin() ? std::prev(live.end()) : std::prev(ear);
        auto next = std::next(ear) == live.end() ? live.begin() : std::next(ear);
        if (prev->value <= 1 || next->value <= 1)
            throw FriezeError(ErrorKind::NotAQuiddity,
                              "ear at vertex " + std::to_string(ear->label) +
                                  " would push a neighbor below 1");
        --prev->value;
        --next->value;
        diagonals.push_back({std::min(prev->label, next->label),
                             std::max(prev->label, next->label)});
        live.erase(ear);
    }
    for (const Node& n : live)
        if (n.value != 1)
            throw FriezeError(ErrorKind::NotAQuiddity, "final triangle is not (1, 1, 1)");

    return PolygonDissection::validate(m, diagonals);
}

/// reconstruct(cc_weights(d)) must reproduce the quiddity exactly (the
/// reconstruction works in the input labeling, so no rotation slack).
inline bool round_trip_check(const PolygonDissection& d) {
    QuidditySequence q = cc_weights(d);
    PolygonDissection back = reconstruct(q);
    return cc_weights(back) == q;
}

}  // namespace frieze
