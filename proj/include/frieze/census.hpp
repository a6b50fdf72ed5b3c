#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "frieze/dissection.hpp"
#include "frieze/error.hpp"
#include "frieze/pattern.hpp"
#include "frieze/quiddity.hpp"
#include "frieze/ring.hpp"

namespace frieze {

inline constexpr int kDefaultCensusCap = 9;

/// Visit every dissection of the m-gon (the empty one included) in
/// lexicographic order of the sorted diagonal list.  DFS over candidate
/// diagonals in increasing order; each added diagonal only needs a
/// non-crossing check against the ones already chosen.
inline void for_each_dissection(int m, const std::function<void(const PolygonDissection&)>& visit,
                                int cap = kDefaultCensusCap) {
    if (m < 3)
        throw FriezeError(ErrorKind::PreconditionViolation, "polygon needs at least 3 vertices");
    if (m > cap)
        throw FriezeError(ErrorKind::CapExceeded,
                          "enumeration for m = " + std::to_string(m) + " exceeds the cap " +
                              std::to_string(cap));
    std::vector<Chord> candidates;
    for (int a = 0; a < m; ++a)
        for (int b = a + 2; b < m; ++b)
            if (!(a == 0 && b == m - 1)) candidates.push_back({a, b});

    std::vector<Chord> chosen;
    // Self-recursive lambda: emit the current set, then try extensions.
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        visit(PolygonDissection::validate(m, chosen));
        for (std::size_t k = from; k < candidates.size(); ++k) {
            bool ok = true;
            for (const Chord& c : chosen)
                if (chords_cross(c, candidates[k])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(candidates[k]);
            walk(k + 1);
            chosen.pop_back();
        }
    };
    walk(0);
}

inline std::vector<PolygonDissection> enumerate_dissections(int m, int cap = kDefaultCensusCap) {
    std::vector<PolygonDissection> out;
    for_each_dissection(m, [&](const PolygonDissection& d) { out.push_back(d); }, cap);
    return out;
}

inline std::vector<PolygonDissection> enumerate_triangulations(int m, int cap = kDefaultCensusCap) {
    std::vector<PolygonDissection> out;
    for_each_dissection(
        m, [&](const PolygonDissection& d) { if (d.is_triangulation()) out.push_back(d); }, cap);
    return out;
}

struct CensusFailure {
    std::string dissection;  // compact form
    std::string property;
};

struct CensusReport {
    int m = 0;
    std::int64_t dissection_count = 0;
    std::int64_t triangulation_count = 0;
    std::map<int, std::int64_t> observed_periods;  // pattern period -> count
    std::vector<CensusFailure> failures;
};

struct CensusOptions {
    int cap = kDefaultCensusCap;
    /// Test hook: applied to the weight row before the pattern is built, so
    /// the harness can prove that a corrupted row is actually caught.
    std::function<void(const PolygonDissection&, std::vector<RingElement>&)> corrupt_row;
};

/// Build the frieze of every dissection with 3 <= m <= m_max and check the
/// whole battery of properties.  Failures are recorded, not thrown.
inline std::vector<CensusReport> run_census(int m_max, const CensusOptions& options = {}) {
    std::vector<CensusReport> reports;
    for (int m = 3; m <= m_max; ++m) {
        CensusReport rep;
        rep.m = m;
        auto fail = [&](const PolygonDissection& d, const std::string& property) {
            rep.failures.push_back({to_compact(d), property});
        };

        for_each_dissection(m, [&](const PolygonDissection& d) {
            ++rep.dissection_count;
            if (d.is_triangulation()) ++rep.triangulation_count;

            Ring ring = make_ring(conductor_for(d));
            std::vector<RingElement> row = vertex_weights(d, ring).entries;
            if (options.corrupt_row) options.corrupt_row(d, row);

            // Weight rows are never uniformly >= 2: some entry must sit
            // strictly below 2, or no pattern could close.
            bool below2 = false;
            for (const RingElement& a : row)
                if (sign(a - 2) == Sign::Negative) {
                    below2 = true;
                    break;
                }
            if (!below2) fail(d, "first-row-below-2");

            try {
                FriezePattern f = generate(row);
                if (!verify_unimodular(f)) fail(d, "unimodular");
                if (!verify_positive(f)) fail(d, "positive");
                int p = pattern_period(f);
                ++rep.observed_periods[p];
                if (m % p != 0) fail(d, "period-divides-m");
                if (d.is_triangulation()) {
                    bool integral = true;
                    for (int i = 0; integral && i <= f.width() + 2; ++i)
                        for (const RingElement& e : f.row(i))
                            if (!e.is_integer()) {
                                integral = false;
                                break;
                            }
                    if (!integral) fail(d, "integer-entries");
                    if (!round_trip_check(d)) fail(d, "quiddity-round-trip");
                }
            } catch (const ClosureFailure&) {
                fail(d, "closure");
            }

            if (!ear_insertion_consistent(d, ring)) fail(d, "ear-insertion");
        }, options.cap);

        reports.push_back(std::move(rep));
    }
    return reports;
}

inline std::string report_text(const std::vector<CensusReport>& reports) {
    std::string out;
    for (const CensusReport& r : reports) {
        out += "m=" + std::to_string(r.m) + ": dissections=" + std::to_string(r.dissection_count) +
               " triangulations=" + std::to_string(r.triangulation_count) + " periods={";
        bool first = true;
        for (auto& [p, n] : r.observed_periods) {
            if (!first) out += ", ";
            out += std::to_string(p) + ":" + std::to_string(n);
            first = false;
        }
        out += "} failures=" + std::to_string(r.failures.size()) + "\n";
        for (const CensusFailure& f : r.failures)
            out += "  FAIL " + f.dissection + " [" + f.property + "]\n";
    }
    return out;
}

inline nlohmann::json report_json(const std::vector<CensusReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    bool ok = true;
    for (const CensusReport& r : reports) {
        nlohmann::json periods = nlohmann::json::object();
        for (auto& [p, n] : r.observed_periods) periods[std::to_string(p)] = n;
        nlohmann::json failures = nlohmann::json::array();
        for (const CensusFailure& f : r.failures)
            failures.push_back({{"dissection", f.dissection}, {"property", f.property}});
        if (!r.failures.empty()) ok = false;
        arr.push_back({{"m", r.m},
                       {"dissections", r.dissection_count},
                       {"triangulations", r.triangulation_count},
                       {"observed_periods", periods},
                       {"failures", failures}});
    }
    return {{"reports", arr}, {"ok", ok}};
}

}  // namespace frieze
