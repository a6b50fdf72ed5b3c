#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frieze/dissection.hpp"
#include "frieze/error.hpp"
#include "frieze/pattern.hpp"
#include "frieze/render.hpp"

namespace frieze {

/// Syntax or validation failure in an input description, carrying the byte
/// offset of the offending token inside the original text.
class ParseError : public FriezeError {
  public:
    ParseError(ErrorKind kind, const std::string& msg, std::size_t offset)
        : FriezeError(kind, msg + " (at position " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// A dissection description as it appears in input: polygon size, diagonal
/// list in the author's order, optional display name.
struct DissectionDocument {
    int m = 0;
    std::vector<Chord> diagonals;
    std::optional<std::string> name;
};

namespace detail {

inline void skip_spaces(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
        ++pos;
}

inline int parse_int(const std::string& s, std::size_t& pos) {
    skip_spaces(s, pos);
    std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        v = v * 10 + (s[pos] - '0');
        if (v > std::numeric_limits<int>::max())
            throw ParseError(ErrorKind::SyntaxError, "number too large", start);
        ++pos;
    }
    if (pos == start) throw ParseError(ErrorKind::SyntaxError, "expected a number", pos);
    return static_cast<int>(v);
}

/// "m: a-b, c-d, ..." — returns the document plus the starting offset of each
/// diagonal token so validation errors can point back into the text.
inline DissectionDocument parse_compact(const std::string& text, std::vector<std::size_t>& spans) {
    DissectionDocument doc;
    std::size_t pos = 0;
    doc.m = parse_int(text, pos);
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != ':')
        throw ParseError(ErrorKind::SyntaxError, "expected ':' after the vertex count", pos);
    ++pos;
    skip_spaces(text, pos);
    while (pos < text.size()) {
        std::size_t tok = pos;
        int a = parse_int(text, pos);
        skip_spaces(text, pos);
        if (pos >= text.size() || text[pos] != '-')
            throw ParseError(ErrorKind::SyntaxError, "expected '-' inside a diagonal", pos);
        ++pos;
        int b = parse_int(text, pos);
        doc.diagonals.emplace_back(a, b);
        spans.push_back(tok);
        skip_spaces(text, pos);
        if (pos >= text.size()) break;
        if (text[pos] != ',')
            throw ParseError(ErrorKind::SyntaxError, "expected ',' between diagonals", pos);
        ++pos;
        skip_spaces(text, pos);
        if (pos >= text.size())
            throw ParseError(ErrorKind::SyntaxError, "trailing ',' without a diagonal", pos);
    }
    return doc;
}

inline DissectionDocument parse_json_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(ErrorKind::SyntaxError, e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("diagonals"))
        throw ParseError(ErrorKind::SyntaxError, "expected {\"m\": ..., \"diagonals\": [...]}", 0);
    DissectionDocument doc;
    if (!j["m"].is_number_integer())
        throw ParseError(ErrorKind::SyntaxError, "\"m\" must be an integer", 0);
    doc.m = j["m"].get<int>();
    if (!j["diagonals"].is_array())
        throw ParseError(ErrorKind::SyntaxError, "\"diagonals\" must be an array of pairs", 0);
    for (const auto& pair : j["diagonals"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw ParseError(ErrorKind::SyntaxError, "each diagonal must be a pair of integers", 0);
        doc.diagonals.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw ParseError(ErrorKind::SyntaxError, "\"name\" must be a string", 0);
        doc.name = j["name"].get<std::string>();
    }
    return doc;
}

}  // namespace detail

struct ParsedInput {
    PolygonDissection dissection;
    std::optional<std::string> name;
};

/// Accepts either the compact line "m: a-b, c-d, ..." or a JSON object
/// {"m": ..., "diagonals": [[a,b], ...], "name"?: ...}; the first non-space
/// character decides.  Validation failures are rethrown as ParseError with
/// the offending diagonal's position in the text (or 0 for JSON input).
inline ParsedInput parse_input(const std::string& text) {
    std::size_t probe = 0;
    detail::skip_spaces(text, probe);
    if (probe >= text.size())
        throw ParseError(ErrorKind::SyntaxError, "empty input", probe);

    std::vector<std::size_t> spans;
    DissectionDocument doc;
    if (text[probe] == '{') {
        doc = detail::parse_json_document(text);
    } else {
        doc = detail::parse_compact(text, spans);
    }
    try {
        return {PolygonDissection::validate(doc.m, doc.diagonals), doc.name};
    } catch (const DissectionError& e) {
        std::size_t where = 0;
        if (e.input_index() >= 0 && static_cast<std::size_t>(e.input_index()) < spans.size())
            where = spans[static_cast<std::size_t>(e.input_index())];
        throw ParseError(e.kind(), e.what(), where);
    }
}

inline std::string serialize_compact(const PolygonDissection& d) { return to_compact(d); }

inline nlohmann::json document_json(const PolygonDissection& d,
                                    const std::optional<std::string>& name = std::nullopt) {
    nlohmann::json j;
    j["m"] = d.vertex_count();
    j["diagonals"] = nlohmann::json::array();
    for (Chord c : d.diagonals()) j["diagonals"].push_back({c.first, c.second});
    if (name) j["name"] = *name;
    return j;
}

enum class TableFormat { Ascii, Json, Latex };

struct RenderOptions {
    TableFormat format = TableFormat::Ascii;
    int numeric_digits = 0;   // > 0 appends "~<value>" to every entry
    bool unicode_sqrt2 = false;
};

/// Distinct part sizes of the dissection, ascending — the generator list a
/// table of its frieze needs.
inline std::vector<std::int64_t> part_sizes(const PolygonDissection& d) {
    std::set<std::int64_t> sizes;
    for (const Part& p : extract_parts(d)) sizes.insert(p.size());
    return {sizes.begin(), sizes.end()};
}

namespace detail {

inline std::string cell_text(const RingElement& e, const std::vector<GeneratorName>& gens,
                             int numeric_digits) {
    std::string s = render(e, gens);
    if (numeric_digits > 0) s += "~" + decimal(e, numeric_digits);
    return s;
}

/// Staggered plain-text table: rows 0..w+2, two periods, the cell of column
/// j in row i left-aligned at half-column 2j + i.  Layout is frozen by the
/// golden files under tests/.
inline std::string ascii_table(const FriezePattern& f, const std::vector<GeneratorName>& gens,
                               int numeric_digits) {
    const int m = f.column_count();
    const int w = f.width();
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(w + 3));
    std::size_t maxlen = 1;
    for (int i = 0; i <= w + 2; ++i) {
        for (int j = 0; j < 2 * m; ++j) {
            std::string s = cell_text(f.entry(i, j % m), gens, numeric_digits);
            maxlen = std::max(maxlen, s.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(s));
        }
    }
    const std::size_t half = (maxlen + 3) / 2;
    std::string out;
    for (int i = 0; i <= w + 2; ++i) {
        std::string line;
        for (int j = 0; j < 2 * m; ++j) {
            std::size_t at = static_cast<std::size_t>(2 * j + i) * half;
            if (line.size() < at) line.resize(at, ' ');
            line += cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

/// Staggered tabular in the style of the source tables: zero borders on both
/// sides, $\cdots$ margins, entries in math mode.
inline std::string latex_table(const FriezePattern& f, const std::vector<GeneratorName>& gens,
                               int numeric_digits) {
    const int m = f.column_count();
    const int w = f.width();
    const int half_columns = 2 * (2 * m - 1) + w + 3;  // max x over all rows, plus one
    std::string out = "\\begin{tabular}{c";
    for (int x = 0; x < half_columns; ++x) out += 'c';
    out += "c}\n";

    auto emit_row = [&](int i, int x0) {
        std::vector<std::string> slot(static_cast<std::size_t>(half_columns));
        for (int j = 0; j < 2 * m; ++j) {
            const RingElement& e = i < 0 ? f.entry(w + 2, j % m) : f.entry(i, j % m);
            std::string s = cell_text(e, gens, numeric_digits);
            if (s != "0" && s != "1") s = "$" + s + "$";
            slot[static_cast<std::size_t>(x0 + 2 * j)] = std::move(s);
        }
        out += "$\\cdots$";
        for (const std::string& s : slot) out += "&" + s;
        out += "&$\\cdots$\\\\\n";
    };

    emit_row(-1, 1);  // leading zero border, offset like a row above row 0
    for (int i = 0; i <= w + 2; ++i) emit_row(i, i);
    out += "\\end{tabular}\n";
    return out;
}

inline nlohmann::json table_json(const FriezePattern& f, const std::vector<GeneratorName>& gens,
                                 int numeric_digits) {
    const int m = f.column_count();
    const int w = f.width();
    nlohmann::json j;
    j["m"] = m;
    j["width"] = w;
    j["conductor"] = f.ring()->conductor;
    j["generators"] = nlohmann::json::array();
    for (const GeneratorName& g : gens)
        j["generators"].push_back({{"name", g.name}, {"part_size", g.part_size}});
    j["rows"] = nlohmann::json::array();
    auto emit_row = [&](int i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < m; ++jj) {
            const RingElement& e = f.entry(i, jj);
            nlohmann::json cell;
            cell["text"] = render(e, gens);
            cell["coeffs"] = e.coeffs();
            if (numeric_digits > 0) cell["value"] = decimal(e, numeric_digits);
            row.push_back(std::move(cell));
        }
        j["rows"].push_back(std::move(row));
    };
    emit_row(w + 2);  // leading zero border
    for (int i = 0; i <= w + 2; ++i) emit_row(i);
    return j;
}

}  // namespace detail

/// The JSON table object (also what render_frieze emits under Json).
inline nlohmann::json frieze_json(const FriezePattern& f, const std::vector<GeneratorName>& gens,
                                  int numeric_digits = 0) {
    return detail::table_json(f, gens, numeric_digits);
}

inline std::string render_frieze(const FriezePattern& f, const std::vector<GeneratorName>& gens,
                                 const RenderOptions& opt = {}) {
    switch (opt.format) {
        case TableFormat::Ascii:
            return detail::ascii_table(f, gens, opt.numeric_digits);
        case TableFormat::Latex:
            return detail::latex_table(f, gens, opt.numeric_digits);
        case TableFormat::Json:
            return detail::table_json(f, gens, opt.numeric_digits).dump(2) + "\n";
    }
    throw FriezeError(ErrorKind::PreconditionViolation, "unknown table format");
}

}  // namespace frieze
