#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <frieze/frieze.hpp>

namespace {

using namespace frieze;

int fail(const std::exception& e, bool as_json) {
    const auto* fe = dynamic_cast<const FriezeError*>(&e);
    if (as_json) {
        nlohmann::json j;
        j["error"]["kind"] = fe ? to_string(fe->kind()) : "Internal";
        j["error"]["message"] = e.what();
        if (const auto* pe = dynamic_cast<const ParseError*>(&e))
            j["error"]["position"] = pe->offset();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 1;
}

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

TableFormat format_from(const std::string& name) {
    if (name == "json") return TableFormat::Json;
    if (name == "latex") return TableFormat::Latex;
    return TableFormat::Ascii;
}

int cmd_frieze(const std::string& raw, const std::string& format, int numeric, bool check,
               bool unicode) {
    ParsedInput in = parse_input(raw == "-" ? read_stdin() : raw);
    FriezePattern f = build_from_dissection(in.dissection);
    if (check) {
        if (auto bad = find_unimodular_violation(f))
            throw FriezeError(ErrorKind::SpecMismatch,
                              "unimodular rule fails at row " + std::to_string(bad->i) +
                                  ", column " + std::to_string(bad->k));
        if (!verify_positive(f))
            throw FriezeError(ErrorKind::SpecMismatch, "pattern has a non-positive interior entry");
    }
    RenderOptions opt;
    opt.format = format_from(format);
    opt.numeric_digits = numeric;
    opt.unicode_sqrt2 = unicode;
    auto gens = default_generators(part_sizes(in.dissection), unicode);
    std::cout << render_frieze(f, gens, opt);
    return 0;
}

int cmd_census(int max_m, int cap, bool as_json) {
    CensusOptions opt;
    opt.cap = cap;
    auto reports = run_census(max_m, opt);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.failures.empty();
    if (as_json)
        std::cout << report_json(reports).dump(2) << '\n';
    else
        std::cout << report_text(reports);
    return ok ? 0 : 1;
}

int cmd_identities(int max_n) {
    bool all_ok = true;
    for (int n = 3; n <= max_n; ++n) {
        Ring ring = make_ring(n);
        RingElement c = RingElement::generator(ring);
        bool ok = eval_in_ring(q_recurrence(n - 2), c) == RingElement::one(ring) &&
                  eval_in_ring(q_recurrence(n - 1), c) == RingElement::zero(ring);
        all_ok = all_ok && ok;
        std::cout << "n=" << n << " Q_{n-2}(w_n)=1, Q_{n-1}(w_n)=0: " << (ok ? "ok" : "FAIL")
                  << '\n';
    }
    bool closed_ok = true;
    for (int n = 0; n <= 64; ++n) closed_ok = closed_ok && q_closed_form(n) == q_recurrence(n);
    std::cout << "closed form matches recurrence for n=0..64: " << (closed_ok ? "ok" : "FAIL")
              << '\n';
    return all_ok && closed_ok ? 0 : 1;
}

int cmd_altroot(int n, int k) {
    AltRootReport rep = alt_root_entries(n, k);
    auto gens = default_generators({n});
    std::cout << render_frieze(rep.pattern, gens, {});
    std::cout << "interior signs:\n";
    for (const auto& row : rep.interior_signs) {
        for (Sign s : row)
            std::cout << (s == Sign::Negative ? '-' : s == Sign::Zero ? '0' : '+') << ' ';
        std::cout << '\n';
    }
    std::cout << "closure: holds\nnegative entries: " << (rep.has_negative ? "yes" : "no") << '\n';
    return 0;
}

int cmd_quiddity(const std::string& list) {
    QuidditySequence q;
    std::istringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            q.entries.push_back(std::stoll(tok, &used));
            while (used < tok.size() && tok[used] == ' ') ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw FriezeError(ErrorKind::SyntaxError, "bad quiddity entry '" + tok + "'");
        }
    }
    PolygonDissection d = reconstruct(q);
    FriezePattern f = build_from_dissection(d);
    std::cout << "triangulation: " << to_compact(d) << '\n';
    std::cout << render_frieze(f, {}, {});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frieze patterns from polygon dissections"};
    app.name("frieze");

    bool json_errors = false;
    app.add_flag("--json", json_errors, "emit errors (and census reports) as JSON");

    std::string input;
    std::string format = "ascii";
    int numeric = 0;
    bool check = false, unicode = false;
    app.add_option("input", input,
                   "dissection: compact \"m: a-b, c-d\", a JSON object, or - for stdin");
    app.add_option("--format", format, "table format (default ascii)")
        ->check(CLI::IsMember({"ascii", "json", "latex"}));
    app.add_option("--numeric", numeric, "append ~value with this many decimal digits")
        ->check(CLI::Range(1, 1000));
    app.add_flag("--check", check, "also verify the diamond rule and positivity");
    app.add_flag("--unicode", unicode, "write the square-part weight as √2");

    auto* cen = app.add_subcommand("census", "enumerate dissections and check every property");
    int max_m = 0;
    int cap = kDefaultCensusCap;
    bool cen_json = false;
    cen->add_option("--max-m", max_m, "largest polygon to include")->required();
    cen->add_option("--cap", cap, "guard against runaway enumeration (default 9)");
    cen->add_flag("--json", cen_json, "emit the report as JSON");
    cen->fallthrough();

    auto* idn = app.add_subcommand("identities", "check the weight-polynomial identities");
    int max_n = 30;
    idn->add_option("--max-n", max_n, "check part sizes 3..k")->required();
    idn->fallthrough();

    auto* alt = app.add_subcommand("altroot", "build a constant frieze on an alternate root");
    int alt_n = 0, alt_k = 0;
    alt->add_option("n", alt_n, "polygon size")->required();
    alt->add_option("k", alt_k, "odd root index coprime to n, 3 <= k < n")->required();
    alt->fallthrough();

    auto* quid = app.add_subcommand("quiddity", "reconstruct a triangulation from triangle counts");
    std::string qlist;
    quid->add_option("list", qlist, "comma-separated counts, e.g. 1,3,2,1,3,2")->required();
    quid->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cen->parsed()) return cmd_census(max_m, cap, cen_json || json_errors);
        if (idn->parsed()) return cmd_identities(max_n);
        if (alt->parsed()) return cmd_altroot(alt_n, alt_k);
        if (quid->parsed()) return cmd_quiddity(qlist);
        if (input.empty()) {
            std::cerr << app.help();
            return 1;
        }
        return cmd_frieze(input, format, numeric, check, unicode);
    } catch (const std::exception& e) {
        return fail(e, json_errors);
    }
}
