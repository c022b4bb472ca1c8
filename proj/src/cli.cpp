#include "lefschetz/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefschetz/errors.hpp"
#include "lefschetz/invariants.hpp"
#include "lefschetz/map_document.hpp"
#include "lefschetz/torus.hpp"

namespace lefschetz {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultMax = 24;

// --- known maps -------------------------------------------------------------

Matrix ex2(long a) { return Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-a, 0, 0, 0}, {0, -a, 0, 0}}; }
Matrix ex4(long a) { return Matrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {a, 0, 0, 0}}; }

std::vector<std::string> known_example_warnings(const MapSpecDocument& doc) {
    std::vector<std::string> out;
    auto spec = to_toral_spec(doc);
    if (!spec || spec->dims != std::vector<std::size_t>{2, 2}) return out;
    const Matrix h = spec->assembled_h1();
    if (h == Matrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}})
        out.push_back("matches fixture ex1; the cycle formula for L subtracts 1 once per summand in the cycle, "
                      "not once per cycle");
    if (h == Matrix{{0, 0, 1, 0}, {-1, -1, -1, -1}, {0, 0, 0, 1}, {0, 1, 0, 0}})
        out.push_back("matches fixture ex3; this H_1 action is not induced by any self-map of T^2 v T^2");
    if (h == Matrix{{0, 1, 1, 0}, {-1, 0, -1, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}})
        out.push_back("matches fixture ex5; l(f^4) = -4");
    const Integer a = -h(2, 0).get_num();
    if (a != 0 && a.fits_slong_p() && h == ex2(a.get_si()))
        out.push_back("matches fixture ex2 with a = " + a.get_str() +
                      "; L(f^(4k)) = 1 - 4a^(2k) + 2a^(4k), L(f^(4k+2)) = 1 + 4a^(2k+1) + 2a^(4k+2) and "
                      "zeta = (1 + a t^2)^2 / ((1 - t)(1 - a^2 t^2))");
    const Integer b = h(3, 0).get_num();
    if (b.fits_slong_p() && h == ex4(b.get_si()))
        out.push_back("matches fixture ex4 with a = " + b.get_str() +
                      "; not induced by any self-map of T^2 v T^2 (also for a = 0)");
    return out;
}

// --- formatting -------------------------------------------------------------

json str(const Integer& z) { return z.get_str(); }
json str(std::size_t n) { return std::to_string(n); }

template <class Seq>
json int_list(const Seq& seq) {
    json a = json::array();
    for (const auto& v : seq) a.push_back(str(v));
    return a;
}

json poly_json(const Polynomial& p) { return int_list(p.coefficients()); }

std::string structure_words(const StructureReport& r) {
    std::vector<std::string> w;
    if (r.is_diagonal) w.push_back("diagonal");
    w.push_back(r.is_permutative ? "permutative" : "not permutative");
    if (r.is_cyclic) w.push_back("cyclic");
    if (r.is_permutative) w.push_back(r.is_squared_by_blocks ? "squared-by-blocks" : "not squared-by-blocks");
    std::string s;
    for (const auto& x : w) s += (s.empty() ? "" : " ") + x;
    return s;
}

std::string cycles_text(const StructureReport& r) {
    if (!r.cycles) return "-";
    std::string s;
    for (const auto& c : *r.cycles) {
        s += "(";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i] + 1);
        s += ")";
    }
    return s;
}

json structure_json(const StructureReport& r) {
    json j = {{"diagonal", r.is_diagonal},
              {"permutative", r.is_permutative},
              {"cyclic", r.is_cyclic},
              {"squared_by_blocks", r.is_squared_by_blocks}};
    if (r.permutation) {
        json p = json::array();
        for (auto v : *r.permutation) p.push_back(str(v + 1));
        j["permutation"] = p;
    }
    if (r.cycles) {
        json cs = json::array();
        for (const auto& c : *r.cycles) {
            json cj = json::array();
            for (auto v : c) cj.push_back(str(v + 1));
            cs.push_back(cj);
        }
        j["cycles"] = cs;
    }
    return j;
}

json obstruction_json(const ObstructionReport& r) {
    json j = {{"passes", r.passes}};
    if (r.witness) {
        const auto& w = *r.witness;
        j["witness"] = {{"first", {{"summand", str(w.first.summand + 1)}, {"index", str(w.first.index + 1)}}},
                        {"second", {{"summand", str(w.second.summand + 1)}, {"index", str(w.second.index + 1)}}},
                        {"summand", str(w.summand + 1)},
                        {"generators", {str(w.generators.first + 1), str(w.generators.second + 1)}},
                        {"coefficient", to_string(w.coefficient)},
                        {"text", describe(w)}};
    }
    return j;
}

// --- shared loading ---------------------------------------------------------

struct Loaded {
    MapSpecDocument doc;
    std::optional<WedgeMapHomology> wedge;
    std::optional<ObstructionReport> obstruction;
    std::vector<std::string> warnings;
};

Loaded load(const std::string& path) {
    Loaded l{read_document(path), std::nullopt, std::nullopt, {}};
    l.wedge = to_wedge(l.doc);
    if (auto spec = to_toral_spec(l.doc)) l.obstruction = check_h1_realizability(spec->assembled_h1(), spec->dims);
    l.warnings = known_example_warnings(l.doc);
    return l;
}

// --- commands ---------------------------------------------------------------

int cmd_validate(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
    const Loaded l = load(path);
    const StructureReport st = classify(*l.wedge);
    const bool blocked = l.obstruction && !l.obstruction->passes;
    if (as_json) {
        json j = {{"format", "wedge-map-result/1"},
                  {"input", {{"digest", digest(l.doc)}, {"summands", str(l.doc.summands())}}},
                  {"structure", structure_json(st)},
                  {"warnings", l.warnings}};
        if (l.obstruction) j["obstruction"] = obstruction_json(*l.obstruction);
        out << j.dump(2) << "\n";
    } else {
        out << "summands: " << l.doc.summands() << "\n";
        out << "structure: " << structure_words(st) << "\n";
        out << "cycles: " << cycles_text(st) << "\n";
        if (!l.obstruction)
            out << "realizability: not checked (generic summands or graded coordinates)\n";
        else if (l.obstruction->passes)
            out << "realizability: pass (necessary condition only)\n";
        else
            out << "realizability: FAIL: " << describe(*l.obstruction->witness) << "\n";
        for (const auto& w : l.warnings) err << "warning: " << w << "\n";
    }
    return blocked ? kExitObstruction : kExitOk;
}

struct InvariantRequest {
    std::size_t lefschetz = 0, dold = 0, aper = 0, all = 0;
    bool zeta = false;
    bool as_json = false;
};

int cmd_invariants(const std::string& path, InvariantRequest req, std::ostream& out, std::ostream& err) {
    if (!req.lefschetz && !req.dold && !req.aper && !req.all && !req.zeta) req.all = kDefaultMax;
    if (req.all) req.lefschetz = req.dold = req.aper = req.all, req.zeta = true;
    const std::size_t m_max = std::max({req.lefschetz, req.dold, req.aper, kDefaultMax});

    const Loaded l = load(path);
    const StructureReport st = classify(*l.wedge);
    if (l.obstruction && !l.obstruction->passes) {
        if (req.as_json) {
            json j = {{"format", "wedge-map-result/1"},
                      {"input", {{"digest", digest(l.doc)}, {"summands", str(l.doc.summands())}}},
                      {"structure", structure_json(st)},
                      {"obstruction", obstruction_json(*l.obstruction)},
                      {"warnings", l.warnings}};
            out << j.dump(2) << "\n";
        } else {
            out << "realizability: FAIL: " << describe(*l.obstruction->witness) << "\n";
        }
        err << "error: H_1 action is not realizable; no invariants computed\n";
        return kExitObstruction;
    }

    const InvariantTables t = compute_invariants(*l.wedge, m_max);
    auto head = [](const auto& seq, std::size_t n) {
        return std::vector<Integer>(seq.values.begin(), seq.values.begin() + static_cast<long>(n));
    };
    AperSet aper;
    aper.m_max = req.aper;
    for (auto m : t.aper.members)
        if (m <= req.aper) aper.members.push_back(m);

    if (req.as_json) {
        json j = {{"format", "wedge-map-result/1"},
                  {"input", {{"digest", digest(l.doc)}, {"summands", str(l.doc.summands())}}},
                  {"structure", structure_json(st)},
                  {"cross_checked", t.cross_checked},
                  {"warnings", l.warnings}};
        if (l.obstruction) j["obstruction"] = obstruction_json(*l.obstruction);
        if (req.lefschetz) j["lefschetz"] = int_list(head(t.lefschetz, req.lefschetz));
        if (req.dold) j["dold"] = int_list(head(t.dold, req.dold));
        if (req.zeta)
            j["zeta"] = {{"numerator", poly_json(t.zeta.numerator())}, {"denominator", poly_json(t.zeta.denominator())}};
        if (req.aper) j["aper"] = {{"m_max", str(aper.m_max)}, {"members", int_list(aper.members)}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "structure: " << structure_words(st) << "  cycles: " << cycles_text(st) << "\n";
    const std::size_t rows = std::max(req.lefschetz, req.dold);
    if (rows) {
        out << std::setw(5) << "m";
        if (req.lefschetz) out << std::setw(24) << "L(f^m)";
        if (req.dold) out << std::setw(24) << "l(f^m)";
        out << "\n";
        for (std::size_t m = 1; m <= rows; ++m) {
            out << std::setw(5) << m;
            if (req.lefschetz) out << std::setw(24) << (m <= req.lefschetz ? t.lefschetz.at(m).get_str() : "");
            if (req.dold) out << std::setw(24) << (m <= req.dold ? t.dold.at(m).get_str() : "");
            out << "\n";
        }
    }
    if (req.zeta) out << "zeta = " << t.zeta << "\n";
    if (req.aper) {
        out << "APer (m <= " << req.aper << ") = {";
        for (std::size_t i = 0; i < aper.members.size(); ++i) out << (i ? ", " : "") << aper.members[i];
        out << "}\n";
    }
    out << "cross-checked against reduction formulas: " << (t.cross_checked ? "yes" : "no (not permutative squared-by-blocks)")
        << "\n";
    for (const auto& w : l.warnings) err << "warning: " << w << "\n";
    return kExitOk;
}

int cmd_scan_gc(std::size_t n, const std::vector<std::string>& c_text, std::size_t s, std::size_t m_max, bool as_json,
                std::ostream& out, std::ostream& err) {
    std::vector<Integer> cs;
    try {
        for (const auto& c : c_text) cs.push_back(parse_integer(c));
    } catch (const Error& e) {
        err << "error: --c: " << e.what() << "\n";
        return kExitInput;
    }
    const GcScanReport r = gc_scan(n, cs, s, m_max);
    if (as_json) {
        json single = json::array();
        for (const auto& [c, d] : r.single) single.push_back({{"c", str(c)}, {"dold", int_list(d.values)}});
        json j = {{"format", "gc-scan/1"},
                  {"n", str(r.n)},
                  {"s", str(r.s)},
                  {"m_max", str(r.m_max)},
                  {"c", int_list(r.c_values)},
                  {"preconditions_hold", r.preconditions_hold},
                  {"dold", int_list(r.wedge_dold.values)},
                  {"aper", int_list(r.wedge_aper.members)},
                  {"single", single},
                  {"certified", int_list(r.certified)},
                  {"assertion_failures", r.assertion_failures},
                  {"observations", r.observations}};
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << n << ", s = " << s << ", c = ";
        for (std::size_t i = 0; i < r.c_values.size(); ++i) out << (i ? "," : "") << r.c_values[i];
        out << ", preconditions " << (r.preconditions_hold ? "hold" : "fail") << "\n";
        out << std::setw(5) << "m" << std::setw(28) << "l(f^m)";
        for (const auto& [c, d] : r.single) out << std::setw(28) << ("l(g_" + c.get_str() + "^m)");
        out << "\n";
        for (std::size_t m = 1; m <= m_max; ++m) {
            out << std::setw(5) << m << std::setw(28) << r.wedge_dold.at(m).get_str();
            for (const auto& [c, d] : r.single) out << std::setw(28) << d.at(m).get_str();
            out << "\n";
        }
        for (const auto& [c, d] : r.single) {
            const auto negative = std::count_if(d.values.begin(), d.values.end(), [](const Integer& v) { return v < 0; });
            out << "c = " << c << ": " << negative << " of " << m_max << " values negative\n";
        }
        out << "APer (m <= " << m_max << "): " << r.wedge_aper.members.size() << " members\n";
        for (const auto& o : r.observations) out << "note: " << o << "\n";
    }
    for (const auto& f : r.assertion_failures) err << "assertion failed: " << f << "\n";
    return r.assertion_failures.empty() ? kExitOk : kExitInternal;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InternalCheckFailure& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NotAPerfectPower& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Periodic-point invariants of self-maps of wedge sums", "lefschetz");
    app.require_subcommand(1);

    std::string file;
    bool json_out = false;
    auto* validate = app.add_subcommand("validate", "Schema, dimension and realizability checks");
    validate->add_option("file", file, "Map document")->required();
    validate->add_flag("--json", json_out, "Emit a JSON result document");

    InvariantRequest req;
    auto* inv = app.add_subcommand("invariants", "L, l, zeta and APer tables");
    inv->add_option("file", file, "Map document")->required();
    inv->add_option("--lefschetz", req.lefschetz, "L(f^m) for m <= M")->check(CLI::PositiveNumber);
    inv->add_option("--dold", req.dold, "l(f^m) for m <= M")->check(CLI::PositiveNumber);
    inv->add_flag("--zeta", req.zeta, "Zeta function");
    inv->add_option("--aper", req.aper, "Algebraic periods up to M")->check(CLI::PositiveNumber);
    inv->add_option("--all", req.all, "Everything up to M")->check(CLI::PositiveNumber);
    inv->add_flag("--json", req.as_json, "Emit a JSON result document");

    std::size_t n = 0, s = 1, m_max = kDefaultMax;
    std::vector<std::string> c_values;
    auto* scan = app.add_subcommand("scan-gc", "Dold coefficients for coordinates with H_1 char poly t^n - c");
    scan->add_option("--n", n, "Torus dimension")->required()->check(CLI::PositiveNumber);
    scan->add_option("--c", c_values, "c, one value or one per summand")->required()->delimiter(',');
    scan->add_option("--s", s, "Number of tori (cycle length)")->check(CLI::PositiveNumber);
    scan->add_option("--max", m_max, "Largest iterate")->check(CLI::PositiveNumber);
    scan->add_flag("--json", json_out, "Emit a JSON result document");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (validate->parsed()) return guarded([&] { return cmd_validate(file, json_out, out, err); }, err);
    if (inv->parsed()) return guarded([&] { return cmd_invariants(file, req, out, err); }, err);
    return guarded([&] { return cmd_scan_gc(n, c_values, s, m_max, json_out, out, err); }, err);
}

}  // namespace lefschetz
