// qrm: multiplier polynomials of quadratic rational maps over imaginary
// quadratic integer rings.

#include "qrm/classify.hpp"
#include "qrm/figure.hpp"
#include "qrm/format.hpp"
#include "qrm/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace qrm;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { Ok = 0, Diff = 1, Invalid = 2, Degenerate = 3, IoError = 4 };

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    json params = json::object();
    json results = json::array();
    json summary;
    std::vector<std::string> text;
    int exit_code = Ok;
};

struct Options {
    std::string format = "text";
    bool timing = true;
};

json coordinates(const Poly& p)
{
    json c = json::array();
    for (int i = p.degree(); i >= 0; --i) {
        const QuadRat& v = p.coeff(i);
        c.push_back(json{{"x", v.num().x().get_str()}, {"y", v.num().y().get_str()}, {"den", v.den().get_str()}});
    }
    return c;
}

Discriminant read_disc(long d)
{
    if (d <= 0) {
        throw std::invalid_argument("D must be a positive squarefree integer, got " + std::to_string(d));
    }
    return Discriminant(d);
}

json factor_list(const Factorization& f)
{
    json out = json::array();
    for (const auto& [g, m] : f.factors) {
        out.push_back(json{{"factor", to_string(g)}, {"multiplicity", m}});
    }
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + v[i];
    }
    return out;
}

std::string triple_text(const std::array<QuadInt, 3>& t)
{
    return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

json triple_json(const std::array<QuadInt, 3>& t)
{
    return json::array({to_string(t[0]), to_string(t[1]), to_string(t[2])});
}

// ---------------------------------------------------------------------------

Report cmd_multpoly(const std::string& map, int n)
{
    Report r{"multpoly"};
    const QuadMapSpec spec = parse_map(map);
    r.params = {{"map", to_string(spec)}, {"n", n}};
    const MultiplierPoly m = multiplier_poly(spec, n);
    json row{{"n", n},
             {"degree", m.poly.degree()},
             {"linear_form", to_string(m.used_linear_form)},
             {"radical", to_string(m.poly)},
             {"coefficients", coordinates(m.poly)}};
    std::string line = to_string(m.poly);
    if (m.poly.degree() >= 2 && m.poly.degree() % 2 == 0) {
        try {
            const Poly root = poly_nth_root(m.poly, 2);
            row["square_of"] = to_string(root);
            line += " = (" + to_string(root) + ")^2";
        } catch (const NotAPerfectPower&) {
        }
    }
    r.results.push_back(row);
    r.text.push_back(line);
    return r;
}

Report cmd_dynatomic(const std::string& map, int n)
{
    Report r{"dynatomic"};
    const QuadMapSpec spec = parse_map(map);
    r.params = {{"map", to_string(spec)}, {"n", n}};
    const Form phi = dynatomic(lift_of(spec), n);
    r.results.push_back(json{{"n", n}, {"degree", phi.degree()}, {"form", to_string(phi)}});
    r.text.push_back(to_string(phi));
    return r;
}

Report cmd_factor(const std::string& poly, const std::string& map, int n, long d_in)
{
    Report r{"factor"};
    const Discriminant d = read_disc(d_in);
    Poly p;
    if (!poly.empty()) {
        p = parse_poly(poly);
        r.params = {{"poly", to_string(p)}, {"D", d.value()}};
    } else if (!map.empty()) {
        const QuadMapSpec spec = parse_map(map);
        p = multiplier_poly(spec, n).poly;
        r.params = {{"map", to_string(spec)}, {"n", n}, {"D", d.value()}};
    } else {
        throw std::invalid_argument("factor needs --poly or --map");
    }
    if (p.degree() < 1 || !p.is_monic()) {
        throw std::invalid_argument("factor: polynomial must be monic of positive degree");
    }
    const Factorization f = splitting_factorization(p, d);
    r.results.push_back(json{{"poly", to_string(p)},
                             {"factorization", to_string(f)},
                             {"factors", factor_list(f)},
                             {"splits", f.splits}});
    r.text.push_back(to_string(f));
    r.text.push_back(std::string(f.splits ? "splits" : "does not split") + " over R_" + std::to_string(d.value()));
    return r;
}

Report cmd_triples(long d_in)
{
    Report r{"triples"};
    const Discriminant d = read_disc(d_in);
    r.params = {{"D", d.value()}};
    const auto ts = enumerate_unit_fraction_triples(d);
    int k = 0;
    for (const auto& t : ts) {
        r.results.push_back(json{{"index", ++k}, {"mu", triple_json(t.mu)}, {"lambda", triple_json(t.lambda)}});
        r.text.push_back(std::to_string(k) + ". mu = " + triple_text(t.mu) + "  lambda = " + triple_text(t.lambda));
    }
    r.summary = {{"count", ts.size()}};
    r.text.push_back("count " + std::to_string(ts.size()));
    return r;
}

void add_verdict(json& row, const Verdict& v)
{
    row["verdict"] = survivor_label(v);
    if (v.outcome == Outcome::Excluded) {
        row["period"] = v.period;
        row["witness"] = to_string(v.witness);
    }
}

std::string verdict_text(const Verdict& v)
{
    if (v.outcome == Outcome::Excluded) {
        return "excluded at n=" + std::to_string(v.period) + ": " + to_string(v.witness);
    }
    return survivor_label(v);
}

Report cmd_classify(long d_in, int n_max)
{
    Report r{"classify"};
    const Discriminant d = read_disc(d_in);
    if (n_max < 3) {
        throw std::invalid_argument("--max-n must be at least 3");
    }
    r.params = {{"D", d.value()}, {"max_n", n_max}};
    const ClassificationReport rep = full_classification(d, n_max);
    r.text.push_back("nondegenerate");
    for (const auto& t : rep.nondegenerate) {
        json row{{"branch", "nondegenerate"}, {"candidate", triple_json(t.triple.lambda)}};
        add_verdict(row, t.verdict);
        r.results.push_back(row);
        r.text.push_back("  " + triple_text(t.triple.lambda) + "  " + verdict_text(t.verdict));
    }
    r.text.push_back("superattracting  z^2 + c");
    for (const auto& p : rep.superattracting) {
        json row{{"branch", "superattracting"}, {"candidate", "fc(" + p.param + ")"}};
        add_verdict(row, p.verdict);
        r.results.push_back(row);
        r.text.push_back("  c = " + p.param + "  " + verdict_text(p.verdict));
    }
    r.text.push_back("multiple fixed point  z(z + a)/(z + 1)");
    for (const auto& p : rep.multiple_fixed) {
        const std::string cand = p.param == "h" ? "h" : "gab(" + p.param + ",1)";
        json row{{"branch", "multiple_fixed"}, {"candidate", cand}};
        add_verdict(row, p.verdict);
        r.results.push_back(row);
        r.text.push_back("  " + cand + "  " + verdict_text(p.verdict));
    }
    r.summary = {{"survivors", rep.survivors}, {"survivor_count", rep.survivors.size()}};
    r.text.push_back("survivors: " + join(rep.survivors, ", "));
    return r;
}

std::vector<TableRow> load_rows(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot read " + path);
    }
    json data;
    try {
        data = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    std::vector<TableRow> rows;
    for (const auto& j : data) {
        const std::string kind = j.at("kind").get<std::string>();
        RowKind k;
        if (kind == "triple") {
            k = RowKind::Triple;
        } else if (kind == "quadratic") {
            k = RowKind::Quadratic;
        } else if (kind == "multiple_fixed") {
            k = RowKind::MultipleFixed;
        } else {
            throw std::invalid_argument(path + ": unknown row kind \"" + kind + "\"");
        }
        rows.push_back(TableRow{canonical_table_id(j.at("table").get<std::string>()), j.at("index").get<int>(), k,
                                j.at("D").get<int>(), j.at("n").get<int>(), j.at("param").get<std::string>(),
                                j.at("expected").get<std::string>()});
    }
    return rows;
}

Report cmd_verify_tables(const std::string& table, const std::string& data)
{
    Report r{"verify-tables"};
    r.params = {{"table", table.empty() ? "all" : canonical_table_id(table)}};
    std::vector<RowCheck> checks;
    if (!data.empty()) {
        r.params["data"] = data;
        std::vector<TableRow> rows;
        for (auto& row : load_rows(data)) {
            if (table.empty() || row.table == canonical_table_id(table)) {
                rows.push_back(std::move(row));
            }
        }
        checks = verify_rows(rows);
    } else {
        checks = verify_tables(table);
    }
    int bad = 0;
    for (const auto& c : checks) {
        json row{{"id", c.row.id()},      {"D", c.row.D},          {"n", c.row.n},
                 {"param", c.row.param},  {"expected", c.row.expected}, {"computed", c.computed},
                 {"ok", c.ok}};
        if (!c.error.empty()) {
            row["error"] = c.error;
        }
        r.results.push_back(row);
        if (!c.ok) {
            ++bad;
            r.text.push_back("MISMATCH " + c.row.id() + "\n  expected " + c.row.expected + "\n  computed " +
                             (c.error.empty() ? c.computed : "error: " + c.error));
        }
    }
    r.summary = {{"rows", checks.size()}, {"mismatches", bad}};
    r.text.push_back(std::to_string(checks.size()) + " rows verified, " + std::to_string(bad) + " mismatches");
    r.exit_code = bad ? Diff : Ok;
    return r;
}

Report cmd_figure(long d_in, const std::string& out)
{
    Report r{"figure"};
    const Discriminant d = read_disc(d_in);
    r.params = {{"D", d.value()}, {"out", out}};
    const FigureInfo fig = make_figure(d);
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << fig.svg) || !f.flush()) {
        throw IoFailure("cannot write " + out);
    }
    json hl = json::array();
    for (const auto& t : fig.highlighted) {
        hl.push_back(triple_json(t.mu));
        r.text.push_back("highlighted mu = " + triple_text(t.mu));
    }
    r.results.push_back(json{{"out", out}, {"triple_count", fig.triple_count}, {"highlighted", hl}});
    r.text.push_back("wrote " + out + " (" + std::to_string(fig.highlighted.size()) + " of " +
                     std::to_string(fig.triple_count) + " triples)");
    return r;
}

// ---------------------------------------------------------------------------

std::string csv_cell(const json& v)
{
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_array()) {
        std::vector<std::string> parts;
        for (const auto& e : v) {
            parts.push_back(e.is_string() ? e.get<std::string>() : e.dump());
        }
        s = join(parts, ";");
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char ch : s) {
            q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        }
        return q + "\"";
    }
    return s;
}

void emit(const Report& r, const Options& opt, double ms)
{
    if (opt.format == "json") {
        json j{{"schema_version", kSchemaVersion}, {"command", r.command}, {"params", r.params}, {"results", r.results}};
        if (!r.summary.is_null()) {
            j["summary"] = r.summary;
        }
        if (opt.timing) {
            j["timing_ms"] = ms;
        }
        std::cout << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::vector<std::string> cols;
        for (const auto& row : r.results) {
            for (const auto& [k, v] : row.items()) {
                if (std::find(cols.begin(), cols.end(), k) == cols.end()) {
                    cols.push_back(k);
                }
            }
        }
        std::cout << join(cols, ",") << "\n";
        for (const auto& row : r.results) {
            std::vector<std::string> cells;
            for (const auto& c : cols) {
                cells.push_back(row.contains(c) ? csv_cell(row.at(c)) : "");
            }
            std::cout << join(cells, ",") << "\n";
        }
    } else {
        for (const auto& line : r.text) {
            std::cout << line << "\n";
        }
        if (opt.timing) {
            std::ostringstream t;
            t.precision(1);
            t << std::fixed << ms;
            std::cerr << "time " << t.str() << " ms\n";
        }
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multiplier polynomials of quadratic rational maps over imaginary quadratic integer rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "Omit timing (byte-stable output)");

    std::string map, poly, table, data, out = "figure.svg";
    int n = 1, max_n = 5;
    long d = 1;

    auto* multpoly = app.add_subcommand("multpoly", "Multiplier polynomial M_n of a map");
    multpoly->add_option("--map", map, "gab(a,b) | h | fc(c) | sigma(s1,s2)")->required();
    multpoly->add_option("--n", n, "Period")->required()->check(CLI::Range(1, 8));

    auto* dyn = app.add_subcommand("dynatomic", "Dynatomic form Phi_n of a map");
    dyn->add_option("--map", map, "gab(a,b) | h | fc(c) | sigma(s1,s2)")->required();
    dyn->add_option("--n", n, "Period")->required()->check(CLI::Range(1, 8));

    auto* factor = app.add_subcommand("factor", "Factor a monic polynomial, or M_n of a map, over R_D");
    factor->add_option("--poly", poly, "Monic polynomial in λ");
    factor->add_option("--map", map, "Map whose M_n is factored");
    factor->add_option("--n", n, "Period for --map")->check(CLI::Range(1, 8));
    factor->add_option("--D", d, "Squarefree D > 0")->required();

    auto* triples = app.add_subcommand("triples", "Unit-fraction triples in R_D");
    triples->add_option("--D", d, "Squarefree D > 0")->required();

    auto* classify = app.add_subcommand("classify", "Three-branch classification over R_D");
    classify->add_option("--D", d, "Squarefree D > 0")->required();
    classify->add_option("--max-n", max_n, "Largest period checked")->capture_default_str()->check(CLI::Range(3, 7));

    auto* verify = app.add_subcommand("verify-tables", "Recompute the reference factorization tables");
    verify->add_option("--table", table, "cases3 | cases4 | cases5 | super | simple");
    verify->add_option("--data", data, "JSON file of rows to verify instead of the built-in tables");

    auto* figure = app.add_subcommand("figure", "SVG of lattice points and triples");
    figure->add_option("--D", d, "Squarefree D > 0")->required();
    figure->add_option("--out", out, "Output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Invalid;
    }
    opt.timing = !no_timing;

    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
        if (*multpoly) {
            r = cmd_multpoly(map, n);
        } else if (*dyn) {
            r = cmd_dynatomic(map, n);
        } else if (*factor) {
            r = cmd_factor(poly, map, n, d);
        } else if (*triples) {
            r = cmd_triples(d);
        } else if (*classify) {
            r = cmd_classify(d, max_n);
        } else if (*verify) {
            r = cmd_verify_tables(table, data);
        } else {
            r = cmd_figure(d, out);
        }
    } catch (const DegenerateMap& e) {
        std::cerr << "degenerate map: " << e.what() << "\n";
        return Degenerate;
    } catch (const IoFailure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return IoError;
    } catch (const SurvivorNotRecognized& e) {
        std::cerr << "classification failed: " << e.what() << "\n";
        return Diff;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(r, opt, ms);
    return r.exit_code;
}
