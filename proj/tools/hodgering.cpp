#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodgering/criteria.hpp"
#include "hodgering/jacobian_global.hpp"
#include "hodgering/parser.hpp"

using json = nlohmann::ordered_json;
using namespace hodgering;

namespace {

constexpr const char* kVersion = "hodgering 0.1.0";

// exit codes: 2 parse, 3 non-isolated, 4 not singular,
// 5 incomplete singular list, 6 h0 precondition
enum ExitCode { kOk = 0, kMismatch = 1, kParse = 2, kNonIsolated = 3, kNotSingular = 4,
                kIncomplete = 5, kPrecondH0 = 6 };

std::string read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::string text, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text += line;
        text += ' ';
    }
    return text;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty name in list", 0);
        out.push_back(item.substr(a, b - a + 1));
    }
    if (out.empty()) throw ParseError("empty name list", 0);
    return out;
}

std::vector<Rational> split_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
    return out;
}

// one point per line: chart=<i>; coords=<q1,...,q_{n+1}>
std::vector<std::pair<int, std::vector<Rational>>> read_sing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open singular-points file: " + path, 0);
    std::vector<std::pair<int, std::vector<Rational>>> points;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        int chart = -1;
        std::vector<Rational> coords;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ';')) {
            auto eq = field.find('=');
            if (eq == std::string::npos) throw ParseError("malformed singular-point line", 0);
            std::string key = field.substr(0, eq);
            key.erase(0, key.find_first_not_of(" \t"));
            key.erase(key.find_last_not_of(" \t") + 1);
            std::string value = field.substr(eq + 1);
            if (key == "chart")
                chart = std::stoi(value);
            else if (key == "coords")
                coords = split_rationals(value);
            else
                throw ParseError("unknown singular-point key: " + key, 0);
        }
        if (chart < 0) throw ParseError("singular-point line without chart", 0);
        points.emplace_back(chart, std::move(coords));
    }
    return points;
}

json rational_list(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

json spectrum_json(const Spectrum& sp) {
    json a = json::array();
    for (const auto& [b, d] : sp.mult) a.push_back({{"value", to_string(b)}, {"mult", d}});
    return a;
}

// local invariants of a germ, plus spectrum data when quasi-homogeneous
json local_block(const LocalGerm& g) {
    json block;
    block["mu"] = milnor_number(g);
    block["tau"] = tjurina_number(g);
    auto w = find_weights(g);
    block["quasi_homogeneous"] = static_cast<bool>(w);
    if (w) {
        block["weights"] = rational_list(*w);
        Spectrum sp = spectrum_qh(g);
        block["spectrum"] = spectrum_json(sp);
        HodgeNumbers h = hodge_numbers(sp);
        block["s"] = h.s;
        if (g.dimension() == 2) block["p_g"] = geometric_genus(g);
        ClassVerdict v = class_test(g);
        block["class"] = {{"tau", v.tau},
                          {"s_n_minus_1", v.s_n_minus_1},
                          {"defect", v.defect},
                          {"in_class", v.in_class}};
    }
    return block;
}

void print_table(const json& j, int indent = 0) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            std::cout << pad << key << ":\n";
            print_table(value, indent + 2);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            std::cout << pad << key << ":\n";
            for (const auto& item : value) print_table(item, indent + 2);
        } else {
            std::cout << pad << key << ": " << (value.is_string() ? value.get<std::string>()
                                                                  : value.dump())
                      << "\n";
        }
    }
}

void emit(const json& report, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        print_table(report);
}

int cmd_local(const std::string& poly_file, const std::string& vars_arg,
              const std::string& point_arg, bool as_json) {
    auto vars = split_names(vars_arg);
    Polynomial f = parse_polynomial(read_poly_file(poly_file), vars);
    std::vector<Rational> point(vars.size(), Rational(0));
    if (!point_arg.empty()) {
        point = split_rationals(point_arg);
        if (point.size() != vars.size()) throw ParseError("point dimension mismatch", 0);
    }
    json report;
    report["input"] = {{"polynomial", to_string(f, vars)},
                       {"vars", vars},
                       {"point", rational_list(point)}};
    report["local"] = local_block(LocalGerm::at_point(f, point));
    report["version"] = kVersion;
    emit(report, as_json);
    return kOk;
}

int cmd_spectrum(const std::string& poly_file, const std::string& vars_arg, bool as_json) {
    auto vars = split_names(vars_arg);
    Polynomial f = parse_polynomial(read_poly_file(poly_file), vars);
    LocalGerm g(f);
    auto w = find_weights(g);
    if (!w) throw NotQuasiHomogeneousError("no admissible weight vector");
    Spectrum sp = spectrum_qh(g);
    HodgeNumbers h = hodge_numbers(sp);

    json report;
    report["input"] = {{"polynomial", to_string(f, vars)}, {"vars", vars}};
    report["weights"] = rational_list(*w);
    report["mu"] = sp.mu();
    report["spectrum"] = spectrum_json(sp);
    report["symmetric"] = sp.is_symmetric();
    report["s"] = h.s;
    if (g.dimension() == 2) report["p_g"] = geometric_genus(g);
    auto gen = spectral_roundup(sp, v_degree(Exponents(g.nvars(), 0), *w, 1));
    if (gen) report["generator_degree"] = to_string(*gen);
    report["gaps"] = rational_list(induced_filtration_gaps(g));
    report["version"] = kVersion;
    emit(report, as_json);
    return kOk;
}

int cmd_hypersurface(const std::string& poly_file, const std::string& vars_arg,
                     const std::string& sing_file, int degree, bool as_json) {
    auto vars = split_names(vars_arg);
    Polynomial F = parse_polynomial(read_poly_file(poly_file), vars);
    std::vector<std::pair<int, std::vector<Rational>>> points;
    if (!sing_file.empty()) points = read_sing_file(sing_file);
    HypersurfaceRecord rec = make_hypersurface_record(F, points);

    json report;
    report["input"] = {{"polynomial", to_string(F, vars)},
                       {"vars", vars},
                       {"d", rec.d},
                       {"n", rec.n}};
    json sing = json::array();
    bool all_qh = true;
    std::vector<int> s_vals;
    for (const auto& p : rec.points) {
        json block;
        block["chart"] = p.chart;
        block["coords"] = rational_list(p.coords);
        json loc = local_block(p.germ);
        all_qh = all_qh && loc["quasi_homogeneous"].get<bool>();
        if (all_qh) s_vals.push_back(loc["class"]["s_n_minus_1"].get<int>());
        block.update(loc);
        sing.push_back(std::move(block));
    }
    report["singularities"] = sing;

    json global;
    global["tau_total"] = rec.tau_total();
    global["c_d"] = c_d(rec.d, rec.n).get_str();
    global["h0_log"] = h0_log(F);
    global["complete"] = completeness_check(rec);
    SequenceDims dims = sequence_dims(rec);
    global["dim_R"] = dims.dimR;
    global["h1"] = dims.h1;
    global["h2"] = dims.h2;
    if (degree >= 0) {
        global["k"] = degree;
        global["dim_R_k"] = jacobian_ring_dim(F, degree);
    }
    if (all_qh) {
        EulerReport er = euler_characteristic_report(rec, s_vals);
        global["chi_barlet"] = er.chi_barlet.get_str();
        global["chi_dubois"] = er.chi_dubois.get_str();
    }
    report["global"] = global;
    report["version"] = kVersion;
    emit(report, as_json);
    return kOk;
}

int cmd_criteria(const std::string& catalog_path, bool as_json) {
    auto entries = load_catalog(catalog_path);
    json report;
    json rows = json::array();
    for (const auto& e : entries) {
        LocalGerm g(parse_polynomial(e.equation, e.vars));
        json row;
        row["name"] = e.name;
        row["mu"] = milnor_number(g);
        row["tau"] = tjurina_number(g);
        row["mu_expected"] = e.mu;
        row["tau_expected"] = e.tau;
        row["matches"] = row["mu"] == e.mu && row["tau"] == e.tau;
        if (e.vars.size() == 3) {
            WahlCheck w = wahl_check(e.mu, e.tau, e.resolution);
            row["wahl_bound"] = w.bound;
            row["wahl_holds"] = w.holds;
            row["classifies"] = surface_classification(e.mu, e.tau, e.resolution);
        } else if (e.r > 0) {
            int m = 0;  // multiplicity: lowest total degree
            for (const auto& [mon, c] : g.f.terms()) {
                int d = total_degree(mon);
                if (m == 0 || d < m) m = d;
            }
            auto bg = buchweitz_greuel_check(e.tau, e.mu, e.r, m);
            row["delta"] = bg.delta;
            row["bg_holds"] = bg.holds;
            row["curve_class_equality"] = bg.curve_class_equality;
        }
        rows.push_back(std::move(row));
    }
    report["catalog"] = catalog_path;
    report["entries"] = rows;
    report["version"] = kVersion;
    emit(report, as_json);
    return kOk;
}

// --- regression corpus ------------------------------------------------

struct Regress {
    std::map<std::string, std::string> expect;  // overrides
    int failures = 0;

    void check(const std::string& name, const std::string& actual,
               const std::string& default_expected) {
        auto it = expect.find(name);
        const std::string& expected = it == expect.end() ? default_expected : it->second;
        if (actual == expected) {
            std::cout << "pass  " << name << " = " << actual << "\n";
        } else {
            ++failures;
            std::cout << "FAIL  " << name << ": expected " << expected << ", got " << actual
                      << "\n";
        }
    }
    void check(const std::string& name, int actual, int def) {
        check(name, std::to_string(actual), std::to_string(def));
    }
    void check(const std::string& name, bool actual, bool def) {
        check(name, std::string(actual ? "true" : "false"), std::string(def ? "true" : "false"));
    }
    void check(const std::string& name, const Rational& actual, const std::string& def) {
        check(name, to_string(actual), def);
    }
};

std::map<std::string, std::string> read_expect_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open expectation file: " + path, 0);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("malformed expectation line: " + line, 0);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

Polynomial full_support_deformation(const LocalGerm& g, const WeightVector& w) {
    LocalQuotient q = detail::weighted_quotient(g.jacobian_generators(), w);
    Polynomial def = g.f;
    for (const auto& m : q.standard_monomials()) {
        Rational wd = 0;
        for (int i = 0; i < g.nvars(); ++i) wd += Rational(m[i]) * w[i];
        if (wd > 1) def.add_term(m, Rational(1));
    }
    return def;
}

int cmd_regress(const std::string& expect_file, unsigned long seed) {
    Regress r;
    if (!expect_file.empty()) r.expect = read_expect_file(expect_file);
    const std::vector<std::string> xyz{"x", "y", "z"};

    {  // example 1: x^7+x^4 y^2+x^2 y^4+y^7+z^2
        LocalGerm g(parse_polynomial("x^7+x^4*y^2+x^2*y^4+y^7+z^2", xyz));
        int mu = milnor_number(g), tau = tjurina_number(g);
        r.check("ex1.mu", mu, 27);
        r.check("ex1.tau", tau, 23);
        WahlCheck w = wahl_check(mu, tau, {3, 0, 2});
        r.check("ex1.wahl_bound", w.bound, 23);
        r.check("ex1.wahl_equality", tau == w.bound, true);
    }
    {  // example 2: x^3+y^10+z^19 and a generic mu-constant deformation
        LocalGerm g(parse_polynomial("x^3+y^10+z^19", xyz));
        r.check("ex2.mu", milnor_number(g), 324);
        r.check("ex2.p_g", geometric_genus(g), 39);
        auto w = *find_weights(g);
        ClassVerdict v = class_test(LocalGerm(full_support_deformation(g, w)), w);
        r.check("ex2.deformed_tau", v.tau, 246);
        r.check("ex2.deformed_defect", v.defect, 0);
    }
    {  // example 3: x^5+y^11+z^2 with the full V-degree ladder
        LocalGerm g(parse_polynomial("x^5+y^11+z^2", xyz));
        auto w = *find_weights(g);
        r.check("ex3.weights", to_string(w[0]) + "," + to_string(w[1]) + "," + to_string(w[2]),
                "1/5,1/11,1/2");
        r.check("ex3.mu", milnor_number(g), 40);
        r.check("ex3.p_g", geometric_genus(g), 4);
        Spectrum sp = spectrum_qh(g);
        Rational raw = v_degree(Exponents(3, 0), w, 1);
        r.check("ex3.generator_raw", raw, "87/110");
        Rational gen = *spectral_roundup(sp, raw);
        r.check("ex3.generator", gen, "89/110");
        auto induced = [&](const Exponents& m) {
            Rational wd = 0;
            for (int i = 0; i < 3; ++i) wd += Rational(m[i]) * w[i];
            return *spectral_roundup(sp, gen + wd);
        };
        r.check("ex3.induced_x", induced({1, 0, 0}), "111/110");
        r.check("ex3.induced_y", induced({0, 1, 0}), "101/110");
        r.check("ex3.induced_y2", induced({0, 2, 0}), "111/110");
        auto gaps = induced_filtration_gaps(g);
        std::string gs;
        for (const auto& q : gaps) gs += (gs.empty() ? "" : ",") + to_string(q);
        r.check("ex3.gaps", gs, "91/110,93/110");
        std::cerr << "note: the published gap list prints 91/111; the V-degree arithmetic "
                     "gives 91/110 and the corpus pins that value\n";
        TauMinResult tm = tau_min_search(g, 32, seed);
        r.check("ex3.tau_min", tm.tau_min, 34);
        r.check("ex3.wahl_bound", wahl_check(40, 34, {4, 0, 0}).bound, 32);
        NemethiCheck nc = nemethi_check(g);
        r.check("ex3.nemethi_holds", nc.holds, true);
    }
    {  // classification rows
        r.check("class.A1", surface_classification(1, 1, {0, 0, 0}), true);
        LocalGerm t237(parse_polynomial("x^2+y^3+z^7+x*y*z", xyz));
        int mu = milnor_number(t237), tau = tjurina_number(t237);
        r.check("class.T237.mu", mu, 11);
        r.check("class.T237.tau", tau, 10);
        r.check("class.T237", surface_classification(mu, tau, {1, 0, 1}), true);
        r.check("class.exceptional_unimodal", surface_classification(12, 11, {1, 0, 0}), false);
    }
    {  // Zariski family
        for (int a = 1; a <= 3; ++a) {
            ZariskiCheck z = zariski_family_check(a);
            r.check("zariski.a" + std::to_string(a) + ".consistent", z.consistent, true);
        }
        LocalGerm g2(parse_polynomial("x^5+y^6+z^2", xyz));
        r.check("zariski.a2.tau_min", tau_min_search(g2, 32, seed).tau_min, 18);
    }

    if (r.failures) {
        std::cout << r.failures << " mismatch(es)\n";
        return kMismatch;
    }
    std::cout << "all checks passed\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of isolated hypersurface singularities"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");
    unsigned long seed = 0;
    if (const char* env = std::getenv("HODGERING_SEED")) seed = std::strtoul(env, nullptr, 10);
    app.add_option("--seed", seed, "seed for randomized procedures");

    std::string poly_file, vars_arg, point_arg, sing_file, catalog_path, expect_file;
    int degree = -1;

    auto* local = app.add_subcommand("local", "invariants of a germ at a point");
    local->add_option("poly", poly_file, "polynomial file")->required();
    local->add_option("--vars", vars_arg, "comma-separated variable names")->required();
    local->add_option("--point", point_arg, "comma-separated rational coordinates");

    auto* spec = app.add_subcommand("spectrum", "spectrum of a quasi-homogeneous germ");
    spec->add_option("poly", poly_file, "polynomial file")->required();
    spec->add_option("--vars", vars_arg, "comma-separated variable names")->required();

    auto* hyp = app.add_subcommand("hypersurface", "global invariants of a projective hypersurface");
    hyp->add_option("poly", poly_file, "homogeneous polynomial file")->required();
    hyp->add_option("--vars", vars_arg, "comma-separated variable names")->required();
    hyp->add_option("--sing-file", sing_file, "singular points file");
    hyp->add_option("--degree", degree, "also report dim R_k for this k");

    auto* crit = app.add_subcommand("criteria", "classification tests over a catalog");
    crit->add_option("catalog", catalog_path, "catalog file")->required();

    auto* reg = app.add_subcommand("regress", "run the built-in regression corpus");
    reg->add_option("--expect", expect_file, "expectation overrides (name=value lines)");

    // global flags (--json, --seed) may follow the subcommand
    for (auto* sub : {local, spec, hyp, crit, reg}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*local) return cmd_local(poly_file, vars_arg, point_arg, as_json);
        if (*spec) return cmd_spectrum(poly_file, vars_arg, as_json);
        if (*hyp) return cmd_hypersurface(poly_file, vars_arg, sing_file, degree, as_json);
        if (*crit) return cmd_criteria(catalog_path, as_json);
        if (*reg) return cmd_regress(expect_file, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const NonIsolatedError& e) {
        std::cerr << "non-isolated singularity: " << e.what() << "\n";
        return kNonIsolated;
    } catch (const NotSingularError& e) {
        std::cerr << "not singular: " << e.what() << "\n";
        return kNotSingular;
    } catch (const IncompleteSingularListError& e) {
        std::cerr << "incomplete singular list: " << e.what() << "\n";
        return kIncomplete;
    } catch (const PrecondH0Error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kPrecondH0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
