// Acceptance gate: one line per criterion, "criterion N: PASS/FAIL".
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hodgering/criteria.hpp"
#include "hodgering/jacobian_global.hpp"
#include "hodgering/parser.hpp"
#include "oracles.hpp"

using namespace hodgering;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> wxyz{"w", "x", "y", "z"};

LocalGerm germ(const std::string& text, const std::vector<std::string>& vars) {
    return LocalGerm(parse_polynomial(text, vars));
}

struct Criterion {
    int number;
    double budget_seconds;
    std::function<bool(std::ostringstream&)> run;
};

bool check(std::ostringstream& log, const std::string& what, bool ok) {
    if (!ok) log << " [" << what << " FAILED]";
    return ok;
}

// ---- criterion bodies --------------------------------------------------

bool criterion1(std::ostringstream& log) {
    LocalGerm g = germ("x^7+x^4*y^2+x^2*y^4+y^7+z^2", xyz);
    int mu = milnor_number(g), tau = tjurina_number(g);
    WahlCheck w = wahl_check(mu, tau, {3, 0, 2});
    log << "mu=" << mu << " tau=" << tau << " wahl_bound=" << w.bound;
    return check(log, "mu=27", mu == 27) && check(log, "tau=23", tau == 23) &&
           check(log, "wahl equality", w.bound == 23 && tau == w.bound && w.holds);
}

bool criterion2(std::ostringstream& log) {
    LocalGerm g = germ("x^3+y^10+z^19", xyz);
    auto t0 = std::chrono::steady_clock::now();
    int mu = milnor_number(g);
    int pg = geometric_genus(g);
    double quick = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    TauMinResult r = tau_min_search(g, 32, 0);
    log << "mu=" << mu << " p_g=" << pg << " tau_min=" << r.tau_min
        << " samples=" << r.samples << " mu+pg_time=" << quick << "s";
    return check(log, "mu=324", mu == 324) && check(log, "p_g=39", pg == 39) &&
           check(log, "mu/p_g under 5s", quick < 5.0) &&
           check(log, "tau_min=246", r.tau_min == 246) &&
           check(log, ">=32 samples", r.samples >= 32);
}

bool criterion3(std::ostringstream& log) {
    LocalGerm g = germ("x^5+y^11+z^2", xyz);
    int mu = milnor_number(g);
    int pg = geometric_genus(g);
    TauMinResult r = tau_min_search(g, 32, 0);
    WeightVector w = *find_weights(g);
    Spectrum sp = spectrum_qh(g);
    Rational raw = v_degree(Exponents(3, 0), w, 1);
    Rational gen = *spectral_roundup(sp, raw);
    Rational ind_x = *spectral_roundup(sp, gen + w[0]);
    Rational ind_y = *spectral_roundup(sp, gen + w[1]);
    Rational ind_y2 = *spectral_roundup(sp, gen + 2 * w[1]);
    auto gaps = induced_filtration_gaps(g);
    log << "mu=" << mu << " p_g=" << pg << " tau_min=" << r.tau_min << " ladder=" << raw
        << "->" << gen << " x->" << ind_x << " y->" << ind_y << " y2->" << ind_y2;
    return check(log, "mu=40", mu == 40) && check(log, "p_g=4", pg == 4) &&
           check(log, "tau_min=34", r.tau_min == 34) &&
           check(log, "87/110", raw == Rational(87) / 110) &&
           check(log, "generator 89/110", gen == Rational(89) / 110) &&
           check(log, "x 111/110", ind_x == Rational(111) / 110) &&
           check(log, "y 101/110", ind_y == Rational(101) / 110) &&
           check(log, "y2 111/110", ind_y2 == Rational(111) / 110) &&
           check(log, "gaps",
                 gaps == std::vector<Rational>{Rational(91) / 110, Rational(93) / 110});
}

bool criterion4(std::ostringstream& log) {
    bool ok = true;
    for (int a = 1; a <= 3; ++a) {
        ZariskiCheck z = zariski_family_check(a);
        log << " a" << a << ":mu=" << z.mu << ",pg=" << z.p_g;
        ok = check(log, "consistency a=" + std::to_string(a),
                   z.consistent && z.mu - 2 * z.p_g == 3 * a * (a + 1)) &&
             ok;
    }
    TauMinResult r1 = tau_min_search(germ("x^3+y^4+z^2", xyz), 32, 0);
    TauMinResult r2 = tau_min_search(germ("x^5+y^6+z^2", xyz), 32, 0);
    log << " tau_min(a1)=" << r1.tau_min << " tau_min(a2)=" << r2.tau_min;
    return ok && check(log, "a1 attains 6", r1.tau_min == 6) &&
           check(log, "a2 attains 18", r2.tau_min == 18);
}

bool criterion5(std::ostringstream& log) {
    bool ok = check(log, "c_d(4,2)=19", c_d(4, 2) == 19) &&
              check(log, "c_d(3,2)=6", c_d(3, 2) == 6);
    for (int d : {3, 4, 5}) {
        for (int n : {1, 2}) {
            const int nvars = n + 2;
            Polynomial F(nvars);
            for (int i = 0; i < nvars; ++i) F += Polynomial::variable(nvars, i, d);
            auto series = hilbert_series_smooth(d, n);
            for (int k = 0; k < static_cast<int>(series.size()) + 2; ++k) {
                Integer expected = k < static_cast<int>(series.size()) ? series[k] : Integer(0);
                ok = check(log,
                           "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                               " k=" + std::to_string(k),
                           Integer(jacobian_ring_dim(F, k)) == expected) &&
                     ok;
            }
            ok = check(log, "dimR=c_d d=" + std::to_string(d) + " n=" + std::to_string(n),
                       Integer(jacobian_ring_dim(F, 2 * d - n - 2)) == c_d(d, n)) &&
                 ok;
        }
    }
    log << "fermat sweep d=3,4,5 n=1,2";
    return ok;
}

std::vector<HypersurfaceRecord> corpus_hypersurfaces() {
    std::vector<HypersurfaceRecord> out;
    Polynomial fermat4(4);
    for (int i = 0; i < 4; ++i) fermat4 += Polynomial::variable(4, i, 4);
    out.push_back(make_hypersurface_record(fermat4, {}));
    Polynomial fermat3(4);
    for (int i = 0; i < 4; ++i) fermat3 += Polynomial::variable(4, i, 3);
    out.push_back(make_hypersurface_record(fermat3, {}));
    std::vector<Rational> origin{Rational(0), Rational(0), Rational(0)};
    out.push_back(make_hypersurface_record(
        parse_polynomial("z^2*w^2+z^2*x^2+z^2*y^2+w^4+x^4+y^4", wxyz), {{3, origin}}));
    out.push_back(make_hypersurface_record(
        parse_polynomial("z*w^2+z*x^2+z*y^2+w^3+x^3+y^3", wxyz), {{3, origin}}));
    return out;
}

bool criterion6(std::ostringstream& log) {
    auto corpus = corpus_hypersurfaces();
    SequenceDims node = sequence_dims(corpus[2]);
    log << "node quartic h1=" << node.h1 << " h2=" << node.h2;
    bool ok = check(log, "h1=18", node.h1 == 18) && check(log, "h2=0", node.h2 == 0);
    for (size_t i = 0; i < corpus.size(); ++i) {
        SequenceDims d = sequence_dims(corpus[i]);
        ok = check(log, "exactness #" + std::to_string(i),
                   d.h1 - d.h2 == d.dimR - d.tau_total) &&
             ok;
    }
    return ok;
}

bool criterion7(std::ostringstream& log) {
    auto corpus = corpus_hypersurfaces();
    bool ok = true;
    for (size_t i = 0; i < corpus.size(); ++i)
        ok = check(log, "complete #" + std::to_string(i), completeness_check(corpus[i])) && ok;
    // deliberately omit the node
    HypersurfaceRecord broken = make_hypersurface_record(
        parse_polynomial("z^2*w^2+z^2*x^2+z^2*y^2+w^4+x^4+y^4", wxyz), {});
    ok = check(log, "omission flips false", !completeness_check(broken)) && ok;
    log << "corpus size " << corpus.size() << "+1 omission";
    return ok;
}

bool criterion8(std::ostringstream& log) {
    bool ok = true;

    // spectrum properties over the quasi-homogeneous corpus
    const std::vector<std::pair<std::string, const std::vector<std::string>*>> qh_corpus{
        {"x^2+y^3", &xy},      {"x^3+y^5", &xy},      {"x^4+x*y^3", &xy},
        {"x^2+y^2+z^2", &xyz}, {"x^3+y^4+z^2", &xyz}, {"x^5+y^11+z^2", &xyz},
        {"x^3+y^10+z^19", &xyz}};
    for (const auto& [text, vars] : qh_corpus) {
        LocalGerm g = germ(text, *vars);
        Spectrum sp = spectrum_qh(g);
        ok = check(log, text + " |sp|=mu", sp.mu() == milnor_number(g)) &&
             check(log, text + " symmetry", sp.is_symmetric()) &&
             check(log, text + " sum s_k", hodge_numbers(sp).total() == sp.mu()) && ok;
    }

    // Thom-Sebastiani suspension consistency
    Spectrum z2 = spectrum_qh(LocalGerm(Polynomial::variable(1, 0, 2)));
    for (const char* curve : {"x^2+y^3", "x^3+y^5", "x^4+x*y^3"}) {
        Spectrum direct = spectrum_qh(germ(std::string(curve) + "+z^2", xyz));
        ok = check(log, std::string("suspension ") + curve,
                   thom_sebastiani(spectrum_qh(germ(curve, xy)), z2) == direct) &&
             ok;
    }

    // mu/tau invariance under random linear coordinate changes
    std::mt19937_64 rng(0);
    const std::vector<std::pair<std::string, const std::vector<std::string>*>> germs{
        {"x^2+y^3", &xy}, {"x^3+y^3", &xy}, {"x^3+y^4+z^2", &xyz},
        {"x^2+y^3+z^7+x*y*z", &xyz}};
    for (const auto& [text, vars] : germs) {
        LocalGerm g = germ(text, *vars);
        int mu = milnor_number(g), tau = tjurina_number(g);
        for (int change = 0; change < 5; ++change) {
            auto a = oracles::random_invertible(g.nvars(), rng);
            LocalGerm h(oracles::linear_change(g.f, a));
            ok = check(log, text + " invariance",
                       milnor_number(h) == mu && tjurina_number(h) == tau) &&
                 ok;
        }
    }

    // Bareiss vs naive rank on 200 random matrices up to 12x12
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 12);
        int cols = 1 + static_cast<int>(rng() % 12);
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (rng() % 2) continue;
                long num = static_cast<long>(rng() % 21) - 10;
                long den = 1 + static_cast<long>(rng() % 5);
                m.set(i, j, Rational(num) / den);
            }
        if (rank(m) != oracles::naive_rank(m)) {
            ok = check(log, "rank trial " + std::to_string(trial), false);
            break;
        }
    }

    // Hertling variance bound on every quasi-homogeneous curve germ mu <= 30
    int curve_count = 0;
    for (int p = 2; p <= 7; ++p) {
        for (int q = p; (p - 1) * (q - 1) <= 30; ++q) {
            Polynomial f = Polynomial::variable(2, 0, p) + Polynomial::variable(2, 1, q);
            LocalGerm g(f);
            ++curve_count;
            ok = check(log, "hertling x^" + std::to_string(p) + "+y^" + std::to_string(q),
                       hertling_variance_check(spectrum_qh(g)).holds) &&
                 ok;
        }
    }
    for (const char* text : {"x^4+x*y^3", "x^3+x*y^2", "x^5+x*y^3"}) {
        LocalGerm g = germ(text, xy);
        if (milnor_number(g) > 30) continue;
        ++curve_count;
        ok = check(log, std::string("hertling ") + text,
                   hertling_variance_check(spectrum_qh(g)).holds) &&
             ok;
    }
    log << "qh_corpus=" << qh_corpus.size() << " curves=" << curve_count << " matrices=200";
    return ok;
}

bool criterion9(std::ostringstream& log) {
    auto entries = load_catalog(HODGERING_DATA_DIR "/catalog.txt");
    bool ok = true;
    int ade = 0, cusps = 0;
    for (const auto& e : entries) {
        if (e.vars.size() != 3) continue;
        LocalGerm g(parse_polynomial(e.equation, e.vars));
        if (e.resolution.p_g == 0 && e.resolution.b == 0) {  // ADE rows
            ++ade;
            ClassVerdict v = class_test(g);
            int mu = milnor_number(g);
            ok = check(log, e.name + " defect 0", v.defect == 0 && v.in_class) &&
                 check(log, e.name + " classifies",
                       surface_classification(mu, v.tau, e.resolution)) &&
                 ok;
        } else if (e.resolution.b == 1) {  // cusp rows
            ++cusps;
            int mu = milnor_number(g), tau = tjurina_number(g);
            ok = check(log, e.name + " tau=mu-1", tau == mu - 1) &&
                 check(log, e.name + " data", e.resolution.p_g == 1 && e.resolution.g == 0) &&
                 check(log, e.name + " classifies",
                       surface_classification(mu, tau, e.resolution)) &&
                 ok;
        } else if (e.name == "E12t") {  // exceptional unimodal data row
            int mu = milnor_number(g), tau = tjurina_number(g);
            ok = check(log, "E12t tau=mu-1 pg=1", tau == mu - 1 && e.resolution.p_g == 1) &&
                 check(log, "E12t classifies false",
                       !surface_classification(mu, tau, e.resolution)) &&
                 ok;
        }
    }
    log << "ade=" << ade << " cusps=" << cusps;
    return ok && check(log, "20 ADE rows", ade == 20) && check(log, "3 cusp rows", cusps == 3);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, 5, criterion1},    {2, 600, criterion2}, {3, 120, criterion3},
        {4, 300, criterion4},  {5, 60, criterion5},  {6, 60, criterion6},
        {7, 120, criterion7},  {8, 300, criterion8}, {9, 120, criterion9},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << " [exception: " << e.what() << "]";
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed >= c.budget_seconds) {
            log << " [over budget " << c.budget_seconds << "s]";
            ok = false;
        }
        if (!ok) ++failures;
        std::printf("criterion %d: %s (%.1fs) %s\n", c.number, ok ? "PASS" : "FAIL", elapsed,
                    log.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
