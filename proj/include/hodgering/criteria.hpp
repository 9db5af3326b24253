#ifndef HODGERING_CRITERIA_HPP
#define HODGERING_CRITERIA_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hodgering/spectrum.hpp"

namespace hodgering {

// User-supplied resolution data of a normal surface singularity.
struct SurfaceResolutionData {
    int p_g = 0;  // geometric genus
    int g = 0;    // total genus of exceptional components
    int b = 0;    // first Betti number of the dual graph
};

struct ClassVerdict {
    int tau = 0;
    int s_n_minus_1 = 0;
    int defect = 0;  // tau - s_{n-1} = q' + b^{n-1,1}
    bool in_class = false;
};

// The tau = s_{n-1} test. For a mu-constant deformation of a
// quasi-homogeneous germ pass the reference weights (the spectrum is
// mu-constant invariant); s_override covers germs whose s_{n-1} is known
// externally.
inline ClassVerdict class_test(const LocalGerm& g,
                               std::optional<WeightVector> ref_weights = std::nullopt,
                               std::optional<int> s_override = std::nullopt) {
    ClassVerdict v;
    if (s_override) {
        v.tau = tjurina_number(g);
        v.s_n_minus_1 = *s_override;
    } else {
        auto own = find_weights(g);
        if (own) {
            v.tau = tjurina_number(g);
            Spectrum sp = spectrum_qh(g);
            v.s_n_minus_1 = hodge_numbers(sp).s[g.dimension() > 0 ? g.dimension() - 1 : 0];
        } else if (ref_weights) {
            detail::require_singular(g);
            // weight-matched order keeps deformed germs tractable
            LocalQuotient q = detail::weighted_quotient(g.jacobian_generators(), *ref_weights);
            v.tau = detail::weighted_quotient(g.tjurina_generators(), *ref_weights).dimension();
            Spectrum sp;
            sp.n = g.dimension();
            for (const auto& m : q.standard_monomials())
                sp.mult[v_degree(m, *ref_weights, 0)] += 1;
            v.s_n_minus_1 = hodge_numbers(sp).s[g.dimension() > 0 ? g.dimension() - 1 : 0];
        } else {
            throw NotQuasiHomogeneousError("spectrum unavailable: no weights");
        }
    }
    v.defect = v.tau - v.s_n_minus_1;
    v.in_class = v.defect == 0;
    return v;
}

struct WahlCheck {
    int bound = 0;
    bool holds = false;
};

// Wahl: tau >= mu - (2 p_g - 2g - b).
inline WahlCheck wahl_check(int mu, int tau, const SurfaceResolutionData& data) {
    WahlCheck w;
    w.bound = mu - (2 * data.p_g - 2 * data.g - data.b);
    w.holds = tau >= w.bound;
    return w;
}

// Equivalent form of b^{1,1} = q' = 0 for smoothable normal Gorenstein
// surface singularities: g = 0 and equality in Wahl's bound.
inline bool surface_classification(int mu, int tau, const SurfaceResolutionData& data) {
    return data.g == 0 && tau == wahl_check(mu, tau, data).bound;
}

struct ZariskiCheck {
    int mu = 0;
    int tau_expected = 0;
    int p_g = 0;
    bool consistent = false;
};

// The Zariski family z^2 + x^{2a+1} + y^{2a+2}: tau = 3a(a+1) = mu - 2 p_g.
inline ZariskiCheck zariski_family_check(int a) {
    if (a < 1) throw std::invalid_argument("zariski_family_check: a >= 1 required");
    const int nv = 3;
    Polynomial f = Polynomial::variable(nv, 0, 2 * a + 1) + Polynomial::variable(nv, 1, 2 * a + 2) +
                   Polynomial::variable(nv, 2, 2);
    LocalGerm g(f);
    ZariskiCheck z;
    z.mu = milnor_number(g);
    z.p_g = geometric_genus(g);
    z.tau_expected = 3 * a * (a + 1);
    z.consistent = z.mu - 2 * z.p_g == z.tau_expected;
    return z;
}

struct BuchweitzGreuelCheck {
    int delta = 0;
    bool holds = false;                 // tau >= delta + m - r
    bool curve_class_equality = false;  // delta - r + 1 = tau
};

// Plane-curve bounds: delta from Milnor's relation mu = 2 delta - r + 1.
inline BuchweitzGreuelCheck buchweitz_greuel_check(int tau, int mu, int r, int m) {
    if ((mu + r - 1) % 2 != 0)
        throw std::invalid_argument("buchweitz_greuel_check: mu + r - 1 must be even");
    BuchweitzGreuelCheck c;
    c.delta = (mu + r - 1) / 2;
    c.holds = tau >= c.delta + m - r;
    c.curve_class_equality = c.delta - r + 1 == tau;
    return c;
}

struct SuspensionBoundCheck {
    int dimV = 0;
    int bound = 0;
    bool holds = false;
};

// For a homogeneous plane-curve germ of degree m (m generic lines):
// dim V^{-2/m} Q^f = delta + 2m - 5.
inline SuspensionBoundCheck suspension_bound_check(const LocalGerm& f, int m) {
    if (m < 3) throw std::invalid_argument("suspension_bound_check: m >= 3 required");
    auto w = find_weights(f);
    if (!w || f.nvars() != 2 || (*w)[0] != Rational(1, m) || (*w)[1] != Rational(1, m))
        throw NotQuasiHomogeneousError("not of homogeneous type");
    SuspensionBoundCheck c;
    const Rational cutoff = Rational(-2) / m;
    int mu = 0;
    for (const auto& a : milnor_basis(f).monomials) {
        ++mu;
        if (v_degree(a, *w, 0) >= cutoff) ++c.dimV;
    }
    const int delta = (mu + m - 1) / 2;  // r = m branches
    c.bound = delta + 2 * m - 5;
    c.holds = c.dimV == c.bound;
    return c;
}

// One row of the named-singularity catalog.
struct CatalogEntry {
    std::string name;
    std::vector<std::string> vars;
    std::string equation;
    int r = 1;  // branch count (curve germs; 0 if not applicable)
    SurfaceResolutionData resolution;
    int mu = 0;
    int tau = 0;
};

// Catalog format: one entry per line,
//   name; vars=x,y,z; f=<polynomial>; r=..; g=..; b=..; pg=..; mu=..; tau=..
// '#' starts a comment.
inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    std::vector<CatalogEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        CatalogEntry e;
        std::istringstream fields(line);
        std::string field;
        bool first = true;
        while (std::getline(fields, field, ';')) {
            auto trim = [](std::string s) {
                size_t a = s.find_first_not_of(" \t\r");
                size_t b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            field = trim(field);
            if (field.empty()) continue;
            if (first) {
                e.name = field;
                first = false;
                continue;
            }
            auto eq = field.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("malformed catalog field: " + field);
            std::string key = trim(field.substr(0, eq));
            std::string value = trim(field.substr(eq + 1));
            if (key == "vars") {
                std::istringstream vs(value);
                std::string v;
                while (std::getline(vs, v, ',')) e.vars.push_back(trim(v));
            } else if (key == "f") {
                e.equation = value;
            } else if (key == "r") {
                e.r = std::stoi(value);
            } else if (key == "g") {
                e.resolution.g = std::stoi(value);
            } else if (key == "b") {
                e.resolution.b = std::stoi(value);
            } else if (key == "pg") {
                e.resolution.p_g = std::stoi(value);
            } else if (key == "mu") {
                e.mu = std::stoi(value);
            } else if (key == "tau") {
                e.tau = std::stoi(value);
            } else {
                throw std::runtime_error("unknown catalog key: " + key);
            }
        }
        if (e.name.empty() || e.vars.empty() || e.equation.empty())
            throw std::runtime_error("incomplete catalog entry: " + line);
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace hodgering

#endif
