#ifndef HODGERING_SPECTRUM_HPP
#define HODGERING_SPECTRUM_HPP

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "hodgering/local_invariants.hpp"
#include "hodgering/matrix.hpp"

namespace hodgering {

// One positive rational weight per variable, each in (0, 1/2].
using WeightVector = std::vector<Rational>;

// Solves sum a_i w_i = 1 over the support of f. Returns the weights only if
// the solution exists, is unique, and every weight lies in (0, 1/2].
inline std::optional<WeightVector> find_weights(const LocalGerm& g) {
    const int n = g.nvars();
    const auto& terms = g.f.terms();
    if (terms.empty()) return std::nullopt;

    // kernel of [A | -1]: vectors (w, t) with A w = t * 1
    RationalMatrix m(static_cast<int>(terms.size()), n + 1);
    int row = 0;
    for (const auto& [e, c] : terms) {
        for (int i = 0; i < n; ++i) m.set(row, i, Rational(e[i]));
        m.set(row, n, Rational(-1));
        ++row;
    }
    RankKernel rk = rank_and_kernel(m);
    if (rk.kernel_dim != 1) return std::nullopt;
    const auto& v = rk.kernel_basis[0];
    if (v[n] == 0) return std::nullopt;
    WeightVector w(n);
    for (int i = 0; i < n; ++i) {
        w[i] = v[i] / v[n];
        if (w[i] <= 0 || w[i] > Rational(1, 2)) return std::nullopt;
    }
    return w;
}

// Multiset of spectral numbers, normalized to lie in (-1, n) and be
// symmetric about (n-1)/2.
struct Spectrum {
    int n = 0;                     // dimension of the hypersurface germ
    std::map<Rational, int> mult;  // b -> d(b)

    int mu() const {
        int total = 0;
        for (const auto& [b, d] : mult) total += d;
        return total;
    }

    std::vector<Rational> values() const {  // sorted, with multiplicity
        std::vector<Rational> v;
        for (const auto& [b, d] : mult)
            for (int i = 0; i < d; ++i) v.push_back(b);
        return v;
    }

    bool is_symmetric() const {
        Rational center(n - 1);
        for (const auto& [b, d] : mult) {
            auto it = mult.find(center - b);
            if (it == mult.end() || it->second != d) return false;
        }
        return true;
    }

    bool operator==(const Spectrum& o) const { return n == o.n && mult == o.mult; }
};

// V-degree of the monomial class x^m omega, shifted by the weighted degree
// of any polynomial multiplier (f itself has weighted degree 1).
inline Rational v_degree(const Exponents& m, const WeightVector& w, const Rational& extra_shift) {
    Rational d = -1;
    for (size_t i = 0; i < m.size(); ++i) d += Rational(m[i] + 1) * w[i];
    return d + extra_shift;
}

inline Spectrum spectrum_qh(const LocalGerm& g) {
    auto w = find_weights(g);
    if (!w) throw NotQuasiHomogeneousError("no admissible weight vector");
    Spectrum sp;
    sp.n = g.dimension();
    for (const auto& m : milnor_basis(g).monomials) sp.mult[v_degree(m, *w, 0)] += 1;
    return sp;
}

struct HodgeNumbers {
    std::vector<int> s;  // s_0 .. s_n

    int total() const {
        int t = 0;
        for (int v : s) t += v;
        return t;
    }
};

// s_k = sum of d(b) over n-k-1 < b <= n-k.
inline HodgeNumbers hodge_numbers(const Spectrum& sp) {
    HodgeNumbers h;
    h.s.assign(sp.n + 1, 0);
    for (const auto& [b, d] : sp.mult)
        for (int k = 0; k <= sp.n; ++k)
            if (Rational(sp.n - k - 1) < b && b <= Rational(sp.n - k)) h.s[k] += d;
    return h;
}

// p_g = s_2 = number of non-positive spectral values, for surface germs.
inline int geometric_genus(const LocalGerm& g) {
    if (g.dimension() != 2)
        throw std::invalid_argument("geometric_genus: surface germ required");
    Spectrum sp = spectrum_qh(g);
    int count = 0;
    for (const auto& [b, d] : sp.mult)
        if (b <= 0) count += d;
    return count;
}

// Smallest spectral value >= x ("roundup to the next attained V-degree").
// Empty when x exceeds every spectral value.
inline std::optional<Rational> spectral_roundup(const Spectrum& sp, const Rational& x) {
    auto it = sp.mult.lower_bound(x);
    if (it == sp.mult.end()) return std::nullopt;
    return it->first;
}

// Spectral values of Omega_f strictly between the generator degree of
// f*Q^f and its smallest induced degree: V-steps no multiple of [f omega]
// can reach.
inline std::vector<Rational> induced_filtration_gaps(const LocalGerm& g) {
    auto w = find_weights(g);
    if (!w) throw NotQuasiHomogeneousError("no admissible weight vector");
    Spectrum sp = spectrum_qh(g);

    auto gamma = spectral_roundup(sp, v_degree(Exponents(g.nvars(), 0), *w, 1));
    if (!gamma) return {};

    std::optional<Rational> min_induced;
    for (const auto& m : milnor_basis(g).monomials) {
        if (total_degree(m) == 0) continue;  // the generator itself
        Rational wdeg = 0;
        for (int i = 0; i < g.nvars(); ++i) wdeg += Rational(m[i]) * (*w)[i];
        auto induced = spectral_roundup(sp, *gamma + wdeg);
        if (!induced) continue;
        if (!min_induced || *induced < *min_induced) min_induced = *induced;
    }
    if (!min_induced) return {};

    std::vector<Rational> gaps;
    for (const auto& [b, d] : sp.mult)
        if (*gamma < b && b < *min_induced) gaps.push_back(b);
    return gaps;
}

// Join of germs in disjoint variables: spectral numbers compose as
// alpha + beta + 1 in this normalization, ambient dimensions add with +1.
inline Spectrum thom_sebastiani(const Spectrum& a, const Spectrum& b) {
    Spectrum r;
    r.n = a.n + b.n + 1;
    for (const auto& [alpha, da] : a.mult)
        for (const auto& [beta, db] : b.mult) r.mult[alpha + beta + 1] += da * db;
    return r;
}

// With alpha_1 <= ... <= alpha_delta the positive spectral numbers of a
// curve germ: alpha_j + alpha_{delta-j+1} >= 1 for all j?
inline bool pairing_check(const Spectrum& sp) {
    if (sp.n != 1) throw std::invalid_argument("pairing_check: curve spectrum required");
    std::vector<Rational> pos;
    for (const Rational& a : sp.values())
        if (a > 0) pos.push_back(a);
    size_t delta = pos.size();
    for (size_t j = 0; j < delta; ++j)
        if (pos[j] + pos[delta - 1 - j] < 1) return false;
    return true;
}

struct VarianceCheck {
    Rational lhs;  // spectral variance
    Rational rhs;  // (alpha_mu - alpha_1)/12
    bool holds = false;
};

inline VarianceCheck hertling_variance_check(const Spectrum& sp) {
    if (sp.n != 1)
        throw std::invalid_argument("hertling_variance_check: curve spectrum required");
    std::vector<Rational> a = sp.values();
    const int mu = static_cast<int>(a.size());
    Rational mean = 0;
    for (const Rational& x : a) mean += x;
    mean /= mu;
    VarianceCheck vc;
    for (const Rational& x : a) vc.lhs += (x - mean) * (x - mean);
    vc.lhs /= mu;
    vc.rhs = (a.back() - a.front()) / 12;
    vc.holds = vc.lhs <= vc.rhs;
    return vc;
}

struct NemethiCheck {
    int p_g = 0;
    Rational bound;  // mu/6
    bool holds = false;
};

// Nemethi's bound p_g <= mu/6 for quasi-homogeneous suspensions f(x,y)+z^2.
inline NemethiCheck nemethi_check(const LocalGerm& g) {
    if (g.dimension() != 2)
        throw std::invalid_argument("nemethi_check: surface germ required");
    Spectrum sp = spectrum_qh(g);
    NemethiCheck nc;
    for (const auto& [b, d] : sp.mult)
        if (b <= 0) nc.p_g += d;
    nc.bound = Rational(sp.mu()) / 6;
    nc.holds = Rational(nc.p_g) <= nc.bound;
    return nc;
}

namespace detail {

// Integer-scaled weights for a weighted local monomial order.
inline std::vector<int> integer_weights(const WeightVector& w) {
    Integer den = 1;
    for (const auto& q : w)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<int> iw(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        Rational s = w[i] * Rational(den);
        iw[i] = static_cast<int>(s.get_num().get_si());
    }
    return iw;
}

// Quotient under the weight-matched local order. For mu-constant
// deformations of a quasi-homogeneous germ the lead monomials stay those
// of the undeformed germ, which keeps the computation tractable.
inline LocalQuotient weighted_quotient(const std::vector<Polynomial>& gens,
                                       const WeightVector& w) {
    return LocalQuotient(
        standard_basis(gens, weighted_local_order(static_cast<int>(w.size()), integer_weights(w))));
}

}  // namespace detail

struct TauMinResult {
    int mu = 0;
    int tau_min = 0;
    int samples = 0;
};

// Randomized search for the minimal Tjurina number on the mu-constant
// stratum of a quasi-homogeneous germ: samples integer deformations
// supported on the Milnor-basis monomials of weighted degree > 1, discards
// any sample whose mu drifts, and keeps the smallest tau seen.
inline TauMinResult tau_min_search(const LocalGerm& g, int samples = 32,
                                   unsigned long seed = 0) {
    auto w = find_weights(g);
    if (!w) throw NotQuasiHomogeneousError("no admissible weight vector");

    LocalQuotient q0 = detail::weighted_quotient(g.jacobian_generators(), *w);
    TauMinResult result;
    result.mu = q0.dimension();
    result.tau_min = detail::weighted_quotient(g.tjurina_generators(), *w).dimension();

    std::vector<Exponents> cand;
    for (const auto& m : q0.standard_monomials()) {
        Rational wdeg = 0;
        for (int i = 0; i < g.nvars(); ++i) wdeg += Rational(m[i]) * (*w)[i];
        if (wdeg > 1) cand.push_back(m);
    }

    // rng()%9+1 rather than a distribution: byte-stable across platforms
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Polynomial def = g.f;
        for (const auto& m : cand)
            def.add_term(m, Rational(static_cast<long>(rng() % 9) + 1));
        LocalGerm gd(def);
        if (detail::weighted_quotient(gd.jacobian_generators(), *w).dimension() != result.mu)
            continue;  // left the mu-constant stratum
        int tau = detail::weighted_quotient(gd.tjurina_generators(), *w).dimension();
        result.tau_min = std::min(result.tau_min, tau);
        ++result.samples;
    }
    return result;
}

}  // namespace hodgering

#endif
