#ifndef HODGERING_JACOBIAN_GLOBAL_HPP
#define HODGERING_JACOBIAN_GLOBAL_HPP

#include <map>
#include <vector>

#include "hodgering/local_invariants.hpp"
#include "hodgering/matrix.hpp"

namespace hodgering {

// dim S_k for S = polynomial ring in nvars variables.
inline int graded_dim_S(int k, int nvars) {
    if (k < 0) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k + nvars - 1),
                 static_cast<unsigned long>(nvars - 1));
    return static_cast<int>(b.get_si());
}

// Coefficients of (1 + t + ... + t^{d-2})^{n+2}: the Hilbert series of the
// Jacobian ring of a smooth degree-d hypersurface in P^{n+1}.
inline std::vector<Integer> hilbert_series_smooth(int d, int n) {
    if (d < 2) throw std::invalid_argument("hilbert_series_smooth: d >= 2 required");
    std::vector<Integer> coeff{1};
    for (int factor = 0; factor < n + 2; ++factor) {
        std::vector<Integer> next(coeff.size() + d - 2, 0);
        for (size_t i = 0; i < coeff.size(); ++i)
            for (int j = 0; j <= d - 2; ++j) next[i + j] += coeff[i];
        coeff = std::move(next);
    }
    return coeff;
}

// c_d = binom(2d-1, n+1) - (n+2) binom(d, n+1).
inline Integer c_d(int d, int n) {
    if (d < 2) throw std::invalid_argument("c_d: d >= 2 required");
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(2 * d - 1),
                 static_cast<unsigned long>(n + 1));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(n + 1));
    return a - (n + 2) * b;
}

namespace detail {

// Monomials of total degree k in descending graded revlex order.
inline std::vector<Exponents> monomials_of_degree(int k, int nvars) {
    std::vector<Exponents> out;
    if (k < 0) return out;
    Exponents e(nvars, 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == nvars - 1) {
            e[var] = rest;
            out.push_back(e);
            e[var] = 0;
            return;
        }
        for (int i = rest; i >= 0; --i) {
            e[var] = i;
            self(self, var + 1, rest - i);
        }
        e[var] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), GrevlexDescending());
    return out;
}

// Matrix whose columns are the given degree-k polynomials on the monomial
// basis of S_k.
inline RationalMatrix matrix_on_basis(const std::vector<Polynomial>& cols, int k, int nvars) {
    std::vector<Exponents> rows = monomials_of_degree(k, nvars);
    std::map<Exponents, int, GrevlexDescending> index;
    for (size_t i = 0; i < rows.size(); ++i) index[rows[i]] = static_cast<int>(i);
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [e, c] : cols[j].terms()) m.set(index.at(e), static_cast<int>(j), c);
    return m;
}

// Columns of the multiplication map S_{k - deg g} -> S_k, A -> A*g, for each
// g in gens (all homogeneous).
inline std::vector<Polynomial> multiplication_columns(const std::vector<Polynomial>& gens,
                                                      int k, int nvars) {
    std::vector<Polynomial> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int src = k - g.degree();
        for (const auto& m : monomials_of_degree(src, nvars))
            cols.push_back(Polynomial::monomial(nvars, m) * g);
    }
    return cols;
}

inline std::vector<Polynomial> partials(const Polynomial& F) {
    std::vector<Polynomial> dF;
    for (int i = 0; i < F.nvars(); ++i) dF.push_back(partial_derivative(F, i));
    return dF;
}

}  // namespace detail

// dim J(F)_k, the degree-k piece of the Jacobian ideal.
inline int jacobian_ideal_dim(const Polynomial& F, int k) {
    if (!F.is_homogeneous())
        throw std::invalid_argument("jacobian_ideal_dim: homogeneous input required");
    auto cols = detail::multiplication_columns(detail::partials(F), k, F.nvars());
    if (cols.empty()) return 0;
    return rank(detail::matrix_on_basis(cols, k, F.nvars()));
}

// dim R_k for the Jacobian ring R = S/J(F).
inline int jacobian_ring_dim(const Polynomial& F, int k) {
    return graded_dim_S(k, F.nvars()) - jacobian_ideal_dim(F, k);
}

// dim H^0(Omega^n(log X)) = dim ker(h)/im(E) with h the contraction
// S_{d-n-1}^{n+2} -> S_{2d-n-2}/F*S_{d-n-2} by dF, and E(B) = (X_0 B, ...).
inline int h0_log(const Polynomial& F) {
    if (!F.is_homogeneous() || F.is_zero())
        throw std::invalid_argument("h0_log: nonzero homogeneous input required");
    const int nvars = F.nvars();  // n + 2
    const int n = nvars - 2;
    const int d = F.degree();
    const int k = 2 * d - n - 2;

    auto cols = detail::multiplication_columns(detail::partials(F), k, nvars);
    const int domain = static_cast<int>(cols.size());  // (n+2) dim S_{d-n-1}
    // quotient by F*S_{d-n-2}: multiplication by F is injective, so
    // dim ker(h mod F) - dim S_{d-n-2} = domain - rank([H | M_F])
    auto fcols = detail::multiplication_columns({F}, k, nvars);
    cols.insert(cols.end(), fcols.begin(), fcols.end());
    int r = cols.empty() ? 0 : rank(detail::matrix_on_basis(cols, k, nvars));
    return domain - r;
}

// An isolated singular point of X = V(F), presented in an affine chart.
struct SingularPoint {
    int chart = 0;                // homogeneous coordinate set to 1
    std::vector<Rational> coords;  // remaining n+1 affine coordinates
    LocalGerm germ;               // dehomogenized, translated to the origin
    int mu = 0;
    int tau = 0;
};

struct HypersurfaceRecord {
    Polynomial F;
    int d = 0;
    int n = 0;
    std::vector<SingularPoint> points;

    int tau_total() const {
        int t = 0;
        for (const auto& p : points) t += p.tau;
        return t;
    }
};

// Builds and verifies the record: each point must lie on X, be singular,
// and have finite mu.
inline HypersurfaceRecord make_hypersurface_record(
    const Polynomial& F,
    const std::vector<std::pair<int, std::vector<Rational>>>& points) {
    if (!F.is_homogeneous() || F.is_zero())
        throw std::invalid_argument("hypersurface: nonzero homogeneous F required");
    HypersurfaceRecord rec{F, F.degree(), F.nvars() - 2, {}};
    for (const auto& [chart, coords] : points) {
        Polynomial f = dehomogenize(F, chart);
        if (f.evaluate(coords) != 0)
            throw std::invalid_argument("listed point does not lie on the hypersurface");
        LocalGerm germ = LocalGerm::at_point(f, coords);
        if (!germ.singular_at_origin())
            throw NotSingularError("listed point is not singular");
        int mu = milnor_number(germ);
        int tau = tjurina_number(germ);
        rec.points.push_back({chart, coords, std::move(germ), mu, tau});
    }
    return rec;
}

// The stabilized Hilbert function of R counts the total Tjurina number;
// matching it certifies that the singular list is complete.
inline bool completeness_check(const HypersurfaceRecord& H) {
    const int kstar = (H.n + 2) * (H.d - 2) + 1;
    const int expected = H.tau_total();
    return jacobian_ring_dim(H.F, kstar) == expected &&
           jacobian_ring_dim(H.F, kstar + 1) == expected;
}

struct SequenceDims {
    int dimR = 0;       // dim R_{2d-n-2}
    int tau_total = 0;
    int h1 = 0;
    int h2 = 0;
    Integer cd;
};

// Dimension bookkeeping of the four-term sequence
//   0 -> H^1(Omega^n(log X)) -> R_{2d-n-2} -> (+) T_x -> H^2(...) -> 0:
// the middle map evaluates a form into the local Tjurina algebras.
inline SequenceDims sequence_dims(const HypersurfaceRecord& H) {
    if (h0_log(H.F) != 0)
        throw PrecondH0Error("H^0 of log n-forms does not vanish");
    if (!completeness_check(H))
        throw IncompleteSingularListError("stabilized Hilbert function disagrees with total tau");

    const int nvars = H.F.nvars();
    const int k = 2 * H.d - H.n - 2;
    SequenceDims out;
    out.dimR = jacobian_ring_dim(H.F, k);
    out.tau_total = H.tau_total();
    out.cd = c_d(H.d, H.n);

    // evaluation matrix: one block of rows per singular point
    std::vector<LocalQuotient> locals;
    for (const auto& p : H.points)
        locals.push_back(detail::quotient_by(p.germ.tjurina_generators(), nvars - 1));

    auto monomials = detail::monomials_of_degree(k, nvars);
    RationalMatrix eval(out.tau_total, static_cast<int>(monomials.size()));
    for (size_t j = 0; j < monomials.size(); ++j) {
        const Polynomial A = Polynomial::monomial(nvars, monomials[j]);
        int row0 = 0;
        for (size_t p = 0; p < H.points.size(); ++p) {
            Polynomial a = translate_to_origin(dehomogenize(A, H.points[p].chart),
                                               H.points[p].coords);
            auto coords = locals[p].coordinates(a);
            for (size_t i = 0; i < coords.size(); ++i)
                if (coords[i] != 0) eval.set(row0 + static_cast<int>(i),
                                             static_cast<int>(j), coords[i]);
            row0 += H.points[p].tau;
        }
    }
    // J(F)_k maps to zero in every Tjurina algebra (Euler relation), so the
    // map factors through R_k and the image is unchanged.
    int r = rank(eval);
    out.h1 = out.dimR - r;
    out.h2 = out.tau_total - r;
    return out;
}

struct EulerReport {
    Integer chi_barlet;  // tau_total + c_d
    Integer chi_dubois;  // sum s_{n-1} + c_d
};

inline EulerReport euler_characteristic_report(const HypersurfaceRecord& H,
                                               const std::vector<int>& s_n_minus_1) {
    if (s_n_minus_1.size() != H.points.size())
        throw std::invalid_argument("one s_{n-1} value per singular point required");
    Integer cd = c_d(H.d, H.n);
    Integer s_sum = 0;
    for (int s : s_n_minus_1) s_sum += s;
    return {Integer(H.tau_total()) + cd, s_sum + cd};
}

// dim J(F+tG)_k >= dim J(F)_k for each sample t, with equality at
// k = 2d-n-2 when h0_log(F) = 0.
inline bool semicontinuity_check(const Polynomial& F, const Polynomial& G, int k,
                                 const std::vector<Rational>& samples) {
    if (!F.is_homogeneous() || !G.is_homogeneous() || F.degree() != G.degree())
        throw std::invalid_argument("semicontinuity_check: degree mismatch");
    const int n = F.nvars() - 2;
    const int base = jacobian_ideal_dim(F, k);
    const bool want_equality = (k == 2 * F.degree() - n - 2) && h0_log(F) == 0;
    for (const Rational& t : samples) {
        int dim_t = jacobian_ideal_dim(F + t * G, k);
        if (dim_t < base) return false;
        if (want_equality && dim_t != base) return false;
    }
    return true;
}

}  // namespace hodgering

#endif
