#ifndef HODGERING_LOCAL_INVARIANTS_HPP
#define HODGERING_LOCAL_INVARIANTS_HPP

#include <algorithm>
#include <vector>

#include "hodgering/errors.hpp"
#include "hodgering/polynomial.hpp"
#include "hodgering/standard_basis.hpp"

namespace hodgering {

// Hypersurface germ with its singular point moved to the origin.
struct LocalGerm {
    Polynomial f;

    explicit LocalGerm(Polynomial poly) : f(std::move(poly)) {
        if (f.constant_term() != 0)
            throw std::invalid_argument("germ does not vanish at the origin");
    }

    static LocalGerm at_point(const Polynomial& f, const std::vector<Rational>& p) {
        return LocalGerm(translate_to_origin(f, p));
    }

    int nvars() const { return f.nvars(); }
    // dimension n of the hypersurface germ in C^{n+1}
    int dimension() const { return f.nvars() - 1; }

    bool singular_at_origin() const {
        for (int i = 0; i < f.nvars(); ++i)
            if (partial_derivative(f, i).constant_term() != 0) return false;
        return true;
    }

    std::vector<Polynomial> jacobian_generators() const {
        std::vector<Polynomial> gens;
        gens.reserve(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
        return gens;
    }

    std::vector<Polynomial> tjurina_generators() const {
        auto gens = jacobian_generators();
        gens.push_back(f);
        return gens;
    }
};

struct MilnorAlgebraBasis {
    std::vector<Exponents> monomials;  // standard monomials of the Jacobian ideal
    int mu() const { return static_cast<int>(monomials.size()); }
};

// Finite-dimensional local quotient presented by a standard basis, with
// canonical monomial coordinates. Reductions are truncated at a degree
// beyond which every monomial provably lies in the ideal.
class LocalQuotient {
public:
    explicit LocalQuotient(StandardBasis sb) : sb_(std::move(sb)) {
        const int n = sb_.order.nvars;
        if (sb_.unit_ideal) {
            truncation_ = 0;
            return;
        }
        // A pure power of every variable must appear in the lead ideal,
        // otherwise the quotient is infinite-dimensional. When the basis was
        // computed with a truncation degree, monomials at or above it lie in
        // the ideal implicitly, which caps each pure power.
        std::vector<int> pure(n, -1);
        for (const auto& lt : sb_.leading_terms) {
            int var = -1;
            bool is_pure = true;
            for (int i = 0; i < n; ++i) {
                if (lt[i] == 0) continue;
                if (var >= 0) {
                    is_pure = false;
                    break;
                }
                var = i;
            }
            if (is_pure && var >= 0 && (pure[var] < 0 || lt[var] < pure[var]))
                pure[var] = lt[var];
        }
        auto weight = [&](int i) {
            return sb_.order.weights.empty() ? 1 : sb_.order.weights[i];
        };
        for (int i = 0; i < n; ++i) {
            if (sb_.truncation_degree < INT_MAX) {
                // x_i^k with k*w_i >= truncation_degree lies in the ideal
                int k = (sb_.truncation_degree + weight(i) - 1) / weight(i);
                if (pure[i] < 0 || pure[i] > k) pure[i] = k;
            }
            if (pure[i] < 0)
                throw NonIsolatedError("lead ideal has no pure power of variable " +
                                       std::to_string(i));
        }
        truncation_ = 1;
        for (int i = 0; i < n; ++i) truncation_ += (pure[i] - 1) * weight(i);
        truncation_ = std::min(truncation_, sb_.truncation_degree);

        for (const auto& g : sb_.elements)
            reducers_.push_back(detail::to_ordered(g, sb_.order));

        // enumerate standard monomials inside the pure-power box
        Exponents e(n, 0);
        enumerate(0, pure, e);
        std::sort(monomials_.begin(), monomials_.end(),
                  [&](const Exponents& a, const Exponents& b) { return sb_.order.greater(a, b); });
    }

    const StandardBasis& basis() const { return sb_; }
    int dimension() const { return static_cast<int>(monomials_.size()); }
    const std::vector<Exponents>& standard_monomials() const { return monomials_; }
    int truncation_degree() const { return truncation_; }

    // Canonical representative of [p] on the standard monomial basis.
    std::vector<Rational> coordinates(const Polynomial& p) const {
        std::vector<Rational> coords(monomials_.size(), Rational(0));
        if (sb_.unit_ideal) return coords;
        detail::OrderedPoly h = detail::to_ordered(p, sb_.order);
        truncate(h);
        while (!h.is_zero()) {
            const detail::OrderedPoly* red = find_reducer(h.lm());
            if (!red) {
                // standard monomial: emit and continue with the tail
                size_t idx = monomial_index(h.lm());
                coords[idx] += h.lc();
                h.terms.erase(h.terms.begin());
                continue;
            }
            h = detail::reduce_step(h, *red, sb_.order);
            truncate(h);
        }
        return coords;
    }

private:
    void enumerate(int var, const std::vector<int>& pure, Exponents& e) {
        if (var == sb_.order.nvars) {
            if (sb_.order.degree(e) < truncation_ && !sb_.lead_divides(e))
                monomials_.push_back(e);
            return;
        }
        for (int k = 0; k < pure[var]; ++k) {
            e[var] = k;
            enumerate(var + 1, pure, e);
        }
        e[var] = 0;
    }

    const detail::OrderedPoly* find_reducer(const Exponents& m) const {
        const detail::OrderedPoly* best = nullptr;
        int best_ecart = 0;
        for (const auto& g : reducers_) {
            if (!divides(g.lm(), m)) continue;
            int e = g.ecart(sb_.order);
            if (!best || e < best_ecart) {
                best = &g;
                best_ecart = e;
            }
        }
        return best;
    }

    void truncate(detail::OrderedPoly& h) const {
        h.terms.erase(std::remove_if(h.terms.begin(), h.terms.end(),
                                     [&](const auto& t) {
                                         return sb_.order.degree(t.first) >= truncation_;
                                     }),
                      h.terms.end());
    }

    size_t monomial_index(const Exponents& m) const {
        auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m,
                                   [&](const Exponents& a, const Exponents& b) {
                                       return sb_.order.greater(a, b);
                                   });
        return static_cast<size_t>(it - monomials_.begin());
    }

    StandardBasis sb_;
    std::vector<detail::OrderedPoly> reducers_;
    std::vector<Exponents> monomials_;
    int truncation_ = 0;
};

namespace detail {

inline LocalQuotient quotient_by(const std::vector<Polynomial>& gens, int nvars) {
    return LocalQuotient(standard_basis(gens, local_order(nvars)));
}

inline void require_singular(const LocalGerm& g) {
    if (!g.singular_at_origin())
        throw NotSingularError("some partial derivative is a unit at the origin");
}

}  // namespace detail

inline MilnorAlgebraBasis milnor_basis(const LocalGerm& g) {
    detail::require_singular(g);
    LocalQuotient q = detail::quotient_by(g.jacobian_generators(), g.nvars());
    return MilnorAlgebraBasis{q.standard_monomials()};
}

// dim O/(df), the number of vanishing cycles.
inline int milnor_number(const LocalGerm& g) {
    detail::require_singular(g);
    return detail::quotient_by(g.jacobian_generators(), g.nvars()).dimension();
}

// dim O/(f, df), the number of first-order deformations.
inline int tjurina_number(const LocalGerm& g) {
    detail::require_singular(g);
    return detail::quotient_by(g.tjurina_generators(), g.nvars()).dimension();
}

}  // namespace hodgering

#endif
