#ifndef HODGERING_STANDARD_BASIS_HPP
#define HODGERING_STANDARD_BASIS_HPP

#include <algorithm>
#include <climits>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hodgering/polynomial.hpp"

namespace hodgering {

namespace detail {

// Term list sorted descending in the active order: leading term first.
struct OrderedPoly {
    std::vector<std::pair<Exponents, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
    const Exponents& lm() const { return terms.front().first; }
    const Rational& lc() const { return terms.front().second; }

    // For a local order the terms run in ascending order degree, so the
    // tail degree is the degree of the last term.
    int ecart(const MonomialOrder& order) const {
        return order.degree(terms.back().first) - order.degree(terms.front().first);
    }
};

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
    OrderedPoly r;
    r.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(r.terms.begin(), r.terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return r;
}

inline Polynomial to_polynomial(const OrderedPoly& p, int nvars) {
    Polynomial r(nvars);
    for (const auto& [e, c] : p.terms) r.add_term(e, c);
    return r;
}

// Divides out the coefficient content and fixes the leading sign.
inline void make_primitive(OrderedPoly& p) {
    if (p.is_zero()) return;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : p.terms)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [e, c] : p.terms) {
        Integer n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (p.lc() < 0) scale = -scale;
    for (auto& [e, c] : p.terms) c *= scale;
}

inline void truncate_terms(OrderedPoly& p, int degree_bound, const MonomialOrder& order) {
    if (degree_bound == INT_MAX) return;
    p.terms.erase(std::remove_if(p.terms.begin(), p.terms.end(),
                                 [&](const auto& t) {
                                     return order.degree(t.first) >= degree_bound;
                                 }),
                  p.terms.end());
}

// h - (lc(h)/lc(g)) * x^(lm(h)-lm(g)) * g; the leading terms cancel.
inline OrderedPoly reduce_step(const OrderedPoly& h, const OrderedPoly& g,
                               const MonomialOrder& order) {
    const Rational factor = h.lc() / g.lc();
    const Exponents shift = exp_sub(h.lm(), g.lm());
    OrderedPoly out;
    out.terms.reserve(h.terms.size() + g.terms.size());
    auto a = h.terms.begin() + 1, ae = h.terms.end();
    auto b = g.terms.begin() + 1, be = g.terms.end();
    Exponents be_shifted;
    while (a != ae || b != be) {
        bool take_a;
        if (a == ae)
            take_a = false;
        else if (b == be)
            take_a = true;
        else {
            be_shifted = exp_add(b->first, shift);
            if (a->first == be_shifted) {
                Rational c = a->second - factor * b->second;
                if (c != 0) out.terms.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
                continue;
            }
            take_a = order.greater(a->first, be_shifted);
        }
        if (take_a) {
            out.terms.push_back(*a);
            ++a;
        } else {
            out.terms.emplace_back(exp_add(b->first, shift), -factor * b->second);
            ++b;
        }
    }
    return out;
}

// Mora weak normal form with ecart-minimal reducer selection; intermediate
// remainders join the reducer set, which guarantees termination for local
// orders.
inline OrderedPoly mora_normal_form(OrderedPoly h, const std::vector<OrderedPoly>& basis,
                                    const MonomialOrder& order, int degree_bound = INT_MAX) {
    truncate_terms(h, degree_bound, order);
    std::vector<const OrderedPoly*> reducers;
    reducers.reserve(basis.size());
    for (const auto& g : basis) reducers.push_back(&g);
    std::deque<OrderedPoly> extra;

    int steps = 0;
    while (!h.is_zero()) {
        const OrderedPoly* best = nullptr;
        int best_ecart = 0;
        for (const OrderedPoly* g : reducers) {
            if (!divides(g->lm(), h.lm())) continue;
            int e = g->ecart(order);
            if (!best || e < best_ecart) {
                best = g;
                best_ecart = e;
            }
        }
        if (!best) break;
        if (best_ecart > h.ecart(order)) {
            extra.push_back(h);
            reducers.push_back(&extra.back());
        }
        h = reduce_step(h, *best, order);
        truncate_terms(h, degree_bound, order);
        if (++steps % 32 == 0) make_primitive(h);
    }
    make_primitive(h);
    return h;
}

inline OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
    const Exponents m = exp_lcm(f.lm(), g.lm());
    OrderedPoly h;
    h.terms.reserve(f.terms.size() + g.terms.size());
    const Exponents sf = exp_sub(m, f.lm());
    const Exponents sg = exp_sub(m, g.lm());
    const Rational cf = g.lc();
    const Rational cg = f.lc();
    // merge cf * x^sf * f  -  cg * x^sg * g; lead terms cancel
    auto a = f.terms.begin(), ae = f.terms.end();
    auto b = g.terms.begin(), be = g.terms.end();
    while (a != ae || b != be) {
        Exponents ea, eb;
        if (a != ae) ea = exp_add(a->first, sf);
        if (b != be) eb = exp_add(b->first, sg);
        if (a != ae && b != be && ea == eb) {
            Rational c = cf * a->second - cg * b->second;
            if (c != 0) h.terms.emplace_back(std::move(ea), std::move(c));
            ++a;
            ++b;
        } else if (b == be || (a != ae && order.greater(ea, eb))) {
            h.terms.emplace_back(std::move(ea), cf * a->second);
            ++a;
        } else {
            h.terms.emplace_back(std::move(eb), -cg * b->second);
            ++b;
        }
    }
    make_primitive(h);
    return h;
}

}  // namespace detail

struct StandardBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;
    std::vector<Exponents> leading_terms;  // minimal generators of the lead ideal
    bool unit_ideal = false;
    // Every monomial of order degree >= truncation_degree lies in the ideal
    // (INT_MAX when the quotient is not known to be finite-dimensional).
    int truncation_degree = INT_MAX;

    bool lead_divides(const Exponents& e) const {
        for (const auto& lt : leading_terms)
            if (divides(lt, e)) return true;
        return false;
    }
};

// Buchberger loop with Mora normal form. Generators that are units short-
// circuit to the whole ring. The chain criterion prunes pairs; the product
// criterion is applied only when the s-polynomial vanishes identically.
inline StandardBasis standard_basis(const std::vector<Polynomial>& generators,
                                    const MonomialOrder& order) {
    using detail::OrderedPoly;
    StandardBasis result;
    result.order = order;

    std::vector<OrderedPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        OrderedPoly p = detail::to_ordered(g, order);
        detail::make_primitive(p);
        basis.push_back(std::move(p));
    }
    if (basis.empty()) return result;

    auto is_unit = [&](const OrderedPoly& p) {
        return order.tag == OrderTag::NegGradedRevLex && order.degree(p.lm()) == 0;
    };
    for (const auto& p : basis) {
        if (is_unit(p)) {
            result.unit_ideal = true;
            result.elements = {Polynomial::constant(order.nvars, 1)};
            result.leading_terms = {Exponents(order.nvars, 0)};
            return result;
        }
    }

    struct Pair {
        size_t i, j;
        Exponents lcm;
        int lcm_deg;
    };
    std::vector<Pair> pairs;
    std::vector<char> processed_pair;  // flattened (i,j) markers for the chain criterion
    auto pair_done = [&](size_t i, size_t j) -> char& {
        if (i > j) std::swap(i, j);
        size_t idx = j * (j + 1) / 2 + i;
        if (idx >= processed_pair.size()) processed_pair.resize(idx + 1, 0);
        return processed_pair[idx];
    };
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            Exponents m = exp_lcm(basis[i].lm(), basis[k].lm());
            pairs.push_back({i, k, m, order.degree(m)});
        }
    };
    for (size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    // Once the lead ideal holds a pure power of every variable, each monomial
    // of order degree >= 1 + sum((p_i - 1) w_i) exceeds the pure-power box
    // and so is divisible by one of them, hence lies in the ideal. From then
    // on all tails may be truncated there, which keeps ecarts and coefficient
    // growth under control.
    int trunc = INT_MAX;
    std::vector<int> pure(order.nvars, -1);
    auto var_weight = [&](int i) { return order.weights.empty() ? 1 : order.weights[i]; };
    auto retruncate = [&] {
        for (auto& g : basis) {
            if (g.terms.size() <= 1) continue;
            g.terms.erase(std::remove_if(g.terms.begin() + 1, g.terms.end(),
                                         [&](const auto& t) {
                                             return order.degree(t.first) >= trunc;
                                         }),
                          g.terms.end());
        }
    };
    auto note_lead = [&](const Exponents& lm) {
        if (order.tag != OrderTag::NegGradedRevLex) return;
        int var = -1;
        for (int i = 0; i < order.nvars; ++i) {
            if (lm[i] == 0) continue;
            if (var >= 0) return;
            var = i;
        }
        if (var < 0 || (pure[var] >= 0 && lm[var] >= pure[var])) return;
        pure[var] = lm[var];
        int bound = 1;
        for (int i = 0; i < order.nvars; ++i) {
            if (pure[i] < 0) return;
            bound += (pure[i] - 1) * var_weight(i);
        }
        if (bound >= trunc) return;
        trunc = bound;
        retruncate();
    };
    for (const auto& g : basis) note_lead(g.lm());

    while (!pairs.empty()) {
        // lowest lcm degree first, then the order-larger lcm
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].lcm_deg < pairs[best].lcm_deg ||
                (pairs[k].lcm_deg == pairs[best].lcm_deg &&
                 order.greater(pairs[k].lcm, pairs[best].lcm)))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);
        pair_done(pr.i, pr.j) = 1;

        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (divides(basis[k].lm(), pr.lcm) && pair_done(pr.i, k) && pair_done(k, pr.j))
                skip = true;
        }
        if (skip) continue;
        // two monomials: the s-polynomial vanishes identically
        if (basis[pr.i].terms.size() == 1 && basis[pr.j].terms.size() == 1) continue;

        OrderedPoly s = detail::spoly(basis[pr.i], basis[pr.j], order);
        OrderedPoly h = detail::mora_normal_form(std::move(s), basis, order, trunc);
        if (h.is_zero()) continue;
        if (is_unit(h)) {
            result.unit_ideal = true;
            result.elements = {Polynomial::constant(order.nvars, 1)};
            result.leading_terms = {Exponents(order.nvars, 0)};
            return result;
        }
        basis.push_back(std::move(h));
        push_pairs_for(basis.size() - 1);
        note_lead(basis.back().lm());
    }

    result.elements.reserve(basis.size());
    for (const auto& p : basis) result.elements.push_back(detail::to_polynomial(p, order.nvars));
    // minimal lead ideal generators
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(basis[j].lm(), basis[i].lm()) &&
                (basis[i].lm() != basis[j].lm() || j < i))
                redundant = true;
        }
        if (!redundant) result.leading_terms.push_back(basis[i].lm());
    }
    result.truncation_degree = trunc;
    return result;
}

// Weak normal form against a precomputed basis.
inline Polynomial normal_form(const Polynomial& f, const StandardBasis& sb) {
    if (sb.unit_ideal) return Polynomial::zero(sb.order.nvars);
    std::vector<detail::OrderedPoly> basis;
    basis.reserve(sb.elements.size());
    for (const auto& g : sb.elements) basis.push_back(detail::to_ordered(g, sb.order));
    auto h = detail::mora_normal_form(detail::to_ordered(f, sb.order), basis, sb.order,
                                      sb.truncation_degree);
    return detail::to_polynomial(h, sb.order.nvars);
}

// True iff g lies in the ideal generated in the localization.
inline bool local_membership(const Polynomial& g, const std::vector<Polynomial>& ideal) {
    if (g.is_zero()) return true;
    MonomialOrder order = local_order(g.nvars());
    StandardBasis sb = standard_basis(ideal, order);
    return normal_form(g, sb).is_zero();
}

}  // namespace hodgering

#endif
