#ifndef HODGERING_POLYNOMIAL_HPP
#define HODGERING_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgering/rational.hpp"

namespace hodgering {

// Monomial exponents; length is fixed by the ambient variable count.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

enum class OrderTag {
    GradedRevLex,     // global: 1 is the smallest monomial
    NegGradedRevLex,  // local: 1 is the largest monomial
};

// Tie-break shared by both orders: among equal total degrees, a < b iff
// the last index where they differ has a_i > b_i.
inline bool revlex_tie_less(const Exponents& a, const Exponents& b) {
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct MonomialOrder {
    OrderTag tag = OrderTag::GradedRevLex;
    int nvars = 0;
    // Optional positive integer weights; empty means weight 1 for every
    // variable (plain total degree).
    std::vector<int> weights;

    int degree(const Exponents& e) const {
        if (weights.empty()) return total_degree(e);
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
        return d;
    }

    bool less(const Exponents& a, const Exponents& b) const {
        int da = degree(a), db = degree(b);
        if (da != db)
            return tag == OrderTag::GradedRevLex ? da < db : da > db;
        return revlex_tie_less(a, b);
    }
    bool greater(const Exponents& a, const Exponents& b) const { return less(b, a); }
};

inline MonomialOrder global_order(int nvars) { return {OrderTag::GradedRevLex, nvars, {}}; }
inline MonomialOrder local_order(int nvars) { return {OrderTag::NegGradedRevLex, nvars, {}}; }

inline MonomialOrder weighted_local_order(int nvars, std::vector<int> weights) {
    if (static_cast<int>(weights.size()) != nvars)
        throw std::invalid_argument("weight count != variable count");
    for (int w : weights)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    return {OrderTag::NegGradedRevLex, nvars, std::move(weights)};
}

// Map comparator placing the largest monomial (graded revlex) first, so
// iteration order matches canonical printing.
struct GrevlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return revlex_tie_less(b, a);
    }
};

// Sparse multivariate polynomial over the rationals. Immutable in spirit:
// all operations return new values. No stored coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrevlexDescending>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, const Rational& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
        return p;
    }

    static Polynomial monomial(int nvars, const Exponents& e, const Rational& c = 1) {
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("exponent length != variable count");
        Polynomial p(nvars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    static Polynomial variable(int nvars, int i, int power = 1) {
        Exponents e(nvars, 0);
        e[i] = power;
        return monomial(nvars, e);
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
    }

    int min_degree() const {
        int m = -1;
        for (const auto& [e, c] : terms_) {
            int d = total_degree(e);
            if (m < 0 || d < m) m = d;
        }
        return m;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = degree();
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Exponents(nvars_, 0)); }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_vars(b);
        Polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("point dimension != variable count");
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational v = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) v *= point[i];
            sum += v;
        }
        return sum;
    }

private:
    void check_vars(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

inline Polynomial partial_derivative(const Polynomial& f, int i) {
    if (i < 0 || i >= f.nvars())
        throw std::out_of_range("variable index out of range");
    Polynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * e[i]);
    }
    return r;
}

// g(y) = f(y + p).
inline Polynomial translate_to_origin(const Polynomial& f, const std::vector<Rational>& p) {
    if (static_cast<int>(p.size()) != f.nvars())
        throw std::invalid_argument("point dimension != variable count");
    bool origin = std::all_of(p.begin(), p.end(), [](const Rational& q) { return q == 0; });
    if (origin) return f;

    // Cache (x_i + p_i)^k per variable as needed.
    std::vector<std::vector<Polynomial>> powers(f.nvars());
    auto shifted_power = [&](int i, int k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(f.nvars(), 1));
        while (static_cast<int>(cache.size()) <= k) {
            Polynomial lin = Polynomial::variable(f.nvars(), i) + Polynomial::constant(f.nvars(), p[i]);
            cache.push_back(cache.back() * lin);
        }
        return cache[k];
    };

    Polynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Polynomial t = Polynomial::constant(f.nvars(), c);
        for (int i = 0; i < f.nvars(); ++i)
            if (e[i] > 0) t = t * shifted_power(i, e[i]);
        r += t;
    }
    return r;
}

// Sets the chart variable to 1; the result lives in the remaining variables.
inline Polynomial dehomogenize(const Polynomial& F, int chart) {
    if (!F.is_homogeneous())
        throw std::invalid_argument("dehomogenize: input is not homogeneous");
    if (chart < 0 || chart >= F.nvars())
        throw std::out_of_range("chart index out of range");
    Polynomial r(F.nvars() - 1);
    for (const auto& [e, c] : F.terms()) {
        Exponents d;
        d.reserve(e.size() - 1);
        for (int i = 0; i < F.nvars(); ++i)
            if (i != chart) d.push_back(e[i]);
        r.add_term(d, c);
    }
    return r;
}

// Euler identity sum x_i dF/dx_i = deg(F) * F, exact.
inline bool euler_check(const Polynomial& F) {
    if (!F.is_homogeneous())
        throw std::invalid_argument("euler_check: input is not homogeneous");
    if (F.is_zero()) return true;
    Polynomial sum(F.nvars());
    for (int i = 0; i < F.nvars(); ++i)
        sum += Polynomial::variable(F.nvars(), i) * partial_derivative(F, i);
    return sum == Rational(F.degree()) * F;
}

// Canonical printing: decreasing graded revlex order, explicit '^',
// '*' between all factors.
inline std::string to_string(const Polynomial& f, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != f.nvars())
        throw std::invalid_argument("variable name count mismatch");
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = total_degree(e) > 0;
        bool printed = false;
        if (a != 1 || !has_var) {
            out << to_string(a);
            printed = true;
        }
        for (int i = 0; i < f.nvars(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << vars[i];
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

}  // namespace hodgering

#endif
