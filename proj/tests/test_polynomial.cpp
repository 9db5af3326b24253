#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hodgering/parser.hpp"
#include "hodgering/polynomial.hpp"

using namespace hodgering;

namespace {

Polynomial random_poly(int nvars, std::mt19937_64& rng, int max_terms = 6, int max_exp = 4) {
    Polynomial p(nvars);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>(rng() % (max_exp + 1));
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 4);
        if (num != 0) p.add_term(e, Rational(num) / den);
    }
    return p;
}

}  // namespace

TEST_CASE("parser reads the basic grammar") {
    const std::vector<std::string> xyz{"x", "y", "z"};
    Polynomial p = parse_polynomial("x^2+y^2+z^2", xyz);
    CHECK(p.terms().size() == 3);
    CHECK(p.degree() == 2);

    Polynomial q = parse_polynomial("x^7+x^4*y^2+x^2*y^4+y^7+z^2", xyz);
    CHECK(q.terms().size() == 5);
    CHECK(q.degree() == 7);

    CHECK(parse_polynomial("3/2*x - y", {"x", "y"}).coeff({1, 0}) == Rational(3) / 2);
    CHECK_THROWS_AS(parse_polynomial("x^2+q", {"x", "y"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^(2)", {"x"}), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(7);
    const std::vector<std::string> names{"x", "y", "z"};
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(3, rng);
        CHECK(parse_polynomial(to_string(p, names), names) == p);
    }
}

TEST_CASE("partial derivatives") {
    const std::vector<std::string> xy{"x", "y"};
    Polynomial f = parse_polynomial("x^2+y^3", xy);
    CHECK(partial_derivative(f, 0) == parse_polynomial("2*x", xy));
    CHECK(partial_derivative(parse_polynomial("y^3", xy), 0).is_zero());

    const std::vector<std::string> xyz{"x", "y", "z"};
    Polynomial g = parse_polynomial("x^7+x^4*y^2+x^2*y^4+y^7+z^2", xyz);
    CHECK(partial_derivative(g, 2) == parse_polynomial("2*z", xyz));
}

TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(2, rng), g = random_poly(2, rng);
        for (int i = 0; i < 2; ++i)
            CHECK(partial_derivative(f * g, i) ==
                  partial_derivative(f, i) * g + f * partial_derivative(g, i));
    }
}

TEST_CASE("Euler identity") {
    const std::vector<std::string> v{"a", "b", "c", "d"};
    CHECK(euler_check(parse_polynomial("a^4+b^4+c^4+d^4", v)));
    CHECK(euler_check(parse_polynomial("a*b^3", v)));
    CHECK_THROWS_AS(euler_check(parse_polynomial("a^2+b^3", v)), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        // random homogeneous polynomial of degree 3
        Polynomial F(3);
        for (int t = 0; t < 5; ++t) {
            Exponents e(3, 0);
            int rest = 3;
            for (int i = 0; i < 2; ++i) {
                e[i] = static_cast<int>(rng() % (rest + 1));
                rest -= e[i];
            }
            e[2] = rest;
            F.add_term(e, Rational(static_cast<long>(rng() % 9) + 1));
        }
        CHECK(euler_check(F));
    }
}

TEST_CASE("translate_to_origin") {
    const std::vector<std::string> x{"x"};
    CHECK(translate_to_origin(parse_polynomial("x^2", x), {Rational(1)}) ==
          parse_polynomial("x^2+2*x+1", x));

    const std::vector<std::string> xy{"x", "y"};
    Polynomial f = parse_polynomial("x^2+y^2", xy);
    CHECK(translate_to_origin(f, {Rational(0), Rational(0)}) == f);
    CHECK(translate_to_origin(parse_polynomial("x*y", xy), {Rational(1), Rational(-1)}) ==
          parse_polynomial("x*y-x+y-1", xy));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(2, rng);
        std::vector<Rational> pt{Rational(static_cast<long>(rng() % 7) - 3),
                                 Rational(static_cast<long>(rng() % 7) - 3) / 2};
        CHECK(translate_to_origin(translate_to_origin(p, pt), {-pt[0], -pt[1]}) == p);
    }
}

TEST_CASE("dehomogenize") {
    const std::vector<std::string> v{"u", "w"};
    CHECK(dehomogenize(parse_polynomial("u^2+w^2", v), 0) == parse_polynomial("1+w^2", {"w"}));
    const std::vector<std::string> v3{"u", "w", "t"};
    CHECK(dehomogenize(parse_polynomial("u*w-t^2", v3), 0) ==
          parse_polynomial("w-t^2", {"w", "t"}));
    CHECK(dehomogenize(parse_polynomial("w^3", v3), 1) == Polynomial::constant(2, 1));
    CHECK_THROWS_AS(dehomogenize(parse_polynomial("u^2+w^3", v), 0), std::invalid_argument);
}

TEST_CASE("monomial orders") {
    MonomialOrder global = global_order(2);
    MonomialOrder local = local_order(2);
    Exponents one{0, 0}, x{1, 0}, y2{0, 2};
    CHECK(global.less(one, x));   // 1 is smallest globally
    CHECK(local.greater(one, x));  // 1 is largest locally
    CHECK(local.greater(x, y2));   // lower degree is larger locally

    MonomialOrder w = weighted_local_order(2, {2, 3});
    CHECK(w.degree(Exponents{2, 1}) == 7);
    CHECK(w.greater(Exponents{1, 0}, Exponents{0, 1}));  // weight 2 beats weight 3
    CHECK_THROWS_AS(weighted_local_order(2, {1, 0}), std::invalid_argument);
}
