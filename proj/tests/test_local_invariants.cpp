#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hodgering/parser.hpp"
#include "hodgering/spectrum.hpp"
#include "oracles.hpp"

using namespace hodgering;

namespace {
const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

LocalGerm germ(const std::string& text, const std::vector<std::string>& vars) {
    return LocalGerm(parse_polynomial(text, vars));
}
}  // namespace

TEST_CASE("Milnor numbers of the named germs") {
    CHECK(milnor_number(germ("x^2+y^2+z^2", xyz)) == 1);
    CHECK(milnor_number(germ("x^7+x^4*y^2+x^2*y^4+y^7+z^2", xyz)) == 27);
    CHECK(milnor_number(germ("x^3+y^10+z^19", xyz)) == 324);
}

TEST_CASE("Tjurina numbers") {
    CHECK(tjurina_number(germ("x^7+x^4*y^2+x^2*y^4+y^7+z^2", xyz)) == 23);
    CHECK(tjurina_number(germ("x^3+y^10+z^19", xyz)) == 324);  // tau = mu, quasi-homogeneous
    LocalGerm cusp = germ("x^2+y^3+z^7+x*y*z", xyz);
    CHECK(tjurina_number(cusp) == milnor_number(cusp) - 1);
}

TEST_CASE("Milnor algebra bases") {
    CHECK(milnor_basis(germ("x^2+y^2", xy)).monomials == std::vector<Exponents>{{0, 0}});

    auto b = milnor_basis(germ("x^2+y^3", xy));
    REQUIRE(b.mu() == 2);
    CHECK(b.monomials == std::vector<Exponents>{{0, 0}, {0, 1}});

    auto t = milnor_basis(germ("x^3+y^3", xy));
    REQUIRE(t.mu() == 4);
    for (const Exponents& e : {Exponents{0, 0}, Exponents{1, 0}, Exponents{0, 1}, Exponents{1, 1}})
        CHECK(std::find(t.monomials.begin(), t.monomials.end(), e) != t.monomials.end());
}

TEST_CASE("error conditions") {
    CHECK_THROWS_AS(milnor_number(germ("x^2*y^2", xy)), NonIsolatedError);
    CHECK_THROWS_AS(milnor_number(LocalGerm::at_point(parse_polynomial("x*y", xy),
                                                      {Rational(1), Rational(0)})),
                    NotSingularError);
    CHECK_THROWS_AS(LocalGerm(parse_polynomial("x+1", xy)), std::invalid_argument);
}

TEST_CASE("mu >= tau >= 1 and mu = tau exactly for quasi-homogeneous germs") {
    const std::vector<std::pair<std::string, const std::vector<std::string>*>> corpus{
        {"x^2+y^3", &xy},          {"x^3+y^5", &xy},
        {"x^4+x*y^3", &xy},        {"x^2+y^2+z^2", &xyz},
        {"x^3+y^4+z^2", &xyz},     {"x^2+y^3+z^7+x*y*z", &xyz},
        {"x^3+y^7+x*y^5+z^2", &xyz}};
    for (const auto& [text, vars] : corpus) {
        LocalGerm g = germ(text, *vars);
        int mu = milnor_number(g), tau = tjurina_number(g);
        CHECK(mu >= tau);
        CHECK(tau >= 1);
        CHECK((mu == tau) == static_cast<bool>(find_weights(g)));
    }
}

TEST_CASE("Milnor-Orlik product formula for Brieskorn germs") {
    for (const auto& exps : std::vector<std::vector<int>>{{2, 3}, {3, 5}, {4, 4},
                                                          {2, 3, 5}, {3, 4, 2}, {5, 11, 2}}) {
        const int n = static_cast<int>(exps.size());
        Polynomial f(n);
        int mu_expected = 1;
        for (int i = 0; i < n; ++i) {
            f += Polynomial::variable(n, i, exps[i]);
            mu_expected *= exps[i] - 1;
        }
        CHECK(milnor_number(LocalGerm(f)) == mu_expected);
    }
}

TEST_CASE("brute-force truncated quotient agrees for small germs") {
    const std::vector<std::pair<std::string, const std::vector<std::string>*>> corpus{
        {"x^2+y^2", &xy},      {"x^2+y^3", &xy},          {"x^3+y^3", &xy},
        {"x^3+y^4", &xy},      {"x^2+y^3+z^2", &xyz},     {"x^3+y^3+z^3", &xyz}};
    for (const auto& [text, vars] : corpus) {
        LocalGerm g = germ(text, *vars);
        int mu = milnor_number(g);
        REQUIRE(mu <= 12);
        CHECK(oracles::truncated_quotient_dim(g.jacobian_generators(), g.nvars(), 2 * mu) == mu);
        CHECK(oracles::truncated_quotient_dim(g.tjurina_generators(), g.nvars(), 2 * mu) ==
              tjurina_number(g));
    }
}

TEST_CASE("mu and tau are invariant under linear coordinate changes") {
    std::mt19937_64 rng(41);
    const std::vector<std::pair<std::string, const std::vector<std::string>*>> corpus{
        {"x^2+y^3", &xy}, {"x^3+y^3", &xy}, {"x^3+y^4+z^2", &xyz}, {"x^2+y^3+z^7+x*y*z", &xyz}};
    for (const auto& [text, vars] : corpus) {
        LocalGerm g = germ(text, *vars);
        int mu = milnor_number(g), tau = tjurina_number(g);
        for (int change = 0; change < 5; ++change) {
            auto a = oracles::random_invertible(g.nvars(), rng);
            LocalGerm h(oracles::linear_change(g.f, a));
            CHECK(milnor_number(h) == mu);
            CHECK(tjurina_number(h) == tau);
        }
    }
}
