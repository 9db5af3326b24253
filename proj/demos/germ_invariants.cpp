// Computes the local invariants of a few named germs with the library API.
#include <cstdio>

#include "hodgering/criteria.hpp"
#include "hodgering/parser.hpp"

using namespace hodgering;

static void report(const char* text, const std::vector<std::string>& vars) {
    LocalGerm g(parse_polynomial(text, vars));
    int mu = milnor_number(g);
    int tau = tjurina_number(g);
    std::printf("%-32s mu=%-4d tau=%-4d", text, mu, tau);
    if (auto w = find_weights(g)) {
        Spectrum sp = spectrum_qh(g);
        HodgeNumbers h = hodge_numbers(sp);
        std::printf(" s=(");
        for (size_t k = 0; k < h.s.size(); ++k)
            std::printf("%s%d", k ? "," : "", h.s[k]);
        std::printf(")");
        if (g.dimension() == 2) std::printf(" p_g=%d", geometric_genus(g));
        ClassVerdict v = class_test(g);
        std::printf(" class=%s", v.in_class ? "yes" : "no");
    } else {
        std::printf(" (not quasi-homogeneous)");
    }
    std::printf("\n");
}

int main() {
    const std::vector<std::string> xyz{"x", "y", "z"};
    report("x^2+y^2+z^2", xyz);
    report("x^3+y^4+z^2", xyz);
    report("x^5+y^11+z^2", xyz);
    report("x^7+x^4*y^2+x^2*y^4+y^7+z^2", xyz);
    report("x^2+y^3+z^7+x*y*z", xyz);

    // randomized search for the minimal Tjurina number on the mu-constant
    // stratum of x^5+y^11+z^2
    TauMinResult r = tau_min_search(LocalGerm(parse_polynomial("x^5+y^11+z^2", xyz)), 32, 0);
    std::printf("tau_min search: mu=%d tau_min=%d over %d samples\n", r.mu, r.tau_min,
                r.samples);
    return 0;
}
