#ifndef HODGERING_ERRORS_HPP
#define HODGERING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hodgering {

// Quotient by the Jacobian ideal is infinite: the singular locus has
// positive dimension at the base point.
struct NonIsolatedError : std::runtime_error {
    explicit NonIsolatedError(const std::string& what) : std::runtime_error(what) {}
};

// The germ is smooth at the base point.
struct NotSingularError : std::runtime_error {
    explicit NotSingularError(const std::string& what) : std::runtime_error(what) {}
};

struct NotQuasiHomogeneousError : std::runtime_error {
    explicit NotQuasiHomogeneousError(const std::string& what) : std::runtime_error(what) {}
};

// H^0 of log n-forms does not vanish; the four-term sequence bookkeeping
// is unavailable.
struct PrecondH0Error : std::runtime_error {
    explicit PrecondH0Error(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteSingularListError : std::runtime_error {
    explicit IncompleteSingularListError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hodgering

#endif
