#pragma once

#include "cyclograd/polynomial.hpp"

#include <functional>
#include <string>
#include <utility>

namespace cyclograd {

// Unital linear functional given by its values on monomials.  Tracial and
// positivity properties are promises of the supplied moment function; the
// verification suites test them where they matter.
struct TraceFunctional {
    unsigned n = 0;
    std::string name;
    std::function<Scalar(const Word&)> moment;

    TraceFunctional() = default;
    TraceFunctional(unsigned gens, std::string nm, std::function<Scalar(const Word&)> m)
        : n(gens), name(std::move(nm)), moment(std::move(m)) {}

    Scalar operator()(const Polynomial& p) const {
        if (p.gens() != n) throw std::invalid_argument("generator count mismatch");
        Scalar s;
        for (const auto& [w, c] : p.terms()) s += c * moment(w);
        return s;
    }
};

// tau(w) = [w = 1]: the trace of the left regular representation of the free group
// reads 1 on the empty word and 0 on every other monomial.
inline TraceFunctional pure_trace(unsigned n) {
    return TraceFunctional(n, "pure", [](const Word& w) { return Scalar(w.empty() ? 1 : 0); });
}

} // namespace cyclograd
