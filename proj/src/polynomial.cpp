#include "cyclograd/polynomial.hpp"

namespace cyclograd {

Polynomial cyclic_symmetrize(const Polynomial& p) {
    Polynomial r(p.gens());
    for (const auto& [w, c] : p.terms()) {
        std::size_t len = w.size();
        for (std::size_t j = 1; j <= len; ++j) r.add_term(cyclic_rotate(w, static_cast<long>(j)), c);
    }
    return r;
}

TensorPoly simple_tensor(const Polynomial& a, const Polynomial& b) {
    if (a.gens() != b.gens()) throw std::invalid_argument("generator count mismatch");
    TensorPoly t(a.gens());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) t.add_term(u, v, cu * cv);
    return t;
}

TensorPoly tensor_bimodule_mul(const Polynomial& a, const TensorPoly& t, const Polynomial& b) {
    if (a.gens() != t.gens() || b.gens() != t.gens())
        throw std::invalid_argument("generator count mismatch");
    TensorPoly r(t.gens());
    for (const auto& [k, c] : t.terms())
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms())
                r.add_term(u.concat(k.first), k.second.concat(v), c * cu * cv);
    return r;
}

TensorPoly tensor_flip(const TensorPoly& t) {
    TensorPoly r(t.gens());
    for (const auto& [k, c] : t.terms()) r.add_term(k.second, k.first, c);
    return r;
}

TensorPoly tensor_star(const TensorPoly& t) {
    TensorPoly r(t.gens());
    for (const auto& [k, c] : t.terms())
        r.add_term(k.first.reversed(), k.second.reversed(), c.conj());
    return r;
}

} // namespace cyclograd
