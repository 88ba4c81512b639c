#pragma once

#include "cyclograd/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace cyclograd {

// n-tuple of polynomials, read as the noncommutative vector field sending
// generator j to component j.
struct VectorField {
    unsigned n = 0;
    std::vector<Polynomial> components;

    VectorField() = default;
    explicit VectorField(unsigned gens) : n(gens), components(gens, Polynomial(gens)) {}
    VectorField(unsigned gens, std::vector<Polynomial> comps) : n(gens), components(std::move(comps)) {
        if (components.size() != n) throw std::invalid_argument("vector field arity mismatch");
        for (const auto& p : components)
            if (p.gens() != n) throw std::invalid_argument("generator count mismatch");
    }

    static VectorField zero(unsigned gens) { return VectorField(gens); }

    // The Euler field (X_1, ..., X_n).
    static VectorField euler(unsigned gens) {
        VectorField v(gens);
        for (unsigned j = 1; j <= gens; ++j) v.components[j - 1] = Polynomial::generator(gens, j);
        return v;
    }

    const Polynomial& operator[](unsigned j) const { return components.at(j); } // 0-based
    Polynomial& operator[](unsigned j) { return components.at(j); }

    bool is_zero() const {
        for (const auto& p : components)
            if (!p.is_zero()) return false;
        return true;
    }

    VectorField& operator+=(const VectorField& o) {
        check_same(o);
        for (unsigned j = 0; j < n; ++j) components[j] += o.components[j];
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        check_same(o);
        for (unsigned j = 0; j < n; ++j) components[j] -= o.components[j];
        return *this;
    }
    VectorField& operator*=(const Scalar& c) {
        for (auto& p : components) p *= c;
        return *this;
    }

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Scalar& c, VectorField v) { return v *= c; }
    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.n == b.n && a.components == b.components;
    }

    VectorField involution() const {
        VectorField r(n);
        for (unsigned j = 0; j < n; ++j) r.components[j] = components[j].involution();
        return r;
    }

    bool is_selfadjoint() const { return *this == involution(); }

    // Componentwise homogeneous part of degree k.
    VectorField homogeneous_component(int k) const {
        VectorField r(n);
        for (unsigned j = 0; j < n; ++j) r.components[j] = components[j].homogeneous_component(k);
        return r;
    }

    // Largest component degree, nullopt for the zero field.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& p : components)
            if (auto pd = p.degree(); pd && (!d || *pd > *d)) d = pd;
        return d;
    }

private:
    void check_same(const VectorField& o) const {
        if (n != o.n) throw std::invalid_argument("generator count mismatch");
    }
};

} // namespace cyclograd
