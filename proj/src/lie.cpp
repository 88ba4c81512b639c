#include "cyclograd/lie.hpp"

#include "cyclograd/linalg.hpp"

#include <stdexcept>

namespace cyclograd {

VectorField vect_bracket(const VectorField& p, const VectorField& q) {
    if (p.n != q.n) throw std::invalid_argument("generator count mismatch");
    VectorField r(p.n);
    for (unsigned j = 0; j < p.n; ++j) r[j] = apply_field(p, q[j]) - apply_field(q, p[j]);
    return r;
}

VectorField gl_unit(unsigned i, unsigned k, unsigned n) {
    if (i < 1 || i > n || k < 1 || k > n) throw std::invalid_argument("generator index out of range");
    VectorField v(n);
    v[i - 1] = Polynomial::generator(n, k);
    return v;
}

VectorField inner_field(const Polynomial& p) {
    VectorField v(p.gens());
    for (unsigned j = 1; j <= p.gens(); ++j)
        v[j - 1] = commutator(p, Polynomial::generator(p.gens(), j));
    return v;
}

Polynomial inner_bracket_witness(const Polynomial& p, const VectorField& v) {
    return -apply_field(v, p);
}

GradedVectorField grade(const VectorField& v) {
    GradedVectorField g;
    g.field = v;
    auto d = v.degree();
    if (!d) return g;
    for (int deg = 0; deg <= *d; ++deg) {
        VectorField piece = v.homogeneous_component(deg);
        if (!piece.is_zero()) g.pieces.emplace(deg - 1, std::move(piece));
    }
    return g;
}

VectorField adjoint_chain(const std::vector<VectorField>& ks) {
    if (ks.empty()) throw std::invalid_argument("empty chain");
    VectorField acc = ks[0];
    for (std::size_t i = 1; i < ks.size(); ++i) acc = vect_bracket(ks[i], acc);
    return acc;
}

GradeBasisReport trace_preserving_basis(const TraceFunctional& tau, int k, unsigned n) {
    if (k < -1) throw std::invalid_argument("grade must be >= -1");
    if (tau.n != n) throw std::invalid_argument("generator count mismatch");
    std::vector<Word> comp_words = words_of_length(n, k + 1);
    std::size_t cols = static_cast<std::size_t>(n) * comp_words.size();

    DenseMatrix a;
    for (const Word& r : words_up_to_length(n, k + 2)) {
        DenseVec row(cols, Scalar(0));
        Polynomial mono = Polynomial::monomial(r, Scalar(1));
        bool nz = false;
        for (unsigned j = 1; j <= n; ++j) {
            Polynomial dj = cyclic_derivative(mono, j);
            if (dj.is_zero()) continue;
            for (std::size_t wi = 0; wi < comp_words.size(); ++wi) {
                Scalar val = tau(dj * Polynomial::monomial(comp_words[wi], Scalar(1)));
                if (!val.is_zero()) {
                    row[(j - 1) * comp_words.size() + wi] = val;
                    nz = true;
                }
            }
        }
        if (nz) a.push_back(std::move(row));
    }

    GradeBasisReport rep;
    rep.space_dim = static_cast<int>(cols);
    rep.pairing_rank = rank_of(a, static_cast<int>(cols));
    for (const DenseVec& x : nullspace(a, static_cast<int>(cols))) {
        VectorField v(n);
        for (unsigned j = 0; j < n; ++j)
            for (std::size_t wi = 0; wi < comp_words.size(); ++wi)
                v[j].add_term(comp_words[wi], x[j * comp_words.size() + wi]);
        rep.basis.push_back(std::move(v));
    }
    return rep;
}

} // namespace cyclograd
