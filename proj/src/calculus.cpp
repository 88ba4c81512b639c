#include "cyclograd/calculus.hpp"

namespace cyclograd {

TensorPoly free_difference_quotient(const Polynomial& p, unsigned j) {
    if (j < 1 || j > p.gens()) throw std::invalid_argument("generator index out of range");
    TensorPoly t(p.gens());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w.letters[k] != j) continue;
            t.add_term(w.subword(0, k), w.subword(k + 1, w.size() - k - 1), c);
        }
    }
    return t;
}

Polynomial mu_tilde(const TensorPoly& t) {
    Polynomial r(t.gens());
    for (const auto& [k, c] : t.terms()) r.add_term(k.second.concat(k.first), c);
    return r;
}

Polynomial cyclic_derivative(const Polynomial& p, unsigned j) {
    if (j < 1 || j > p.gens()) throw std::invalid_argument("generator index out of range");
    Polynomial r(p.gens());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w.letters[k] != j) continue;
            Word rot(w.n);
            rot.letters.reserve(w.size() - 1);
            rot.letters.insert(rot.letters.end(), w.letters.begin() + k + 1, w.letters.end());
            rot.letters.insert(rot.letters.end(), w.letters.begin(), w.letters.begin() + k);
            r.add_term(rot, c);
        }
    }
    return r;
}

Polynomial cyclic_derivative_via_quotient(const Polynomial& p, unsigned j) {
    return mu_tilde(free_difference_quotient(p, j));
}

VectorField cyclic_gradient(const Polynomial& p) {
    VectorField v(p.gens());
    for (unsigned j = 1; j <= p.gens(); ++j) v[j - 1] = cyclic_derivative(p, j);
    return v;
}

Polynomial theta(const VectorField& v) {
    Polynomial r(v.n);
    for (unsigned j = 1; j <= v.n; ++j)
        r += commutator(Polynomial::generator(v.n, j), v[j - 1]);
    return r;
}

Polynomial m_a(const TensorPoly& t, const Polynomial& a) {
    if (t.gens() != a.gens()) throw std::invalid_argument("generator count mismatch");
    Polynomial r(t.gens());
    for (const auto& [k, c] : t.terms())
        for (const auto& [w, cw] : a.terms())
            r.add_term(k.first.concat(w).concat(k.second), c * cw);
    return r;
}

Polynomial apply_field(const VectorField& k, const Polynomial& p) {
    if (k.n != p.gens()) throw std::invalid_argument("generator count mismatch");
    Polynomial r(p.gens());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const Polynomial& rep = k[w.letters[pos] - 1];
            for (const auto& [u, cu] : rep.terms()) {
                Word out(w.n);
                out.letters.reserve(w.size() - 1 + u.size());
                out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
                out.letters.insert(out.letters.end(), u.letters.begin(), u.letters.end());
                out.letters.insert(out.letters.end(), w.letters.begin() + pos + 1, w.letters.end());
                r.add_term(out, c * cu);
            }
        }
    }
    return r;
}

Polynomial apply_field_via_quotients(const VectorField& k, const Polynomial& p) {
    if (k.n != p.gens()) throw std::invalid_argument("generator count mismatch");
    Polynomial r(p.gens());
    for (unsigned j = 1; j <= k.n; ++j)
        r += m_a(free_difference_quotient(p, j), k[j - 1]);
    return r;
}

Polynomial iterated_field(const VectorField& k, const Polynomial& p, unsigned m) {
    Polynomial r = p;
    for (unsigned i = 0; i < m; ++i) r = apply_field(k, r);
    return r;
}

namespace {

// Dual-number pair a + eps b with eps^2 = 0; an evaluation route for the
// first-order term that never forms D_K directly.
struct Jet {
    Polynomial value, eps;
};

Jet jet_mul(const Jet& a, const Jet& b) {
    return Jet{a.value * b.value, a.value * b.eps + a.eps * b.value};
}

} // namespace

FirstVariation first_variation(const TraceFunctional& tau, const Polynomial& p, const VectorField& k) {
    if (tau.n != p.gens() || k.n != p.gens())
        throw std::invalid_argument("generator count mismatch");
    unsigned n = p.gens();
    Polynomial first_order(n);
    for (const auto& [w, c] : p.terms()) {
        Jet acc{Polynomial::constant(n, c), Polynomial::zero(n)};
        for (unsigned l : w.letters)
            acc = jet_mul(acc, Jet{Polynomial::generator(n, l), k[l - 1]});
        first_order += acc.eps;
    }
    FirstVariation fv;
    fv.lhs = tau(first_order);
    fv.rhs = Scalar(0);
    for (unsigned j = 1; j <= n; ++j) fv.rhs += tau(cyclic_derivative(p, j) * k[j - 1]);
    return fv;
}

std::vector<Word> words_of_length(unsigned n, int len) {
    std::vector<Word> out;
    if (len < 0) return out;
    Word w(n);
    w.letters.assign(static_cast<std::size_t>(len), 1);
    while (true) {
        out.push_back(w);
        int pos = len - 1;
        while (pos >= 0 && w.letters[pos] == n) {
            w.letters[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++w.letters[pos];
    }
    if (len == 0) out.resize(1);
    return out;
}

std::vector<Word> words_up_to_length(unsigned n, int len) {
    std::vector<Word> out;
    for (int l = 0; l <= len; ++l) {
        auto ws = words_of_length(n, l);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

GradientPreimage cyclic_gradient_preimage(const VectorField& v) {
    GradientPreimage result;
    unsigned n = v.n;
    Polynomial witness(n);
    std::optional<int> vdeg = v.degree();
    if (!vdeg) {
        result.witness = witness;
        return result;
    }
    for (int m = 0; m <= *vdeg; ++m) {
        VectorField part = v.homogeneous_component(m);
        if (part.is_zero()) continue;
        // Solve cyclic_gradient(P) = part with P homogeneous of degree m + 1.
        std::vector<Word> unknowns = words_of_length(n, m + 1);
        std::vector<Word> rows_words = words_of_length(n, m);
        std::size_t rows = static_cast<std::size_t>(n) * rows_words.size();
        DenseMatrix a(rows, DenseVec(unknowns.size(), Scalar(0)));
        DenseVec b(rows, Scalar(0));
        std::map<Word, std::size_t> row_index;
        for (std::size_t i = 0; i < rows_words.size(); ++i) row_index[rows_words[i]] = i;
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            Polynomial mono = Polynomial::monomial(unknowns[col], Scalar(1));
            for (unsigned j = 1; j <= n; ++j) {
                Polynomial dj = cyclic_derivative(mono, j);
                for (const auto& [w, c] : dj.terms())
                    a[(j - 1) * rows_words.size() + row_index[w]][col] += c;
            }
        }
        for (unsigned j = 1; j <= n; ++j)
            for (const auto& [w, c] : part[j - 1].terms())
                b[(j - 1) * rows_words.size() + row_index[w]] = c;
        auto x = solve(a, b);
        if (!x) {
            result.obstruction_degree = m;
            return result;
        }
        for (std::size_t col = 0; col < unknowns.size(); ++col)
            witness.add_term(unknowns[col], (*x)[col]);
    }
    result.witness = witness;
    return result;
}

bool is_trace_preserving(const VectorField& k, const TraceFunctional& tau, int max_degree) {
    if (k.n != tau.n) throw std::invalid_argument("generator count mismatch");
    for (int d = 0; d <= max_degree; ++d)
        for (const Word& w : words_of_length(k.n, d))
            if (!tau(apply_field(k, Polynomial::monomial(w, Scalar(1)))).is_zero()) return false;
    return true;
}

bool is_trace_preserving_via_gradients(const VectorField& k, const TraceFunctional& tau, int max_degree) {
    if (k.n != tau.n) throw std::invalid_argument("generator count mismatch");
    for (int d = 0; d <= max_degree; ++d)
        for (const Word& w : words_of_length(k.n, d)) {
            Scalar s;
            Polynomial mono = Polynomial::monomial(w, Scalar(1));
            for (unsigned j = 1; j <= k.n; ++j) s += tau(cyclic_derivative(mono, j) * k[j - 1]);
            if (!s.is_zero()) return false;
        }
    return true;
}

ComplementReport orthogonal_complement_of_gradients(const TraceFunctional& tau, int k) {
    unsigned n = tau.n;
    std::vector<Word> comp_words = words_up_to_length(n, k);
    std::size_t cols = static_cast<std::size_t>(n) * comp_words.size();

    // One pairing row per source monomial P of degree <= k + 1.
    std::vector<Word> sources = words_up_to_length(n, k + 1);
    DenseMatrix a;
    a.reserve(sources.size());
    for (const Word& p : sources) {
        DenseVec row(cols, Scalar(0));
        Polynomial mono = Polynomial::monomial(p, Scalar(1));
        for (unsigned j = 1; j <= n; ++j) {
            Polynomial dj = cyclic_derivative(mono, j);
            if (dj.is_zero()) continue;
            for (std::size_t wi = 0; wi < comp_words.size(); ++wi)
                row[(j - 1) * comp_words.size() + wi] =
                    tau(dj * Polynomial::monomial(comp_words[wi], Scalar(1)));
        }
        a.push_back(std::move(row));
    }

    ComplementReport rep;
    rep.gram_dim = static_cast<int>(sources.size());
    {
        // Monomial Gram matrix of the bilinear pairing, reported so callers can
        // notice degenerate traces.
        DenseMatrix gram;
        for (const Word& u : sources) {
            DenseVec row;
            row.reserve(sources.size());
            for (const Word& v : sources) row.push_back(tau.moment(u.concat(v)));
            gram.push_back(std::move(row));
        }
        rep.gram_rank = rank_of(gram, static_cast<int>(sources.size()));
    }

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
