#pragma once

#include "cyclograd/scalar.hpp"
#include "cyclograd/word.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cyclograd {

// Element of the free associative unital algebra on n noncommuting generators
// over the Gaussian rationals.  Canonical form: a sorted term map keyed by the
// graded-lex word order, with no zero coefficients stored.
class Polynomial {
public:
    using TermMap = std::map<Word, Scalar>;

    Polynomial() : n_(0) {}
    explicit Polynomial(unsigned n) : n_(n) {}

    static Polynomial zero(unsigned n) { return Polynomial(n); }
    static Polynomial one(unsigned n) { return monomial(Word::unit(n), Scalar(1)); }
    static Polynomial generator(unsigned n, unsigned j) { return monomial(Word::gen(n, j), Scalar(1)); }
    static Polynomial constant(unsigned n, const Scalar& c) { return monomial(Word::unit(n), c); }
    static Polynomial monomial(const Word& w, const Scalar& c) {
        Polynomial p(w.n);
        p.add_term(w, c);
        return p;
    }

    unsigned gens() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Degree of the zero polynomial is the sentinel nullopt.
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return static_cast<int>(terms_.rbegin()->first.size());
    }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (w.n != n_) throw std::invalid_argument("generator count mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    Polynomial& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        return r *= Scalar(-1);
    }
    friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.n_);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) r.add_term(u.concat(v), cu * cv);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // (c X_{i1}...X_{ip})* = conj(c) X_{ip}...X_{i1}
    Polynomial involution() const {
        Polynomial r(n_);
        for (const auto& [w, c] : terms_) r.add_term(w.reversed(), c.conj());
        return r;
    }

    bool is_selfadjoint() const { return *this == involution(); }

    Polynomial homogeneous_component(int k) const {
        Polynomial r(n_);
        if (k < 0) return r;
        for (const auto& [w, c] : terms_)
            if (static_cast<int>(w.size()) == k) r.add_term(w, c);
        return r;
    }

    // Unital homomorphism sending generator j to args[j-1].
    Polynomial substitute(const std::vector<Polynomial>& args) const {
        if (args.size() != n_) throw std::invalid_argument("substitution arity mismatch");
        unsigned m = args.empty() ? n_ : args[0].gens();
        for (const auto& a : args)
            if (a.gens() != m) throw std::invalid_argument("generator count mismatch");
        Polynomial r(m);
        for (const auto& [w, c] : terms_) {
            Polynomial t = Polynomial::constant(m, c);
            for (unsigned l : w.letters) t = t * args[l - 1];
            r += t;
        }
        return r;
    }

private:
    void check_same(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("generator count mismatch");
    }

    unsigned n_;
    TermMap terms_;
};

inline Polynomial commutator(const Polynomial& a, const Polynomial& b) { return a * b - b * a; }

// C(X_{i1}...X_{ip}) = sum of the p cyclic rotations; C(1) = 0.
Polynomial cyclic_symmetrize(const Polynomial& p);

// Element of the algebraic tensor square, kept as a sorted map on word pairs.
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;
    using TermMap = std::map<Key, Scalar>;

    TensorPoly() : n_(0) {}
    explicit TensorPoly(unsigned n) : n_(n) {}

    static TensorPoly unit_tensor(unsigned n) {
        TensorPoly t(n);
        t.add_term(Word::unit(n), Word::unit(n), Scalar(1));
        return t;
    }

    unsigned gens() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& u, const Word& v, const Scalar& c) {
        if (u.n != n_ || v.n != n_) throw std::invalid_argument("generator count mismatch");
        if (c.is_zero()) return;
        Key k{u, v};
        auto [it, inserted] = terms_.emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorPoly& operator+=(const TensorPoly& o) {
        check_same(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        check_same(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    TensorPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const Scalar& c, TensorPoly t) { return t *= c; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check_same(const TensorPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("generator count mismatch");
    }

    unsigned n_;
    TermMap terms_;
};

TensorPoly simple_tensor(const Polynomial& a, const Polynomial& b);

// a (u (x) v) b = (a u) (x) (v b), the bimodule action on the tensor square.
TensorPoly tensor_bimodule_mul(const Polynomial& a, const TensorPoly& t, const Polynomial& b);

// u (x) v  ->  v (x) u
TensorPoly tensor_flip(const TensorPoly& t);

// (u (x) v)* = u* (x) v*, with the coefficient conjugated.
TensorPoly tensor_star(const TensorPoly& t);

} // namespace cyclograd
