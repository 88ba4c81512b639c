#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclograd/calculus.hpp"
#include "cyclograd/polynomial.hpp"
#include "cyclograd/semicircular.hpp"
#include "cyclograd/trace.hpp"

#include <random>
#include <vector>

using namespace cyclograd;

namespace {

Word w(unsigned n, std::vector<unsigned> ls) { return Word(n, std::move(ls)); }
Polynomial mono(unsigned n, std::vector<unsigned> ls, Scalar c = Scalar(1)) {
    return Polynomial::monomial(w(n, std::move(ls)), c);
}

// Independent oracle for the difference quotient: Leibniz recursion from the
// left instead of enumerating split points.
//   d_j 1 = 0,   d_j (X_i w) = [i = j] 1 (x) w + (X_i (x) 1) d_j w
TensorPoly dq_oracle(const Word& word, unsigned j) {
    TensorPoly t(word.n);
    if (word.empty()) return t;
    unsigned head = word.letters[0];
    Word rest = word.subword(1, word.size() - 1);
    if (head == j) t.add_term(Word::unit(word.n), rest, Scalar(1));
    TensorPoly tail = dq_oracle(rest, j);
    for (const auto& [key, c] : tail.terms()) {
        Word u = Word::gen(word.n, head).concat(key.first);
        t.add_term(u, key.second, c);
    }
    return t;
}

TensorPoly dq_oracle(const Polynomial& p, unsigned j) {
    TensorPoly t(p.gens());
    for (const auto& [word, c] : p.terms()) {
        TensorPoly s = dq_oracle(word, j);
        s *= c;
        t += s;
    }
    return t;
}

// Independent oracle for the cyclic derivative: for each occurrence of X_j in
// the word take the rotation that places the occurrence last, then drop it.
Polynomial cd_oracle(const Polynomial& p, unsigned j) {
    Polynomial r(p.gens());
    for (const auto& [word, c] : p.terms())
        for (std::size_t k = 0; k < word.size(); ++k) {
            if (word.letters[k] != j) continue;
            std::vector<unsigned> ls;
            for (std::size_t t = k + 1; t < word.size(); ++t) ls.push_back(word.letters[t]);
            for (std::size_t t = 0; t < k; ++t) ls.push_back(word.letters[t]);
            r.add_term(Word(p.gens(), std::move(ls)), c);
        }
    return r;
}

Polynomial random_poly(std::mt19937_64& eng, unsigned n, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), len(0, maxdeg);
    std::uniform_int_distribution<unsigned> letter(1, n);
    Polynomial p(n);
    for (int t = 0; t < nterms; ++t) {
        std::vector<unsigned> ls(static_cast<std::size_t>(len(eng)));
        for (auto& l : ls) l = letter(eng);
        Rat re(num(eng), den(eng));
        re.canonicalize();
        p.add_term(Word(n, std::move(ls)), Scalar(re));
    }
    return p;
}

} // namespace

TEST_CASE("difference quotient on pinned words") {
    unsigned n = 2;
    TensorPoly d1_x1sq = free_difference_quotient(mono(n, {1, 1}), 1);
    TensorPoly expect(n);
    expect.add_term(Word::unit(n), w(n, {1}), Scalar(1));
    expect.add_term(w(n, {1}), Word::unit(n), Scalar(1));
    CHECK(d1_x1sq == expect);

    CHECK(free_difference_quotient(mono(n, {2}), 1).is_zero());
    CHECK(free_difference_quotient(Polynomial::one(n), 1).is_zero());

    TensorPoly d1_121 = free_difference_quotient(mono(n, {1, 2, 1}), 1);
    TensorPoly expect121(n);
    expect121.add_term(Word::unit(n), w(n, {2, 1}), Scalar(1));
    expect121.add_term(w(n, {1, 2}), Word::unit(n), Scalar(1));
    CHECK(d1_121 == expect121);
}

TEST_CASE("difference quotient agrees with the Leibniz oracle") {
    std::mt19937_64 eng(401);
    for (int trial = 0; trial < 120; ++trial) {
        unsigned n = 1 + (trial % 3);
        Polynomial p = random_poly(eng, n, 4, 4);
        for (unsigned j = 1; j <= n; ++j)
            CHECK(free_difference_quotient(p, j) == dq_oracle(p, j));
    }
}

TEST_CASE("difference quotient is a derivation into the bimodule") {
    std::mt19937_64 eng(402);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned n = 1 + (trial % 2);
        Polynomial p = random_poly(eng, n, 3, 3);
        Polynomial q = random_poly(eng, n, 3, 3);
        for (unsigned j = 1; j <= n; ++j) {
            TensorPoly lhs = free_difference_quotient(p * q, j);
            TensorPoly rhs = tensor_bimodule_mul(Polynomial::one(n), free_difference_quotient(p, j), q);
            rhs += tensor_bimodule_mul(p, free_difference_quotient(q, j), Polynomial::one(n));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("difference quotient of the involution is flip of star") {
    std::mt19937_64 eng(403);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned n = 1 + (trial % 2);
        Polynomial p = random_poly(eng, n, 4, 4);
        for (unsigned j = 1; j <= n; ++j)
            CHECK(free_difference_quotient(p.involution(), j) ==
                  tensor_flip(tensor_star(free_difference_quotient(p, j))));
    }
}

TEST_CASE("cyclic derivative pins") {
    unsigned n = 2;
    Polynomial p121 = mono(n, {1, 2, 1});
    CHECK(cyclic_derivative(p121, 1) == mono(n, {2, 1}) + mono(n, {1, 2}));
    CHECK(cyclic_derivative(p121, 2) == mono(n, {1, 1}));
    for (int p = 1; p <= 5; ++p) {
        Polynomial xp = mono(1, std::vector<unsigned>(static_cast<std::size_t>(p), 1u));
        Polynomial expect = Scalar(p) * mono(1, std::vector<unsigned>(static_cast<std::size_t>(p - 1), 1u));
        CHECK(cyclic_derivative(xp, 1) == expect);
    }
    CHECK(cyclic_derivative(Polynomial::one(n), 1).is_zero());
}

TEST_CASE("both cyclic derivative routes match the rotation oracle") {
    std::mt19937_64 eng(404);
    for (int trial = 0; trial < 120; ++trial) {
        unsigned n = 1 + (trial % 3);
        Polynomial p = random_poly(eng, n, 4, 4);
        for (unsigned j = 1; j <= n; ++j) {
            Polynomial want = cd_oracle(p, j);
            CHECK(cyclic_derivative(p, j) == want);
            CHECK(cyclic_derivative_via_quotient(p, j) == want);
            CHECK(mu_tilde(free_difference_quotient(p, j)) == want);
        }
    }
}

TEST_CASE("cyclic gradient pins and involution compatibility") {
    unsigned n = 2;
    VectorField g = cyclic_gradient(mono(n, {1, 2}));
    CHECK(g[0] == mono(n, {2}));
    CHECK(g[1] == mono(n, {1}));

    std::mt19937_64 eng(405);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(eng, 2, 4, 4);
        CHECK(cyclic_gradient(p.involution()) == cyclic_gradient(p).involution());
    }
}

TEST_CASE("theta pins and theta of gradients") {
    unsigned n = 2;
    VectorField grad12(n, {mono(n, {2}), mono(n, {1})});
    CHECK(theta(grad12).is_zero());

    VectorField v(n, {mono(n, {2}), Polynomial::zero(n)});
    CHECK(theta(v) == mono(n, {1, 2}) - mono(n, {2, 1}));

    std::mt19937_64 eng(406);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned m = 1 + (trial % 3);
        Polynomial p = random_poly(eng, m, 4, 4);
        CHECK(theta(cyclic_gradient(p)).is_zero());
    }
}

TEST_CASE("m_a pins") {
    unsigned n = 2;
    CHECK(m_a(TensorPoly::unit_tensor(n), mono(n, {2})) == mono(n, {2}));
    CHECK(m_a(simple_tensor(mono(n, {1}), mono(n, {2})), mono(n, {1})) == mono(n, {1, 1, 2}));

    Polynomial a = mono(n, {2}) + Polynomial::one(n);
    Polynomial x1 = mono(n, {1});
    CHECK(m_a(free_difference_quotient(x1 * x1, 1), a) == a * x1 + x1 * a);
}

TEST_CASE("apply_field pins, Leibniz, and the quotient route") {
    unsigned n = 2;
    VectorField k(n, {mono(n, {2}), Polynomial::zero(n)});
    CHECK(apply_field(k, mono(n, {1, 1})) == mono(n, {2, 1}) + mono(n, {1, 2}));
    CHECK(apply_field(k, Polynomial::one(n)).is_zero());

    std::mt19937_64 eng(407);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned m = 1 + (trial % 2);
        VectorField f(m);
        for (unsigned j = 0; j < m; ++j) f[j] = random_poly(eng, m, 2, 2);
        Polynomial p = random_poly(eng, m, 3, 3);
        Polynomial q = random_poly(eng, m, 3, 3);
        CHECK(apply_field(f, p * q) == apply_field(f, p) * q + p * apply_field(f, q));
        CHECK(apply_field(f, p) == apply_field_via_quotients(f, p));
    }
}

TEST_CASE("Euler field scales by degree") {
    for (unsigned n = 1; n <= 3; ++n) {
        VectorField e = VectorField::euler(n);
        std::mt19937_64 eng(408 + n);
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial p = random_poly(eng, n, 4, 4);
            for (int k = 0; k <= 4; ++k) {
                Polynomial h = p.homogeneous_component(k);
                CHECK(apply_field(e, h) == Scalar(k) * h);
            }
        }
    }
    CHECK(apply_field(VectorField::euler(2), mono(2, {1, 2, 1})) == Scalar(3) * mono(2, {1, 2, 1}));
}

TEST_CASE("iterated_field pins") {
    VectorField k1(1, {mono(1, {1})});
    CHECK(iterated_field(k1, mono(1, {1}), 2) == mono(1, {1}));
    VectorField ksq(1, {mono(1, {1, 1})});
    CHECK(iterated_field(ksq, mono(1, {1}), 2) == Scalar(2) * mono(1, {1, 1, 1}));
    CHECK(iterated_field(ksq, mono(1, {1}), 0) == mono(1, {1}));
}

TEST_CASE("first variation matches the gradient pairing") {
    TraceFunctional tau = semicircular_trace(2);
    Polynomial x1sq = mono(2, {1, 1});

    FirstVariation fv = first_variation(tau, x1sq, VectorField(2, {mono(2, {1}), Polynomial::zero(2)}));
    CHECK(fv.equal());
    CHECK(fv.lhs == Scalar(2));

    FirstVariation fv2 = first_variation(tau, x1sq, VectorField(2, {mono(2, {2}), Polynomial::zero(2)}));
    CHECK(fv2.equal());
    CHECK(fv2.lhs == Scalar(0));

    FirstVariation fv3 = first_variation(tau, Polynomial::one(2), VectorField::euler(2));
    CHECK(fv3.equal());
    CHECK(fv3.lhs == Scalar(0));

    std::mt19937_64 eng(409);
    for (int trial = 0; trial < 80; ++trial) {
        unsigned n = 1 + (trial % 2);
        TraceFunctional t = (trial % 3 == 0) ? pure_trace(n) : semicircular_trace(n);
        Polynomial p = random_poly(eng, n, 4, 4);
        VectorField f(n);
        for (unsigned j = 0; j < n; ++j) f[j] = random_poly(eng, n, 3, 2);
        CHECK(first_variation(t, p, f).equal());
    }
}

TEST_CASE("gradient preimage decisions") {
    unsigned n = 2;
    GradientPreimage ok = cyclic_gradient_preimage(VectorField(n, {mono(n, {2}), mono(n, {1})}));
    REQUIRE(ok.is_gradient());
    VectorField back = cyclic_gradient(*ok.witness);
    CHECK(back[0] == mono(n, {2}));
    CHECK(back[1] == mono(n, {1}));

    GradientPreimage bad = cyclic_gradient_preimage(VectorField(n, {mono(n, {2}), Polynomial::zero(n)}));
    CHECK(!bad.is_gradient());
    REQUIRE(bad.obstruction_degree.has_value());
    CHECK(*bad.obstruction_degree == 1);

    GradientPreimage zero = cyclic_gradient_preimage(VectorField::zero(n));
    REQUIRE(zero.is_gradient());
    CHECK(zero.witness->is_zero());

    // every actual gradient must come back as one
    std::mt19937_64 eng(410);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned m = 1 + (trial % 2);
        Polynomial p = random_poly(eng, m, 4, 4);
        GradientPreimage pre = cyclic_gradient_preimage(cyclic_gradient(p));
        REQUIRE(pre.is_gradient());
        CHECK(cyclic_gradient(*pre.witness) == cyclic_gradient(p));
    }
}

TEST_CASE("trace preservation decisions agree across routes") {
    TraceFunctional tau = semicircular_trace(2);
    VectorField rot(2, {mono(2, {2}), Scalar(-1) * mono(2, {1})});
    CHECK(is_trace_preserving(rot, tau, 6));
    CHECK(is_trace_preserving_via_gradients(rot, tau, 6));

    VectorField bad(2, {mono(2, {1}), Polynomial::zero(2)});
    CHECK(!is_trace_preserving(bad, tau, 2));
    CHECK(!is_trace_preserving_via_gradients(bad, tau, 2));
    CHECK(tau(apply_field(bad, mono(2, {1, 1}))) == Scalar(2));

    CHECK(is_trace_preserving(VectorField::zero(2), tau, 5));

    std::mt19937_64 eng(411);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned n = 1 + (trial % 2);
        TraceFunctional t = semicircular_trace(n);
        VectorField f(n);
        for (unsigned j = 0; j < n; ++j) f[j] = random_poly(eng, n, 3, 2);
        CHECK(is_trace_preserving(f, t, 4) == is_trace_preserving_via_gradients(f, t, 4));
    }
}

TEST_CASE("orthogonal complement of gradients at low degree") {
    TraceFunctional tau = semicircular_trace(2);

    ComplementReport deg1 = orthogonal_complement_of_gradients(tau, 1);
    REQUIRE(deg1.basis.size() == 1);
    const VectorField& b = deg1.basis[0];
    Scalar c = b[0].coeff(w(2, {2}));
    CHECK(!c.is_zero());
    CHECK(b[0] == c * mono(2, {2}));
    CHECK(b[1] == Scalar(-1) * c * mono(2, {1}));

    CHECK(orthogonal_complement_of_gradients(tau, 0).basis.empty());
    CHECK(orthogonal_complement_of_gradients(semicircular_trace(1), 1).basis.empty());
    CHECK(orthogonal_complement_of_gradients(semicircular_trace(1), 3).basis.empty());
}

TEST_CASE("word enumeration helpers") {
    CHECK(words_of_length(2, 3).size() == 8);
    CHECK(words_of_length(3, 0).size() == 1);
    CHECK(words_up_to_length(2, 2).size() == 7);
    CHECK(words_up_to_length(1, 4).size() == 5);
}
