#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclograd/calculus.hpp"
#include "cyclograd/fock.hpp"
#include "cyclograd/semicircular.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

using namespace cyclograd;

namespace {

FockVector basis(unsigned n, std::vector<unsigned> ls, int cap) {
    return FockVector::basis_vector(Word(n, std::move(ls)), cap);
}

// Random vector supported strictly below the cap so every operator in the
// adjointness checks acts without truncation.
FockVector random_vec(std::mt19937_64& eng, unsigned n, int cap, int max_len) {
    std::uniform_int_distribution<int> num(-3, 3), len(0, max_len);
    std::uniform_int_distribution<unsigned> letter(1, n);
    FockVector v(n, cap);
    for (int t = 0; t < 4; ++t) {
        std::vector<unsigned> ls(static_cast<std::size_t>(len(eng)));
        for (auto& l : ls) l = letter(eng);
        v.add_term(Word(n, std::move(ls)), Scalar(Rat(num(eng)), Rat(num(eng))));
    }
    return v;
}

} // namespace

TEST_CASE("inner product is the word pairing") {
    int cap = 3;
    CHECK(inner(basis(2, {1, 2}, cap), basis(2, {1, 2}, cap)) == Scalar(1));
    CHECK(inner(basis(2, {1, 2}, cap), basis(2, {2, 1}, cap)) == Scalar(0));
    CHECK(inner(basis(2, {1}, cap), basis(2, {1, 1}, cap)) == Scalar(0));

    Scalar i = Scalar::unit_imag();
    FockVector v = basis(2, {1}, cap), w = basis(2, {1}, cap);
    CHECK(inner(i * v, w) == i);
    CHECK(inner(v, i * w) == -i);
}

TEST_CASE("creation, annihilation, and the semicircular operator") {
    int cap = 4;
    FockVector vac = FockVector::vacuum(1, cap);
    CHECK(apply_s(1, vac) == basis(1, {1}, cap));
    CHECK(apply_s(1, basis(1, {1}, cap)) == basis(1, {1, 1}, cap) + vac);

    CHECK(apply_creation(2, basis(2, {1}, cap)) == basis(2, {2, 1}, cap));
    CHECK(apply_annihilation(2, basis(2, {1, 2}, cap)).is_zero());
    CHECK(apply_annihilation(1, basis(2, {1, 2}, cap)) == basis(2, {2}, cap));
    CHECK(apply_annihilation(1, FockVector::vacuum(2, cap)).is_zero());
    CHECK(apply_right_creation(2, basis(2, {1}, cap)) == basis(2, {1, 2}, cap));
    CHECK(apply_right_annihilation(1, basis(2, {2, 1}, cap)) == basis(2, {2}, cap));
    CHECK(apply_right_annihilation(2, basis(2, {2, 1}, cap)).is_zero());

    CHECK_THROWS_AS(apply_creation(3, basis(2, {1}, cap)), std::invalid_argument);
}

TEST_CASE("rotation, number, and vacuum projection") {
    int cap = 3;
    CHECK(apply_rotation(basis(2, {1, 2}, cap)) == basis(2, {2, 1}, cap));
    CHECK(apply_rotation(FockVector::vacuum(2, cap)).is_zero());
    CHECK(apply_rotation(basis(2, {1}, cap)) == basis(2, {1}, cap));
    CHECK(apply_rotation(basis(2, {2}, cap)) == basis(2, {2}, cap));
    CHECK(apply_rotation_adjoint(basis(2, {1, 2}, cap)) == basis(2, {2, 1}, cap));
    CHECK(apply_rotation_adjoint(basis(2, {1, 2, 2}, cap)) == basis(2, {2, 2, 1}, cap));

    for (int k = 0; k <= 3; ++k) {
        Word w(2, std::vector<unsigned>(static_cast<std::size_t>(k), 2u));
        CHECK(apply_number(FockVector::basis_vector(w, cap)) ==
              Scalar(k) * FockVector::basis_vector(w, cap));
    }

    FockVector mixed = FockVector::vacuum(2, cap) + basis(2, {1}, cap);
    CHECK(apply_vacuum_projection(mixed) == FockVector::vacuum(2, cap));
    CHECK(apply_vacuum_projection(basis(2, {1, 2}, cap)).is_zero());

    FockVector sym = apply_cyclic_symmetrization(basis(2, {1, 2}, cap));
    CHECK(sym == basis(2, {1, 2}, cap) + basis(2, {2, 1}, cap));
}

TEST_CASE("T is the left-right difference") {
    std::mt19937_64 eng(701);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned n = 1 + (trial % 2);
        FockVector v = random_vec(eng, n, 5, 3);
        for (unsigned j = 1; j <= n; ++j) {
            CHECK(apply_T(j, v) == apply_creation(j, v) - apply_right_creation(j, v));
            CHECK(apply_T_adjoint(j, v) == apply_annihilation(j, v) - apply_right_annihilation(j, v));
        }
    }
}

TEST_CASE("adjoint pairs with respect to the inner product") {
    std::mt19937_64 eng(702);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned n = 1 + (trial % 2);
        // keep one slot of headroom: creations raise the degree by one
        FockVector v = random_vec(eng, n, 5, 3);
        FockVector w = random_vec(eng, n, 5, 4);
        for (unsigned j = 1; j <= n; ++j) {
            CHECK(inner(apply_creation(j, v), w) == inner(v, apply_annihilation(j, w)));
            CHECK(inner(apply_right_creation(j, v), w) == inner(v, apply_right_annihilation(j, w)));
            CHECK(inner(apply_T(j, v), w) == inner(v, apply_T_adjoint(j, w)));
            CHECK(inner(apply_s(j, v), w) == inner(v, apply_s(j, w)));
        }
        CHECK(inner(apply_rotation(v), w) == inner(v, apply_rotation_adjoint(w)));
        CHECK(inner(apply_number(v), w) == inner(v, apply_number(w)));
        CHECK(inner(apply_vacuum_projection(v), w) == inner(v, apply_vacuum_projection(w)));
    }
}

TEST_CASE("polynomial transport to the Fock space") {
    Polynomial x1 = Polynomial::generator(1, 1);
    CHECK(poly_to_fock(x1 * x1, 4) == basis(1, {1, 1}, 4) + FockVector::vacuum(1, 4));
    CHECK(poly_to_fock(Polynomial::one(1), 2) == FockVector::vacuum(1, 2));
    CHECK(poly_to_fock(chebyshev_P(2), 4) == basis(1, {1, 1}, 4));
    CHECK(poly_to_fock(chebyshev_P(3), 5) == basis(1, {1, 1, 1}, 5));
    CHECK_THROWS_AS(poly_to_fock(x1 * x1, 1), std::invalid_argument);

    // orthonormal runs: the transport never truncates when cap >= deg
    FockVector v = poly_to_fock(chebyshev_P(4), 4);
    CHECK(!v.truncated);
    CHECK(v == basis(1, {1, 1, 1, 1}, 4));
}

TEST_CASE("truncation is recorded, never silent") {
    FockVector v(2, 2);
    v.add_term(Word(2, {1, 2, 1}), Scalar(1));
    CHECK(v.is_zero());
    CHECK(v.truncated);

    FockVector w(2, 2);
    w.add_term(Word(2, {1}), Scalar(1));
    CHECK(!w.truncated);
    w += v;
    CHECK(w.truncated); // the flag rides along through arithmetic

    FockVector fine = basis(2, {1, 2}, 2);
    CHECK(!apply_annihilation(1, fine).truncated);
    CHECK(apply_creation(1, fine).truncated);
    CHECK(apply_creation(1, fine).is_zero());
}

TEST_CASE("operator matrices agree with direct action") {
    unsigned n = 2;
    int cap = 2;
    std::vector<Word> words = words_up_to_length(n, cap);
    auto rot = [](const FockVector& v) { return apply_rotation(v); };
    DenseMatrix m = operator_matrix(rot, n, cap);
    REQUIRE(m.size() == words.size());
    for (std::size_t col = 0; col < words.size(); ++col) {
        FockVector out = apply_rotation(FockVector::basis_vector(words[col], cap));
        for (std::size_t row = 0; row < words.size(); ++row) {
            Scalar want;
            auto it = out.terms.find(words[row]);
            if (it != out.terms.end()) want = it->second;
            CHECK(m[row][col] == want);
        }
    }

    // the number operator matrix is diagonal with the grades
    DenseMatrix nm = operator_matrix([](const FockVector& v) { return apply_number(v); }, n, cap);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            CHECK(nm[i][j] == (i == j ? Scalar(static_cast<int>(words[i].size())) : Scalar(0)));
}

TEST_CASE("involution transport") {
    std::mt19937_64 eng(703);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial x1 = Polynomial::generator(2, 1);
        Polynomial x2 = Polynomial::generator(2, 2);
        Polynomial p = Scalar(Rat(1), Rat(1)) * (x1 * x2) + Scalar(2) * x2;
        CHECK(fock_involution(poly_to_fock(p, 3)) == poly_to_fock(p.involution(), 3));
        FockVector v = random_vec(eng, 2, 4, 3);
        CHECK(fock_involution(fock_involution(v)) == v);
        FockVector w = random_vec(eng, 2, 4, 3);
        CHECK(inner(fock_involution(v), fock_involution(w)) == inner(v, w).conj());
    }
}

TEST_CASE("fock fields") {
    int cap = 2;
    FockField f = field_to_fock({Polynomial::generator(2, 1) * Polynomial::generator(2, 1),
                                 Polynomial::generator(2, 2)},
                                cap);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == basis(2, {1, 1}, cap) + FockVector::vacuum(2, cap));
    CHECK(f[1] == basis(2, {2}, cap));

    FockField sum = fock_field_add(f, f);
    CHECK(fock_field_equal(sum, fock_field_scale(Scalar(2), f)));
    CHECK(fock_field_is_zero(fock_field_sub(f, f)));
    CHECK(!fock_field_is_zero(f));

    DenseMatrix m = fock_fields_to_matrix({f, fock_field_scale(Scalar(2), f)}, 2, cap);
    CHECK(rank_of(m, static_cast<int>(m[0].size())) == 1);

    FockField g = fock_field_involution(f);
    CHECK(g[0] == f[0]); // palindromic content is fixed
}
