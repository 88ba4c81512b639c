#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclograd/calculus.hpp"
#include "cyclograd/parse.hpp"
#include "cyclograd/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

using namespace cyclograd;

namespace {

std::size_t error_pos(const std::string& text, unsigned n = 0) {
    try {
        parse_polynomial(text, n);
    } catch (const ParseError& e) {
        return e.position;
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("grammar examples") {
    Polynomial x1 = Polynomial::generator(2, 1);
    Polynomial x2 = Polynomial::generator(2, 2);
    CHECK(parse_polynomial("x1.x2 - x2.x1") == commutator(x1, x2));
    CHECK(parse_polynomial("(1/2)*x1.x1 + 1", 2) ==
          Scalar(Rat(1, 2)) * (x1 * x1) + Polynomial::one(2));
    CHECK(parse_polynomial("1", 2) == Polynomial::one(2));
    CHECK(parse_polynomial("0", 3).is_zero());
    CHECK(parse_polynomial("-x1 + 2i*x2", 2) ==
          Scalar(-1) * x1 + Scalar(Rat(0), Rat(2)) * x2);
    CHECK(parse_polynomial("(1/2-3i)*x1", 2) == Scalar(Rat(1, 2), Rat(-3)) * x1);
    CHECK(parse_polynomial("  x1 . x2   +   2 ", 2) == x1 * x2 + Polynomial::constant(2, Scalar(2)));
}

TEST_CASE("coefficients canonicalize on parse") {
    CHECK(parse_polynomial("2/4*x1", 1) == parse_polynomial("1/2*x1", 1));
    CHECK(parse_polynomial("0*x1 + x2").is_zero() == false);
    CHECK(parse_polynomial("0*x1", 1).is_zero());
    CHECK(parse_polynomial("x1 - x1", 1).is_zero());
}

TEST_CASE("generator count: inferred or enforced") {
    Polynomial inferred = parse_polynomial("x3 + x1");
    CHECK(inferred.gens() == 3);
    CHECK_THROWS_AS(parse_polynomial("x3", 2), ParseError);
    CHECK(error_pos("x3", 2) == 1);
    CHECK(error_pos("x0") == 1);
}

TEST_CASE("error positions point at the offending byte") {
    CHECK(error_pos("x1 +") == 4);
    CHECK(error_pos("3*") == 2);
    CHECK(error_pos("1/0") == 2);
    CHECK(error_pos("x1..x2") == 3);
    CHECK(error_pos("(1+2)") == 4); // imaginary part must carry the 'i'
    CHECK(error_pos("") == 0);
    CHECK(error_pos("x") == 1);
}

TEST_CASE("vector field parsing splits on semicolons") {
    VectorField v = parse_vector_field("x2; -x1");
    CHECK(v.n == 2);
    CHECK(v[0] == Polynomial::generator(2, 2));
    CHECK(v[1] == Scalar(-1) * Polynomial::generator(2, 1));
    CHECK_THROWS_AS(parse_vector_field("x1; x2", 3), ParseError);
    // component errors carry the global offset
    try {
        parse_vector_field("x1; x0");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("printing is canonical and parse-stable") {
    CHECK(print_polynomial(parse_polynomial("(1/2)*x1.x2.x1 - 3*x2 + 1")) ==
          "1 - 3*x2 + 1/2*x1.x2.x1");
    CHECK(print_polynomial(Polynomial::zero(2)) == "0");
    CHECK(print_polynomial(parse_polynomial("-x1 - x2", 2)) == "-x1 - x2");
    CHECK(print_polynomial(parse_polynomial("2i*x1 - (1/3+2i)*x1.x1", 1)) ==
          "2i*x1 + (-1/3-2i)*x1.x1");
    CHECK(print_word(Word::unit(2)) == "1");
    CHECK(print_word(Word(2, {1, 2, 1})) == "x1.x2.x1");
    CHECK(print_vector_field(parse_vector_field("x2; -x1")) == "x2; -x1");
}

TEST_CASE("tensor printing shows both legs") {
    TensorPoly t(2);
    t.add_term(Word::unit(2), Word(2, {2}), Scalar(Rat(-1, 2)));
    t.add_term(Word(2, {1}), Word::unit(2), Scalar(1));
    CHECK(print_tensor(t) == "-1/2 (x) x2 + x1 (x) 1");
    CHECK(print_tensor(TensorPoly(2)) == "0");
}

TEST_CASE("round trip on a thousand random polynomials") {
    std::mt19937_64 eng(2026);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), nterms(1, 6), len(0, 5), pick(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        unsigned n = static_cast<unsigned>(1 + (trial % 3));
        std::uniform_int_distribution<unsigned> letter(1, n);
        Polynomial p(n);
        int terms = nterms(eng);
        for (int t = 0; t < terms; ++t) {
            std::vector<unsigned> ls(static_cast<std::size_t>(len(eng)));
            for (auto& l : ls) l = letter(eng);
            Rat re(num(eng), den(eng));
            re.canonicalize();
            Scalar c = pick(eng) == 0 ? Scalar(re, Rat(num(eng))) : Scalar(re);
            p.add_term(Word(n, std::move(ls)), c);
        }
        std::string text = print_polynomial(p);
        Polynomial back = parse_polynomial(text, n);
        CHECK(back == p);
        CHECK(print_polynomial(back) == text);
    }
}
