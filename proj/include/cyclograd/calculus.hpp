#pragma once

#include "cyclograd/linalg.hpp"
#include "cyclograd/polynomial.hpp"
#include "cyclograd/trace.hpp"
#include "cyclograd/vector_field.hpp"

#include <optional>
#include <vector>

namespace cyclograd {

// d_j: the derivation into the tensor square with d_j X_i = [i = j] 1 (x) 1.
// On a word it splits at every occurrence of X_j.
TensorPoly free_difference_quotient(const Polynomial& p, unsigned j);

// mu~(a (x) b) = b a
Polynomial mu_tilde(const TensorPoly& t);

// delta_j: on a word, the sum over occurrences of X_j of the cyclic rotation
// that removes the occurrence: X_{i(k+1)}...X_{ip} X_{i1}...X_{i(k-1)}.
// Coincides with mu~ after d_j; both code paths exist and are compared in tests.
Polynomial cyclic_derivative(const Polynomial& p, unsigned j);
Polynomial cyclic_derivative_via_quotient(const Polynomial& p, unsigned j);

VectorField cyclic_gradient(const Polynomial& p);

// theta(P_1, ..., P_n) = sum_j [X_j, P_j]
Polynomial theta(const VectorField& v);

// m_a(u (x) v) = u a v
Polynomial m_a(const TensorPoly& t, const Polynomial& a);

// D_K, the derivation with D_K X_j = K_j.  Computed by replacing one letter at
// a time; apply_field_via_quotients routes through sum_j m_{K_j} d_j instead.
Polynomial apply_field(const VectorField& k, const Polynomial& p);
Polynomial apply_field_via_quotients(const VectorField& k, const Polynomial& p);

// m-fold D_K.
Polynomial iterated_field(const VectorField& k, const Polynomial& p, unsigned m);

struct FirstVariation {
    Scalar lhs; // tau of the first-order coefficient of p(X + eps K), by dual-number expansion
    Scalar rhs; // sum_j tau(delta_j(p) K_j)
    bool equal() const { return lhs == rhs; }
};
FirstVariation first_variation(const TraceFunctional& tau, const Polynomial& p, const VectorField& k);

struct GradientPreimage {
    std::optional<Polynomial> witness;       // P with cyclic_gradient(P) = v, when it exists
    std::optional<int> obstruction_degree;   // component degree at which v leaves the image
    bool is_gradient() const { return witness.has_value(); }
};
// Decides membership in the image of the cyclic gradient degree by degree,
// solving an exact linear system per homogeneous stratum.
GradientPreimage cyclic_gradient_preimage(const VectorField& v);

// tau(D_K Q) = 0 for every monomial Q with deg Q <= max_degree.
bool is_trace_preserving(const VectorField& k, const TraceFunctional& tau, int max_degree);
// sum_j tau(delta_j(P) K_j) = 0 for every monomial P with deg P <= max_degree.
bool is_trace_preserving_via_gradients(const VectorField& k, const TraceFunctional& tau, int max_degree);

struct ComplementReport {
    std::vector<VectorField> basis; // fields of degree <= k orthogonal to all gradients of degree <= k+1 sources
    int gram_rank = 0;              // rank of the monomial Gram pairing, surfaced for degenerate traces
    int gram_dim = 0;
};
// Null space of the bilinear pairing (v, P) -> sum_j tau(delta_j(P) v_j) over
// fields with components of degree <= k, tested against all monomials P of
// degree <= k+1.  Degree k+1 sources suffice to pin the degree-<= k part of the
// orthogonal complement when the trace grades (the semicircular suites verify
// this empirically against higher-degree sources).
ComplementReport orthogonal_complement_of_gradients(const TraceFunctional& tau, int k);

// Enumeration helpers shared by the rank suites.
std::vector<Word> words_of_length(unsigned n, int len);
std::vector<Word> words_up_to_length(unsigned n, int len);

} // namespace cyclograd
