#pragma once

#include "cyclograd/polynomial.hpp"
#include "cyclograd/vector_field.hpp"

#include <optional>
#include <vector>

namespace cyclograd {

struct SeminormParams {
    Rat R;     // radius, > 0
    int k = 0; // order, >= 0
};

// |.|_{R,k} = sum over terms of |c| R^{p-k} p!/(p-k)!, p = word length >= k.
// `exact` is false when some coefficient had both parts nonzero, in which case
// |re|+|im| stood in for |c| and the value is an upper bound.
struct SeminormValue {
    Rat value;
    bool exact = true;
};

SeminormValue seminorm(const Polynomial& p, const SeminormParams& params);
// Fields carry the max over components.
SeminormValue seminorm(const VectorField& v, const SeminormParams& params);

// Coefficientwise absolute value (same upper-bound convention as above).
Polynomial majorant(const Polynomial& p);
VectorField majorant(const VectorField& v);

// Real nonnegative coefficients throughout.
bool is_majorant(const Polynomial& p);

// The coefficientwise partial order and its join; both insist on majorant inputs.
bool coeff_leq(const Polynomial& p, const Polynomial& q);
Polynomial coeff_max(const Polynomial& p, const Polynomial& q);

// Collapse onto one generator: every degree-p term lands on X1^p with |c|.
// Seminorms are preserved:  seminorm(phi_n(p)) == seminorm(p)  for all R, k.
Polynomial phi_n(const Polynomial& p);
// Join of the component collapses; dominates the field seminorm at every
// order (strictly, when different components dominate different degrees).
Polynomial psi_n(const VectorField& v);

// One-generator polynomial helpers (inputs must have gens() == 1).
Rat eval_at(const Polynomial& one_var, const Rat& x);
Polynomial one_var_derivative(const Polynomial& one_var);

// Truncated one-variable power series: coefficients trusted through degree cap.
struct Series {
    int cap = -1;
    std::vector<Rat> c; // size cap + 1
};

Series series_from_poly(const Polynomial& one_var, int cap);
// (1 - alpha X)^{-e}, e >= 0.
Series binomial_envelope(const Rat& alpha, int e, int cap);
Series series_mul(const Series& a, const Series& b); // cap = min of the caps
Series series_scale(const Rat& f, Series a);
Series series_derivative(const Series& a); // cap drops by one
Series series_pow(const Series& a, int e);
// Coefficientwise <= on degrees 0..up_to; throws if either cap is exceeded.
bool series_leq(const Series& a, const Series& b, int up_to);

// Least C with p <= C (1 - alpha X)^{-e} on degrees 0..d, if any C works.
std::optional<Rat> min_envelope_constant(const Polynomial& one_var_majorant,
                                         const Rat& alpha, int e, int d);

Rat double_factorial_odd(int m); // 1*3*...*(2m-1); empty product = 1
Rat factorial(int m);
Rat rat_pow(const Rat& x, int e); // e >= 0

// (2m-1)!! Rp^{m+1} (Rp-R)^{-2m-1} normK^m normP, exact.
Rat thm27_bound(int m, const Rat& R, const Rat& Rp, const Rat& normK, const Rat& normP);

// (Rp-R)^2 / (2 Rp normK); nullopt encodes the infinite radius at normK = 0.
std::optional<Rat> analytic_radius(const Rat& R, const Rat& Rp, const Rat& normK);

// With L = (1 - X/Rp)^{-1} and the derivation D f = L f', checks
//   D^m L = (2m-1)!! Rp^{-m} L^{2m+1}
// on series coefficients up to degree d - m (each D application costs one degree).
bool lambda_power_identity_check(int m, const Rat& Rp, int d);

// M^{m+1} 2^m m! (1 - R/Rp)^{-(2m+1)}, exact.
Rat prop64_bound(int m, const Rat& bigM, const Rat& R, const Rat& Rp);

// Envelope propagation through a bracket.  Inputs are the one-generator
// majorants of two fields and of their bracket.  Premises put psi_h under
// c1 (1-alpha X)^{-e} and psi_k under c2 (1-alpha X)^{-f} through degree d;
// the conclusion compares the bracket against c1 c2 (e+f) alpha (1-alpha X)^{-e-f-1}
// through degree d-1.  `printed` drops the alpha factor (the weaker/stronger
// variant depending on whether alpha exceeds 1), reported for diagnostics.
struct EnvelopeBracketCheck {
    bool premises = false;
    bool corrected = false;
    bool printed = false;
};
EnvelopeBracketCheck envelope_bracket_check(const Polynomial& psi_h, const Polynomial& psi_k,
                                            const Polynomial& psi_bracket, const Rat& alpha,
                                            int e, int f, const Rat& c1, const Rat& c2, int d);

} // namespace cyclograd
