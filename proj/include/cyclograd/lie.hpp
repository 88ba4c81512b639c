#pragma once

#include "cyclograd/calculus.hpp"
#include "cyclograd/trace.hpp"
#include "cyclograd/vector_field.hpp"

#include <map>
#include <vector>

namespace cyclograd {

// [P,Q]_j = D_P Q_j - D_Q P_j, so that D_{[P,Q]} = D_P D_Q - D_Q D_P.
VectorField vect_bracket(const VectorField& p, const VectorField& q);

// E_ik = (delta_ij X_k)_j: the field with D_{E_ik} X_j = delta_ij X_k.
// Direct computation gives [E_ab, E_cd] = delta_da E_cb - delta_bc E_ad; the
// degree-0 stratum is a copy of gl(n) and its center is the line through the
// Euler field.
VectorField gl_unit(unsigned i, unsigned k, unsigned n);

// ([P, X_j])_j, the field whose derivation is ad_P.
VectorField inner_field(const Polynomial& p);
// [inner_field(P), v] = inner_field(witness); the witness is -D_v P.
Polynomial inner_bracket_witness(const Polynomial& p, const VectorField& v);

// Grading by component degree: the piece at k has components homogeneous of
// degree k+1, so constants sit at k = -1 and gl(n) at k = 0.
struct GradedVectorField {
    VectorField field;
    std::map<int, VectorField> pieces;

    VectorField piece(int k) const {
        auto it = pieces.find(k);
        return it == pieces.end() ? VectorField::zero(field.n) : it->second;
    }
};
GradedVectorField grade(const VectorField& v);

// ks = (K^(0), ..., K^(m)) folds to [K^(m), [K^(m-1), [... [K^(1), K^(0)]...]]].
VectorField adjoint_chain(const std::vector<VectorField>& ks);

// Fields v with components homogeneous of degree k+1 satisfying
// sum_j tau(delta_j(R) v_j) = 0 for every monomial R of degree <= k+2.
// Higher-degree R add nothing once these vanish (checked empirically in the
// suites rather than assumed); pairing_rank < source count flags degeneracy.
struct GradeBasisReport {
    std::vector<VectorField> basis;
    int pairing_rank = 0;
    int space_dim = 0; // n^{k+2} ambient field coordinates
};
GradeBasisReport trace_preserving_basis(const TraceFunctional& tau, int k, unsigned n);

} // namespace cyclograd
