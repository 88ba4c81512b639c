#pragma once

#include "cyclograd/calculus.hpp"
#include "cyclograd/fock.hpp"
#include "cyclograd/trace.hpp"

#include <vector>

namespace cyclograd {

// Moment of a standard semicircular family: the number of non-crossing pair
// partitions of the positions of w whose pairs join equal letters.
Rat semicircular_moment(const Word& w);
TraceFunctional semicircular_trace(unsigned n);

// The operator-model route to the same number: <w(s) vacuum, vacuum>.
Scalar fock_moment(const Word& w);

// P_0 = 1, P_1 = t, P_{k+1} = t P_k - P_{k-1}: the orthonormal polynomials of
// the unit-variance semicircle law.
Polynomial chebyshev_P(int k);                               // one generator
Polynomial chebyshev_of_gen(int k, unsigned i, unsigned n);  // same recursion in X_i among n

// (1 - r t + r^2)(P_0 + P_1 r + ... + P_d r^d) = 1 through degree d in r.
bool chebyshev_generating_check(int d);
// d P_k = sum_{h<k} P_h (x) P_{k-1-h} for all k <= d.
bool chebyshev_derivative_check(int d);

// Cyclic orbit census, by direct enumeration.
long orbit_size(const Word& w);
long necklace_count(unsigned n, int len);
std::vector<Word> necklace_min_set(unsigned n, int len); // lex-minimal representative per orbit
std::vector<Word> omega_rot1_set(unsigned n, int len);   // words strictly lex-below their right rotation

// Maximal constant blocks of a word.
struct Run {
    unsigned letter = 0;
    int count = 0;
    friend bool operator==(const Run&, const Run&) = default;
};
std::vector<Run> runs_of(const Word& w);
Word word_of_runs(const std::vector<Run>& runs, unsigned n);
// Single block, or first and last blocks on distinct letters.
bool runs_cyclically_reduced(const Word& w);

// P_{k_0}(X_{i_0}) ... P_{k_p}(X_{i_p})
Polynomial chebyshev_run_product(const std::vector<Run>& runs, unsigned n);

// The basis embedding w -> e_w extended linearly: the transport used on the
// plain-word side of the route comparisons (NOT the substitution X_j -> s_j).
FockVector word_embedding(const Polynomial& p, int cap);

// Both transport identities for the word with run data (ks, is), checked at
// truncation cap d >= word length - 1.  partial: the difference quotient of
// the Chebyshev run product with each tensor leg pushed through the
// substitution route, against the splittings of the plain word embedded
// directly.  cyclic: the cyclic derivative of the run product applied to the
// vacuum, against the rotation splittings.  cyclic_proved marks run data
// where the cyclic identity is guaranteed (a single block of length <= 2, or
// first and last letters distinct); outside that the check just reports
// whatever equality holds, and tests pin concrete failures.
struct Prop72Report {
    bool partial_equal = false;
    bool cyclic_equal = false;
    bool cyclic_proved = false;
};
Prop72Report prop72_check(const std::vector<int>& ks, const std::vector<unsigned>& is,
                          unsigned n, int d);

// sum_j T_j T_j* = 2I - 2P - (R + R*) on every basis word of length <= d.
// The composite is grade-preserving, so no truncation is involved.
bool lemma77_check(unsigned n, int d);

// Ker(I - R) = Ker(N - C) on each graded piece 1..max_grade, C being the
// cyclic symmetrization transported to tensors.
bool remark78_check(unsigned n, int max_grade);

// Chebyshev run products over cyclically reduced words together with the
// kernel of the cyclic symmetrization fill the whole polynomial space,
// degree by degree up to d.
bool lemma73_span_check(unsigned n, int d);

// The cyclic-gradient images computed through the semicircular substitution
// and through plain word rotations agree as subspaces of Fock coordinates,
// sources of degree <= d + 1.
bool thm74_image_check(unsigned n, int d);

// F_I = ((l_j* - r_j*) e_I)_j, and the same tuple assembled from Chebyshev
// products over the runs of I and pushed through the substitution route.
// Requires cap >= |I| - 1 (the components live at grade |I| - 1).
FockField f_tuple(const Word& I, int cap);
FockField f_tuple_chebyshev(const Word& I, int cap);

// The full spanning family {F_I : |I| = k + 1} of the grade-k orthogonal
// complement of the gradient image.
std::vector<FockField> trace_preserving_fock_basis(int k, unsigned n);

// Difference family F_I - F_{rot1 I} over omega_rot1_set(n, k+1): the printed
// selection rule, kept verbatim.  Its span is rank-checked downstream, never
// assumed; the suites record where it falls short of the full complement.
std::vector<FockField> omega_basis(int k, unsigned n);

// One necklace at a time: root-of-unity combinations sum_j zeta^j F over the
// left rotations of the minimal representative when zeta is exactly
// representable (orbit sizes 2 and 4), consecutive-rotation differences
// otherwise.  Same span per necklace, all coefficients stay Gaussian
// rational.
std::vector<FockField> root_basis(int k, unsigned n);

// Involution-fixed elements h = G + JG and a = i(G - JG) drawn from
// root_basis, rank-selected until the real span reaches real dimension
// n^{k+1} - (number of necklaces).
struct RealBasisReport {
    std::vector<FockField> basis;
    int real_rank = 0;
    int expected_dim = 0;
    bool complete() const { return real_rank == expected_dim; }
};
RealBasisReport real_basis(int k, unsigned n);

// Grade-by-grade comparison of the F-tuple families against the orthogonal
// complement computed independently from the trace pairing null space.
// family_rank uses root_basis; printed_family_rank records what the verbatim
// difference family achieves at the same grade.
struct DensityRow {
    int grade = 0;
    int family_rank = 0;
    int printed_family_rank = 0;
    int expected_dim = 0; // n^{grade+1} - necklace_count(n, grade+1)
    bool contained = false;
    bool cumulative_equal = false;
};
struct DensityReport {
    bool pass = false;
    std::vector<DensityRow> rows;
};
DensityReport thm712_density_check(int d, unsigned n);

} // namespace cyclograd
