// Acceptance gate: one criterion per invocation, argv[1] in 1..10.
// Prints a single [PASS]/[FAIL] line followed by indented evidence lines;
// exit status 0 on pass, 1 on fail.
#include "cyclograd/calculus.hpp"
#include "cyclograd/fock.hpp"
#include "cyclograd/lie.hpp"
#include "cyclograd/linalg.hpp"
#include "cyclograd/polynomial.hpp"
#include "cyclograd/semicircular.hpp"
#include "cyclograd/seminorms.hpp"
#include "cyclograd/suites.hpp"
#include "cyclograd/trace.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cyclograd;

namespace {

using Notes = std::vector<std::string>;

template <typename... A>
std::string cat(A&&... a) {
    std::ostringstream os;
    (os << ... << a);
    return os.str();
}

Polynomial rand_poly(std::mt19937_64& eng, unsigned n, int maxdeg, int nterms, bool complex_ok = false) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), len(0, maxdeg), flip(0, 3);
    std::uniform_int_distribution<unsigned> letter(1, n);
    Polynomial p(n);
    for (int t = 0; t < nterms; ++t) {
        std::vector<unsigned> ls(static_cast<std::size_t>(len(eng)));
        for (auto& l : ls) l = letter(eng);
        Rat re(num(eng), den(eng));
        re.canonicalize();
        Scalar c = (complex_ok && flip(eng) == 0) ? Scalar(re, Rat(num(eng))) : Scalar(re);
        p.add_term(Word(n, std::move(ls)), c);
    }
    return p;
}

VectorField rand_field(std::mt19937_64& eng, unsigned n, int maxdeg, bool complex_ok = false) {
    VectorField v(n);
    for (unsigned j = 0; j < n; ++j) v[j] = rand_poly(eng, n, maxdeg, 3, complex_ok);
    return v;
}

VectorField rand_homogeneous_field(std::mt19937_64& eng, unsigned n, int comp_deg) {
    VectorField v(n);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<unsigned> letter(1, n);
    for (unsigned j = 0; j < n; ++j) {
        Polynomial p(n);
        for (int t = 0; t < 2; ++t) {
            std::vector<unsigned> ls(static_cast<std::size_t>(comp_deg));
            for (auto& l : ls) l = letter(eng);
            p.add_term(Word(n, std::move(ls)), Scalar(num(eng)));
        }
        v[j] = p;
    }
    return v;
}

long orbit_census(unsigned n, int len) {
    std::set<std::vector<unsigned>> reps;
    for (const Word& word : words_of_length(n, len)) {
        std::vector<unsigned> best = word.letters;
        for (std::size_t t = 1; t < word.size(); ++t) {
            Word r = cyclic_rotate(word, static_cast<long>(t));
            if (r.letters < best) best = r.letters;
        }
        reps.insert(best);
    }
    return static_cast<long>(reps.size());
}

int family_rank(const std::vector<FockField>& fields, unsigned n, int cap) {
    if (fields.empty()) return 0;
    DenseMatrix m = fock_fields_to_matrix(fields, n, cap);
    return rank_of(m, static_cast<int>(m[0].size()));
}

// ------------------------------------------------------------ criteria

bool crit1(Notes& notes) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (unsigned n = 1; n <= 3; ++n) {
        auto rows = exact_sequence_table(n, 6);
        bool all = true;
        std::string kers;
        for (const auto& r : rows) {
            all = all && r.consistent();
            kers += (r.degree ? ", " : "") + std::to_string(r.ker_gradient);
        }
        ok = ok && all;
        notes.push_back(cat(all ? "ok" : "FAIL", ": n = ", n,
                            " degrees 0..6, kernel = symmetrization kernel = commutator span (dims ",
                            kers, "), gradient image = theta kernel at every degree"));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool fast = secs < 30.0;
    notes.push_back(cat(fast ? "ok" : "FAIL", ": total rank computation took ", secs, " s (budget 30 s)"));
    return ok && fast;
}

bool crit2(Notes& notes) {
    std::mt19937_64 eng(9102);
    Rat R(1), Rp(2);
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
        unsigned n = 1 + (i % 2);
        int m = i % 5;
        VectorField k = rand_field(eng, n, 3);
        Polynomial p = rand_poly(eng, n, 3, 4);
        Rat lhs = seminorm(iterated_field(k, p, static_cast<unsigned>(m)), {R, 0}).value;
        Rat bound = thm27_bound(m, R, Rp, seminorm(k, {Rp, 0}).value, seminorm(p, {Rp, 0}).value);
        if (!(lhs <= bound)) ++violations;
    }
    notes.push_back(cat(violations == 0 ? "ok" : "FAIL",
                        ": 200 seeded pairs (n <= 2, degree <= 3, m cycling 0..4, R = 1, R' = 2), ",
                        violations, " violations of the exact rational inequality"));
    bool ident = true;
    for (int m = 0; m <= 3; ++m) ident = ident && lambda_power_identity_check(m, Rp, 2 * m + 4);
    notes.push_back(cat(ident ? "ok" : "FAIL",
                        ": iterated resolvent derivation identity exact on truncated series, m <= 3"));
    return violations == 0 && ident;
}

bool crit3(Notes& notes) {
    std::mt19937_64 eng(9103);
    int bad_major = 0, bad_bracket = 0;
    for (int i = 0; i < 200; ++i) {
        unsigned n = 1 + (i % 2);
        VectorField k = rand_field(eng, n, 3, true);
        Polynomial p = rand_poly(eng, n, 3, 4, true);
        if (!coeff_leq(majorant(apply_field(k, p)), apply_field(majorant(k), majorant(p)))) ++bad_major;
    }
    for (int i = 0; i < 200; ++i) {
        unsigned n = 1 + (i % 2);
        Polynomial p = rand_poly(eng, n, 3, 4);
        Polynomial q = rand_poly(eng, n, 3, 4);
        Rat lhs = seminorm(commutator(p, q), {Rat(1), 0}).value;
        Rat rhs(seminorm(p, {Rat(1), 0}).value * seminorm(q, {Rat(1), 1}).value +
                seminorm(p, {Rat(1), 1}).value * seminorm(q, {Rat(1), 0}).value);
        if (!(lhs <= rhs)) ++bad_bracket;
    }
    notes.push_back(cat(bad_major == 0 ? "ok" : "FAIL",
                        ": derivation output majorized coefficientwise by the majorant derivation, 200 instances, ",
                        bad_major, " failures"));
    notes.push_back(cat(bad_bracket == 0 ? "ok" : "FAIL",
                        ": |[P,Q]| <= |P||Q|' + |P|'|Q| exactly at R = 1, 200 instances, ", bad_bracket,
                        " failures"));
    return bad_major == 0 && bad_bracket == 0;
}

bool crit4(Notes& notes) {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    bool cat_ok = true;
    for (int k = 0; k <= 6; ++k) {
        Word w(1, std::vector<unsigned>(static_cast<std::size_t>(2 * k), 1u));
        cat_ok = cat_ok && semicircular_moment(w) == Rat(catalan[k]) &&
                 fock_moment(w) == Scalar(Rat(catalan[k]));
    }
    notes.push_back(cat(cat_ok ? "ok" : "FAIL",
                        ": even one-variable moments 1, 1, 2, 5, 14, 42, 132 from pairing count and from "
                        "vacuum expectation independently"));
    int words = 0, agree = 0;
    for (int len = 0; len <= 8; ++len)
        for (const Word& w : words_of_length(2, len)) {
            ++words;
            if (Scalar(semicircular_moment(w)) == fock_moment(w)) ++agree;
        }
    notes.push_back(cat(agree == words ? "ok" : "FAIL", ": mixed moments agree on all ", words,
                        " words of length <= 8 on two letters (", agree, " matched)"));
    return cat_ok && agree == words;
}

bool crit5(Notes& notes) {
    bool ok = true;
    for (unsigned n = 1; n <= 3; ++n) {
        bool one = lemma77_check(n, 5);
        ok = ok && one;
        notes.push_back(cat(one ? "ok" : "FAIL", ": n = ", n,
                            ": sum of T_j T_j* equals 2I - 2P - (R + R*) on every basis word of grade <= 5"));
    }
    return ok;
}

bool crit6(Notes& notes) {
    bool dims_ok = true, grade1_ok = true, span_ok = true;
    std::string dim_list, omega_list, root_list;
    std::vector<int> dims, omega_ranks, root_ranks;
    for (int k = 0; k <= 4; ++k) {
        int expected = (1 << (k + 1)) - static_cast<int>(orbit_census(2, k + 1));
        int full = family_rank(trace_preserving_fock_basis(k, 2), 2, k);
        int omega = family_rank(omega_basis(k, 2), 2, k);
        int roots = family_rank(root_basis(k, 2), 2, k);
        dims_ok = dims_ok && full == expected;
        span_ok = span_ok && omega == expected;
        if (k == 1) grade1_ok = expected == 1 && full == 1;
        dims.push_back(expected);
        omega_ranks.push_back(omega);
        root_ranks.push_back(roots);
        dim_list += (k ? "/" : "") + std::to_string(expected);
        omega_list += (k ? "/" : "") + std::to_string(omega);
        root_list += (k ? "/" : "") + std::to_string(roots);
    }
    notes.push_back(cat(dims_ok ? "ok" : "FAIL",
                        ": complement rank equals word count minus cyclic orbit count at grades 0..4 "
                        "(dims ", dim_list, "; orbit count by direct enumeration, rank by exact elimination)"));
    notes.push_back(cat(grade1_ok ? "ok" : "FAIL",
                        ": the grade-1 complement is a single line (the antisymmetric rotation field)"));
    notes.push_back(cat(span_ok ? "ok" : "FAIL",
                        ": rotation-difference family spans the complement: rank ", omega_list, " against dim ",
                        dim_list, " at grades 0..4"));
    if (!span_ok) {
        notes.push_back(
            "analysis: the family keeps F(w) - F(rot w) only for words strictly lex-below their rotation; "
            "each member is independent, but from grade 2 on the selection has fewer members than the "
            "complement dimension (3 of 4, 7 of 10, 15 of 24), so no choice of coefficients can span");
        bool fix = true;
        for (int k = 0; k <= 4; ++k) fix = fix && root_ranks[static_cast<std::size_t>(k)] == dims[static_cast<std::size_t>(k)];
        notes.push_back(cat(fix ? "ok" : "FAIL",
                            ": combining all rotations of each orbit (root-of-unity weights per necklace) does "
                            "span: rank ", root_list, " — the family, not the subspace claim, is what fails"));
    }
    return dims_ok && grade1_ok && span_ok;
}

bool crit7(Notes& notes) {
    DensityReport rep = thm712_density_check(4, 2);
    for (const DensityRow& r : rep.rows)
        notes.push_back(cat(r.cumulative_equal && r.contained && r.family_rank == r.expected_dim ? "ok" : "FAIL",
                            ": grade ", r.grade, ": necklace-family rank ", r.family_rank,
                            " = complement dimension ", r.expected_dim,
                            ", spans contained and equal (rotation-difference subfamily reaches ",
                            r.printed_family_rank, ")"));
    notes.push_back("note: this certifies grade-by-grade span equality through grade 4 only; "
                    "density in the full space is not claimed");
    return rep.pass;
}

bool crit8(Notes& notes) {
    std::mt19937_64 eng(9108);
    TraceFunctional tau = semicircular_trace(2);
    std::vector<VectorField> pool;
    for (int k = 0; k <= 2; ++k) {
        GradeBasisReport rep = trace_preserving_basis(tau, k, 2);
        for (const auto& v : rep.basis) pool.push_back(v);
    }
    std::uniform_int_distribution<int> coeff(-2, 2);
    int members = 0, disagreements = 0;
    for (int i = 0; i < 100; ++i) {
        VectorField k(2);
        if (i % 5 == 0) {
            for (const VectorField& b : pool) k += Scalar(coeff(eng)) * b;
        } else {
            k = rand_field(eng, 2, 3);
        }
        bool direct = is_trace_preserving(k, tau, 6);
        bool paired = is_trace_preserving_via_gradients(k, tau, 6);
        if (direct != paired) ++disagreements;
        if (direct) ++members;
    }
    notes.push_back(cat(disagreements == 0 ? "ok" : "FAIL",
                        ": both membership routes agree on 100 seeded fields at degree cap 6 (",
                        disagreements, " disagreements)"));
    bool both_sides = members >= 10 && members <= 90;
    notes.push_back(cat(both_sides ? "ok" : "FAIL", ": ", members,
                        " members and ", 100 - members, " non-members — both answers exercised"));
    return disagreements == 0 && both_sides;
}

bool crit9(Notes& notes) {
    std::mt19937_64 eng(9109);
    TraceFunctional tau = semicircular_trace(2);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        Polynomial p = rand_poly(eng, 2, 4, 4, i % 3 == 0);
        VectorField k = rand_field(eng, 2, 4, i % 3 == 0);
        if (!first_variation(tau, p, k).equal()) ++bad;
    }
    notes.push_back(cat(bad == 0 ? "ok" : "FAIL",
                        ": epsilon-expansion coefficient equals the gradient pairing on 200 seeded "
                        "(P, K) at n = 2, degree <= 4 (", bad, " mismatches)"));
    return bad == 0;
}

bool crit10(Notes& notes) {
    std::mt19937_64 eng(9110);
    bool all = true;

    int bad_jacobi = 0;
    for (int i = 0; i < 100; ++i) {
        unsigned n = 1 + (i % 3);
        VectorField a = rand_field(eng, n, 2, true);
        VectorField b = rand_field(eng, n, 2, true);
        VectorField c = rand_field(eng, n, 2, true);
        VectorField j = vect_bracket(a, vect_bracket(b, c)) + vect_bracket(b, vect_bracket(c, a)) +
                        vect_bracket(c, vect_bracket(a, b));
        if (!j.is_zero()) ++bad_jacobi;
    }
    all = all && bad_jacobi == 0;
    notes.push_back(cat(bad_jacobi == 0 ? "ok" : "FAIL", ": Jacobi identity exact on 100 seeded triples (",
                        bad_jacobi, " failures)"));

    bool grading = true;
    for (int j = -1; j <= 2; ++j)
        for (int k = -1; k <= 2; ++k)
            for (int rep = 0; rep < 3; ++rep) {
                VectorField a = rand_homogeneous_field(eng, 2, j + 1);
                VectorField b = rand_homogeneous_field(eng, 2, k + 1);
                VectorField br = vect_bracket(a, b);
                if (br.is_zero()) continue;
                GradedVectorField g = grade(br);
                grading = grading && g.pieces.size() == 1 && g.pieces.begin()->first == j + k;
            }
    all = all && grading;
    notes.push_back(cat(grading ? "ok" : "FAIL",
                        ": brackets of homogeneous pieces land in the summed grade, grades -1..2"));

    bool gl_ok = true;
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned a = 1; a <= n; ++a)
            for (unsigned b = 1; b <= n; ++b)
                for (unsigned c = 1; c <= n; ++c)
                    for (unsigned d = 1; d <= n; ++d) {
                        VectorField lhs = vect_bracket(gl_unit(a, b, n), gl_unit(c, d, n));
                        VectorField rhs = VectorField::zero(n);
                        if (d == a) rhs += gl_unit(c, b, n);
                        if (b == c) rhs -= gl_unit(a, d, n);
                        gl_ok = gl_ok && lhs == rhs;
                    }
    all = all && gl_ok;
    notes.push_back(cat(gl_ok ? "ok" : "FAIL",
                        ": matrix-unit fields close with the derived structure constants for n <= 3"));

    int bad_inner = 0;
    for (int i = 0; i < 50; ++i) {
        unsigned n = 1 + (i % 2);
        Polynomial p = rand_poly(eng, n, 3, 3, true);
        VectorField v = rand_field(eng, n, 2, true);
        Polynomial w = inner_bracket_witness(p, v);
        if (!(w == -apply_field(v, p) && vect_bracket(inner_field(p), v) == inner_field(w))) ++bad_inner;
    }
    all = all && bad_inner == 0;
    notes.push_back(cat(bad_inner == 0 ? "ok" : "FAIL",
                        ": inner fields form an ideal with the explicit witness -D_v P, 50 instances (",
                        bad_inner, " failures)"));

    Rat R(1), Rp(2);
    int bad_chain = 0;
    for (int m = 0; m <= 3; ++m)
        for (int i = 0; i < 25; ++i) {
            unsigned n = 1 + (i % 2);
            std::vector<VectorField> ks;
            Rat bigM(0);
            for (int j = 0; j <= m; ++j) {
                ks.push_back(rand_field(eng, n, 2));
                Rat nk = seminorm(ks.back(), {Rp, 0}).value;
                if (nk > bigM) bigM = nk;
            }
            Rat lhs = seminorm(adjoint_chain(ks), {R, 0}).value;
            if (!(lhs <= prop64_bound(m, bigM, R, Rp))) ++bad_chain;
        }
    all = all && bad_chain == 0;
    notes.push_back(cat(bad_chain == 0 ? "ok" : "FAIL",
                        ": folded bracket chains stay under the corrected-exponent bound for m <= 3 (",
                        bad_chain, " violations)"));

    return all;
}

struct Criterion {
    bool (*fn)(Notes&);
    const char* desc;
};

const Criterion criteria[] = {
    {crit1, "graded kernels of the gradient, the symmetrization, and theta line up exactly for n = 1, 2, 3 through degree 6"},
    {crit2, "iterated derivation seminorms stay under the double-factorial bound; the resolvent power identity is exact"},
    {crit3, "derivation majorization and the bracket seminorm bound hold exactly on seeded instances"},
    {crit4, "semicircular moments: Catalan values and two independent mixed-moment routes agree through length 8"},
    {crit5, "the left-right defect identity holds on every grade <= 5 for n = 1, 2, 3"},
    {crit6, "complement dimensions match the orbit census and the rotation-difference family spans every grade <= 4"},
    {crit7, "per-necklace families span the independently computed trace complement at every grade <= 4"},
    {crit8, "the two trace-preservation membership tests agree on seeded fields at degree cap 6"},
    {crit9, "the first-order trace variation equals the gradient pairing on seeded instances"},
    {crit10, "bracket axioms, grading, matrix-unit constants, inner ideal witnesses, and chain bounds"},
};

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1-10>\n");
        return 2;
    }
    int which = std::atoi(argv[1]);
    if (which < 1 || which > 10) {
        std::fprintf(stderr, "criterion number must be in 1..10\n");
        return 2;
    }
    const Criterion& c = criteria[which - 1];
    Notes notes;
    bool pass = c.fn(notes);
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", which, c.desc);
    for (const std::string& s : notes) std::printf("  %s\n", s.c_str());
    return pass ? 0 : 1;
}
