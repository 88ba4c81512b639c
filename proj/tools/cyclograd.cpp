#include "cyclograd/calculus.hpp"
#include "cyclograd/fock.hpp"
#include "cyclograd/lie.hpp"
#include "cyclograd/parse.hpp"
#include "cyclograd/semicircular.hpp"
#include "cyclograd/seminorms.hpp"
#include "cyclograd/suites.hpp"
#include "cyclograd/trace.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace cyclograd;

namespace {

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    try {
        mpz_class top(num), bot(den);
        if (bot == 0) throw std::invalid_argument("zero denominator");
        Rat q(top, bot);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(flag, "expected a rational like 3 or 3/2, got '" + text + "'");
    }
}

// Parse with an optional explicit generator count; when the count is inferred,
// widen it so that generator index j is addressable.
Polynomial parse_poly_arg(const std::string& text, unsigned n, unsigned min_gens = 0) {
    Polynomial p = parse_polynomial(text, n);
    if (n == 0 && p.gens() < min_gens) p = parse_polynomial(text, min_gens);
    return p;
}

void report_parse_error(const ParseError& e) { std::cerr << e.what() << "\n"; }

Polynomial fock_to_poly(const FockVector& v) {
    Polynomial p(v.n);
    for (const auto& [w, c] : v.terms) p.add_term(w, c);
    return p;
}

std::string fock_field_text(const FockField& f, unsigned n) {
    std::vector<Polynomial> comps;
    comps.reserve(f.size());
    for (const auto& v : f) comps.push_back(fock_to_poly(v));
    return print_vector_field(VectorField(n, std::move(comps)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclograd: exact noncommutative calculus, seminorm bounds, and Fock-model checks"};
    app.require_subcommand(1);
    int rc = 0;

    // ------------------------------------------------------------ derive
    std::string derive_text;
    unsigned derive_j = 1, derive_n = 0;
    auto* derive = app.add_subcommand("derive", "cyclic derivative of a polynomial");
    derive->add_option("poly", derive_text, "polynomial, e.g. '(1/2)*x1.x2.x1 - 3*x2 + 1'")->required();
    derive->add_option("--j", derive_j, "generator index (default 1)")->check(CLI::PositiveNumber);
    derive->add_option("--n", derive_n, "generator count (default: inferred)");
    derive->callback([&] {
        Polynomial p = parse_poly_arg(derive_text, derive_n, derive_j);
        if (derive_j > p.gens()) throw CLI::ValidationError("--j", "index exceeds --n");
        std::cout << print_polynomial(cyclic_derivative(p, derive_j)) << "\n";
    });

    // ------------------------------------------------------------ grad
    std::string grad_text;
    unsigned grad_n = 0;
    auto* grad = app.add_subcommand("grad", "cyclic gradient as a vector field");
    grad->add_option("poly", grad_text, "polynomial")->required();
    grad->add_option("--n", grad_n, "generator count (default: inferred)");
    grad->callback([&] {
        Polynomial p = parse_poly_arg(grad_text, grad_n);
        std::cout << print_vector_field(cyclic_gradient(p)) << "\n";
    });

    // ------------------------------------------------------------ ffd
    std::string ffd_text;
    unsigned ffd_j = 1, ffd_n = 0;
    auto* ffd = app.add_subcommand("ffd", "free difference quotient, printed as tensor summands");
    ffd->add_option("poly", ffd_text, "polynomial")->required();
    ffd->add_option("--j", ffd_j, "generator index (default 1)")->check(CLI::PositiveNumber);
    ffd->add_option("--n", ffd_n, "generator count (default: inferred)");
    ffd->callback([&] {
        Polynomial p = parse_poly_arg(ffd_text, ffd_n, ffd_j);
        if (ffd_j > p.gens()) throw CLI::ValidationError("--j", "index exceeds --n");
        std::cout << print_tensor(free_difference_quotient(p, ffd_j)) << "\n";
    });

    // ------------------------------------------------------------ csym
    std::string csym_text;
    unsigned csym_n = 0;
    auto* csym = app.add_subcommand("csym", "cyclic symmetrization (sum of word rotations)");
    csym->add_option("poly", csym_text, "polynomial")->required();
    csym->add_option("--n", csym_n, "generator count (default: inferred)");
    csym->callback([&] {
        std::cout << print_polynomial(cyclic_symmetrize(parse_poly_arg(csym_text, csym_n))) << "\n";
    });

    // ------------------------------------------------------------ bracket
    std::string bra_a, bra_b;
    unsigned bra_n = 0;
    auto* bra = app.add_subcommand("bracket", "Lie bracket of two vector fields (';'-joined components)");
    bra->add_option("field1", bra_a, "first field, e.g. 'x2; -x1'")->required();
    bra->add_option("field2", bra_b, "second field")->required();
    bra->add_option("--n", bra_n, "generator count (default: component count)");
    bra->callback([&] {
        VectorField a = parse_vector_field(bra_a, bra_n);
        VectorField b = parse_vector_field(bra_b, bra_n);
        if (a.n != b.n) throw CLI::ValidationError("field2", "fields have different component counts");
        std::cout << print_vector_field(vect_bracket(a, b)) << "\n";
    });

    // ------------------------------------------------------------ theta
    std::string theta_text;
    unsigned theta_n = 0;
    auto* th = app.add_subcommand("theta", "sum of commutators [X_j, v_j] of a vector field");
    th->add_option("field", theta_text, "vector field, ';'-joined components")->required();
    th->add_option("--n", theta_n, "generator count (default: component count)");
    th->callback([&] {
        std::cout << print_polynomial(theta(parse_vector_field(theta_text, theta_n))) << "\n";
    });

    // ------------------------------------------------------------ seminorm
    std::string sem_text, sem_R = "1";
    unsigned sem_n = 0;
    int sem_m = 0;
    auto* sem = app.add_subcommand("seminorm", "weighted coefficient seminorm |.|_{R,k}");
    sem->add_option("expr", sem_text, "polynomial, or vector field if it contains ';'")->required();
    sem->add_option("--R", sem_R, "radius R > 0, rational (default 1)");
    sem->add_option("--m", sem_m, "order k >= 0 of the degree weight (default 0)")
        ->check(CLI::NonNegativeNumber);
    sem->add_option("--n", sem_n, "generator count (default: inferred)");
    sem->callback([&] {
        Rat R = parse_rat_flag(sem_R, "--R");
        if (sgn(R) <= 0) throw CLI::ValidationError("--R", "R must be positive");
        SeminormParams params{R, sem_m};
        SeminormValue v = sem_text.find(';') != std::string::npos
                              ? seminorm(parse_vector_field(sem_text, sem_n), params)
                              : seminorm(parse_poly_arg(sem_text, sem_n), params);
        std::cout << (v.exact ? "" : "<= ") << rat_str(v.value) << "\n";
    });

    // ------------------------------------------------------------ bound
    auto* bound = app.add_subcommand("bound", "evaluate a derivation bound against the actual seminorm");
    bound->require_subcommand(1);

    std::string b27_field, b27_poly, b27_R = "1", b27_Rp = "2";
    unsigned b27_n = 0;
    int b27_m = 1;
    auto* b27 = bound->add_subcommand("thm27", "iterated-derivation seminorm bound");
    b27->add_option("field", b27_field, "vector field K, ';'-joined")->required();
    b27->add_option("poly", b27_poly, "polynomial P")->required();
    b27->add_option("--m", b27_m, "number of derivation applications (default 1)")
        ->check(CLI::NonNegativeNumber);
    b27->add_option("--R", b27_R, "inner radius, rational (default 1)");
    b27->add_option("--Rp", b27_Rp, "outer radius, rational (default 2)");
    b27->add_option("--n", b27_n, "generator count (default: component count)");
    b27->callback([&] {
        Rat R = parse_rat_flag(b27_R, "--R"), Rp = parse_rat_flag(b27_Rp, "--Rp");
        if (sgn(R) <= 0 || Rp <= R) throw CLI::ValidationError("--Rp", "need 0 < R < Rp");
        VectorField k = parse_vector_field(b27_field, b27_n);
        Polynomial p = parse_polynomial(b27_poly, k.n);
        Rat nk = seminorm(k, {Rp, 0}).value;
        Rat np = seminorm(p, {Rp, 0}).value;
        Rat b = thm27_bound(b27_m, R, Rp, nk, np);
        Rat actual = seminorm(iterated_field(k, p, static_cast<unsigned>(b27_m)), {R, 0}).value;
        std::cout << "|K| = " << rat_str(nk) << " at outer radius\n"
                  << "|P| = " << rat_str(np) << " at outer radius\n"
                  << "bound  = " << rat_str(b) << "\n"
                  << "actual = " << rat_str(actual) << "\n"
                  << "holds: " << (actual <= b ? "yes" : "NO") << "\n";
        if (actual > b) rc = 1;
    });

    std::vector<std::string> b64_fields;
    std::string b64_R = "1", b64_Rp = "2";
    unsigned b64_n = 0;
    auto* b64 = bound->add_subcommand("prop64", "iterated-bracket seminorm bound");
    b64->add_option("fields", b64_fields, "chain of vector fields, innermost first")->required();
    b64->add_option("--R", b64_R, "inner radius, rational (default 1)");
    b64->add_option("--Rp", b64_Rp, "outer radius, rational (default 2)");
    b64->add_option("--n", b64_n, "generator count (default: component count)");
    b64->callback([&] {
        Rat R = parse_rat_flag(b64_R, "--R"), Rp = parse_rat_flag(b64_Rp, "--Rp");
        if (sgn(R) <= 0 || Rp <= R) throw CLI::ValidationError("--Rp", "need 0 < R < Rp");
        std::vector<VectorField> ks;
        Rat bigM(0);
        for (const auto& text : b64_fields) {
            ks.push_back(parse_vector_field(text, b64_n ? b64_n : (ks.empty() ? 0 : ks.front().n)));
            Rat nk = seminorm(ks.back(), {Rp, 0}).value;
            if (nk > bigM) bigM = nk;
        }
        int m = static_cast<int>(ks.size()) - 1;
        Rat b = prop64_bound(m, bigM, R, Rp);
        Rat actual = seminorm(adjoint_chain(ks), {R, 0}).value;
        std::cout << "m = " << m << ", max |K_j| = " << rat_str(bigM) << " at outer radius\n"
                  << "bound  = " << rat_str(b) << "\n"
                  << "actual = " << rat_str(actual) << "\n"
                  << "holds: " << (actual <= b ? "yes" : "NO") << "\n";
        if (actual > b) rc = 1;
    });

    // ------------------------------------------------------------ moment
    std::string mom_text;
    unsigned mom_n = 0;
    auto* mom = app.add_subcommand("moment", "semicircular moment of a word, e.g. x1.x2.x1.x2");
    mom->add_option("word", mom_text, "word in the generators ('1' for the empty word)")->required();
    mom->add_option("--n", mom_n, "generator count (default: inferred)");
    mom->callback([&] {
        Word w = parse_word(mom_text, mom_n);
        std::cout << rat_str(semicircular_moment(w)) << "\n";
    });

    // ------------------------------------------------------------ basis
    int basis_grade = 1;
    unsigned basis_n = 2;
    std::string basis_form, basis_trace = "semicircular";
    auto* bas = app.add_subcommand("basis", "basis of the grade-k trace-preserving fields");
    bas->add_option("--grade", basis_grade, "homogeneous grade k (default 1)")->required();
    bas->add_option("--n", basis_n, "generator count (default 2)");
    bas->add_option("--form", basis_form,
                    "Fock-model family: lex (rotation differences), roots (necklace\n"
                    "combinations), real (involution-fixed); omit for polynomial fields");
    bas->add_option("--trace", basis_trace, "trace for the polynomial-field basis (default semicircular)");
    bas->callback([&] {
        if (basis_n < 1 || basis_n > 4) throw CLI::ValidationError("--n", "generator count must be in [1, 4]");
        if (basis_grade < -1 || basis_grade > 6)
            throw CLI::ValidationError("--grade", "grade must be in [-1, 6]");
        if (!basis_form.empty()) {
            if (basis_trace != "semicircular")
                throw CLI::ValidationError("--form", "Fock-model families exist for the semicircular trace only");
            if (basis_grade < 0) throw CLI::ValidationError("--grade", "Fock-model families need grade >= 0");
            std::vector<FockField> fam;
            if (basis_form == "lex") fam = omega_basis(basis_grade, basis_n);
            else if (basis_form == "roots") fam = root_basis(basis_grade, basis_n);
            else if (basis_form == "real") fam = real_basis(basis_grade, basis_n).basis;
            else throw CLI::ValidationError("--form", "expected lex, roots, or real");
            for (const auto& f : fam) std::cout << fock_field_text(f, basis_n) << "\n";
            std::cerr << fam.size() << " elements (coordinates over words of length " << basis_grade << ")\n";
            return;
        }
        if (basis_trace != "semicircular" && basis_trace != "pure")
            throw CLI::ValidationError("--trace", "expected semicircular or pure");
        TraceFunctional tau = basis_trace == "pure" ? pure_trace(basis_n) : semicircular_trace(basis_n);
        auto rep = trace_preserving_basis(tau, basis_grade, basis_n);
        for (const auto& v : rep.basis) std::cout << print_vector_field(v) << "\n";
        std::cerr << rep.basis.size() << " elements\n";
    });

    // ------------------------------------------------------------ verify
    std::string ver_suite, ver_R = "1", ver_Rp = "2";
    SuiteOptions ver_opts;
    bool ver_json = false;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", ver_suite, "exactness | seminorms | thm27 | lie | prop64 | semicircular | all")
        ->required();
    ver->add_option("--n", ver_opts.n, "generator count (default 2)");
    ver->add_option("--degree", ver_opts.degree, "degree budget for random instances (default 3)");
    ver->add_option("--m", ver_opts.m, "maximum derivation/bracket order (default 3)");
    ver->add_option("--R", ver_R, "inner radius, rational (default 1)");
    ver->add_option("--Rp", ver_Rp, "outer radius, rational (default 2)");
    ver->add_option("--trace", ver_opts.trace, "semicircular | pure (default semicircular)");
    ver->add_option("--seed", ver_opts.seed, "seed for the randomized checks (default 0)");
    ver->add_option("--jobs", ver_opts.jobs, "run independent checks on this many threads (default 1)");
    ver->add_flag("--json", ver_json, "machine-readable report");
    ver->callback([&] {
        ver_opts.R = parse_rat_flag(ver_R, "--R");
        ver_opts.Rp = parse_rat_flag(ver_Rp, "--Rp");
        SuiteReport rep = run_suite(ver_suite, ver_opts);
        if (ver_json) std::cout << rep.to_json().dump(2) << "\n";
        else rep.print_human(std::cout);
        if (!rep.all_pass()) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        report_parse_error(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
