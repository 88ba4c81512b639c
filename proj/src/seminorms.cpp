#include "cyclograd/seminorms.hpp"

#include <stdexcept>

namespace cyclograd {

Rat rat_pow(const Rat& x, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

Rat double_factorial_odd(int m) {
    Rat r(1);
    for (int i = 1; i <= m; ++i) r *= 2 * i - 1;
    return r;
}

Rat factorial(int m) {
    Rat r(1);
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

namespace {

// p (p-1) ... (p-k+1)
Rat falling(int p, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= p - i;
    return r;
}

void check_params(const SeminormParams& params) {
    if (sgn(params.R) <= 0) throw std::invalid_argument("seminorm radius must be positive");
    if (params.k < 0) throw std::invalid_argument("seminorm order must be nonnegative");
}

} // namespace

SeminormValue seminorm(const Polynomial& p, const SeminormParams& params) {
    check_params(params);
    SeminormValue out{Rat(0), true};
    for (const auto& [w, c] : p.terms()) {
        int deg = static_cast<int>(w.size());
        if (deg < params.k) continue;
        bool exact = true;
        Rat a = abs_or_upper(c, &exact);
        out.exact = out.exact && exact;
        out.value += a * rat_pow(params.R, deg - params.k) * falling(deg, params.k);
    }
    return out;
}

SeminormValue seminorm(const VectorField& v, const SeminormParams& params) {
    check_params(params);
    SeminormValue out{Rat(0), true};
    for (unsigned j = 0; j < v.n; ++j) {
        SeminormValue s = seminorm(v[j], params);
        out.exact = out.exact && s.exact;
        if (s.value > out.value) out.value = s.value;
    }
    return out;
}

Polynomial majorant(const Polynomial& p) {
    Polynomial r(p.gens());
    for (const auto& [w, c] : p.terms()) r.add_term(w, Scalar(abs_or_upper(c)));
    return r;
}

VectorField majorant(const VectorField& v) {
    VectorField r(v.n);
    for (unsigned j = 0; j < v.n; ++j) r[j] = majorant(v[j]);
    return r;
}

bool is_majorant(const Polynomial& p) {
    for (const auto& [w, c] : p.terms())
        if (!c.is_real() || sgn(c.re) < 0) return false;
    return true;
}

namespace {

void require_majorant(const Polynomial& p) {
    if (!is_majorant(p)) throw std::invalid_argument("majorant input required");
}

} // namespace

bool coeff_leq(const Polynomial& p, const Polynomial& q) {
    require_majorant(p);
    require_majorant(q);
    if (p.gens() != q.gens()) throw std::invalid_argument("generator count mismatch");
    for (const auto& [w, c] : p.terms())
        if (c.re > q.coeff(w).re) return false;
    return true;
}

Polynomial coeff_max(const Polynomial& p, const Polynomial& q) {
    require_majorant(p);
    require_majorant(q);
    if (p.gens() != q.gens()) throw std::invalid_argument("generator count mismatch");
    Polynomial r = p;
    for (const auto& [w, c] : q.terms())
        if (c.re > r.coeff(w).re) r.add_term(w, c - r.coeff(w));
    return r;
}

Polynomial phi_n(const Polynomial& p) {
    Polynomial r(1);
    for (const auto& [w, c] : p.terms()) {
        Word mono(1);
        mono.letters.assign(w.size(), 1);
        r.add_term(mono, Scalar(abs_or_upper(c)));
    }
    return r;
}

Polynomial psi_n(const VectorField& v) {
    Polynomial r(1);
    for (unsigned j = 0; j < v.n; ++j) r = coeff_max(r, phi_n(v[j]));
    return r;
}

namespace {

void require_one_var(const Polynomial& p) {
    if (p.gens() != 1) throw std::invalid_argument("one-generator polynomial required");
}

} // namespace

Rat eval_at(const Polynomial& one_var, const Rat& x) {
    require_one_var(one_var);
    Rat r(0);
    for (const auto& [w, c] : one_var.terms()) {
        if (!c.is_real()) throw std::invalid_argument("real coefficients required");
        r += c.re * rat_pow(x, static_cast<int>(w.size()));
    }
    return r;
}

Polynomial one_var_derivative(const Polynomial& one_var) {
    require_one_var(one_var);
    Polynomial r(1);
    for (const auto& [w, c] : one_var.terms()) {
        if (w.empty()) continue;
        Word mono(1);
        mono.letters.assign(w.size() - 1, 1);
        r.add_term(mono, Scalar(Rat(static_cast<long>(w.size()))) * c);
    }
    return r;
}

Series series_from_poly(const Polynomial& one_var, int cap) {
    require_one_var(one_var);
    Series s{cap, std::vector<Rat>(static_cast<std::size_t>(cap) + 1, Rat(0))};
    for (const auto& [w, c] : one_var.terms()) {
        if (!c.is_real()) throw std::invalid_argument("real coefficients required");
        if (static_cast<int>(w.size()) <= cap) s.c[w.size()] = c.re;
    }
    return s;
}

Series binomial_envelope(const Rat& alpha, int e, int cap) {
    if (e < 0 || cap < 0) throw std::invalid_argument("binomial envelope wants e, cap >= 0");
    Series s{cap, std::vector<Rat>(static_cast<std::size_t>(cap) + 1, Rat(0))};
    s.c[0] = 1;
    for (int p = 1; p <= cap; ++p) s.c[p] = s.c[p - 1] * alpha * Rat(e - 1 + p) / p;
    return s;
}

Series series_mul(const Series& a, const Series& b) {
    int cap = std::min(a.cap, b.cap);
    if (cap < 0) throw std::invalid_argument("series truncated away");
    Series s{cap, std::vector<Rat>(static_cast<std::size_t>(cap) + 1, Rat(0))};
    for (int k = 0; k <= cap; ++k)
        for (int i = 0; i <= k; ++i) s.c[k] += a.c[i] * b.c[k - i];
    return s;
}

Series series_scale(const Rat& f, Series a) {
    for (auto& x : a.c) x *= f;
    return a;
}

Series series_derivative(const Series& a) {
    if (a.cap < 1) throw std::invalid_argument("series truncated away");
    Series s{a.cap - 1, std::vector<Rat>(static_cast<std::size_t>(a.cap), Rat(0))};
    for (int i = 0; i < a.cap; ++i) s.c[i] = Rat(i + 1) * a.c[i + 1];
    return s;
}

Series series_pow(const Series& a, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Series s{a.cap, std::vector<Rat>(static_cast<std::size_t>(a.cap) + 1, Rat(0))};
    s.c[0] = 1;
    for (int i = 0; i < e; ++i) s = series_mul(s, a);
    return s;
}

bool series_leq(const Series& a, const Series& b, int up_to) {
    if (up_to > a.cap || up_to > b.cap) throw std::invalid_argument("comparison beyond truncation");
    for (int i = 0; i <= up_to; ++i)
        if (a.c[i] > b.c[i]) return false;
    return true;
}

std::optional<Rat> min_envelope_constant(const Polynomial& one_var_majorant, const Rat& alpha,
                                         int e, int d) {
    require_majorant(one_var_majorant);
    Series p = series_from_poly(one_var_majorant, d);
    Series env = binomial_envelope(alpha, e, d);
    Rat c(0);
    for (int i = 0; i <= d; ++i) {
        if (sgn(env.c[i]) == 0) {
            if (sgn(p.c[i]) != 0) return std::nullopt;
            continue;
        }
        Rat q = p.c[i] / env.c[i];
        if (q > c) c = q;
    }
    return c;
}

Rat thm27_bound(int m, const Rat& R, const Rat& Rp, const Rat& normK, const Rat& normP) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (!(sgn(R) > 0 && R < Rp)) throw std::invalid_argument("need 0 < R < Rp");
    return double_factorial_odd(m) * rat_pow(Rp, m + 1) / rat_pow(Rat(Rp - R), 2 * m + 1) *
           rat_pow(normK, m) * normP;
}

std::optional<Rat> analytic_radius(const Rat& R, const Rat& Rp, const Rat& normK) {
    if (!(sgn(R) > 0 && R < Rp)) throw std::invalid_argument("need 0 < R < Rp");
    if (sgn(normK) == 0) return std::nullopt;
    return Rat(Rat(Rp - R) * Rat(Rp - R) / (Rat(2) * Rp * normK));
}

bool lambda_power_identity_check(int m, const Rat& Rp, int d) {
    if (m < 0 || d < m + 1) throw std::invalid_argument("need d >= m + 1");
    if (sgn(Rp) <= 0) throw std::invalid_argument("Rp must be positive");
    Series lam = binomial_envelope(Rat(1) / Rp, 1, d);
    Series lhs = lam;
    for (int i = 0; i < m; ++i) lhs = series_mul(lam, series_derivative(lhs));
    Series rhs = series_scale(Rat(double_factorial_odd(m) / rat_pow(Rp, m)), series_pow(lam, 2 * m + 1));
    for (int i = 0; i <= d - m; ++i)
        if (lhs.c[i] != rhs.c[i]) return false;
    return true;
}

Rat prop64_bound(int m, const Rat& bigM, const Rat& R, const Rat& Rp) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (!(sgn(R) > 0 && R < Rp)) throw std::invalid_argument("need 0 < R < Rp");
    Rat base = Rat(1) - R / Rp;
    return rat_pow(bigM, m + 1) * rat_pow(Rat(2), m) * factorial(m) / rat_pow(base, 2 * m + 1);
}

EnvelopeBracketCheck envelope_bracket_check(const Polynomial& psi_h, const Polynomial& psi_k,
                                            const Polynomial& psi_bracket, const Rat& alpha,
                                            int e, int f, const Rat& c1, const Rat& c2, int d) {
    if (d < 1) throw std::invalid_argument("need d >= 1");
    EnvelopeBracketCheck out;
    out.premises =
        series_leq(series_from_poly(psi_h, d), series_scale(c1, binomial_envelope(alpha, e, d)), d) &&
        series_leq(series_from_poly(psi_k, d), series_scale(c2, binomial_envelope(alpha, f, d)), d);
    Series br = series_from_poly(psi_bracket, d - 1);
    Series env = binomial_envelope(alpha, e + f + 1, d - 1);
    Rat factor = c1 * c2 * Rat(e + f);
    out.corrected = series_leq(br, series_scale(Rat(factor * alpha), env), d - 1);
    out.printed = series_leq(br, series_scale(factor, env), d - 1);
    return out;
}

} // namespace cyclograd
