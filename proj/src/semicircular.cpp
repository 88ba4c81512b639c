#include "cyclograd/semicircular.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cyclograd {

namespace {

// Count of non-crossing pairings of positions [lo, hi) joining equal letters.
// Position lo pairs with some t of opposite parity; the stretch strictly
// between must pair within itself, as must the tail.
Rat nc_count(const std::vector<unsigned>& ls, std::size_t lo, std::size_t hi,
             std::map<std::pair<std::size_t, std::size_t>, Rat>& memo) {
    if (lo == hi) return Rat(1);
    if ((hi - lo) % 2 != 0) return Rat(0);
    auto key = std::make_pair(lo, hi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rat total(0);
    for (std::size_t t = lo + 1; t < hi; t += 2) {
        if (ls[t] != ls[lo]) continue;
        Rat inner = nc_count(ls, lo + 1, t, memo);
        if (sgn(inner) == 0) continue;
        total += inner * nc_count(ls, t + 1, hi, memo);
    }
    memo[key] = total;
    return total;
}

} // namespace

Rat semicircular_moment(const Word& w) {
    std::map<std::pair<std::size_t, std::size_t>, Rat> memo;
    return nc_count(w.letters, 0, w.letters.size(), memo);
}

TraceFunctional semicircular_trace(unsigned n) {
    return TraceFunctional(n, "semicircular",
                           [](const Word& w) { return Scalar(semicircular_moment(w)); });
}

Scalar fock_moment(const Word& w) {
    int cap = static_cast<int>(w.size());
    return inner(poly_to_fock(Polynomial::monomial(w, Scalar(1)), cap),
                 FockVector::vacuum(w.n, cap));
}

Polynomial chebyshev_of_gen(int k, unsigned i, unsigned n) {
    if (k < 0) throw std::invalid_argument("negative orthogonal polynomial index");
    Polynomial prev = Polynomial::one(n);
    if (k == 0) return prev;
    Polynomial cur = Polynomial::generator(n, i);
    for (int m = 1; m < k; ++m) {
        Polynomial next = Polynomial::generator(n, i) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial chebyshev_P(int k) { return chebyshev_of_gen(k, 1, 1); }

bool chebyshev_generating_check(int d) {
    if (d < 0) throw std::invalid_argument("negative series cap");
    std::vector<Polynomial> p;
    for (int k = 0; k <= d; ++k) p.push_back(chebyshev_P(k));
    Polynomial t = Polynomial::generator(1, 1);
    for (int m = 0; m <= d; ++m) {
        Polynomial acc = p[m];
        if (m >= 1) acc -= t * p[m - 1];
        if (m >= 2) acc += p[m - 2];
        if (m == 0 && !(acc == Polynomial::one(1))) return false;
        if (m > 0 && !acc.is_zero()) return false;
    }
    return true;
}

bool chebyshev_derivative_check(int d) {
    for (int k = 0; k <= d; ++k) {
        TensorPoly expected(1);
        for (int h = 0; h < k; ++h)
            expected += simple_tensor(chebyshev_P(h), chebyshev_P(k - 1 - h));
        if (!(free_difference_quotient(chebyshev_P(k), 1) == expected)) return false;
    }
    return true;
}

long orbit_size(const Word& w) {
    if (w.empty()) return 1;
    std::set<Word> orbit;
    for (std::size_t t = 0; t < w.size(); ++t) orbit.insert(cyclic_rotate(w, static_cast<long>(t)));
    return static_cast<long>(orbit.size());
}

std::vector<Word> necklace_min_set(unsigned n, int len) {
    std::vector<Word> out;
    for (const Word& w : words_of_length(n, len)) {
        Word least = w;
        for (std::size_t t = 1; t < w.size(); ++t)
            least = std::min(least, cyclic_rotate(w, static_cast<long>(t)));
        if (w == least) out.push_back(w);
    }
    return out;
}

long necklace_count(unsigned n, int len) {
    return static_cast<long>(necklace_min_set(n, len).size());
}

std::vector<Word> omega_rot1_set(unsigned n, int len) {
    std::vector<Word> out;
    for (const Word& w : words_of_length(n, len))
        if (lex_compare(w, cyclic_rotate(w, 1)) < 0) out.push_back(w);
    return out;
}

std::vector<Run> runs_of(const Word& w) {
    std::vector<Run> runs;
    for (unsigned l : w.letters) {
        if (!runs.empty() && runs.back().letter == l)
            ++runs.back().count;
        else
            runs.push_back({l, 1});
    }
    return runs;
}

Word word_of_runs(const std::vector<Run>& runs, unsigned n) {
    Word w(n);
    for (const Run& r : runs) {
        if (r.letter < 1 || r.letter > n) throw std::invalid_argument("run letter out of range");
        if (r.count <= 0) throw std::invalid_argument("run length must be positive");
        w.letters.insert(w.letters.end(), static_cast<std::size_t>(r.count), r.letter);
    }
    return w;
}

bool runs_cyclically_reduced(const Word& w) {
    auto runs = runs_of(w);
    return runs.size() <= 1 || runs.front().letter != runs.back().letter;
}

Polynomial chebyshev_run_product(const std::vector<Run>& runs, unsigned n) {
    Polynomial acc = Polynomial::one(n);
    for (std::size_t t = 0; t < runs.size(); ++t) {
        if (runs[t].count <= 0) throw std::invalid_argument("run length must be positive");
        if (t > 0 && runs[t].letter == runs[t - 1].letter)
            throw std::invalid_argument("adjacent runs on the same letter");
        acc = acc * chebyshev_of_gen(runs[t].count, runs[t].letter, n);
    }
    return acc;
}

FockVector word_embedding(const Polynomial& p, int cap) {
    if (auto d = p.degree(); d && *d > cap) throw std::invalid_argument("truncation below degree");
    FockVector r(p.gens(), cap);
    for (const auto& [w, c] : p.terms()) r.add_term(w, c);
    return r;
}

namespace {

using PairMap = std::map<std::pair<Word, Word>, Scalar>;

void pair_add(PairMap& m, const Word& u, const Word& v, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.emplace(std::make_pair(u, v), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

// Each leg pushed through the substitution route.
PairMap tensor_substituted(const TensorPoly& t, int d) {
    PairMap out;
    for (const auto& [uv, c] : t.terms()) {
        FockVector fu = poly_to_fock(Polynomial::monomial(uv.first, Scalar(1)), d);
        FockVector fv = poly_to_fock(Polynomial::monomial(uv.second, Scalar(1)), d);
        for (const auto& [wu, cu] : fu.terms)
            for (const auto& [wv, cv] : fv.terms) pair_add(out, wu, wv, c * cu * cv);
    }
    return out;
}

// Legs kept as basis words.
PairMap tensor_embedded(const TensorPoly& t) {
    PairMap out;
    for (const auto& [uv, c] : t.terms()) pair_add(out, uv.first, uv.second, c);
    return out;
}

} // namespace

Prop72Report prop72_check(const std::vector<int>& ks, const std::vector<unsigned>& is,
                          unsigned n, int d) {
    if (ks.empty() || ks.size() != is.size())
        throw std::invalid_argument("run data must be nonempty and aligned");
    std::vector<Run> runs;
    for (std::size_t t = 0; t < ks.size(); ++t) runs.push_back({is[t], ks[t]});
    Word w = word_of_runs(runs, n); // validates letters and positivity
    for (std::size_t t = 1; t < is.size(); ++t)
        if (is[t] == is[t - 1]) throw std::invalid_argument("adjacent runs on the same letter");
    if (d < static_cast<int>(w.size()) - 1) throw std::invalid_argument("truncation below degree");

    Polynomial q = chebyshev_run_product(runs, n);
    Polynomial mono = Polynomial::monomial(w, Scalar(1));

    Prop72Report rep;
    rep.partial_equal = true;
    rep.cyclic_equal = true;
    for (unsigned j = 1; j <= n; ++j) {
        if (tensor_substituted(free_difference_quotient(q, j), d) !=
            tensor_embedded(free_difference_quotient(mono, j)))
            rep.partial_equal = false;
        if (!(poly_to_fock(cyclic_derivative(q, j), d) ==
              word_embedding(cyclic_derivative(mono, j), d)))
            rep.cyclic_equal = false;
    }
    rep.cyclic_proved = (runs.size() == 1 && runs[0].count <= 2) ||
                        (runs.size() >= 2 && runs.front().letter != runs.back().letter);
    return rep;
}

bool lemma77_check(unsigned n, int d) {
    if (d < 1) throw std::invalid_argument("need at least one grade");
    for (const Word& w : words_up_to_length(n, d)) {
        FockVector ew = FockVector::basis_vector(w, d);
        FockVector lhs(n, d);
        for (unsigned j = 1; j <= n; ++j) lhs += apply_T(j, apply_T_adjoint(j, ew));
        FockVector rhs = Scalar(2) * ew - Scalar(2) * apply_vacuum_projection(ew) -
                         apply_rotation(ew) - apply_rotation_adjoint(ew);
        if (!(lhs == rhs) || lhs.truncated || rhs.truncated) return false;
    }
    return true;
}

bool remark78_check(unsigned n, int max_grade) {
    for (int g = 1; g <= max_grade; ++g) {
        std::vector<Word> basis = words_of_length(n, g);
        std::map<Word, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        std::size_t W = basis.size();
        DenseMatrix rot(W, DenseVec(W, Scalar(0)));  // I - R
        DenseMatrix num(W, DenseVec(W, Scalar(0)));  // N - C
        for (std::size_t c = 0; c < W; ++c) {
            rot[c][c] += Scalar(1);
            rot[index.at(cyclic_rotate(basis[c], 1))][c] -= Scalar(1);
            num[c][c] += Scalar(Rat(g));
            for (int t = 1; t <= g; ++t)
                num[index.at(cyclic_rotate(basis[c], t))][c] -= Scalar(1);
        }
        DenseMatrix n1 = nullspace(rot, static_cast<int>(W));
        DenseMatrix n2 = nullspace(num, static_cast<int>(W));
        int r1 = static_cast<int>(n1.size());
        int r2 = static_cast<int>(n2.size());
        if (r1 != r2 || rank_union(n1, n2, static_cast<int>(W)) != r1) return false;
        if (r1 != static_cast<int>(necklace_count(n, g))) return false;
    }
    return true;
}

bool lemma73_span_check(unsigned n, int d) {
    std::vector<Word> basis = words_up_to_length(n, d);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    SparseMatrix m(static_cast<int>(basis.size()));
    for (const Word& w : basis) {
        if (!runs_cyclically_reduced(w)) continue;
        Polynomial prod = chebyshev_run_product(runs_of(w), n);
        std::vector<std::pair<int, Scalar>> entries;
        for (const auto& [u, c] : prod.terms())
            entries.emplace_back(static_cast<int>(index.at(u)), c);
        m.add_row(make_row(std::move(entries)));
    }
    for (const Word& w : basis) {
        if (w.empty()) continue;
        Word r = cyclic_rotate(w, 1);
        if (r == w) continue;
        m.add_row(make_row({{static_cast<int>(index.at(w)), Scalar(1)},
                            {static_cast<int>(index.at(r)), Scalar(-1)}}));
    }
    return rank_destructive(m) == static_cast<int>(basis.size());
}

bool thm74_image_check(unsigned n, int d) {
    std::vector<Word> basis = words_up_to_length(n, d);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::size_t W = basis.size();
    int cols = static_cast<int>(n * W);
    SparseMatrix subst(cols), plain(cols), both(cols);
    for (const Word& u : words_up_to_length(n, d + 1)) {
        if (u.empty()) continue;
        Polynomial mono = Polynomial::monomial(u, Scalar(1));
        std::vector<std::pair<int, Scalar>> srow, lrow;
        for (unsigned j = 1; j <= n; ++j) {
            Polynomial der = cyclic_derivative(mono, j);
            for (const auto& [v, c] : poly_to_fock(der, d).terms)
                srow.emplace_back(static_cast<int>((j - 1) * W + index.at(v)), c);
            for (const auto& [v, c] : der.terms())
                lrow.emplace_back(static_cast<int>((j - 1) * W + index.at(v)), c);
        }
        subst.add_row(make_row(srow));
        plain.add_row(make_row(lrow));
        both.add_row(make_row(srow));
        both.add_row(make_row(lrow));
    }
    int rs = rank_destructive(subst);
    int rl = rank_destructive(plain);
    int rb = rank_destructive(both);
    return rs == rl && rl == rb;
}

FockField f_tuple(const Word& I, int cap) {
    if (I.empty()) throw std::invalid_argument("empty index tuple");
    int len = static_cast<int>(I.size());
    if (cap < len - 1) throw std::invalid_argument("truncation below degree");
    FockVector e = FockVector::basis_vector(I, std::max(cap, len));
    FockField f;
    for (unsigned j = 1; j <= I.n; ++j) {
        FockVector comp = apply_T_adjoint(j, e);
        FockVector out(I.n, cap);
        for (const auto& [w, c] : comp.terms) out.add_term(w, c);
        f.push_back(std::move(out));
    }
    return f;
}

FockField f_tuple_chebyshev(const Word& I, int cap) {
    if (I.empty()) throw std::invalid_argument("empty index tuple");
    if (cap < static_cast<int>(I.size()) - 1) throw std::invalid_argument("truncation below degree");
    std::vector<Run> runs = runs_of(I);
    unsigned n = I.n;
    auto reduced_product = [&](bool drop_front) {
        std::vector<Run> adj = runs;
        (drop_front ? adj.front() : adj.back()).count -= 1;
        std::vector<Run> kept;
        for (const Run& r : adj)
            if (r.count > 0) kept.push_back(r);
        return chebyshev_run_product(kept, n);
    };
    FockField f;
    for (unsigned j = 1; j <= n; ++j) {
        Polynomial comp(n);
        if (runs.front().letter == j) comp += reduced_product(true);
        if (runs.back().letter == j) comp -= reduced_product(false);
        f.push_back(poly_to_fock(comp, cap));
    }
    return f;
}

std::vector<FockField> trace_preserving_fock_basis(int k, unsigned n) {
    if (k < 0) throw std::invalid_argument("negative grade");
    std::vector<FockField> out;
    for (const Word& I : words_of_length(n, k + 1)) out.push_back(f_tuple(I, k));
    return out;
}

std::vector<FockField> omega_basis(int k, unsigned n) {
    if (k < 0) throw std::invalid_argument("negative grade");
    std::vector<FockField> out;
    for (const Word& I : omega_rot1_set(n, k + 1))
        out.push_back(fock_field_sub(f_tuple(I, k), f_tuple(cyclic_rotate(I, 1), k)));
    return out;
}

std::vector<FockField> root_basis(int k, unsigned n) {
    if (k < 0) throw std::invalid_argument("negative grade");
    std::vector<FockField> out;
    for (const Word& I : necklace_min_set(n, k + 1)) {
        long m = orbit_size(I);
        if (m == 1) continue;
        std::vector<FockField> rots;
        for (long j = 0; j < m; ++j) rots.push_back(f_tuple(cyclic_rotate(I, -j), k));
        if (m == 2) {
            out.push_back(fock_field_sub(rots[0], rots[1]));
        } else if (m == 4) {
            const Scalar zetas[3] = {Scalar(-1), Scalar::unit_imag(), -Scalar::unit_imag()};
            for (const Scalar& zeta : zetas) {
                FockField acc = rots[0];
                Scalar pw(1);
                for (long j = 1; j < m; ++j) {
                    pw *= zeta;
                    acc = fock_field_add(acc, fock_field_scale(pw, rots[j]));
                }
                out.push_back(std::move(acc));
            }
        } else {
            for (long j = 0; j + 1 < m; ++j)
                out.push_back(fock_field_sub(rots[j], rots[j + 1]));
        }
    }
    return out;
}

namespace {

// Real and imaginary parts side by side, so rational rank = real rank.
DenseVec real_flatten(const FockField& f, const std::map<Word, std::size_t>& index,
                      std::size_t W) {
    DenseVec row(2 * f.size() * W, Scalar(0));
    for (std::size_t j = 0; j < f.size(); ++j)
        for (const auto& [w, c] : f[j].terms) {
            std::size_t base = 2 * (j * W + index.at(w));
            row[base] = Scalar(c.re);
            row[base + 1] = Scalar(c.im);
        }
    return row;
}

} // namespace

RealBasisReport real_basis(int k, unsigned n) {
    if (k < 0) throw std::invalid_argument("negative grade");
    RealBasisReport rep;
    rep.expected_dim = static_cast<int>(
        static_cast<long>(words_of_length(n, k + 1).size()) - necklace_count(n, k + 1));
    std::vector<Word> basis = words_up_to_length(n, k);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::size_t W = basis.size();
    int cols = static_cast<int>(2 * n * W);
    DenseMatrix rows;
    for (const FockField& g : root_basis(k, n)) {
        FockField jg = fock_field_involution(g);
        FockField herm = fock_field_add(g, jg);
        FockField anti = fock_field_scale(Scalar::unit_imag(), fock_field_sub(g, jg));
        for (FockField* cand : {&herm, &anti}) {
            if (fock_field_is_zero(*cand)) continue;
            DenseMatrix trial = rows;
            trial.push_back(real_flatten(*cand, index, W));
            int r = rank_of(trial, cols);
            if (r > rep.real_rank) {
                rep.real_rank = r;
                rows = std::move(trial);
                rep.basis.push_back(std::move(*cand));
            }
            if (rep.real_rank == rep.expected_dim) return rep;
        }
    }
    return rep;
}

DensityReport thm712_density_check(int d, unsigned n) {
    if (d < 0) throw std::invalid_argument("negative grade cap");
    TraceFunctional tau = semicircular_trace(n);
    DensityReport rep;
    rep.pass = true;
    DenseMatrix family_rows;
    int cols = 0;
    {
        std::size_t W = words_up_to_length(n, d).size();
        cols = static_cast<int>(n * W);
    }
    int cumulative_expected = 0;
    for (int g = 0; g <= d; ++g) {
        std::vector<FockField> fam = root_basis(g, n);
        DenseMatrix fam_rows = fock_fields_to_matrix(fam, n, d);
        DenseMatrix printed_rows = fock_fields_to_matrix(omega_basis(g, n), n, d);
        for (DenseVec& r : fam_rows) family_rows.push_back(std::move(r));

        std::vector<FockField> comp;
        for (const VectorField& v : orthogonal_complement_of_gradients(tau, g).basis)
            comp.push_back(field_to_fock(v.components, d));
        DenseMatrix comp_rows = fock_fields_to_matrix(comp, n, d);

        DensityRow row;
        row.grade = g;
        row.expected_dim = static_cast<int>(
            static_cast<long>(words_of_length(n, g + 1).size()) - necklace_count(n, g + 1));
        row.family_rank = rank_of(fock_fields_to_matrix(fam, n, d), cols);
        row.printed_family_rank = rank_of(printed_rows, cols);
        cumulative_expected += row.expected_dim;

        int r_cum = rank_of(family_rows, cols);
        int r_comp = static_cast<int>(comp.size());
        int r_union = rank_union(family_rows, comp_rows, cols);
        row.contained = (r_union == r_cum);
        row.cumulative_equal = row.contained && r_comp == r_cum && r_cum == cumulative_expected;
        if (row.family_rank != row.expected_dim || !row.cumulative_equal) rep.pass = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace cyclograd
