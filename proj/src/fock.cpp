#include "cyclograd/fock.hpp"

#include "cyclograd/calculus.hpp"

#include <stdexcept>

namespace cyclograd {

Scalar inner(const FockVector& a, const FockVector& b) {
    if (a.n != b.n) throw std::invalid_argument("generator count mismatch");
    const auto& small = a.terms.size() <= b.terms.size() ? a.terms : b.terms;
    Scalar s;
    for (const auto& [w, c] : small) {
        auto ia = a.terms.find(w);
        auto ib = b.terms.find(w);
        if (ia != a.terms.end() && ib != b.terms.end()) s += ia->second * ib->second.conj();
    }
    return s;
}

FockVector fock_involution(const FockVector& v) {
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms) r.add_term(w.reversed(), c.conj());
    return r;
}

namespace {

void check_gen(unsigned j, const FockVector& v) {
    if (j < 1 || j > v.n) throw std::invalid_argument("generator index out of range");
}

} // namespace

FockVector apply_creation(unsigned j, const FockVector& v) {
    check_gen(j, v);
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms) r.add_term(Word::gen(v.n, j).concat(w), c);
    return r;
}

FockVector apply_annihilation(unsigned j, const FockVector& v) {
    check_gen(j, v);
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms)
        if (!w.empty() && w.letters.front() == j) r.add_term(w.subword(1, w.size() - 1), c);
    return r;
}

FockVector apply_right_creation(unsigned j, const FockVector& v) {
    check_gen(j, v);
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms) r.add_term(w.concat(Word::gen(v.n, j)), c);
    return r;
}

FockVector apply_right_annihilation(unsigned j, const FockVector& v) {
    check_gen(j, v);
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms)
        if (!w.empty() && w.letters.back() == j) r.add_term(w.subword(0, w.size() - 1), c);
    return r;
}

FockVector apply_s(unsigned j, const FockVector& v) {
    return apply_creation(j, v) + apply_annihilation(j, v);
}

FockVector apply_rotation(const FockVector& v) {
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms)
        if (!w.empty()) r.add_term(cyclic_rotate(w, 1), c);
    return r;
}

FockVector apply_rotation_adjoint(const FockVector& v) {
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms)
        if (!w.empty()) r.add_term(cyclic_rotate(w, -1), c);
    return r;
}

FockVector apply_number(const FockVector& v) {
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms)
        r.add_term(w, Scalar(Rat(static_cast<long>(w.size()))) * c);
    return r;
}

FockVector apply_vacuum_projection(const FockVector& v) {
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    auto it = v.terms.find(Word::unit(v.n));
    if (it != v.terms.end()) r.add_term(it->first, it->second);
    return r;
}

FockVector apply_cyclic_symmetrization(const FockVector& v) {
    FockVector r(v.n, v.cap);
    r.truncated = v.truncated;
    for (const auto& [w, c] : v.terms)
        for (std::size_t t = 1; t <= w.size(); ++t) r.add_term(cyclic_rotate(w, static_cast<long>(t)), c);
    return r;
}

FockVector apply_T(unsigned j, const FockVector& v) {
    return apply_creation(j, v) - apply_right_creation(j, v);
}

FockVector apply_T_adjoint(unsigned j, const FockVector& v) {
    return apply_annihilation(j, v) - apply_right_annihilation(j, v);
}

FockVector poly_to_fock(const Polynomial& p, int cap) {
    if (auto d = p.degree(); d && *d > cap) throw std::invalid_argument("truncation below degree");
    FockVector r(p.gens(), cap);
    for (const auto& [w, c] : p.terms()) {
        FockVector acc = FockVector::vacuum(p.gens(), cap);
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) acc = apply_s(*it, acc);
        acc *= c;
        r += acc;
    }
    return r;
}

DenseMatrix operator_matrix(const std::function<FockVector(const FockVector&)>& action,
                            unsigned n, int cap) {
    std::vector<Word> basis = words_up_to_length(n, cap);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    DenseMatrix m(basis.size(), DenseVec(basis.size(), Scalar(0)));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        FockVector out = action(FockVector::basis_vector(basis[col], cap));
        for (const auto& [w, c] : out.terms) m[index.at(w)][col] = c;
    }
    return m;
}

FockField field_to_fock(const std::vector<Polynomial>& components, int cap) {
    FockField f;
    f.reserve(components.size());
    for (const auto& p : components) f.push_back(poly_to_fock(p, cap));
    return f;
}

FockField fock_field_involution(const FockField& f) {
    FockField r;
    r.reserve(f.size());
    for (const auto& v : f) r.push_back(fock_involution(v));
    return r;
}

FockField fock_field_add(const FockField& a, const FockField& b) {
    if (a.size() != b.size()) throw std::invalid_argument("field arity mismatch");
    FockField r;
    r.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r.push_back(a[j] + b[j]);
    return r;
}

FockField fock_field_sub(const FockField& a, const FockField& b) {
    if (a.size() != b.size()) throw std::invalid_argument("field arity mismatch");
    FockField r;
    r.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r.push_back(a[j] - b[j]);
    return r;
}

FockField fock_field_scale(const Scalar& c, const FockField& a) {
    FockField r;
    r.reserve(a.size());
    for (const auto& v : a) r.push_back(c * v);
    return r;
}

bool fock_field_equal(const FockField& a, const FockField& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!(a[j] == b[j])) return false;
    return true;
}

bool fock_field_is_zero(const FockField& f) {
    for (const auto& v : f)
        if (!v.is_zero()) return false;
    return true;
}

DenseMatrix fock_fields_to_matrix(const std::vector<FockField>& fields, unsigned n, int cap) {
    std::vector<Word> basis = words_up_to_length(n, cap);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    DenseMatrix m;
    m.reserve(fields.size());
    for (const FockField& f : fields) {
        if (f.size() != n) throw std::invalid_argument("field arity mismatch");
        DenseVec row(n * basis.size(), Scalar(0));
        for (unsigned j = 0; j < n; ++j)
            for (const auto& [w, c] : f[j].terms) row[j * basis.size() + index.at(w)] = c;
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace cyclograd
