#pragma once

#include "cyclograd/linalg.hpp"
#include "cyclograd/polynomial.hpp"

#include <functional>
#include <map>
#include <vector>

namespace cyclograd {

// Finitely supported vector in the tensor algebra over C^n, truncated at
// degree cap.  Tensor monomials e_{i1} (x) ... (x) e_{ik} are encoded by the
// word (i1,...,ik); they form an orthonormal basis, the empty word being the
// vacuum.  Any mass pushed above the cap is dropped and the drop recorded in
// the sticky `truncated` flag, so exactness claims can insist on !truncated.
struct FockVector {
    unsigned n = 0;
    int cap = 0;
    std::map<Word, Scalar> terms;
    bool truncated = false;

    FockVector() = default;
    FockVector(unsigned gens, int capacity) : n(gens), cap(capacity) {}

    static FockVector vacuum(unsigned gens, int capacity) {
        FockVector v(gens, capacity);
        v.add_term(Word::unit(gens), Scalar(1));
        return v;
    }
    static FockVector basis_vector(const Word& w, int capacity) {
        FockVector v(w.n, capacity);
        v.add_term(w, Scalar(1));
        return v;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const Scalar& c) {
        if (w.n != n) throw std::invalid_argument("generator count mismatch");
        if (c.is_zero()) return;
        if (static_cast<int>(w.size()) > cap) {
            truncated = true;
            return;
        }
        auto [it, inserted] = terms.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        check_same(o);
        truncated = truncated || o.truncated;
        for (const auto& [w, c] : o.terms) add_term(w, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        check_same(o);
        truncated = truncated || o.truncated;
        for (const auto& [w, c] : o.terms) add_term(w, -c);
        return *this;
    }
    FockVector& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms.clear();
            return *this;
        }
        for (auto& [w, v] : terms) v *= c;
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Scalar& c, FockVector v) { return v *= c; }
    // Equality of content; the truncation flags are bookkeeping, not data.
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.n == b.n && a.terms == b.terms;
    }

private:
    void check_same(const FockVector& o) const {
        if (n != o.n || cap != o.cap) throw std::invalid_argument("fock space mismatch");
    }
};

// Linear in the first slot, conjugate-linear in the second.
Scalar inner(const FockVector& a, const FockVector& b);

// Words reversed, coefficients conjugated: the transport of p -> p* under
// poly_to_fock.
FockVector fock_involution(const FockVector& v);

FockVector apply_creation(unsigned j, const FockVector& v);            // l_j: prepend e_j
FockVector apply_annihilation(unsigned j, const FockVector& v);        // l_j*: strip e_j in front
FockVector apply_right_creation(unsigned j, const FockVector& v);      // r_j: append e_j
FockVector apply_right_annihilation(unsigned j, const FockVector& v);  // r_j*: strip e_j at back
FockVector apply_s(unsigned j, const FockVector& v);                   // l_j + l_j*
FockVector apply_rotation(const FockVector& v);         // last slot to the front; kills grade 0
FockVector apply_rotation_adjoint(const FockVector& v); // first slot to the back; kills grade 0
FockVector apply_number(const FockVector& v);           // grade-k piece scaled by k
FockVector apply_vacuum_projection(const FockVector& v);
FockVector apply_cyclic_symmetrization(const FockVector& v); // sum of all rotations per word
FockVector apply_T(unsigned j, const FockVector& v);         // l_j - r_j
FockVector apply_T_adjoint(unsigned j, const FockVector& v); // l_j* - r_j*

// p(s_1,...,s_n) applied to the vacuum, s_j = l_j + l_j*.  Requires
// cap >= deg p, which also guarantees no truncation along the way.
FockVector poly_to_fock(const Polynomial& p, int cap);

// Matrix of a linear action on the word basis of degrees <= cap
// (columns ordered like words_up_to_length).
DenseMatrix operator_matrix(const std::function<FockVector(const FockVector&)>& action,
                            unsigned n, int cap);

// n-tuples of Fock vectors, the L2 shadows of vector fields.
using FockField = std::vector<FockVector>;

FockField field_to_fock(const std::vector<Polynomial>& components, int cap);
FockField fock_field_involution(const FockField& f);
FockField fock_field_add(const FockField& a, const FockField& b);
FockField fock_field_sub(const FockField& a, const FockField& b);
FockField fock_field_scale(const Scalar& c, const FockField& a);
bool fock_field_equal(const FockField& a, const FockField& b);
bool fock_field_is_zero(const FockField& f);

// Rows are fields flattened over (component, word <= cap) coordinates.
DenseMatrix fock_fields_to_matrix(const std::vector<FockField>& fields, unsigned n, int cap);

} // namespace cyclograd
