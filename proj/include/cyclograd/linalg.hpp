#pragma once

#include "cyclograd/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cyclograd {

// Exact linear algebra over the Gaussian rationals.  Row reduction with exact
// division; sparse rows for the larger rank computations, dense reduction for
// null spaces and solves (those only arise at small sizes here).

using SparseRow = std::vector<std::pair<int, Scalar>>; // sorted by column, no zeros
using DenseVec = std::vector<Scalar>;
using DenseMatrix = std::vector<DenseVec>;

struct SparseMatrix {
    int cols = 0;
    std::vector<SparseRow> rows;

    explicit SparseMatrix(int ncols = 0) : cols(ncols) {}
    void add_row(SparseRow r) { rows.push_back(std::move(r)); }
    void add_dense_row(const DenseVec& v);
};

// Builds a sorted sparse row from unsorted (col, value) pairs, merging duplicates.
SparseRow make_row(std::vector<std::pair<int, Scalar>> entries);

// Rank over the Gaussian rationals; destroys the matrix.
int rank_destructive(SparseMatrix& m);
inline int rank_of(SparseMatrix m) { return rank_destructive(m); }

int rank_of(const DenseMatrix& m, int cols);

// Basis of the right null space { x : A x = 0 }, rows of A being equations.
DenseMatrix nullspace(const DenseMatrix& a, int cols);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<DenseVec> solve(DenseMatrix a, DenseVec b);

// Reduced row echelon form in place; returns pivot column per reduced row.
std::vector<int> rref(DenseMatrix& m, int cols);

// True when the span of `rows` contains `v` (all over the same column space).
bool span_contains(const DenseMatrix& rows, int cols, const DenseVec& v);

// dim(span(a) + span(b)) etc. convenience.
int rank_union(const DenseMatrix& a, const DenseMatrix& b, int cols);

// Exact positive-semidefiniteness of a Hermitian matrix via symmetric elimination.
bool is_positive_semidefinite(DenseMatrix g);

} // namespace cyclograd
