#include "cyclograd/linalg.hpp"

#include <algorithm>
#include <map>

namespace cyclograd {

SparseRow make_row(std::vector<std::pair<int, Scalar>> entries) {
    std::map<int, Scalar> acc;
    for (auto& [c, v] : entries) {
        auto [it, inserted] = acc.emplace(c, v);
        if (!inserted) it->second += v;
    }
    SparseRow r;
    r.reserve(acc.size());
    for (auto& [c, v] : acc)
        if (!v.is_zero()) r.emplace_back(c, v);
    return r;
}

void SparseMatrix::add_dense_row(const DenseVec& v) {
    SparseRow r;
    for (int c = 0; c < static_cast<int>(v.size()); ++c)
        if (!v[c].is_zero()) r.emplace_back(c, v[c]);
    rows.push_back(std::move(r));
}

namespace {

// dst -= f * src, merging sorted sparse rows.
void axpy(SparseRow& dst, const Scalar& f, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, -(f * src[j].second));
            ++j;
        } else {
            Scalar v = dst[i].second - f * src[j].second;
            if (!v.is_zero()) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

} // namespace

int rank_destructive(SparseMatrix& m) {
    // Structured elimination: repeatedly take the leftmost remaining pivot
    // column, choose the shortest row leading there, clear that column from
    // every other active row.
    std::vector<SparseRow>& rows = m.rows;
    int rank = 0;
    std::size_t done = 0; // rows [0, done) are finished pivot rows
    while (true) {
        int pivot_col = m.cols;
        for (std::size_t r = done; r < rows.size(); ++r)
            if (!rows[r].empty()) pivot_col = std::min(pivot_col, rows[r][0].first);
        if (pivot_col == m.cols) break;

        std::size_t best = rows.size();
        for (std::size_t r = done; r < rows.size(); ++r)
            if (!rows[r].empty() && rows[r][0].first == pivot_col &&
                (best == rows.size() || rows[r].size() < rows[best].size()))
                best = r;

        std::swap(rows[done], rows[best]);
        const SparseRow& p = rows[done];
        Scalar pv = p[0].second;
        for (std::size_t r = done + 1; r < rows.size(); ++r) {
            if (!rows[r].empty() && rows[r][0].first == pivot_col) {
                Scalar f = rows[r][0].second / pv;
                axpy(rows[r], f, p);
            }
        }
        ++rank;
        ++done;
        // Drop exhausted rows to keep scans short.
        rows.erase(std::remove_if(rows.begin() + done, rows.end(),
                                  [](const SparseRow& r) { return r.empty(); }),
                   rows.end());
    }
    return rank;
}

std::vector<int> rref(DenseMatrix& m, int cols) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t r = row; r < m.size(); ++r)
            if (!m[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = Scalar(1) / m[row][col];
        for (int c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank_of(const DenseMatrix& m, int cols) {
    DenseMatrix copy = m;
    return static_cast<int>(rref(copy, cols).size());
}

DenseMatrix nullspace(const DenseMatrix& a, int cols) {
    DenseMatrix m = a;
    std::vector<int> pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    DenseMatrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        DenseVec v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<DenseVec> solve(DenseMatrix a, DenseVec b) {
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    std::vector<int> pivots = rref(a, cols + 1);
    DenseVec x(cols, Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // row 0 ... 0 | 1
        x[pivots[r]] = a[r][cols];
    }
    return x;
}

bool span_contains(const DenseMatrix& rows, int cols, const DenseVec& v) {
    DenseMatrix joined = rows;
    joined.push_back(v);
    return rank_of(rows, cols) == rank_of(joined, cols);
}

int rank_union(const DenseMatrix& a, const DenseMatrix& b, int cols) {
    DenseMatrix joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    return rank_of(joined, cols);
}

bool is_positive_semidefinite(DenseMatrix g) {
    // Hermitian Gaussian-rational matrix; eliminate symmetrically, demanding a
    // nonnegative real pivot or an all-zero row at every step.
    std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) {
        Scalar d = g[k][k];
        if (!d.is_real() || sgn(d.re) < 0) return false;
        if (d.is_zero()) {
            // Zero pivot forces the whole remaining row (hence column) to vanish.
            for (std::size_t j = k; j < n; ++j)
                if (!g[k][j].is_zero()) return false;
            continue;
        }
        // Row elimination alone: the trailing Schur complement stays Hermitian.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (g[i][k].is_zero()) continue;
            Scalar f = g[i][k] / d;
            for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return true;
}

} // namespace cyclograd
