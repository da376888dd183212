#include <maxplus/matrix.hpp>

#include <maxplus/errors.hpp>

namespace maxplus {

TropVector TropVector::zeros(int n) {
    TropVector v(n);
    for (int i = 0; i < n; ++i) v.set(i, ExtReal(0));
    return v;
}

bool TropVector::nontrivial() const {
    for (const auto& x : e_)
        if (x.is_finite()) return true;
    return false;
}

bool TropVector::all_finite() const {
    for (const auto& x : e_)
        if (x.is_bottom()) return false;
    return true;
}

TropMatrix::TropMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<ExtReal>>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
    const int m = static_cast<int>(rows.front().size());
    TropMatrix A(static_cast<int>(rows.size()), m);
    for (int i = 0; i < A.rows(); ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m)
            throw DimensionMismatch("ragged matrix rows");
        for (int j = 0; j < m; ++j) A.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return A;
}

TropVector TropMatrix::row(int i) const {
    TropVector r(cols_);
    for (int j = 0; j < cols_; ++j) r.set(j, at(i, j));
    return r;
}

TropVector TropMatrix::col(int j) const {
    TropVector c(rows_);
    for (int i = 0; i < rows_; ++i) c.set(i, at(i, j));
    return c;
}

bool TropMatrix::all_finite() const {
    for (const auto& x : e_)
        if (x.is_bottom()) return false;
    return true;
}

TropMatrix identity(int n) {
    TropMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, ExtReal(0));
    return I;
}

TropVector mat_vec(const TropMatrix& A, const TropVector& x) {
    if (A.cols() != x.size()) throw DimensionMismatch("mat_vec: cols(A) != len(x)");
    TropVector y(A.rows());
    for (int i = 0; i < A.rows(); ++i) {
        ExtReal acc;  // bottom
        for (int j = 0; j < A.cols(); ++j) acc = oplus(acc, otimes(A.at(i, j), x[j]));
        y.set(i, std::move(acc));
    }
    return y;
}

TropMatrix mat_mat(const TropMatrix& A, const TropMatrix& B) {
    if (A.cols() != B.rows()) throw DimensionMismatch("mat_mat: cols(A) != rows(B)");
    TropMatrix C(A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) {
            ExtReal acc;
            for (int k = 0; k < A.cols(); ++k) acc = oplus(acc, otimes(A.at(i, k), B.at(k, j)));
            C.set(i, j, std::move(acc));
        }
    return C;
}

TropMatrix scalar_mul(const ExtReal& lambda, const TropMatrix& A) {
    TropMatrix C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) C.set(i, j, otimes(lambda, A.at(i, j)));
    return C;
}

TropVector scalar_mul(const ExtReal& lambda, const TropVector& x) {
    TropVector y(x.size());
    for (int i = 0; i < x.size(); ++i) y.set(i, otimes(lambda, x[i]));
    return y;
}

std::set<int> supp(const TropVector& y) {
    std::set<int> s;
    for (int i = 0; i < y.size(); ++i)
        if (y[i].is_finite()) s.insert(i);
    return s;
}

std::set<int> t_set(const TropVector& y, const TropVector& z) {
    if (y.size() != z.size()) throw DimensionMismatch("t_set: length mismatch");
    std::set<int> arg;
    bool seen = false;
    Rat best;
    for (int i = 0; i < y.size(); ++i) {
        if (y[i].is_bottom() || z[i].is_bottom()) continue;
        Rat d = y[i].value() - z[i].value();
        if (!seen || d < best) {
            best = std::move(d);
            arg = {i};
            seen = true;
        } else if (d == best) {
            arg.insert(i);
        }
    }
    return arg;
}

TropMatrix vstack(const TropMatrix& top, const TropMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
    TropMatrix C(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) C.set(i, j, top.at(i, j));
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) C.set(top.rows() + i, j, bottom.at(i, j));
    return C;
}

}  // namespace maxplus
