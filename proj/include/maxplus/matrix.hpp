#pragma once

#include <set>
#include <vector>

#include <maxplus/ext_real.hpp>

namespace maxplus {

// Column vector over the max-plus semiring. Entries are 0-indexed.
class TropVector {
public:
    TropVector() = default;  // empty placeholder; operations require size >= 1
    explicit TropVector(int n) : e_(static_cast<std::size_t>(n)) {}
    explicit TropVector(std::vector<ExtReal> entries) : e_(std::move(entries)) {}

    // All entries 0 (the otimes identity element).
    static TropVector zeros(int n);

    int size() const { return static_cast<int>(e_.size()); }
    const ExtReal& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    void set(int i, ExtReal v) { e_[static_cast<std::size_t>(i)] = std::move(v); }

    // At least one finite entry.
    bool nontrivial() const;
    bool all_finite() const;

    const std::vector<ExtReal>& entries() const { return e_; }

    friend bool operator==(const TropVector& a, const TropVector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const TropVector& a, const TropVector& b) { return !(a == b); }

private:
    std::vector<ExtReal> e_;
};

// Dense matrix over the max-plus semiring, row-major, 0-indexed.
class TropMatrix {
public:
    TropMatrix() = default;
    TropMatrix(int rows, int cols);
    static TropMatrix from_rows(const std::vector<std::vector<ExtReal>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const ExtReal& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, ExtReal v) { e_[idx(i, j)] = std::move(v); }

    TropVector row(int i) const;
    TropVector col(int j) const;
    bool all_finite() const;

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const TropMatrix& a, const TropMatrix& b) { return !(a == b); }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<ExtReal> e_;  // bottom-initialized
};

// Identity: 0 on the diagonal, bottom elsewhere.
TropMatrix identity(int n);

// y = A (x) x, y_i = max_j (a_ij + x_j).
TropVector mat_vec(const TropMatrix& A, const TropVector& x);

// C = A (x) B, c_ij = max_k (a_ik + b_kj).
TropMatrix mat_mat(const TropMatrix& A, const TropMatrix& B);

// Entrywise addition of a scalar; bottom entries stay bottom, and a bottom
// scalar annihilates everything.
TropMatrix scalar_mul(const ExtReal& lambda, const TropMatrix& A);
TropVector scalar_mul(const ExtReal& lambda, const TropVector& x);

// Support: indices of finite entries.
std::set<int> supp(const TropVector& y);

// argmin over the common support of y_i - z_i; empty when the supports are
// disjoint. Exact ties are kept, which is why rationals are mandatory here.
std::set<int> t_set(const TropVector& y, const TropVector& z);

// [top; bottom] stacked by rows; column counts must match.
TropMatrix vstack(const TropMatrix& top, const TropMatrix& bottom);

}  // namespace maxplus
