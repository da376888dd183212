#pragma once

#include <set>
#include <vector>

#include <maxplus/matrix.hpp>

namespace maxplus {

struct OneSidedOutcome {
    bool solvable = false;
    // Greatest x with A (x) x <= b; equals the unique maximal solution when
    // solvable is true.
    TropVector principal;
    // cover[j] = t_set(b, column j of A); the system is solvable iff the union
    // of these sets is {0, ..., rows-1}.
    std::vector<std::set<int>> cover;
};

// Residuated solution x^_j = min over finite a_ij of (b_i - a_ij); bottom when
// column j is all bottom. Requires b all finite (throws std::invalid_argument
// otherwise) and A.rows() == b.size() (throws DimensionMismatch).
TropVector principal_solution(const TropMatrix& A, const TropVector& b);

// Decides A (x) x = b by the covering criterion and independently re-checks by
// substituting the principal solution; the two must agree (internal invariant).
OneSidedOutcome solve_one_sided(const TropMatrix& A, const TropVector& b);

}  // namespace maxplus
