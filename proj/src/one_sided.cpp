#include <maxplus/one_sided.hpp>

#include <stdexcept>
#include <utility>

#include <maxplus/errors.hpp>

namespace maxplus {

TropVector principal_solution(const TropMatrix& A, const TropVector& b) {
    if (A.rows() != b.size()) throw DimensionMismatch("principal_solution: rows(A) != len(b)");
    for (int i = 0; i < b.size(); ++i)
        if (b[i].is_bottom())
            throw std::invalid_argument("principal_solution: right-hand side must be finite");

    TropVector xhat(A.cols());
    for (int j = 0; j < A.cols(); ++j) {
        bool seen = false;
        Rat best;
        for (int i = 0; i < A.rows(); ++i) {
            const ExtReal& a = A.at(i, j);
            if (a.is_bottom()) continue;  // no constraint from this row
            Rat d = b[i].value() - a.value();
            if (!seen || d < best) {
                best = std::move(d);
                seen = true;
            }
        }
        xhat.set(j, seen ? ExtReal(std::move(best)) : ExtReal::bottom());
    }
    return xhat;
}

OneSidedOutcome solve_one_sided(const TropMatrix& A, const TropVector& b) {
    TropVector xhat = principal_solution(A, b);  // validates preconditions

    std::vector<std::set<int>> cover;
    cover.reserve(static_cast<std::size_t>(A.cols()));
    std::set<int> covered;
    for (int j = 0; j < A.cols(); ++j) {
        std::set<int> t = t_set(b, A.col(j));
        covered.insert(t.begin(), t.end());
        cover.push_back(std::move(t));
    }

    const bool cover_ok = static_cast<int>(covered.size()) == A.rows();
    const bool substitution_ok = mat_vec(A, xhat) == b;
    // Covering criterion and direct substitution of the principal solution are
    // equivalent characterizations; disagreement would mean a bug in one.
    if (cover_ok != substitution_ok)
        throw std::logic_error("solve_one_sided: covering and substitution checks disagree");

    return OneSidedOutcome{cover_ok, std::move(xhat), std::move(cover)};
}

}  // namespace maxplus
