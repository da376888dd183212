#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <maxplus/matrix.hpp>

namespace maxplus {

// A (x) x = lambda (x) B (x) x rewritten as C (x) x = D (x) y with
// C = [A; lambda (x) B] and D = [I; I]: a finite y with equal stacked halves
// corresponds exactly to a common value z = A(x)x = lambda(x)B(x)x.
struct SeparatedSystem {
    TropMatrix C;  // 2n x m
    TropMatrix D;  // 2n x n
    Rat lambda;
    int n = 0;  // equations in the original system
};

SeparatedSystem separate(const TropMatrix& A, const TropMatrix& B, const Rat& lambda);

// Cancellation on one scalar equation max-form lhs = rhs: on each side, drop
// (set to bottom) every coefficient strictly below the opposite side's
// coefficient at the same position. Solution sets are unchanged.
std::pair<TropVector, TropVector> cancel_equation(const TropVector& lhs, const TropVector& rhs);

// True when some row of A is strictly dominated entrywise by the matching
// all-finite row of lambda (x) B, or vice versa; such a row can never reach
// equality, so the system is infeasible for this lambda.
bool dominance_infeasible(const TropMatrix& A, const TropMatrix& B, const Rat& lambda);

// One endpoint of the feasible-lambda interval: -inf, finite, or +inf.
class Bound {
public:
    Bound(Rat v) : kind_(Kind::finite), v_(std::move(v)) {}
    static Bound neg_inf() { return Bound(Kind::neg); }
    static Bound pos_inf() { return Bound(Kind::pos); }

    bool is_neg_inf() const { return kind_ == Kind::neg; }
    bool is_pos_inf() const { return kind_ == Kind::pos; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const Rat& value() const { return v_; }

    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::finite && a.v_ < b.v_;
    }
    friend bool operator==(const Bound& a, const Bound& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.v_ == b.v_);
    }

    std::string str() const;  // "-inf", "+inf", or rational text

private:
    enum class Kind { neg = 0, finite = 1, pos = 2 };
    explicit Bound(Kind k) : kind_(k) {}

    Kind kind_;
    Rat v_;
};

// Closed interval [lo, hi] of candidate lambda; empty when hi < lo.
struct SpectrumBounds {
    Bound lo = Bound::neg_inf();
    Bound hi = Bound::pos_inf();

    bool empty() const { return hi < lo; }
    bool contains(const Rat& v) const { return !(Bound(v) < lo) && !(hi < Bound(v)); }
};

// lo = max_i min_j (a_ij - b_ij), hi = min_i max_j (a_ij - b_ij), with the
// conventions bottom-vs-finite = -inf / +inf. Every solvable lambda lies in
// [lo, hi]. Requires every position to be finite in A or in B.
SpectrumBounds lambda_bounds(const TropMatrix& A, const TropMatrix& B);

enum class SolveMethod { dominance, alternating, oracle };

struct TwoSidedOutcome {
    bool solvable = false;
    // Nontrivial solution of A (x) x = lambda (x) B (x) x, when solvable.
    std::optional<TropVector> witness_x;
    // Stacked common value (z; z) with z = A (x) x = lambda (x) B (x) x.
    std::optional<TropVector> witness_z;
    SolveMethod method = SolveMethod::alternating;
    // Sweeps for the alternating method; patterns examined for the oracle.
    long iterations = 0;
    // The divergence cap removed at least one coordinate; with bottom entries
    // present, an infeasible answer is then heuristic.
    bool cap_exceeded = false;
};

// Alternating residuation between C (x) x = w and w = D (x) y from x = 0:
// each sweep computes y = D\(C (x) x) (halfwise min) and x' = C\(D (x) y).
// Stops at a fixed point (solvable iff some coordinate is finite), when every
// coordinate has been removed by the divergence cap (infeasible), or on a
// uniform strictly-negative shift (provably infeasible; see implementation).
TwoSidedOutcome alternating_solve(const SeparatedSystem& sys);

// m^(2n), saturating at the maximum representable value.
unsigned long long oracle_pattern_count(int n, int m);

struct OracleOptions {
    // Refuse instances with more than this many argmax patterns.
    std::size_t pattern_guard = 10'000'000;
    bool parallel = false;
};

// Exhaustive decision procedure for all-finite A, B: enumerates, in
// lexicographic order, every assignment of an argmax column to each side of
// each equation and tests the induced difference-constraint system. Returns
// the witness built from the first feasible pattern (identical in the serial
// and parallel lanes), or infeasible after exhausting all patterns.
TwoSidedOutcome pattern_oracle(const TropMatrix& A, const TropMatrix& B, const Rat& lambda,
                               const OracleOptions& opts = {});

// True iff x is nontrivial and A (x) x == lambda (x) B (x) x exactly.
bool verify_witness(const TropMatrix& A, const TropMatrix& B, const ExtReal& lambda,
                    const TropVector& x);

}  // namespace maxplus
