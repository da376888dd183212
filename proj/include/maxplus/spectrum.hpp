#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <maxplus/two_sided.hpp>

namespace maxplus {

// Finite union of disjoint closed intervals [a_i, c_i] (points allowed) in
// strictly increasing order: a_i <= c_i and c_i < a_{i+1}.
class IntervalSystem {
public:
    explicit IntervalSystem(std::vector<std::pair<Rat, Rat>> intervals);

    int count() const { return static_cast<int>(iv_.size()); }
    const Rat& lower(int i) const { return iv_[static_cast<std::size_t>(i)].first; }
    const Rat& upper(int i) const { return iv_[static_cast<std::size_t>(i)].second; }
    // Exact midpoint (lower + upper) / 2.
    Rat midpoint(int i) const;

    // Index of the interval containing lambda, if any.
    std::optional<int> containing(const Rat& lambda) const;

    friend bool operator==(const IntervalSystem& a, const IntervalSystem& b) {
        return a.iv_ == b.iv_;
    }

private:
    std::vector<std::pair<Rat, Rat>> iv_;
};

// The 2 x 3m pencil whose two-sided spectrum is exactly the union of the
// intervals: per interval, A gets columns (a, b, c) / (2a, 2b, 2c) with
// b = (a+c)/2, and B gets (0, 0, 0) / (a, c, b).
std::pair<TropMatrix, TropMatrix> synth_matrices(const IntervalSystem& sys);

// The three stacked columns of [A; lambda (x) B] contributed by interval i:
// u = (a, 2a, lambda, a+lambda), v = (b, 2b, lambda, c+lambda),
// w = (c, 2c, lambda, b+lambda). Restriction of the separated system to one
// interval block; used by the membership certificates below.
struct UvwColumns {
    TropVector u, v, w;
};
UvwColumns columns_uvw(const IntervalSystem& sys, int i, const Rat& lambda);

// Certificate right-hand sides z with z in span(u, v, w) and equal stacked
// halves. Case ranges: witness_case3 needs a_i <= lambda <= b_i and returns
// (0, lambda + b - a, 0, lambda + b - a); witness_case4 needs
// b_i <= lambda <= c_i and returns (0, c, 0, c).
TropVector witness_case3(const IntervalSystem& sys, int i, const Rat& lambda);
TropVector witness_case4(const IntervalSystem& sys, int i, const Rat& lambda);

// Eigenvector for lambda inside interval i: the principal solution of
// C(lambda) (x) x = z for the matching case witness z, verified exactly
// before returning. Throws std::invalid_argument when lambda lies in no
// interval.
TropVector eigenvector_from_witness(const IntervalSystem& sys, const Rat& lambda);

struct MembershipOptions {
    // Cross-check the alternating answer against the pattern oracle whenever
    // both matrices are finite and the pattern count fits the guard.
    bool oracle_crosscheck = true;
    std::size_t oracle_guard = 10'000'000;
    bool oracle_parallel = false;
};

// Is lambda in the two-sided spectrum of (A, B)? Pipeline: dominance screen,
// then the alternating method, then (optionally) the oracle cross-check; a
// disagreement throws std::logic_error.
TwoSidedOutcome membership(const TropMatrix& A, const TropMatrix& B, const Rat& lambda,
                           const MembershipOptions& opts = {});

// One closed component [lo, hi] of a computed spectrum (lo == hi for points).
struct SpectrumComponent {
    Rat lo, hi;
    friend bool operator==(const SpectrumComponent& x, const SpectrumComponent& y) {
        return x.lo == y.lo && x.hi == y.hi;
    }
};

struct SampleRecord {
    Rat lambda;
    bool solvable = false;
    std::optional<TropVector> witness;
};

struct Spectrum {
    std::vector<SpectrumComponent> components;
    SpectrumBounds bounds = {Bound::neg_inf(), Bound::pos_inf()};
    // Every probed lambda in ascending order (breakpoints and midpoints).
    std::vector<SampleRecord> samples;
    // False only when (A, B) is structurally a synthesized interval pencil,
    // for which the scan provably recovers the exact spectrum; true otherwise
    // (finitely many probes cannot certify arbitrary pencils).
    bool heuristic = true;
};

struct ScanOptions {
    bool parallel = true;
    // Refuse scans with more than this many breakpoint candidates.
    std::size_t candidate_guard = 100'000;
};

// Spectrum scan for all-finite A, B: candidate breakpoints are all pairwise
// entry differences a_ij - b_kl clipped to lambda_bounds plus the bounds
// themselves; membership is decided exactly at every breakpoint and every
// consecutive midpoint; maximal solvable runs of breakpoints become closed
// components. The oracle cross-check is off on this path (the dedicated
// acceptance checks cover solver-vs-oracle agreement).
Spectrum compute_spectrum(const TropMatrix& A, const TropMatrix& B, const ScanOptions& opts = {});

// Exact structural inverse of synth_matrices; nullopt when (A, B) is not a
// synthesized pencil.
std::optional<IntervalSystem> recognize_synthesis(const TropMatrix& A, const TropMatrix& B);

// One verdict of verify_theorem: a sampled lambda (or a bounds assertion)
// together with what was expected and what happened.
struct TheoremCheck {
    Rat lambda;
    std::string region;  // "bounds", "interval i", "gap i", "below", "above"
    bool expect_solvable = false;
    bool passed = false;
    std::optional<TropVector> witness;
    std::string detail;  // empty when passed
};

struct TheoremReport {
    bool all_passed = false;
    SpectrumBounds bounds = {Bound::neg_inf(), Bound::pos_inf()};
    std::vector<TheoremCheck> checks;
};

// End-to-end certificate run for a synthesized pencil. Inside every interval
// (samples_per_region grid points plus the midpoint, plus optional seeded
// extras): the case witness z must be reachable (covering criterion), the
// constructed eigenvector must verify, and membership must hold; strictly
// inside each half-interval the argmin sets must match the case templates.
// In every gap and beyond both ends: membership must fail, cross-checked
// against the pattern oracle.
TheoremReport verify_theorem(const IntervalSystem& sys, int samples_per_region = 5,
                             std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace maxplus
