#pragma once

#include <vector>

#include <maxplus/spectrum.hpp>

namespace maxplus {

// Synchronization instance: two banks of m machines process n product pairs.
// Machine j of bank one starts at x_j and spends a(i,j) on product i; machine
// j of bank two starts at y_j = lambda + x_j and spends b(i,j). Sought are
// lambda and starts x so that both halves of every product pair complete at
// the same time: max_j(x_j + a_ij) = max_j(lambda + x_j + b_ij) for all i.
class ScheduleInstance {
public:
    // Both grids n x m rectangular with finite durations >= 0; throws
    // std::invalid_argument otherwise.
    ScheduleInstance(std::vector<std::vector<Rat>> a, std::vector<std::vector<Rat>> b);

    int products() const { return static_cast<int>(a_.size()); }
    int machines() const { return static_cast<int>(a_.front().size()); }
    const Rat& a(int i, int j) const {
        return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const Rat& b(int i, int j) const {
        return b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

private:
    std::vector<std::vector<Rat>> a_, b_;
};

struct ScheduleSolution {
    // Offset of bank two: y_j = lambda + x_j.
    Rat lambda;
    // Bank-one start times, normalized so the earliest machine starts at 0.
    std::vector<Rat> starts;
    // Common completion time of product pair i, under the same normalization.
    std::vector<Rat> completion;
};

// The generalized eigenproblem matrices (A, B) of the instance: the
// synchronization condition is exactly A (x) x = lambda (x) B (x) x.
std::pair<TropMatrix, TropMatrix> to_eigenproblem(const ScheduleInstance& inst);

// The normalized schedule at one specific offset, or nullopt when lambda is
// not in the spectrum. The witness is re-residuated against its common value
// so the starts are always finite, then shifted to min 0.
std::optional<ScheduleSolution> schedule_at(const ScheduleInstance& inst, const Rat& lambda);

// Scans the spectrum of (A, B) and emits one solution per representative
// lambda of each component (lo, midpoint, hi, deduplicated), each with a
// finite verified start vector. Empty when the spectrum is empty.
std::vector<ScheduleSolution> solve_schedule(const ScheduleInstance& inst,
                                             const ScanOptions& opts = {});

}  // namespace maxplus
