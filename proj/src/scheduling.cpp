#include <maxplus/scheduling.hpp>

#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include <maxplus/errors.hpp>
#include <maxplus/one_sided.hpp>

namespace maxplus {

ScheduleInstance::ScheduleInstance(std::vector<std::vector<Rat>> a, std::vector<std::vector<Rat>> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || a_.front().empty())
        throw std::invalid_argument("schedule instance: needs at least one product and machine");
    if (b_.size() != a_.size())
        throw std::invalid_argument("schedule instance: duration grids differ in row count");
    const std::size_t m = a_.front().size();
    for (const auto& grid : {std::cref(a_), std::cref(b_)})
        for (const auto& row : grid.get()) {
            if (row.size() != m)
                throw std::invalid_argument("schedule instance: ragged duration grid");
            for (const auto& d : row)
                if (d < 0) throw std::invalid_argument("schedule instance: negative duration");
        }
}

std::pair<TropMatrix, TropMatrix> to_eigenproblem(const ScheduleInstance& inst) {
    TropMatrix A(inst.products(), inst.machines()), B(inst.products(), inst.machines());
    for (int i = 0; i < inst.products(); ++i)
        for (int j = 0; j < inst.machines(); ++j) {
            A.set(i, j, ExtReal(inst.a(i, j)));
            B.set(i, j, ExtReal(inst.b(i, j)));
        }
    return {std::move(A), std::move(B)};
}

std::optional<ScheduleSolution> schedule_at(const ScheduleInstance& inst, const Rat& lambda) {
    auto [A, B] = to_eigenproblem(inst);
    MembershipOptions mo;
    mo.oracle_crosscheck = false;
    const TwoSidedOutcome out = membership(A, B, lambda, mo);
    if (!out.solvable) return std::nullopt;

    // All durations are finite, so the common value z of any nontrivial
    // witness is finite; the principal solution against z is then a finite
    // witness with the same completions.
    const SeparatedSystem s = separate(A, B, lambda);
    const TropVector& z = *out.witness_z;
    TropVector x = principal_solution(s.C, z);
    if (mat_vec(s.C, x) != z)
        throw std::logic_error("schedule_at: principal solution does not reach the common value");

    Rat shift = x[0].value();
    for (int j = 1; j < x.size(); ++j) shift = std::min(shift, x[j].value());

    ScheduleSolution sol;
    sol.lambda = lambda;
    sol.starts.reserve(static_cast<std::size_t>(x.size()));
    for (int j = 0; j < x.size(); ++j) sol.starts.push_back(Rat(x[j].value() - shift));
    sol.completion.reserve(static_cast<std::size_t>(inst.products()));
    for (int i = 0; i < inst.products(); ++i)
        sol.completion.push_back(Rat(z[i].value() - shift));
    return sol;
}

std::vector<ScheduleSolution> solve_schedule(const ScheduleInstance& inst,
                                             const ScanOptions& opts) {
    auto [A, B] = to_eigenproblem(inst);
    const Spectrum sp = compute_spectrum(A, B, opts);

    std::vector<ScheduleSolution> sols;
    for (const auto& comp : sp.components) {
        std::set<Rat> reps{comp.lo, comp.hi};
        Rat mid = (comp.lo + comp.hi) / 2;
        reps.insert(std::move(mid));
        for (const Rat& lam : reps) {
            // The midpoint of a heuristic component is not sample-backed and
            // may turn out infeasible; skip it rather than report it.
            if (auto sol = schedule_at(inst, lam)) sols.push_back(std::move(*sol));
        }
    }
    return sols;
}

}  // namespace maxplus
