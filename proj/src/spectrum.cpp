#include <maxplus/spectrum.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include <maxplus/errors.hpp>
#include <maxplus/one_sided.hpp>

namespace maxplus {

IntervalSystem::IntervalSystem(std::vector<std::pair<Rat, Rat>> intervals)
    : iv_(std::move(intervals)) {
    if (iv_.empty()) throw std::invalid_argument("interval system: needs at least one interval");
    for (std::size_t i = 0; i < iv_.size(); ++i) {
        if (iv_[i].second < iv_[i].first)
            throw std::invalid_argument("interval system: lower endpoint exceeds upper in interval " +
                                        std::to_string(i + 1));
        if (i > 0 && !(iv_[i - 1].second < iv_[i].first))
            throw std::invalid_argument("interval system: ordering violated between intervals " +
                                        std::to_string(i) + " and " + std::to_string(i + 1));
    }
}

Rat IntervalSystem::midpoint(int i) const {
    Rat mid = (lower(i) + upper(i)) / 2;
    return mid;
}

std::optional<int> IntervalSystem::containing(const Rat& lambda) const {
    for (int i = 0; i < count(); ++i)
        if (!(lambda < lower(i)) && !(upper(i) < lambda)) return i;
    return std::nullopt;
}

std::pair<TropMatrix, TropMatrix> synth_matrices(const IntervalSystem& sys) {
    const int m = sys.count();
    TropMatrix A(2, 3 * m), B(2, 3 * m);
    for (int i = 0; i < m; ++i) {
        const Rat& a = sys.lower(i);
        const Rat& c = sys.upper(i);
        const Rat b = sys.midpoint(i);
        const int base = 3 * i;
        A.set(0, base, ExtReal(a));
        A.set(0, base + 1, ExtReal(b));
        A.set(0, base + 2, ExtReal(c));
        A.set(1, base, ExtReal(Rat(2 * a)));
        A.set(1, base + 1, ExtReal(Rat(2 * b)));
        A.set(1, base + 2, ExtReal(Rat(2 * c)));
        B.set(0, base, ExtReal(0));
        B.set(0, base + 1, ExtReal(0));
        B.set(0, base + 2, ExtReal(0));
        B.set(1, base, ExtReal(a));
        B.set(1, base + 1, ExtReal(c));
        B.set(1, base + 2, ExtReal(b));
    }
    return {std::move(A), std::move(B)};
}

UvwColumns columns_uvw(const IntervalSystem& sys, int i, const Rat& lambda) {
    if (i < 0 || i >= sys.count())
        throw std::invalid_argument("columns_uvw: interval index out of range");
    const Rat& a = sys.lower(i);
    const Rat& c = sys.upper(i);
    const Rat b = sys.midpoint(i);
    auto col = [&](const Rat& top, const Rat& shifted) {
        TropVector v(4);
        v.set(0, ExtReal(top));
        v.set(1, ExtReal(Rat(2 * top)));
        v.set(2, ExtReal(lambda));
        v.set(3, ExtReal(Rat(shifted + lambda)));
        return v;
    };
    return UvwColumns{col(a, a), col(b, c), col(c, b)};
}

TropVector witness_case3(const IntervalSystem& sys, int i, const Rat& lambda) {
    if (i < 0 || i >= sys.count())
        throw std::invalid_argument("witness_case3: interval index out of range");
    const Rat b = sys.midpoint(i);
    if (lambda < sys.lower(i) || b < lambda)
        throw std::invalid_argument("witness_case3: lambda outside [a_i, b_i]");
    const Rat level = lambda + b - sys.lower(i);
    TropVector z(4);
    z.set(0, ExtReal(0));
    z.set(1, ExtReal(level));
    z.set(2, ExtReal(0));
    z.set(3, ExtReal(level));
    return z;
}

TropVector witness_case4(const IntervalSystem& sys, int i, const Rat& lambda) {
    if (i < 0 || i >= sys.count())
        throw std::invalid_argument("witness_case4: interval index out of range");
    if (lambda < sys.midpoint(i) || sys.upper(i) < lambda)
        throw std::invalid_argument("witness_case4: lambda outside [b_i, c_i]");
    const Rat& c = sys.upper(i);
    TropVector z(4);
    z.set(0, ExtReal(0));
    z.set(1, ExtReal(c));
    z.set(2, ExtReal(0));
    z.set(3, ExtReal(c));
    return z;
}

TropVector eigenvector_from_witness(const IntervalSystem& sys, const Rat& lambda) {
    const auto idx = sys.containing(lambda);
    if (!idx)
        throw std::invalid_argument("eigenvector_from_witness: lambda lies in no interval");
    // At lambda == b_i both case templates apply; the upper-half witness is
    // used there.
    const TropVector z = lambda < sys.midpoint(*idx) ? witness_case3(sys, *idx, lambda)
                                                     : witness_case4(sys, *idx, lambda);
    auto [A, B] = synth_matrices(sys);
    const SeparatedSystem s = separate(A, B, lambda);
    TropVector x = principal_solution(s.C, z);
    if (!verify_witness(A, B, ExtReal(lambda), x))
        throw std::logic_error("eigenvector_from_witness: constructed witness failed verification");
    return x;
}

TwoSidedOutcome membership(const TropMatrix& A, const TropMatrix& B, const Rat& lambda,
                           const MembershipOptions& opts) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("membership: A and B must have the same shape");

    // A column bottom in both matrices leaves that variable unconstrained:
    // the unit vector there solves the system with both sides all bottom.
    for (int j = 0; j < A.cols(); ++j) {
        bool finite = false;
        for (int i = 0; i < A.rows() && !finite; ++i)
            finite = A.at(i, j).is_finite() || B.at(i, j).is_finite();
        if (!finite) {
            TwoSidedOutcome out;
            out.solvable = true;
            out.method = SolveMethod::dominance;  // decided structurally, no iteration
            TropVector x(A.cols());
            x.set(j, ExtReal(0));
            out.witness_x = std::move(x);
            out.witness_z = TropVector(2 * A.rows());
            return out;
        }
    }

    if (dominance_infeasible(A, B, lambda)) {
        TwoSidedOutcome out;
        out.solvable = false;
        out.method = SolveMethod::dominance;
        return out;
    }

    TwoSidedOutcome out = alternating_solve(separate(A, B, lambda));
    if (opts.oracle_crosscheck && A.all_finite() && B.all_finite() &&
        oracle_pattern_count(A.rows(), A.cols()) <=
            static_cast<unsigned long long>(opts.oracle_guard)) {
        const TwoSidedOutcome oracle =
            pattern_oracle(A, B, lambda, OracleOptions{opts.oracle_guard, opts.oracle_parallel});
        if (oracle.solvable != out.solvable)
            throw std::logic_error("membership: alternating and oracle verdicts disagree");
    }
    return out;
}

std::optional<IntervalSystem> recognize_synthesis(const TropMatrix& A, const TropMatrix& B) {
    if (A.rows() != 2 || B.rows() != 2 || A.cols() != B.cols()) return std::nullopt;
    if (A.cols() < 3 || A.cols() % 3 != 0) return std::nullopt;
    if (!A.all_finite() || !B.all_finite()) return std::nullopt;
    const int m = A.cols() / 3;
    std::vector<std::pair<Rat, Rat>> intervals;
    intervals.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int base = 3 * i;
        const Rat& a = A.at(0, base).value();
        const Rat& b = A.at(0, base + 1).value();
        const Rat& c = A.at(0, base + 2).value();
        if (c < a) return std::nullopt;
        if (Rat(2 * b) != a + c) return std::nullopt;  // midpoint identity
        if (A.at(1, base).value() != Rat(2 * a) || A.at(1, base + 1).value() != Rat(2 * b) ||
            A.at(1, base + 2).value() != Rat(2 * c))
            return std::nullopt;
        if (B.at(0, base).value() != 0 || B.at(0, base + 1).value() != 0 ||
            B.at(0, base + 2).value() != 0)
            return std::nullopt;
        if (B.at(1, base).value() != a || B.at(1, base + 1).value() != c ||
            B.at(1, base + 2).value() != b)
            return std::nullopt;
        if (i > 0 && !(intervals.back().second < a)) return std::nullopt;
        intervals.emplace_back(a, c);
    }
    return IntervalSystem(std::move(intervals));
}

Spectrum compute_spectrum(const TropMatrix& A, const TropMatrix& B, const ScanOptions& opts) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("compute_spectrum: A and B must have the same shape");
    if (!A.all_finite() || !B.all_finite())
        throw std::invalid_argument("compute_spectrum: scan requires finite matrices");

    Spectrum sp;
    sp.bounds = lambda_bounds(A, B);
    sp.heuristic = !recognize_synthesis(A, B).has_value();
    if (sp.bounds.empty()) return sp;

    const Rat& lo = sp.bounds.lo.value();
    const Rat& hi = sp.bounds.hi.value();
    std::set<Rat> breakpoints{lo, hi};
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l) {
                    Rat d = A.at(i, j).value() - B.at(k, l).value();
                    if (!(d < lo) && !(hi < d)) breakpoints.insert(std::move(d));
                }
    if (breakpoints.size() > opts.candidate_guard)
        throw GuardExceeded("compute_spectrum: " + std::to_string(breakpoints.size()) +
                            " breakpoint candidates exceed the guard of " +
                            std::to_string(opts.candidate_guard));

    // Probe every breakpoint and every midpoint of consecutive breakpoints.
    std::vector<Rat> probes;
    probes.reserve(2 * breakpoints.size());
    for (auto it = breakpoints.begin(); it != breakpoints.end(); ++it) {
        if (it != breakpoints.begin()) {
            Rat mid = (*std::prev(it) + *it) / 2;
            probes.push_back(std::move(mid));
        }
        probes.push_back(*it);
    }

    std::vector<SampleRecord> samples(probes.size());
    MembershipOptions mo;
    mo.oracle_crosscheck = false;  // solver-vs-oracle agreement is covered elsewhere
    const auto probe_count = static_cast<long long>(probes.size());
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < probe_count; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            TwoSidedOutcome o = membership(A, B, probes[ku], mo);
            samples[ku] = SampleRecord{probes[ku], o.solvable, std::move(o.witness_x)};
        }
    } else {
        for (long long k = 0; k < probe_count; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            TwoSidedOutcome o = membership(A, B, probes[ku], mo);
            samples[ku] = SampleRecord{probes[ku], o.solvable, std::move(o.witness_x)};
        }
    }

    // Maximal runs of consecutive solvable probes become closed components.
    for (std::size_t k = 0; k < samples.size();) {
        if (!samples[k].solvable) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end + 1 < samples.size() && samples[end + 1].solvable) ++end;
        sp.components.push_back(SpectrumComponent{samples[k].lambda, samples[end].lambda});
        k = end + 1;
    }
    sp.samples = std::move(samples);
    return sp;
}

namespace {

// Grid of `count` points spanning [lo, hi] (collapses to {lo} when degenerate).
std::set<Rat> grid_points(const Rat& lo, const Rat& hi, int count) {
    std::set<Rat> pts{lo};
    if (count >= 2 && lo < hi) {
        const Rat span = hi - lo;
        for (int t = 1; t < count; ++t) {
            Rat p = lo + span * t / (count - 1);
            pts.insert(std::move(p));
        }
    }
    return pts;
}

// count interior points strictly between lo and hi.
std::set<Rat> interior_points(const Rat& lo, const Rat& hi, int count) {
    std::set<Rat> pts;
    const Rat span = hi - lo;
    for (int t = 1; t <= count; ++t) {
        Rat p = lo + span * t / (count + 1);
        pts.insert(std::move(p));
    }
    return pts;
}

std::string fmt_tset(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += std::to_string(v) + ",";
    if (out.back() == ',') out.pop_back();
    return out + "}";
}

}  // namespace

TheoremReport verify_theorem(const IntervalSystem& sys, int samples_per_region,
                             std::optional<std::uint64_t> seed) {
    if (samples_per_region < 1)
        throw std::invalid_argument("verify_theorem: samples_per_region must be >= 1");
    const int k = samples_per_region;
    auto [A, B] = synth_matrices(sys);

    TheoremReport rep;
    rep.bounds = lambda_bounds(A, B);
    rep.all_passed = true;

    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);
    // Exact random rational in [lo, hi]: lo + span * u / 10^4.
    auto random_in = [&](const Rat& lo, const Rat& hi) {
        Rat u(static_cast<long>((*rng)() % 10001));
        Rat p = lo + (hi - lo) * u / 10000;
        return p;
    };

    auto add_check = [&](TheoremCheck c) {
        if (!c.passed) rep.all_passed = false;
        rep.checks.push_back(std::move(c));
    };

    // The scan bounds of a synthesized pencil are exactly [a_1, c_m].
    {
        TheoremCheck c;
        c.region = "bounds";
        c.lambda = sys.lower(0);
        c.expect_solvable = true;
        c.passed = rep.bounds.lo == Bound(sys.lower(0)) &&
                   rep.bounds.hi == Bound(sys.upper(sys.count() - 1));
        if (!c.passed)
            c.detail = "expected bounds [" + to_string(sys.lower(0)) + ", " +
                       to_string(sys.upper(sys.count() - 1)) + "], got [" + rep.bounds.lo.str() +
                       ", " + rep.bounds.hi.str() + "]";
        add_check(std::move(c));
    }

    const MembershipOptions memb_opts;  // cross-check on whenever the guard allows
    for (int i = 0; i < sys.count(); ++i) {
        const Rat& a = sys.lower(i);
        const Rat& c_up = sys.upper(i);
        const Rat b = sys.midpoint(i);

        std::set<Rat> lambdas = grid_points(a, c_up, k);
        lambdas.insert(b);
        if (rng)
            for (int t = 0; t < k; ++t) lambdas.insert(random_in(a, c_up));

        for (const Rat& lam : lambdas) {
            TheoremCheck chk;
            chk.lambda = lam;
            chk.region = "interval " + std::to_string(i + 1);
            chk.expect_solvable = true;
            chk.passed = true;
            auto fail = [&](const std::string& why) {
                if (chk.passed) {
                    chk.passed = false;
                    chk.detail = why;
                }
            };

            const TropVector z =
                lam < b ? witness_case3(sys, i, lam) : witness_case4(sys, i, lam);
            const SeparatedSystem s = separate(A, B, lam);
            const OneSidedOutcome one = solve_one_sided(s.C, z);

            // Certificate reachability: z must be spanned by C(lambda), with
            // the four stacked equations covered by T-sets.
            if (!one.solvable) fail("case witness z is not in the span of C(lambda)");
            std::set<int> covered;
            for (const auto& t : one.cover) covered.insert(t.begin(), t.end());
            if (covered != std::set<int>{0, 1, 2, 3})
                fail("T-set cover of z is " + fmt_tset(covered) + ", expected {0,1,2,3}");

            // The constructed eigenvector must verify exactly.
            TropVector x = principal_solution(s.C, z);
            if (!verify_witness(A, B, ExtReal(lam), x)) fail("principal witness fails A(x)x = lambda(x)B(x)x");

            // Strictly inside a half-interval, the argmin sets against the
            // block's own columns match the case templates exactly.
            const UvwColumns cols = columns_uvw(sys, i, lam);
            if (a < lam && lam < b) {
                if (t_set(z, cols.u) != std::set<int>{2}) fail("T(z,u) != {2} strictly inside (a,b)");
                const std::set<int> tv = t_set(z, cols.v);
                if (!(tv.count(0) && tv.count(3)))
                    fail("T(z,v) does not contain {0,3} strictly inside (a,b)");
                if (t_set(z, cols.w) != std::set<int>{1}) fail("T(z,w) != {1} strictly inside (a,b)");
            } else if (b < lam && lam < c_up) {
                if (t_set(z, cols.v) != std::set<int>{2, 3})
                    fail("T(z,v) != {2,3} strictly inside (b,c)");
                if (t_set(z, cols.w) != std::set<int>{0, 1})
                    fail("T(z,w) != {0,1} strictly inside (b,c)");
            }

            // Independent membership decision (alternating + auto cross-check).
            TwoSidedOutcome mem = membership(A, B, lam, memb_opts);
            if (!mem.solvable) fail("membership reports infeasible inside an interval");

            chk.witness = std::move(x);
            add_check(std::move(chk));
        }
    }

    // Gaps and the two exterior regions must be infeasible, with the
    // alternating method and the pattern oracle agreeing on every sample.
    auto check_infeasible = [&](const Rat& lam, const std::string& region) {
        TheoremCheck chk;
        chk.lambda = lam;
        chk.region = region;
        chk.expect_solvable = false;
        chk.passed = true;

        const TwoSidedOutcome alt = membership(A, B, lam, MembershipOptions{false, 0, false});
        const TwoSidedOutcome orc = pattern_oracle(A, B, lam);
        if (alt.solvable != orc.solvable) {
            chk.passed = false;
            chk.detail = "alternating and oracle disagree";
        } else if (alt.solvable) {
            chk.passed = false;
            chk.detail = "unexpectedly solvable outside the prescribed intervals";
        }
        add_check(std::move(chk));
    };

    for (int g = 0; g + 1 < sys.count(); ++g) {
        const Rat& lo = sys.upper(g);
        const Rat& hi = sys.lower(g + 1);
        std::set<Rat> pts = interior_points(lo, hi, k);
        if (rng)
            for (int t = 0; t < k; ++t) {
                Rat r = random_in(lo, hi);
                if (lo < r && r < hi) pts.insert(std::move(r));
            }
        for (const Rat& lam : pts) check_infeasible(lam, "gap " + std::to_string(g + 1));
    }
    for (int t = 1; t <= k; ++t) {
        check_infeasible(sys.lower(0) - t, "below");
        check_infeasible(sys.upper(sys.count() - 1) + t, "above");
    }

    return rep;
}

}  // namespace maxplus
