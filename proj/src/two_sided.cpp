#include <maxplus/two_sided.hpp>

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include <maxplus/errors.hpp>

namespace maxplus {

SeparatedSystem separate(const TropMatrix& A, const TropMatrix& B, const Rat& lambda) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("separate: A and B must have the same shape");
    TropMatrix C = vstack(A, scalar_mul(ExtReal(lambda), B));
    TropMatrix D = vstack(identity(A.rows()), identity(A.rows()));
    return SeparatedSystem{std::move(C), std::move(D), lambda, A.rows()};
}

std::pair<TropVector, TropVector> cancel_equation(const TropVector& lhs, const TropVector& rhs) {
    if (lhs.size() != rhs.size()) throw DimensionMismatch("cancel_equation: length mismatch");
    TropVector l = lhs, r = rhs;
    for (int j = 0; j < lhs.size(); ++j) {
        if (lhs[j] < rhs[j])
            l.set(j, ExtReal::bottom());
        else if (rhs[j] < lhs[j])
            r.set(j, ExtReal::bottom());
    }
    return {std::move(l), std::move(r)};
}

bool dominance_infeasible(const TropMatrix& A, const TropMatrix& B, const Rat& lambda) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("dominance_infeasible: A and B must have the same shape");
    const ExtReal lam(lambda);
    for (int i = 0; i < A.rows(); ++i) {
        bool a_below = true;  // A_i strictly below (lambda (x) B)_i, which is all finite
        bool b_below = true;  // the symmetric condition
        for (int j = 0; j < A.cols(); ++j) {
            const ExtReal& a = A.at(i, j);
            const ExtReal lb = otimes(lam, B.at(i, j));
            if (lb.is_bottom() || !(a < lb)) a_below = false;
            if (a.is_bottom() || !(lb < a)) b_below = false;
            if (!a_below && !b_below) break;
        }
        if (a_below || b_below) return true;
    }
    return false;
}

std::string Bound::str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return to_string(v_);
}

SpectrumBounds lambda_bounds(const TropMatrix& A, const TropMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("lambda_bounds: A and B must have the same shape");
    SpectrumBounds out{Bound::neg_inf(), Bound::pos_inf()};
    for (int i = 0; i < A.rows(); ++i) {
        Bound row_min = Bound::pos_inf();
        Bound row_max = Bound::neg_inf();
        for (int j = 0; j < A.cols(); ++j) {
            const ExtReal& a = A.at(i, j);
            const ExtReal& b = B.at(i, j);
            if (a.is_bottom() && b.is_bottom())
                throw std::invalid_argument(
                    "lambda_bounds: a_ij or b_ij must be finite at every position");
            const Bound d = a.is_bottom()   ? Bound::neg_inf()
                            : b.is_bottom() ? Bound::pos_inf()
                                            : Bound(Rat(a.value() - b.value()));
            row_min = std::min(row_min, d);
            row_max = std::max(row_max, d);
        }
        out.lo = (i == 0) ? row_min : std::max(out.lo, row_min);
        out.hi = (i == 0) ? row_max : std::min(out.hi, row_max);
    }
    return out;
}

TwoSidedOutcome alternating_solve(const SeparatedSystem& sys) {
    const TropMatrix& C = sys.C;
    const int n = sys.n;
    const int rows = C.rows();
    const int m = C.cols();
    if (n < 1 || rows != 2 * n || sys.D.rows() != rows || sys.D.cols() != n)
        throw DimensionMismatch("alternating_solve: malformed separated system");
    for (int j = 0; j < m; ++j) {
        bool finite = false;
        for (int r = 0; r < rows && !finite; ++r) finite = C.at(r, j).is_finite();
        if (!finite)
            throw std::invalid_argument("alternating_solve: column " + std::to_string(j) +
                                        " of C has no finite entry");
    }

    // Divergence floor: iterates are coordinatewise non-increasing from the
    // second sweep on, and for all-finite C any solvable system has a solution
    // with max 0 and every coordinate >= -(range of C entries). A coordinate
    // sinking below -(2n+m)*range can therefore never be part of a solution
    // and is removed; with bottom entries in C this is a flagged heuristic.
    Rat ent_lo(0), ent_hi(0);  // D's finite entries are all 0
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j < m; ++j) {
            const ExtReal& c = C.at(r, j);
            if (c.is_bottom()) continue;
            if (c.value() < ent_lo) ent_lo = c.value();
            if (ent_hi < c.value()) ent_hi = c.value();
        }
    const Rat floor_level = Rat(-(rows + m)) * (ent_hi - ent_lo);

    std::vector<ExtReal> x(static_cast<std::size_t>(m), ExtReal(0));
    TwoSidedOutcome out;
    out.method = SolveMethod::alternating;

    for (long sweep = 1;; ++sweep) {
        // z = C (x) x
        std::vector<ExtReal> z(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            ExtReal acc;
            for (int j = 0; j < m; ++j) acc = oplus(acc, otimes(C.at(r, j), x[static_cast<std::size_t>(j)]));
            z[static_cast<std::size_t>(r)] = std::move(acc);
        }
        // Greatest y with D (x) y <= z: y_i = min(z_i, z_{n+i}); then
        // w = D (x) y is just (y; y).
        std::vector<ExtReal> y(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            y[static_cast<std::size_t>(i)] =
                std::min(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(i + n)]);

        // Greatest x' with C (x) x' <= w, coordinates already removed staying
        // removed (they can never rise again).
        std::vector<ExtReal> nx(static_cast<std::size_t>(m));
        bool any_live = false;
        for (int j = 0; j < m; ++j) {
            if (x[static_cast<std::size_t>(j)].is_bottom()) continue;
            bool forced_bottom = false;
            bool seen = false;
            Rat best;
            for (int r = 0; r < rows; ++r) {
                const ExtReal& c = C.at(r, j);
                if (c.is_bottom()) continue;
                const ExtReal& w = y[static_cast<std::size_t>(r < n ? r : r - n)];
                if (w.is_bottom()) {  // c_rj + x_j <= -inf forces x_j = -inf
                    forced_bottom = true;
                    break;
                }
                Rat d = w.value() - c.value();
                if (!seen || d < best) {
                    best = std::move(d);
                    seen = true;
                }
            }
            if (forced_bottom) continue;  // nx[j] stays bottom
            if (best < floor_level) {
                out.cap_exceeded = true;
                continue;
            }
            nx[static_cast<std::size_t>(j)] = ExtReal(std::move(best));
            any_live = true;
        }

        if (nx == x) {
            // Fixed point: C(x)x <= (y;y) by residuation and (y;y) <= C(x)x by
            // the choice of y, so z is the common value and has equal halves.
            out.iterations = sweep;
            out.solvable = true;
            for (int i = 0; i < n; ++i)
                if (z[static_cast<std::size_t>(i)] != z[static_cast<std::size_t>(i + n)])
                    throw std::logic_error("alternating_solve: fixed point with unequal halves");
            out.witness_x = TropVector(std::move(x));
            out.witness_z = TropVector(std::move(z));
            return out;
        }
        if (!any_live) {
            out.iterations = sweep;
            out.solvable = false;
            return out;
        }

        // Uniform strictly-negative shift: the sweep map commutes with adding
        // a constant to all coordinates, so from here the iteration repeats
        // the same shift forever and no fixed point exists.
        bool same_support = true;
        bool uniform = true;
        bool have_delta = false;
        Rat delta;
        for (int j = 0; j < m && same_support && uniform; ++j) {
            const ExtReal& ox = x[static_cast<std::size_t>(j)];
            const ExtReal& nv = nx[static_cast<std::size_t>(j)];
            if (ox.is_finite() != nv.is_finite()) {
                same_support = false;
            } else if (ox.is_finite()) {
                Rat d = nv.value() - ox.value();
                if (!have_delta) {
                    delta = std::move(d);
                    have_delta = true;
                } else if (d != delta) {
                    uniform = false;
                }
            }
        }
        if (same_support && uniform && have_delta && delta < 0) {
            out.iterations = sweep;
            out.solvable = false;
            return out;
        }

        x = std::move(nx);
    }
}

unsigned long long oracle_pattern_count(int n, int m) {
    if (n < 1 || m < 1) throw DimensionMismatch("oracle_pattern_count: need n, m >= 1");
    unsigned long long count = 1;
    for (int d = 0; d < 2 * n; ++d) {
        if (count > ULLONG_MAX / static_cast<unsigned long long>(m)) return ULLONG_MAX;
        count *= static_cast<unsigned long long>(m);
    }
    return count;
}

namespace {

constexpr unsigned long long kNoPattern = ULLONG_MAX;
// Patterns per ordered parallel block; blocks are finished in order, so the
// reported pattern is the lexicographically first feasible one in both lanes.
constexpr unsigned long long kOracleBlock = 8192;

// Difference-constraint feasibility for one argmax pattern. For equation i
// with chosen columns p (left) and q (right), writing lb = lambda + b, the
// constraints are
//   x_j - x_p <= min(a_ip - a_ij, a_ip - lb_ij)   for every j, and
//   x_p - x_q <= lb_iq - a_ip,
// which together are equivalent to "columns p and q attain the maxima and the
// two maxima are equal". Feasibility is decided by Bellman-Ford relaxation
// from the all-zero potential with n*m+1 rounds: convergence (a round with no
// change) yields a feasible potential in dist; a change in the final round —
// or any label below the simple-path floor — proves a negative cycle.
template <typename W>
class PatternChecker {
public:
    PatternChecker(int n, int m, const std::vector<W>& a, const std::vector<W>& lb, W floor)
        : n_(n),
          m_(m),
          a_(a),
          lb_(lb),
          floor_(std::move(floor)),
          dist_(static_cast<std::size_t>(m)),
          choice_(static_cast<std::size_t>(2 * n)) {}

    bool feasible(unsigned long long pattern) {
        for (int d = 2 * n_ - 1; d >= 0; --d) {
            choice_[static_cast<std::size_t>(d)] =
                static_cast<int>(pattern % static_cast<unsigned long long>(m_));
            pattern /= static_cast<unsigned long long>(m_);
        }
        std::fill(dist_.begin(), dist_.end(), W(0));
        const int rounds = n_ * m_ + 1;
        bool changed = false;
        for (int r = 0; r < rounds; ++r) {
            changed = false;
            for (int i = 0; i < n_; ++i) {
                const int p = choice_[static_cast<std::size_t>(2 * i)];
                const int q = choice_[static_cast<std::size_t>(2 * i + 1)];
                const W* ra = &a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_)];
                const W* rl = &lb_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_)];
                const W& dp = dist_[static_cast<std::size_t>(p)];
                for (int j = 0; j < m_; ++j) {
                    W w1 = ra[p] - ra[j];
                    W w2 = ra[p] - rl[j];
                    W cand = dp + std::min(w1, w2);
                    W& dj = dist_[static_cast<std::size_t>(j)];
                    if (cand < dj) {
                        if (cand < floor_) return false;
                        dj = std::move(cand);
                        changed = true;
                    }
                }
                W cand = dist_[static_cast<std::size_t>(q)] + (rl[q] - ra[p]);
                W& dpm = dist_[static_cast<std::size_t>(p)];
                if (cand < dpm) {
                    if (cand < floor_) return false;
                    dpm = std::move(cand);
                    changed = true;
                }
            }
            if (!changed) return true;
        }
        return !changed;
    }

    const std::vector<W>& dist() const { return dist_; }

private:
    int n_, m_;
    const std::vector<W>& a_;
    const std::vector<W>& lb_;
    W floor_;
    std::vector<W> dist_;
    std::vector<int> choice_;
};

template <typename W>
unsigned long long first_feasible(int n, int m, const std::vector<W>& a, const std::vector<W>& lb,
                                  const W& floor, unsigned long long total, bool parallel) {
    if (!parallel) {
        PatternChecker<W> chk(n, m, a, lb, floor);
        for (unsigned long long pat = 0; pat < total; ++pat)
            if (chk.feasible(pat)) return pat;
        return kNoPattern;
    }
    for (unsigned long long start = 0; start < total; start += kOracleBlock) {
        const unsigned long long end = std::min(total, start + kOracleBlock);
        unsigned long long found = kNoPattern;
#pragma omp parallel reduction(min : found)
        {
            PatternChecker<W> chk(n, m, a, lb, floor);
#pragma omp for schedule(dynamic, 64)
            for (long long pat = static_cast<long long>(start); pat < static_cast<long long>(end);
                 ++pat) {
                const auto upat = static_cast<unsigned long long>(pat);
                if (chk.feasible(upat) && upat < found) found = upat;
            }
        }
        if (found != kNoPattern) return found;
    }
    return kNoPattern;
}

struct ScaledInt64 {
    bool ok = false;
    std::vector<long long> a, lb;
    mpz_class q;  // common denominator
};

// int64 fast path: scale everything by the lcm q of all denominators. Safe
// whenever q <= 2^20 and all scaled magnitudes are <= 2^40; relaxation labels
// are then bounded by the simple-path floor (~m * 2^41) plus one edge, far
// from overflow.
ScaledInt64 try_scale_int64(const std::vector<Rat>& a, const std::vector<Rat>& lb) {
    ScaledInt64 s;
    s.q = 1;
    for (const auto& v : a) mpz_lcm(s.q.get_mpz_t(), s.q.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& v : lb) mpz_lcm(s.q.get_mpz_t(), s.q.get_mpz_t(), v.get_den().get_mpz_t());
    if (s.q > (1L << 20)) return s;
    const long long limit = 1LL << 40;
    auto scale = [&](const Rat& v, long long& out_val) {
        mpz_class scaled = v.get_num() * (s.q / v.get_den());
        if (!scaled.fits_slong_p()) return false;
        const long val = scaled.get_si();
        if (val > limit || val < -limit) return false;
        out_val = val;
        return true;
    };
    s.a.resize(a.size());
    s.lb.resize(lb.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!scale(a[k], s.a[k])) return s;
    for (std::size_t k = 0; k < lb.size(); ++k)
        if (!scale(lb[k], s.lb[k])) return s;
    s.ok = true;
    return s;
}

template <typename W>
W max_abs_weight(const std::vector<W>& a, const std::vector<W>& lb) {
    W lo = a.front(), hi = a.front();
    for (const auto& v : a) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    for (const auto& v : lb) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;  // every edge weight is a difference of two grid values
}

}  // namespace

TwoSidedOutcome pattern_oracle(const TropMatrix& A, const TropMatrix& B, const Rat& lambda,
                               const OracleOptions& opts) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("pattern_oracle: A and B must have the same shape");
    if (!A.all_finite() || !B.all_finite())
        throw std::invalid_argument("pattern_oracle: all entries must be finite");
    const int n = A.rows();
    const int m = A.cols();
    const unsigned long long total = oracle_pattern_count(n, m);
    if (total > static_cast<unsigned long long>(opts.pattern_guard))
        throw GuardExceeded("pattern_oracle: " + std::to_string(total) +
                            " patterns exceed the guard of " + std::to_string(opts.pattern_guard));

    std::vector<Rat> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
    std::vector<Rat> lb(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const auto k = static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                           static_cast<std::size_t>(j);
            a[k] = A.at(i, j).value();
            lb[k] = lambda + B.at(i, j).value();
        }

    unsigned long long winner = kNoPattern;
    TropVector witness;
    const ScaledInt64 scaled = try_scale_int64(a, lb);
    if (scaled.ok) {
        const long long floor = -(static_cast<long long>(m) + 1) * max_abs_weight(scaled.a, scaled.lb) - 1;
        winner = first_feasible<long long>(n, m, scaled.a, scaled.lb, floor, total, opts.parallel);
        if (winner != kNoPattern) {
            PatternChecker<long long> chk(n, m, scaled.a, scaled.lb, floor);
            if (!chk.feasible(winner))
                throw std::logic_error("pattern_oracle: winning pattern did not re-verify");
            TropVector x(m);
            const Rat qr(scaled.q);
            for (int j = 0; j < m; ++j) {
                // labels fit in long (they were bounded by the int64 floor)
                Rat v = Rat(mpz_class(static_cast<long>(chk.dist()[static_cast<std::size_t>(j)]))) / qr;
                x.set(j, ExtReal(std::move(v)));
            }
            witness = std::move(x);
        }
    } else {
        const Rat floor = Rat(-(m + 1)) * max_abs_weight(a, lb) - 1;
        winner = first_feasible<Rat>(n, m, a, lb, floor, total, opts.parallel);
        if (winner != kNoPattern) {
            PatternChecker<Rat> chk(n, m, a, lb, floor);
            if (!chk.feasible(winner))
                throw std::logic_error("pattern_oracle: winning pattern did not re-verify");
            TropVector x(m);
            for (int j = 0; j < m; ++j)
                x.set(j, ExtReal(chk.dist()[static_cast<std::size_t>(j)]));
            witness = std::move(x);
        }
    }

    TwoSidedOutcome out;
    out.method = SolveMethod::oracle;
    if (winner == kNoPattern) {
        out.solvable = false;
        out.iterations = static_cast<long>(total);
        return out;
    }
    out.solvable = true;
    out.iterations = static_cast<long>(winner) + 1;
    if (!verify_witness(A, B, ExtReal(lambda), witness))
        throw std::logic_error("pattern_oracle: feasible-pattern witness failed verification");
    TropVector z = mat_vec(vstack(A, scalar_mul(ExtReal(lambda), B)), witness);
    out.witness_x = std::move(witness);
    out.witness_z = std::move(z);
    return out;
}

bool verify_witness(const TropMatrix& A, const TropMatrix& B, const ExtReal& lambda,
                    const TropVector& x) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("verify_witness: A and B must have the same shape");
    if (A.cols() != x.size()) throw DimensionMismatch("verify_witness: cols(A) != len(x)");
    if (!x.nontrivial()) return false;
    return mat_vec(A, x) == scalar_mul(lambda, mat_vec(B, x));
}

}  // namespace maxplus
