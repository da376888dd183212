#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <set>
#include <vector>

#include <maxplus/errors.hpp>
#include <maxplus/spectrum.hpp>
#include <maxplus/two_sided.hpp>

#include "support/generators.hpp"

using namespace maxplus;

namespace {

const ExtReal kBot = ExtReal::bottom();

TropVector vec(std::vector<ExtReal> e) { return TropVector(std::move(e)); }

// max-form evaluation of one row against x: max_j (row_j + x_j).
ExtReal row_apply(const TropVector& row, const TropVector& x) {
    ExtReal acc = ExtReal::bottom();
    for (int j = 0; j < row.size(); ++j) acc = oplus(acc, otimes(row[j], x[j]));
    return acc;
}

}  // namespace

TEST_CASE("separate on the frozen examples") {
    const auto s0 = separate(TropMatrix::from_rows({{ExtReal(0)}}),
                             TropMatrix::from_rows({{ExtReal(0)}}), make_rat(0));
    CHECK(s0.C == TropMatrix::from_rows({{ExtReal(0)}, {ExtReal(0)}}));
    CHECK(s0.D == TropMatrix::from_rows({{ExtReal(0)}, {ExtReal(0)}}));
    CHECK(s0.n == 1);

    const auto s1 = separate(TropMatrix::from_rows({{ExtReal(0), ExtReal(1)}}),
                             TropMatrix::from_rows({{ExtReal(2), ExtReal(3)}}), make_rat(1));
    CHECK(s1.C == TropMatrix::from_rows({{ExtReal(0), ExtReal(1)}, {ExtReal(3), ExtReal(4)}}));
    CHECK(s1.D == TropMatrix::from_rows({{ExtReal(0)}, {ExtReal(0)}}));

    CHECK_THROWS_AS(separate(TropMatrix(1, 2), TropMatrix(2, 1), make_rat(0)),
                    DimensionMismatch);
}

TEST_CASE("separated columns of the synthesized pencil are the u/v/w vectors") {
    const IntervalSystem sys({{make_rat(0), make_rat(2)}});
    const auto [A, B] = synth_matrices(sys);
    const Rat lam = make_rat(1, 2);
    const SeparatedSystem s = separate(A, B, lam);
    const UvwColumns cols = columns_uvw(sys, 0, lam);
    CHECK(s.C.col(0) == cols.u);
    CHECK(s.C.col(1) == cols.v);
    CHECK(s.C.col(2) == cols.w);
}

TEST_CASE("cancel_equation on the frozen examples") {
    const auto [l0, r0] = cancel_equation(vec({ExtReal(0), ExtReal(5)}),
                                          vec({ExtReal(1), ExtReal(0)}));
    CHECK(l0 == vec({kBot, ExtReal(5)}));
    CHECK(r0 == vec({ExtReal(1), kBot}));

    const TropVector same = vec({ExtReal(2), kBot, ExtReal(0)});
    const auto [l1, r1] = cancel_equation(same, same);
    CHECK(l1 == same);
    CHECK(r1 == same);

    const auto [l2, r2] = cancel_equation(vec({ExtReal(0)}), vec({ExtReal(1)}));
    CHECK(l2 == vec({kBot}));
    CHECK(r2 == vec({ExtReal(1)}));

    CHECK_THROWS_AS(cancel_equation(TropVector::zeros(2), TropVector::zeros(3)),
                    DimensionMismatch);
}

TEST_CASE("cancel_equation preserves the solution set pointwise") {
    testgen::Gen gen(41);
    for (int t = 0; t < 400; ++t) {
        const int m = static_cast<int>(gen.integer(1, 5));
        const TropVector lhs = gen.vector(m, 20, -4, 4, 2);
        const TropVector rhs = gen.vector(m, 20, -4, 4, 2);
        const auto [rl, rr] = cancel_equation(lhs, rhs);
        for (int probe = 0; probe < 25; ++probe) {
            const TropVector x = gen.vector(m, 25, -4, 4, 2);
            const bool before = row_apply(lhs, x) == row_apply(rhs, x);
            const bool after = row_apply(rl, x) == row_apply(rr, x);
            CHECK(before == after);
        }
    }
}

TEST_CASE("dominance_infeasible on the frozen examples") {
    const TropMatrix flat = TropMatrix::from_rows({{ExtReal(0), ExtReal(0)}});
    const TropMatrix ones = TropMatrix::from_rows({{ExtReal(1), ExtReal(1)}});
    CHECK(dominance_infeasible(flat, ones, make_rat(0)));
    CHECK_FALSE(dominance_infeasible(flat, flat, make_rat(0)));

    const auto [A, B] = synth_matrices(IntervalSystem({{make_rat(0), make_rat(2)}}));
    CHECK(dominance_infeasible(A, B, make_rat(-1)));  // lambda below the spectrum
    CHECK_FALSE(dominance_infeasible(A, B, make_rat(1)));
}

TEST_CASE("dominance infeasibility is confirmed by the oracle") {
    testgen::Gen gen(55);
    int fired = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = static_cast<int>(gen.integer(1, 3));
        const int m = static_cast<int>(gen.integer(1, 3));
        TropMatrix A(n, m);
        TropMatrix B(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                A.set(i, j, ExtReal(gen.rational(-5, 5, 2)));
                B.set(i, j, ExtReal(gen.rational(-5, 5, 2)));
            }
        // Half the time, force a dominated first row.
        if (gen.chance(50))
            for (int j = 0; j < m; ++j)
                B.set(0, j, ExtReal(A.at(0, j).value() + gen.rational(1, 4, 2)));
        const Rat lam = gen.rational(-2, 2, 2);
        if (!dominance_infeasible(A, B, lam)) continue;
        ++fired;
        CHECK_FALSE(pattern_oracle(A, B, lam).solvable);
    }
    CHECK(fired > 50);
}

TEST_CASE("lambda_bounds on the frozen examples") {
    const auto single = lambda_bounds(TropMatrix::from_rows({{ExtReal(0)}}),
                                      TropMatrix::from_rows({{ExtReal(3)}}));
    CHECK(single.lo == Bound(make_rat(-3)));
    CHECK(single.hi == Bound(make_rat(-3)));
    CHECK_FALSE(single.empty());

    const auto [A, B] = synth_matrices(
        IntervalSystem({{make_rat(0), make_rat(2)}, {make_rat(5), make_rat(5)}}));
    const auto synth = lambda_bounds(A, B);
    CHECK(synth.lo == Bound(make_rat(0)));
    CHECK(synth.hi == Bound(make_rat(5)));
    CHECK(synth.contains(make_rat(2)));
    CHECK_FALSE(synth.contains(make_rat(6)));

    testgen::Gen gen(66);
    for (int t = 0; t < 50; ++t) {
        const int n = static_cast<int>(gen.integer(1, 4));
        const int m = static_cast<int>(gen.integer(1, 4));
        TropMatrix M(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) M.set(i, j, ExtReal(gen.rational(-9, 9, 3)));
        const auto same = lambda_bounds(M, M);
        CHECK(same.lo == Bound(make_rat(0)));  // lambda = 0 always solves A(x)x = A(x)x
        CHECK(same.contains(make_rat(0)));
    }
}

TEST_CASE("lambda_bounds with mixed finiteness uses infinite sentinels") {
    const TropMatrix A = TropMatrix::from_rows({{ExtReal(0), ExtReal(1)}});
    const TropMatrix B = TropMatrix::from_rows({{kBot, ExtReal(0)}});
    const auto bounds = lambda_bounds(A, B);
    CHECK(bounds.lo == Bound(make_rat(1)));
    CHECK(bounds.hi.is_pos_inf());
    CHECK(bounds.contains(make_rat(100)));
    CHECK_FALSE(bounds.contains(make_rat(0)));

    // Positions that are bottom on both sides violate the precondition.
    const TropMatrix bad = TropMatrix::from_rows({{kBot, ExtReal(0)}});
    CHECK_THROWS_AS(lambda_bounds(bad, bad), std::invalid_argument);
}

TEST_CASE("alternating_solve on the frozen examples") {
    const auto ok = alternating_solve(separate(TropMatrix::from_rows({{ExtReal(0)}}),
                                               TropMatrix::from_rows({{ExtReal(0)}}),
                                               make_rat(0)));
    CHECK(ok.solvable);
    REQUIRE(ok.witness_x.has_value());
    CHECK(*ok.witness_x == vec({ExtReal(0)}));

    const auto bad = alternating_solve(separate(TropMatrix::from_rows({{ExtReal(0)}}),
                                                TropMatrix::from_rows({{ExtReal(1)}}),
                                                make_rat(0)));
    CHECK_FALSE(bad.solvable);

    const IntervalSystem sys({{make_rat(0), make_rat(2)}});
    const auto [A, B] = synth_matrices(sys);
    const auto mid = alternating_solve(separate(A, B, make_rat(1, 2)));
    CHECK(mid.solvable);
    REQUIRE(mid.witness_x.has_value());
    CHECK(verify_witness(A, B, ExtReal(make_rat(1, 2)), *mid.witness_x));
    // The iteration's fixed point is the documented witness shifted up by 1/2.
    const TropVector documented =
        vec({ExtReal(make_rat(-1, 2)), ExtReal(-1), ExtReal(make_rat(-5, 2))});
    CHECK(*mid.witness_x == scalar_mul(ExtReal(make_rat(1, 2)), documented));
    CHECK(verify_witness(A, B, ExtReal(make_rat(1, 2)), documented));
}

TEST_CASE("alternating_solve finds solutions that need bottom coordinates") {
    // Only x = (-inf, finite) solves this system at lambda = 0: the first
    // column forces x_0 = 1 + x_0. The divergence cap must remove exactly
    // that coordinate and keep the other.
    const TropMatrix A = TropMatrix::from_rows({{ExtReal(0), kBot}, {kBot, ExtReal(0)}});
    const TropMatrix B = TropMatrix::from_rows({{ExtReal(1), kBot}, {kBot, ExtReal(0)}});
    const auto out = alternating_solve(separate(A, B, make_rat(0)));
    CHECK(out.solvable);
    CHECK(out.cap_exceeded);
    REQUIRE(out.witness_x.has_value());
    CHECK((*out.witness_x)[0].is_bottom());
    CHECK((*out.witness_x)[1] == ExtReal(0));
    CHECK(verify_witness(A, B, ExtReal(make_rat(0)), *out.witness_x));
}

TEST_CASE("pattern_oracle on the frozen examples") {
    const auto triv = pattern_oracle(TropMatrix::from_rows({{ExtReal(0)}}),
                                     TropMatrix::from_rows({{ExtReal(0)}}), make_rat(0));
    CHECK(triv.solvable);
    REQUIRE(triv.witness_x.has_value());
    CHECK(*triv.witness_x == vec({ExtReal(0)}));

    const auto dom = pattern_oracle(TropMatrix::from_rows({{ExtReal(0), ExtReal(0)}}),
                                    TropMatrix::from_rows({{ExtReal(1), ExtReal(1)}}),
                                    make_rat(0));
    CHECK_FALSE(dom.solvable);
    CHECK(dom.iterations == 4);  // every pattern examined

    const auto [A, B] = synth_matrices(
        IntervalSystem({{make_rat(0), make_rat(2)}, {make_rat(5), make_rat(5)}}));
    CHECK_FALSE(pattern_oracle(A, B, make_rat(3)).solvable);  // gap between intervals
}

TEST_CASE("pattern_oracle enforces its guard and preconditions") {
    OracleOptions tight;
    tight.pattern_guard = 3;
    CHECK_THROWS_AS(pattern_oracle(TropMatrix::from_rows({{ExtReal(0), ExtReal(0)}}),
                                   TropMatrix::from_rows({{ExtReal(0), ExtReal(0)}}),
                                   make_rat(0), tight),
                    GuardExceeded);

    CHECK(oracle_pattern_count(1, 2) == 4);
    CHECK(oracle_pattern_count(2, 3) == 81);
    CHECK(oracle_pattern_count(100, 100) == ULLONG_MAX);  // saturates

    const TropMatrix holed = TropMatrix::from_rows({{kBot}});
    CHECK_THROWS_AS(pattern_oracle(holed, TropMatrix::from_rows({{ExtReal(0)}}), make_rat(0)),
                    std::invalid_argument);
}

TEST_CASE("verify_witness on the frozen examples") {
    const TropMatrix M = TropMatrix::from_rows({{ExtReal(2), ExtReal(0)}, {kBot, ExtReal(1)}});
    CHECK(verify_witness(M, M, ExtReal(0), TropVector::zeros(2)));
    CHECK_FALSE(verify_witness(M, M, ExtReal(0), TropVector(2)));  // trivial x

    const auto [A, B] = synth_matrices(IntervalSystem({{make_rat(0), make_rat(2)}}));
    const TropVector x =
        vec({ExtReal(make_rat(-1, 2)), ExtReal(-1), ExtReal(make_rat(-5, 2))});
    CHECK(verify_witness(A, B, ExtReal(make_rat(1, 2)), x));
    CHECK_FALSE(verify_witness(A, B, ExtReal(make_rat(3, 2)), x));
}

TEST_CASE("verify_witness is invariant under uniform shifts of the witness") {
    testgen::Gen gen(77);
    const auto [A, B] = synth_matrices(
        IntervalSystem({{make_rat(0), make_rat(2)}, {make_rat(4), make_rat(6)}}));
    const TropVector x = *alternating_solve(separate(A, B, make_rat(5))).witness_x;
    for (int t = 0; t < 50; ++t) {
        const ExtReal shift(gen.rational(-20, 20, 5));
        CHECK(verify_witness(A, B, ExtReal(5), scalar_mul(shift, x)));
    }
    // ... and a shifted witness for the wrong lambda still fails.
    CHECK_FALSE(verify_witness(A, B, ExtReal(3), scalar_mul(ExtReal(7), x)));
}

TEST_CASE("alternating and oracle agree on 500 random pencils") {
    testgen::Gen gen(12345);
    int solvable_count = 0;
    for (int t = 0; t < 500; ++t) {
        const int n = static_cast<int>(gen.integer(1, 3));
        const int m = static_cast<int>(gen.integer(1, 4));
        TropMatrix A(n, m);
        TropMatrix B(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                A.set(i, j, ExtReal(gen.integer(-5, 5)));
                B.set(i, j, ExtReal(gen.integer(-5, 5)));
            }
        // lambda from the entry-difference set: it can actually tie rows.
        const int i = static_cast<int>(gen.integer(0, n - 1));
        const int j1 = static_cast<int>(gen.integer(0, m - 1));
        const int j2 = static_cast<int>(gen.integer(0, m - 1));
        const Rat lam = A.at(i, j1).value() - B.at(i, j2).value();

        const auto alt = alternating_solve(separate(A, B, lam));
        const auto orc = pattern_oracle(A, B, lam);
        CHECK(alt.solvable == orc.solvable);
        if (alt.solvable) {
            ++solvable_count;
            CHECK(verify_witness(A, B, ExtReal(lam), *alt.witness_x));
            CHECK(verify_witness(A, B, ExtReal(lam), *orc.witness_x));
            CHECK(lambda_bounds(A, B).contains(lam));
        }
    }
    CHECK(solvable_count > 50);
}

TEST_CASE("solvable witnesses always sit inside lambda_bounds") {
    testgen::Gen gen(424242);
    int solvable_count = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = static_cast<int>(gen.integer(1, 2));
        const int m = static_cast<int>(gen.integer(1, 3));
        TropMatrix A(n, m);
        TropMatrix B(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                A.set(i, j, ExtReal(gen.rational(-5, 5, 2)));
                B.set(i, j, ExtReal(gen.rational(-5, 5, 2)));
            }
        const Rat lam = A.at(0, 0).value() - B.at(0, static_cast<int>(gen.integer(0, m - 1))).value();
        const auto orc = pattern_oracle(A, B, lam);
        if (!orc.solvable) continue;
        ++solvable_count;
        CHECK(verify_witness(A, B, ExtReal(lam), *orc.witness_x));
        CHECK(lambda_bounds(A, B).contains(lam));
    }
    CHECK(solvable_count > 20);
}

TEST_CASE("separated round trip: witness z equals both stacked halves") {
    testgen::Gen gen(90);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(gen.integer(1, 3));
        const int m = static_cast<int>(gen.integer(1, 3));
        TropMatrix A(n, m);
        TropMatrix B(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                A.set(i, j, ExtReal(gen.integer(-4, 4)));
                B.set(i, j, ExtReal(gen.integer(-4, 4)));
            }
        const Rat lam = make_rat(gen.integer(-2, 2));
        const auto out = alternating_solve(separate(A, B, lam));
        if (!out.solvable) continue;
        REQUIRE(out.witness_z.has_value());
        const TropVector& z = *out.witness_z;
        REQUIRE(z.size() == 2 * n);
        const TropVector ax = mat_vec(A, *out.witness_x);
        const TropVector bx = mat_vec(scalar_mul(ExtReal(lam), B), *out.witness_x);
        for (int i = 0; i < n; ++i) {
            CHECK(z[i] == ax[i]);
            CHECK(z[n + i] == bx[i]);
            CHECK(z[i] == z[n + i]);
        }
    }
}
