#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "mm/moments.hpp"

using namespace mm;

TEST_CASE("moment_ratio examples")
{
    CHECK(moment_ratio(Rational(1), Rational(1, 2), 0) == Rational(1));
    CHECK(moment_ratio(Rational(1), Rational(1, 2), 1) == Rational(1));
    CHECK(moment_ratio(Rational(1), Rational(1, 2), 2) == Rational(3));
    MomentVector mv(Rational(1));
    CHECK(mv.ratio(0) == RatFuncC(PolyX::constant(Rational(1))));
}

TEST_CASE("orthogonality examples")
{
    MeixnerTable t1(mmtest::set_r1());
    CHECK(orthogonality_contraction(t1, MultiIndex{1}, 0, 0) == Rational(0));
    CHECK(orthogonality_check(t1, MultiIndex{1}, 0).pass);
    CHECK_THROWS_AS((orthogonality_check(t1, MultiIndex{0}, 0)), std::invalid_argument);

    MeixnerTable t2(mmtest::set_r2());
    CHECK(orthogonality_check(t2, MultiIndex{1, 1}, 0).pass);
    CHECK(orthogonality_check(t2, MultiIndex{1, 1}, 1).pass);
}

TEST_CASE("orthogonality holds exhaustively")
{
    const Params second(Rational(7, 3), {Rational(1, 4), Rational(2, 3)});
    for (const auto& p : {mmtest::set_r2(), second, mmtest::set_r3()}) {
        MeixnerTable t(p);
        const int bound = p.r() == 3 ? 3 : 5;
        for (const auto& n : indices_up_to(p.r(), bound)) {
            for (std::size_t i = 0; i < p.r(); ++i) {
                if (n[i] > 0) CHECK(orthogonality_check(t, n, i).pass);
            }
        }
    }
}

TEST_CASE("orthogonality check is not vacuous")
{
    MeixnerTable t(mmtest::set_r2());
    CHECK_FALSE(orthogonality_contraction(t, MultiIndex{1, 1}, 0, 1).is_zero());
    CHECK_FALSE(orthogonality_contraction(t, MultiIndex{2, 0}, 0, 2).is_zero());
    // A corrupted family is caught.
    MeixnerTable bad(mmtest::set_r2().with_recurrence_fault(Rational(1, 5)));
    CHECK_FALSE(orthogonality_check(bad, MultiIndex{2, 1}, 0).pass);
}

TEST_CASE("truncated sums match the exact reduction")
{
    MeixnerTable t1(mmtest::set_r1());
    const auto s = truncated_sum_check(t1, MultiIndex{1}, 0, 0, 60);
    CHECK(s.value.abs() <= s.tail_bound);
    CHECK(s.tail_bound < Rational(1, 10000000000L));
    CHECK_THROWS_AS((truncated_sum_check(t1, MultiIndex{0}, 0, 0, 60)), std::invalid_argument);
    CHECK_THROWS_AS((truncated_sum_check(t1, MultiIndex{2}, 0, 2, 60)), std::invalid_argument);
    MeixnerTable big(Params(Rational(40), {Rational(1, 2)}));
    CHECK_THROWS_AS((truncated_sum_check(big, MultiIndex{1}, 0, 0, 1)), std::invalid_argument);

    MeixnerTable t2(mmtest::set_r2());
    const auto s2 = truncated_sum_check(t2, MultiIndex{2, 1}, 0, 1, 150);
    CHECK(s2.value.abs() <= s2.tail_bound);

    // moment ratios against the truncated moment sums
    struct Case { Rational beta; Rational c; unsigned j; };
    for (const auto& cs : {Case{Rational(1), Rational(1, 2), 2}, Case{Rational(3, 2), Rational(1, 3), 3},
                           Case{Rational(5, 2), Rational(1, 5), 1}}) {
        const auto mj = weighted_partial_sum(PolyX::monomial(cs.j), cs.beta, cs.c, 120);
        const auto m0 = weighted_partial_sum(PolyX::constant(Rational(1)), cs.beta, cs.c, 120);
        // |mj/m0 - G| <= (|mj| t0 + tj m0) / m0^2 since every term is positive for j >= 0
        const Rational diff = mj.value / m0.value - moment_ratio(cs.beta, cs.c, cs.j);
        const Rational slack = (mj.value.abs() * m0.tail_bound + mj.tail_bound * m0.value) / (m0.value * m0.value);
        CHECK(diff.abs() <= slack);
        CHECK(slack < Rational(1, 1000000000L));
    }
}
