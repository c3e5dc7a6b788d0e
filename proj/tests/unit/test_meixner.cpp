#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "mm/meixner.hpp"
#include "mm/relations.hpp"

using namespace mm;
using mmtest::X;

namespace {

PolyX closed_form(const Params& p, std::size_t i)
{
    return X() - PolyX::constant(p.c(i) * p.beta() / (Rational(1) - p.c(i)));
}

const std::vector<Rational> kBetaSamples{Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)};

}  // namespace

TEST_CASE("params validation")
{
    CHECK_THROWS_AS((Params(Rational(0), {Rational(1, 2)})), std::invalid_argument);
    CHECK_THROWS_AS((Params(Rational(1), {Rational(1)})), std::invalid_argument);
    CHECK_THROWS_AS((Params(Rational(1), {Rational(0)})), std::invalid_argument);
    CHECK_THROWS_AS((Params(Rational(1), {Rational(1, 2), Rational(1, 2)})), std::invalid_argument);
    CHECK_THROWS_AS((Params(Rational(1), {})), std::invalid_argument);
    CHECK_NOTHROW((Params(Rational(1, 10), {Rational(1, 2), Rational(1, 3)})));
}

TEST_CASE("multi-index enumeration is graded and round-trips")
{
    const auto idx = indices_up_to(2, 2);
    REQUIRE(idx.size() == 6);
    CHECK(idx[0] == MultiIndex{0, 0});
    CHECK(idx[1] == MultiIndex{1, 0});
    CHECK(idx[2] == MultiIndex{0, 1});
    CHECK(idx[3] == MultiIndex{2, 0});
    CHECK(idx[4] == MultiIndex{1, 1});
    CHECK(idx[5] == MultiIndex{0, 2});
    CHECK(indices_up_to(3, 4).size() == 35);
    CHECK_THROWS_AS((MultiIndex{0, 1}.lowered(0)), std::invalid_argument);
}

TEST_CASE("mm_poly examples")
{
    for (const auto& p : {mmtest::set_r1(), mmtest::set_r2(), mmtest::set_r3()}) {
        CHECK(mm_poly(p, MultiIndex(p.r())) == PolyX::constant(Rational(1)));
        for (std::size_t i = 0; i < p.r(); ++i) CHECK(mm_poly(p, MultiIndex::unit(p.r(), i)) == closed_form(p, i));
    }
    CHECK(mm_poly(mmtest::set_r1(), MultiIndex{2}) == PolyX{Rational(2), Rational(-5), Rational(1)});
}

TEST_CASE("mm_eval examples")
{
    CHECK(mm_eval(mmtest::set_r2(), MultiIndex{0, 0}, Rational(17, 3)) == Rational(1));
    CHECK(mm_eval(mmtest::set_r1(), MultiIndex{1}, Rational(1)) == Rational(0));
    CHECK(mm_eval(mmtest::set_r1(), MultiIndex{2}, Rational(0)) == Rational(2));
    MeixnerTable t(mmtest::set_r2());
    CHECK_THROWS_AS((t.poly(MultiIndex{1})), std::invalid_argument);
}

TEST_CASE("monic of degree |n| and path independent")
{
    const std::vector<PathRule> rules{PathRule::canonical, PathRule::reverse, PathRule::balanced,
                                      PathRule::scrambled};
    for (const auto& p : {mmtest::set_r2(), mmtest::set_r3()}) {
        MeixnerTable t(p);
        for (const auto& n : indices_up_to(p.r(), 5)) {
            CHECK(t.poly(n).is_monic());
            CHECK(t.poly(n).degree() == n.total());
            CHECK(check_path_independence(p, n, rules).pass);
        }
    }
}

TEST_CASE("relabeling symmetry")
{
    for (const auto& p : {mmtest::set_r2(), mmtest::set_r3()}) {
        for (const auto& perm : all_orderings(p.r())) {
            for (const auto& n : indices_up_to(p.r(), 4)) CHECK(check_relabel_symmetry(p, n, perm).pass);
        }
    }
}

TEST_CASE("pairwise relation")
{
    TableFamily f(mmtest::set_r2());
    CHECK_THROWS_AS((check_pairwise(f, MultiIndex{0, 0}, 0, 0)), std::invalid_argument);
    const auto r0 = check_pairwise(f, MultiIndex{0, 0}, 0, 1);
    CHECK(r0.pass);
    // beta (c2 - c1)/((1-c1)(1-c2)) with beta = 3/2, c = (1/3, 1/2)
    CHECK(r0.rhs == json(PolyX::constant(Rational(3, 4))));
    for (const auto& n : indices_up_to(2, 5)) {
        CHECK(check_pairwise(f, n, 0, 1).pass);
        CHECK(check_pairwise(f, n, 1, 0).pass);
    }
    TableFamily f3(mmtest::set_r3());
    for (const auto& n : indices_up_to(3, 5)) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i != j) CHECK(check_pairwise(f3, n, i, j).pass);
            }
        }
    }
}

TEST_CASE("non-nearest recurrence: only the sum over every k is consistent")
{
    TableFamily f1(mmtest::set_r1());
    CHECK(check_non_nearest(f1, MultiIndex{0}, 0, NonNearestVariant::k_not_equal_i).pass);
    for (int k = 1; k <= 5; ++k) {
        CHECK(check_non_nearest(f1, MultiIndex{k}, 0, NonNearestVariant::k_equals_i).pass);
        CHECK(check_non_nearest(f1, MultiIndex{k}, 0, NonNearestVariant::all_k).pass);
        // With r = 1 the k != i sum is empty; the dropped term is nonzero.
        CHECK_FALSE(check_non_nearest(f1, MultiIndex{k}, 0, NonNearestVariant::k_not_equal_i).pass);
    }
    TableFamily f2(mmtest::set_r2());
    CHECK_FALSE(check_non_nearest(f2, MultiIndex{1, 1}, 0, NonNearestVariant::k_not_equal_i).pass);
    CHECK_FALSE(check_non_nearest(f2, MultiIndex{1, 1}, 0, NonNearestVariant::k_equals_i).pass);
    CHECK(check_non_nearest(f2, MultiIndex{1, 1}, 0, NonNearestVariant::all_k).pass);
    for (const auto& p : {mmtest::set_r2(), mmtest::set_r3()}) {
        TableFamily f(p);
        for (const auto& n : indices_up_to(p.r(), 4)) {
            for (std::size_t i = 0; i < p.r(); ++i) CHECK(check_non_nearest(f, n, i, NonNearestVariant::all_k).pass);
        }
    }
}

TEST_CASE("step and contiguity relations")
{
    TableFamily f(mmtest::set_r2());
    const auto b1 = check_relation(StepRelation::backward1, f, MultiIndex{0, 0}, 0);
    CHECK(b1.pass);
    CHECK(b1.lhs == json(X()));
    CHECK(check_relation(StepRelation::forward1, f, MultiIndex{0, 0}, std::nullopt).pass);
    CHECK_THROWS_AS((check_relation(StepRelation::backward1, f, MultiIndex{0, 0}, std::nullopt)), std::invalid_argument);
    CHECK_THROWS_AS((check_relation(StepRelation::forward1, f, MultiIndex{0, 0}, 0)), std::invalid_argument);
    for (auto kind : {StepRelation::backward1, StepRelation::forward1, StepRelation::backward2, StepRelation::step2,
                      StepRelation::raising, StepRelation::lowering}) {
        CHECK(step_relation_from_string(to_string(kind)) == kind);
        for (const auto& n : indices_up_to(2, 4)) {
            if (needs_index(kind)) {
                for (std::size_t i = 0; i < 2; ++i) CHECK(check_relation(kind, f, n, i).pass);
            } else {
                CHECK(check_relation(kind, f, n, std::nullopt).pass);
            }
        }
    }
    // r = 1 reduction at a beta where beta - 1 is still admissible.
    TableFamily f1(Params(Rational(5, 2), {Rational(1, 3)}));
    for (int k = 0; k <= 5; ++k) {
        for (auto kind : {StepRelation::backward1, StepRelation::forward1, StepRelation::backward2, StepRelation::step2,
                          StepRelation::raising, StepRelation::lowering}) {
            CHECK(check_relation(kind, f1, MultiIndex{k}, needs_index(kind) ? std::optional<std::size_t>(0)
                                                                              : std::nullopt)
                      .pass);
        }
    }
    TableFamily at_one(mmtest::set_r1());
    CHECK_THROWS_AS((check_relation(StepRelation::forward1, at_one, MultiIndex{1}, std::nullopt)), std::invalid_argument);
}

TEST_CASE("difference equation in x")
{
    TableFamily f1(mmtest::set_r1());
    for (int k = 0; k <= 4; ++k) CHECK(check_diffeq_x(f1, MultiIndex{k}, {0}).pass);
    TableFamily f2(mmtest::set_r2());
    CHECK(check_diffeq_x(f2, MultiIndex{0, 0}, {0, 1}).pass);
    CHECK(check_diffeq_x(f2, MultiIndex{0, 0}, {1, 0}).pass);
    // The factors do not commute; a mixed index fails in every ordering.
    CHECK_FALSE(check_diffeq_x(f2, MultiIndex{2, 1}, {0, 1}).pass);
    CHECK_FALSE(check_diffeq_x(f2, MultiIndex{2, 1}, {1, 0}).pass);
    CHECK_FALSE(check_diffeq_x(f2, MultiIndex{1, 1}, {0, 1}).pass);
    CHECK_FALSE(check_diffeq_x(f2, MultiIndex{1, 1}, {1, 0}).pass);
    // A pure index k e_i holds when the i-th factor is applied first.
    for (int k = 1; k <= 3; ++k) {
        CHECK(check_diffeq_x(f2, MultiIndex{k, 0}, {1, 0}).pass);
        CHECK_FALSE(check_diffeq_x(f2, MultiIndex{k, 0}, {0, 1}).pass);
        CHECK(check_diffeq_x(f2, MultiIndex{0, k}, {0, 1}).pass);
        CHECK_FALSE(check_diffeq_x(f2, MultiIndex{0, k}, {1, 0}).pass);
    }
}

TEST_CASE("difference equation in beta")
{
    const Params p1 = mmtest::set_r1();
    for (int k = 0; k <= 4; ++k) CHECK(check_diffeq_beta(p1, MultiIndex{k}, kBetaSamples, {0}).pass);
    CHECK_THROWS_AS((check_diffeq_beta(p1, MultiIndex{1}, {Rational(1), Rational(1)}, {0})), std::invalid_argument);
    CHECK_THROWS_AS((check_diffeq_beta(p1, MultiIndex{1}, {Rational(0)}, {0})), std::invalid_argument);
    const Params p2 = mmtest::set_r2();
    CHECK(check_diffeq_beta(p2, MultiIndex{0, 0}, kBetaSamples, {0, 1}).pass);
    CHECK_FALSE(check_diffeq_beta(p2, MultiIndex{1, 1}, kBetaSamples, {0, 1}).pass);
    CHECK_FALSE(check_diffeq_beta(p2, MultiIndex{1, 1}, kBetaSamples, {1, 0}).pass);
    CHECK(check_diffeq_beta(p2, MultiIndex{2, 0}, kBetaSamples, {1, 0}).pass);
    CHECK(check_diffeq_beta(p2, MultiIndex{0, 2}, kBetaSamples, {0, 1}).pass);
}

TEST_CASE("fault hook corrupts the construction")
{
    const Params p = mmtest::set_r1().with_recurrence_fault(Rational(1, 7));
    CHECK(mm_poly(p, MultiIndex{1}) == mm_poly(mmtest::set_r1(), MultiIndex{1}));
    CHECK(mm_poly(p, MultiIndex{2}) != mm_poly(mmtest::set_r1(), MultiIndex{2}));
    CHECK(p.with_beta(Rational(2)).recurrence_fault() == Rational(1, 7));
}
