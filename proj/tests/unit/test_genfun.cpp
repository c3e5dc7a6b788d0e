#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "mm/genfun.hpp"
#include "mm/meixner.hpp"

using namespace mm;
using mmtest::X;

namespace {

PolyX c(long p, long q = 1) { return PolyX::constant(Rational(p, q)); }

}  // namespace

TEST_CASE("series_mul examples")
{
    const SeriesZ one = SeriesZ::one(2, 2);
    const SeriesZ z1 = SeriesZ::linear({Rational(1), Rational(0)}, 2);
    const SeriesZ u = SeriesZ::linear({Rational(1), Rational(1)}, 2);
    CHECK(series_mul(one, u) == u);

    SeriesZ a = one;
    a += z1;
    SeriesZ b = one;
    b += z1 * c(-1);
    const SeriesZ ab = series_mul(a, b);
    CHECK(ab.coeff(MultiIndex{0, 0}) == c(1));
    CHECK(ab.coeff(MultiIndex{1, 0}).is_zero());
    CHECK(ab.coeff(MultiIndex{2, 0}) == c(-1));

    SeriesZ s = one;
    s += u;
    const SeriesZ sq = series_mul(s, s);
    CHECK(sq.coeff(MultiIndex{0, 0}) == c(1));
    CHECK(sq.coeff(MultiIndex{1, 0}) == c(2));
    CHECK(sq.coeff(MultiIndex{0, 1}) == c(2));
    CHECK(sq.coeff(MultiIndex{2, 0}) == c(1));
    CHECK(sq.coeff(MultiIndex{1, 1}) == c(2));
    CHECK(sq.coeff(MultiIndex{0, 2}) == c(1));

    CHECK_THROWS_AS(series_mul(SeriesZ::one(2, 2), SeriesZ::one(2, 3)), std::invalid_argument);
    SeriesZ t(2, 1);
    CHECK_THROWS_AS((t.set(MultiIndex{1, 1}, c(1))), std::invalid_argument);
}

TEST_CASE("genfun_coeffs examples")
{
    for (const auto& p : {mmtest::set_r1(), mmtest::set_r2(), mmtest::set_r3()}) {
        const auto g = genfun_coeffs(p, 2);
        CHECK(g.at(MultiIndex(p.r())) == c(1));
        for (std::size_t i = 0; i < p.r(); ++i) {
            CHECK(g.at(MultiIndex::unit(p.r(), i)) ==
                  X() - PolyX::constant(p.c(i) * p.beta() / (Rational(1) - p.c(i))));
        }
        for (const auto& [n, poly] : g) {
            CHECK(poly.is_monic());
            CHECK(poly.degree() == n.total());
        }
    }
    CHECK(genfun_coeffs(mmtest::set_r1(), 2).at(MultiIndex{2}) == PolyX{Rational(2), Rational(-5), Rational(1)});
}

TEST_CASE("oracle agrees with the recurrence")
{
    CHECK(oracle_compare(mmtest::set_r1(), 6).pass());
    CHECK(oracle_compare(mmtest::set_r2(), 6).pass());
    CHECK(oracle_compare(mmtest::set_r3(), 4).pass());
    const auto broken = oracle_compare(mmtest::set_r2().with_recurrence_fault(Rational(1, 3)), 4);
    CHECK_FALSE(broken.pass());
    REQUIRE(broken.first_failure.has_value());
    CHECK(broken.first_failure->instance.contains("n"));
}

TEST_CASE("restriction to one coordinate gives the classical family")
{
    const Params p2 = mmtest::set_r2();
    const auto g = genfun_coeffs(p2, 5);
    const Params p1(p2.beta(), {p2.c(0)});
    for (int k = 0; k <= 5; ++k) CHECK(g.at(MultiIndex{k, 0}) == mm_poly(p1, MultiIndex{k}));
}

TEST_CASE("relabeling permutes coefficients")
{
    const Params p = mmtest::set_r3();
    const std::vector<std::size_t> perm{2, 0, 1};
    const auto g = genfun_coeffs(p, 3);
    const auto h = genfun_coeffs(p.permuted(perm), 3);
    for (const auto& [n, poly] : g) {
        std::vector<int> moved(3);
        for (std::size_t k = 0; k < 3; ++k) moved[k] = n[perm[k]];
        CHECK(h.at(MultiIndex(moved)) == poly);
    }
}
