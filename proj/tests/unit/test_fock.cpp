#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "helpers.hpp"
#include "mm/fock_checks.hpp"
#include "mm/spectrum.hpp"

using namespace mm;

namespace {

bool all_pass(const std::vector<RelationReport>& reports)
{
    for (const auto& r : reports) {
        if (!r.pass) return false;
    }
    return true;
}

bool all_pass_named(const std::vector<RelationReport>& reports, const std::string& name)
{
    bool seen = false;
    for (const auto& r : reports) {
        if (r.relation != name) continue;
        seen = true;
        if (!r.pass) return false;
    }
    return seen;
}

bool any_fail_named(const std::vector<RelationReport>& reports, const std::string& name)
{
    for (const auto& r : reports) {
        if (r.relation == name && !r.pass) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("basis enumeration round-trips")
{
    for (std::size_t r : {1, 2, 3}) {
        const BasisPtr b = make_basis(r, 6);
        for (std::size_t k = 0; k < b->size(); ++k) CHECK(b->index(b->state(k)) == k);
        for (const auto& n : indices_up_to(r, 6)) CHECK(b->state(b->index(n)) == n);
        CHECK_FALSE(b->find(MultiIndex::unit(r, 0).raised(0).raised(0).raised(0).raised(0).raised(0).raised(0)));
    }
    const BasisPtr b2 = make_basis(2, 2);
    CHECK(b2->state(3) == MultiIndex{2, 0});
    CHECK(b2->state(4) == MultiIndex{1, 1});
    CHECK_THROWS_AS((b2->index(MultiIndex{3, 0})), std::out_of_range);
}

TEST_CASE("op_matrix examples")
{
    const Params p1 = mmtest::set_r1();
    const FockMatrix a = op_matrix("a_1", p1, 2);
    CHECK(a.nonzeros() == 2);
    CHECK(a.at(0, 1) == Rational(1));
    CHECK(a.at(1, 2) == Rational(2));

    const Params p2 = mmtest::set_r2();
    const FockMatrix h0 = op_matrix("H0", p2, 4);
    for (std::size_t k = 0; k < h0.dim(); ++k) {
        CHECK(h0.at(k, k) == Rational(h0.basis().degree(k)));
        CHECK(h0.column(k).size() == (k == 0 ? 0u : 1u));
    }

    for (std::size_t i = 0; i < 2; ++i) {
        const FockMatrix h = op_matrix("H_" + std::to_string(i + 1), p2, 3);
        const auto& col = h.column(0);
        CHECK(col.size() == 3);
        CHECK(h.at(0, 0) == p2.gamma(i) * p2.beta());
        for (std::size_t j = 0; j < 2; ++j) {
            const Rational om = Rational(1) - p2.c(j);
            CHECK(h.at(h.basis().index(MultiIndex::unit(2, j)), 0) == p2.beta() * p2.c(j) / (om * om));
        }
    }

    CHECK_THROWS_AS(op_matrix("Q_1", p2, 3), std::invalid_argument);
    CHECK_THROWS_AS(op_matrix("a_3", p2, 3), std::invalid_argument);
    CHECK_THROWS_AS(op_matrix("J+", p2, 3), std::invalid_argument);
    CHECK_THROWS_AS(op_matrix("J0_meta", p2, 3), std::invalid_argument);
    CHECK_THROWS_AS(op_matrix("H_1", p2, 0), std::invalid_argument);
    for (const auto& name : operator_names(1)) CHECK_NOTHROW(op_matrix(name, p1, 3));
    for (const auto& name : operator_names(2)) CHECK_NOTHROW(op_matrix(name, p2, 3));
}

TEST_CASE("eigvec examples")
{
    const Params p2 = mmtest::set_r2();
    const FockVector v = eigvec(p2, Rational(5, 3), 3);
    CHECK(v.at(MultiIndex{0, 0}) == Rational(1));
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(v.at(MultiIndex::unit(2, i)) == Rational(5, 3) - p2.c(i) * p2.beta() / (Rational(1) - p2.c(i)));
    CHECK(eigvec(mmtest::set_r1(), Rational(0), 3).at(MultiIndex{2}) == Rational(1));
    CHECK_FALSE(eigvec(p2, Rational(1), 4) == eigvec(p2, Rational(2), 4));
}

TEST_CASE("eigen-relation on the interior")
{
    CHECK(check_eigen(mmtest::set_r1(), Rational(0), 8, 0).pass);
    CHECK(check_eigen(mmtest::set_r1(), Rational(0), 8, 0, HamiltonianKind::bar).pass);
    const Params p2 = mmtest::set_r2();
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(check_eigen(p2, Rational(7, 2), 8, i).pass);
        CHECK(check_eigen(p2, Rational(7, 2), 8, i, HamiltonianKind::bar).pass);
        CHECK(check_eigen(p2, Rational(1), 6, i).pass);
        CHECK(check_eigen(p2, Rational(2), 6, i).pass);
    }
    CHECK_THROWS_AS(check_eigen(p2, Rational(0), 1, 0), std::invalid_argument);
    // Eigenvectors at N + 1 distinct points pin down the recurrence up to |n| <= N - 2.
    for (int k = 0; k <= 5; ++k) CHECK(check_eigen(p2, Rational(k, 3), 4, 0).pass);
    // A corrupted family is no longer an eigenvector.
    const auto bad = check_eigen(p2.with_recurrence_fault(Rational(1, 2)), Rational(2), 6, 0);
    CHECK_FALSE(bad.pass);
    CHECK(bad.instance.contains("column"));
}

TEST_CASE("Hamiltonian commutator")
{
    const Params p2 = mmtest::set_r2();
    CHECK_THROWS_AS(check_commutator(p2, 8, 0, 0), std::invalid_argument);
    // The stated closed form disagrees already on the vacuum column.
    const auto literal = check_commutator(p2, 8, 0, 1);
    CHECK_FALSE(literal.pass);
    CHECK(literal.instance["column"] == json::array({0, 0}));
    CHECK(check_commutator_factored(p2, 8, 0, 1).pass);
    CHECK(check_commutator_factored(p2, 8, 1, 0).pass);
    const Params p3 = mmtest::set_r3();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            CHECK(check_commutator_factored(p3, 6, i, j).pass);
            CHECK_FALSE(check_commutator(p3, 6, i, j).pass);
        }
    }
}

TEST_CASE("weak commutativity on eigenvectors")
{
    const Params p2 = mmtest::set_r2();
    for (const auto& x : {Rational(0), Rational(2), Rational(7, 2)}) {
        CHECK(check_weak_commute(p2, x, 8, 0, 1).pass);
        CHECK(check_weak_commute(p2, x, 8, 0, 1, true).pass);
    }
    const Params p3 = mmtest::set_r3();
    CHECK(check_weak_commute(p3, Rational(3, 2), 6, 0, 2).pass);
}

TEST_CASE("ladder and intertwiner relations")
{
    const Params p1(Rational(2), {Rational(1, 2)});
    CHECK(all_pass(check_shift_relations(p1, 8, {Rational(0), Rational(1), Rational(3)})));

    const Params p2 = mmtest::set_r2();
    const auto reports = check_shift_relations(p2, 8, {Rational(0), Rational(2), Rational(7, 2)});
    for (const char* name : {"ladder-Y", "intertwine-Yhat", "ladder-X-on-eigvec", "intertwine-Xhat-on-eigvec",
                             "action-X", "action-Xhat", "action-Y", "action-Yhat"})
        CHECK_MESSAGE(all_pass_named(reports, name), name);
    // The operator identities hold for i = j only.
    for (const auto& r : reports) {
        if (r.relation != "ladder-X" && r.relation != "intertwine-Xhat") continue;
        CHECK(r.pass == (r.instance["i"] == r.instance["j"]));
    }

    const Params low(Rational(1, 2), {Rational(1, 3), Rational(1, 2)});
    CHECK_FALSE(has_lower_sibling(low));
    for (const auto& r : check_shift_relations(low, 4, {Rational(1)})) CHECK(r.relation.find('Y') == std::string::npos);

    const BasisPtr b = make_basis(2, 3);
    const FockVector v = eigvec(p2, Rational(2), 3);
    const FockVector w = ops::y_intertwiner(p2).to_matrix(b) * v;
    CHECK(w.at(MultiIndex{0, 0}) == Rational(1));
}

TEST_CASE("conjugation by the lowering exponential")
{
    for (const auto& p : {mmtest::set_r1(), mmtest::set_r2()}) {
        for (std::size_t i = 0; i < p.r(); ++i) {
            const auto reports = check_conjugation(p, 8, i);
            CHECK(all_pass_named(reports, "bracket-H0-R"));
            CHECK(all_pass_named(reports, "bracket-summand-H0"));
            CHECK(all_pass_named(reports, "conjugation"));
            CHECK(any_fail_named(reports, "bracket-R-H0-literal"));
            CHECK(any_fail_named(reports, "conjugation-literal"));
        }
    }
    CHECK(all_pass_named(check_conjugation(mmtest::set_r2(), 8, 0), "bracket-summands-commute"));

    // [a_k^+(beta + H0), H0] applied to the vacuum is -beta z_k.
    const Params p2 = mmtest::set_r2();
    const BasisPtr b = make_basis(2, 4);
    const FockMatrix h0 = ops::h0(p2).to_matrix(b);
    for (std::size_t k = 0; k < 2; ++k) {
        const FockMatrix bracket = commutator(ops::raising_summand(p2, k).to_matrix(b), h0);
        CHECK(bracket.column(0).size() == 1);
        CHECK(bracket.at(b->index(MultiIndex::unit(2, k)), 0) == -p2.beta());
    }

    const FockMatrix l = ops::l_factor(p2, 0).to_matrix(b);
    const FockMatrix prod = nilpotent_exp(l, Rational(1)) * nilpotent_exp(l, Rational(-1));
    CHECK(prod == FockMatrix::identity(b));
}

TEST_CASE("SU(1,1) realizations")
{
    CHECK(all_pass(su11_checks(mmtest::set_r1(), 8)));
    CHECK(all_pass(su11_checks(Params(Rational(3), {Rational(1, 3)}), 8)));
    for (const auto& r : su11_checks(mmtest::set_r1(), 8)) {
        if (r.relation == "su11-casimir" && r.instance["realization"] == "oscillator")
            CHECK(r.instance["casimir"] == "-1/4");
        if (r.relation == "su11-casimir" && r.instance["realization"] == "metaplectic")
            CHECK(r.instance["casimir"] == "-3/16");
    }
    for (const auto& r : su11_checks(Params(Rational(3), {Rational(1, 3)}), 6)) {
        if (r.relation == "su11-casimir" && r.instance["realization"] == "oscillator")
            CHECK(r.instance["casimir"] == "3/4");
    }
    CHECK_THROWS_AS(su11_checks(mmtest::set_r2(), 8), std::invalid_argument);
    CHECK_THROWS_AS(su11_checks(mmtest::set_r1(), 3), std::invalid_argument);
}

TEST_CASE("canonical commutation relations and margin tightness")
{
    for (const auto& p : {mmtest::set_r1(), mmtest::set_r2(), mmtest::set_r3()}) {
        CHECK(all_pass(check_ccr(p, 6)));
        CHECK(check_margin_tightness(p, Rational(2), 6).pass);
    }
    // One step past the margin the identities break.
    const Params p2 = mmtest::set_r2();
    const BasisPtr b = make_basis(2, 6);
    const FockMatrix a = ops::a(p2, 0).to_matrix(b);
    const FockMatrix c = ops::adag(p2, 0).to_matrix(b);
    CHECK_FALSE(first_interior_mismatch(commutator(a, c), FockMatrix::identity(b), 2));
    CHECK(first_interior_mismatch(commutator(a, c), FockMatrix::identity(b), 0));
    const FockVector v = eigvec(p2, Rational(2), 6);
    const FockVector hv = ops::hamiltonian(p2, 0).to_matrix(b) * v;
    CHECK_FALSE(first_interior_mismatch(hv, v * Rational(2), 1));
    CHECK(first_interior_mismatch(hv, v * Rational(2), 0));
}

TEST_CASE("monomial basis matches the normalized number basis")
{
    const Params p2 = mmtest::set_r2();
    const BasisPtr b = make_basis(2, 6);
    for (std::size_t i = 0; i < 2; ++i) {
        const Eigen::MatrixXd a = to_number_basis(ops::a(p2, i).to_matrix(b));
        const Eigen::MatrixXd ad = to_number_basis(ops::adag(p2, i).to_matrix(b));
        Eigen::MatrixXd a_ref = Eigen::MatrixXd::Zero(a.rows(), a.cols());
        Eigen::MatrixXd ad_ref = Eigen::MatrixXd::Zero(a.rows(), a.cols());
        for (std::size_t k = 0; k < b->size(); ++k) {
            const MultiIndex& n = b->state(k);
            const auto col = static_cast<Eigen::Index>(k);
            if (n[i] > 0) a_ref(static_cast<Eigen::Index>(b->index(n.lowered(i))), col) = std::sqrt(double(n[i]));
            if (auto up = b->find(n.raised(i))) ad_ref(static_cast<Eigen::Index>(*up), col) = std::sqrt(double(n[i] + 1));
        }
        CHECK((a - a_ref).norm() <= 1e-12 * a_ref.norm());
        CHECK((ad - ad_ref).norm() <= 1e-12 * ad_ref.norm());
    }
}

TEST_CASE("spectrum diagnostic")
{
    const Params p2 = mmtest::set_r2();
    const Eigen::MatrixXd h0 = to_dense(ops::h0(p2).to_matrix(make_basis(2, 3)));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(h0, false);
    std::vector<double> ev;
    for (const auto& z : solver.eigenvalues()) ev.push_back(z.real());
    std::sort(ev.begin(), ev.end());
    CHECK(ev == std::vector<double>{0, 1, 1, 2, 2, 2, 3, 3, 3, 3});

    const auto s = spectrum_diag(Params(Rational(1), {Rational(1, 4)}), 0, 14);
    REQUIRE(s.size() == 15);
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(s[k] - std::complex<double>(k, 0)) < 1e-3);
    }

    // r = 1: the truncated Hamiltonian is a Jacobi-type matrix whose
    // eigenvalues are the zeros of the next polynomial.
    const Params p1 = mmtest::set_r1();
    const auto s1 = spectrum_diag(p1, 0, 6);
    const PolyX m7 = mm_poly(p1, MultiIndex{7});
    for (const auto& z : s1) {
        std::complex<double> value = 0;
        double scale = 0;
        for (std::size_t k = m7.coeffs().size(); k-- > 0;) {
            value = value * z + m7.coeffs()[k].to_double();
            scale = scale * std::abs(z) + std::abs(m7.coeffs()[k].to_double());
        }
        CHECK(std::abs(value) <= 1e-9 * scale);
    }
    CHECK_NOTHROW(spectrum_diag(p2, 1, 10, HamiltonianKind::bar));
    CHECK_THROWS_AS(spectrum_diag(p2, 0, 1), std::invalid_argument);
}
