#include "mm/fock_checks.hpp"

#include <stdexcept>

namespace mm {

namespace {

json base_instance(const Params& p, int max_degree)
{
    return {{"beta", p.beta()}, {"N", max_degree}};
}

void require_distinct(std::size_t i, std::size_t j)
{
    if (i == j) throw std::invalid_argument("commutator checks require i != j");
}

void require_degree(int max_degree, int minimum)
{
    if (max_degree < minimum)
        throw std::invalid_argument("degree bound N must be >= " + std::to_string(minimum));
}

void require_index(const Params& p, std::size_t i)
{
    if (i >= p.r()) throw std::invalid_argument("mode index out of range");
}

}  // namespace

RelationReport matrix_identity_report(std::string relation, json instance, const FockMatrix& lhs,
                                      const FockMatrix& rhs, int margin)
{
    RelationReport r;
    r.relation = std::move(relation);
    r.instance = std::move(instance);
    r.instance["margin"] = margin;
    if (auto bad = first_interior_mismatch(lhs, rhs, margin)) {
        r.pass = false;
        r.instance["column"] = lhs.basis().state(bad->column);
        r.instance["row"] = lhs.basis().state(bad->row);
        r.lhs = bad->lhs;
        r.rhs = bad->rhs;
    } else {
        r.pass = true;
        r.lhs = "interior equal";
        r.rhs = "interior equal";
    }
    return r;
}

RelationReport vector_identity_report(std::string relation, json instance, const FockVector& lhs,
                                      const FockVector& rhs, int margin)
{
    RelationReport r;
    r.relation = std::move(relation);
    r.instance = std::move(instance);
    r.instance["margin"] = margin;
    if (auto bad = first_interior_mismatch(lhs, rhs, margin)) {
        r.pass = false;
        r.instance["column"] = lhs.basis().state(bad->component);
        r.lhs = bad->lhs;
        r.rhs = bad->rhs;
    } else {
        r.pass = true;
        r.lhs = "interior equal";
        r.rhs = "interior equal";
    }
    return r;
}

RelationReport check_eigen(const Params& params, const Rational& x, int max_degree, std::size_t i, HamiltonianKind kind)
{
    require_degree(max_degree, 2);
    require_index(params, i);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    MeixnerTable table(params);
    const FockVector v = eigvec(table, x, basis);
    const WeylOp h = kind == HamiltonianKind::plain ? ops::hamiltonian(params, i) : ops::hamiltonian_bar(params, i);
    const FockVector hv = h.to_matrix(basis) * v;
    json instance = base_instance(params, max_degree);
    instance["i"] = one_based(i);
    instance["x"] = x;
    instance["hamiltonian"] = kind == HamiltonianKind::plain ? "H" : "Hbar";
    return vector_identity_report("fock-eigen", std::move(instance), hv, v * x, 1);
}

RelationReport check_commutator(const Params& params, int max_degree, std::size_t i, std::size_t j)
{
    require_distinct(i, j);
    require_degree(max_degree, 3);
    require_index(params, i);
    require_index(params, j);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    const FockMatrix hi = ops::hamiltonian(params, i).to_matrix(basis);
    const FockMatrix hj = ops::hamiltonian(params, j).to_matrix(basis);
    const Rational mix = (params.c(i) - params.c(j)) * params.inv_one_minus(i) * params.inv_one_minus(j);
    const WeylOp claimed = ops::a(params, i) - ops::a(params, j) + ops::shifted_h0(params) * mix;
    json instance = base_instance(params, max_degree);
    instance["i"] = one_based(i);
    instance["j"] = one_based(j);
    return matrix_identity_report("fock-commutator", std::move(instance), commutator(hi, hj), claimed.to_matrix(basis),
                                  2);
}

RelationReport check_commutator_factored(const Params& params, int max_degree, std::size_t i, std::size_t j)
{
    require_distinct(i, j);
    require_degree(max_degree, 3);
    require_index(params, i);
    require_index(params, j);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    const WeylOp hi = ops::hamiltonian(params, i);
    const WeylOp hj = ops::hamiltonian(params, j);
    const WeylOp prefactor =
        WeylOp::scalar(params.r(), Rational(1) + params.gamma(i) + params.gamma(j)) + ops::p_factor(params);
    json instance = base_instance(params, max_degree);
    instance["i"] = one_based(i);
    instance["j"] = one_based(j);
    return matrix_identity_report("fock-commutator-factored", std::move(instance),
                                  commutator(hi.to_matrix(basis), hj.to_matrix(basis)),
                                  (prefactor * (hi - hj)).to_matrix(basis), 2);
}

RelationReport check_weak_commute(const Params& params, const Rational& x, int max_degree, std::size_t i,
                                  std::size_t j, bool use_claimed_rhs)
{
    require_distinct(i, j);
    require_degree(max_degree, 3);
    require_index(params, i);
    require_index(params, j);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    MeixnerTable table(params);
    const FockVector v = eigvec(table, x, basis);
    FockMatrix op(basis);
    if (use_claimed_rhs) {
        const Rational mix = (params.c(i) - params.c(j)) * params.inv_one_minus(i) * params.inv_one_minus(j);
        op = (ops::a(params, i) - ops::a(params, j) + ops::shifted_h0(params) * mix).to_matrix(basis);
    } else {
        op = commutator(ops::hamiltonian(params, i).to_matrix(basis), ops::hamiltonian(params, j).to_matrix(basis));
    }
    json instance = base_instance(params, max_degree);
    instance["i"] = one_based(i);
    instance["j"] = one_based(j);
    instance["x"] = x;
    instance["operator"] = use_claimed_rhs ? "claimed-rhs" : "commutator";
    return vector_identity_report("fock-weak", std::move(instance), op * v, FockVector(basis), 2);
}

bool has_lower_sibling(const Params& params) { return params.beta() > Rational(1); }

std::vector<RelationReport> check_shift_relations(const Params& params, int max_degree,
                                                  const std::vector<Rational>& xs)
{
    require_degree(max_degree, 3);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    const bool down = has_lower_sibling(params);
    const Params up_params = params.with_beta(params.beta() + Rational(1));
    std::vector<RelationReport> out;

    std::vector<FockMatrix> h_cur;
    std::vector<FockMatrix> h_up;
    std::vector<FockMatrix> h_down;
    for (std::size_t i = 0; i < params.r(); ++i) {
        h_cur.push_back(ops::hamiltonian(params, i).to_matrix(basis));
        h_up.push_back(ops::hamiltonian(up_params, i).to_matrix(basis));
        if (down) h_down.push_back(ops::hamiltonian(params.with_beta(params.beta() - Rational(1)), i).to_matrix(basis));
    }
    const FockMatrix y = ops::y_ladder(params).to_matrix(basis);
    const FockMatrix yhat = ops::y_intertwiner(params).to_matrix(basis);

    MeixnerTable cur_table(params);
    MeixnerTable up_table(up_params);
    std::vector<FockVector> cur_vecs;
    for (const auto& x : xs) cur_vecs.push_back(eigvec(cur_table, x, basis));

    auto pair_instance = [&](std::size_t i, std::size_t j) {
        json inst = base_instance(params, max_degree);
        inst["i"] = one_based(i);
        inst["j"] = one_based(j);
        return inst;
    };

    for (std::size_t i = 0; i < params.r(); ++i) {
        for (std::size_t j = 0; j < params.r(); ++j) {
            const FockMatrix xj = ops::x_ladder(params, j).to_matrix(basis);
            const FockMatrix xhat = ops::x_intertwiner(params, j).to_matrix(basis);
            const FockMatrix ladder_x = h_up[i] * xj - xj * h_cur[i];
            const FockMatrix inter_x = h_up[i] * xhat - xhat * h_cur[i];
            out.push_back(matrix_identity_report("ladder-X", pair_instance(i, j), ladder_x, xj * Rational(-1), 2));
            out.push_back(matrix_identity_report("intertwine-Xhat", pair_instance(i, j), inter_x, FockMatrix(basis), 2));
            // The same identities applied to the eigenvectors only.
            for (std::size_t k = 0; k < xs.size(); ++k) {
                json inst = pair_instance(i, j);
                inst["x"] = xs[k];
                out.push_back(vector_identity_report("ladder-X-on-eigvec", inst, (ladder_x + xj) * cur_vecs[k],
                                                     FockVector(basis), 2));
                out.push_back(vector_identity_report("intertwine-Xhat-on-eigvec", std::move(inst),
                                                     inter_x * cur_vecs[k], FockVector(basis), 2));
            }
            if (down) {
                out.push_back(matrix_identity_report("ladder-Y", pair_instance(i, j), h_down[i] * y - y * h_cur[i], y, 2));
                out.push_back(matrix_identity_report("intertwine-Yhat", pair_instance(i, j), h_down[i] * yhat,
                                                     yhat * h_cur[i], 2));
            }
        }
    }

    std::optional<MeixnerTable> down_table;
    if (down) down_table.emplace(params.with_beta(params.beta() - Rational(1)));
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Rational& x = xs[k];
        const FockVector& v = cur_vecs[k];
        for (std::size_t i = 0; i < params.r(); ++i) {
            json inst = base_instance(params, max_degree);
            inst["i"] = one_based(i);
            inst["x"] = x;
            const FockMatrix xi = ops::x_ladder(params, i).to_matrix(basis);
            const FockMatrix xhat = ops::x_intertwiner(params, i).to_matrix(basis);
            out.push_back(vector_identity_report("action-X", inst, xi * v,
                                                 eigvec(up_table, x - Rational(1), basis) * x, 1));
            out.push_back(vector_identity_report("action-Xhat", std::move(inst), xhat * v,
                                                 eigvec(up_table, x, basis) * (x + params.beta()), 1));
        }
        if (down) {
            json inst = base_instance(params, max_degree);
            inst["x"] = x;
            out.push_back(vector_identity_report("action-Y", inst, y * v, eigvec(*down_table, x + Rational(1), basis), 1));
            out.push_back(vector_identity_report("action-Yhat", std::move(inst), yhat * v, eigvec(*down_table, x, basis), 1));
        }
    }
    return out;
}

FockMatrix nilpotent_exp(const FockMatrix& lowering, const Rational& t)
{
    const BasisPtr& basis = lowering.basis_ptr();
    FockMatrix result = FockMatrix::identity(basis);
    FockMatrix term = FockMatrix::identity(basis);
    const FockMatrix step = lowering * t;
    for (int k = 1; k <= basis->max_degree(); ++k) {
        term = step * term * (Rational(1) / Rational(k));
        if (term.nonzeros() == 0) break;
        result += term;
    }
    return result;
}

std::vector<RelationReport> check_conjugation(const Params& params, int max_degree, std::size_t i)
{
    require_degree(max_degree, 4);
    require_index(params, i);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    const FockMatrix h0 = ops::h0(params).to_matrix(basis);
    const FockMatrix r_i = ops::r_factor(params, i).to_matrix(basis);
    const FockMatrix l_i = ops::l_factor(params, i).to_matrix(basis);
    const FockMatrix hbar = ops::hamiltonian_bar(params, i).to_matrix(basis);
    const FockMatrix e_plus = nilpotent_exp(l_i, Rational(1));
    const FockMatrix e_minus = nilpotent_exp(l_i, Rational(-1));

    json inst = base_instance(params, max_degree);
    inst["i"] = one_based(i);

    std::vector<RelationReport> out;
    auto literal = [](RelationReport r) {
        r.note = "stated form; the exact bracket is [H0, R_i] = R_i";
        return r;
    };
    out.push_back(literal(matrix_identity_report("bracket-R-H0-literal", inst, commutator(r_i, h0), r_i, 2)));
    out.push_back(matrix_identity_report("bracket-H0-R", inst, commutator(h0, r_i), r_i, 2));
    for (std::size_t k = 0; k < params.r(); ++k) {
        const FockMatrix rk = ops::raising_summand(params, k).to_matrix(basis);
        out.push_back(matrix_identity_report("bracket-summand-H0", [&] {
            json j = inst;
            j["k"] = one_based(k);
            return j;
        }(), commutator(h0, rk), rk, 2));
        for (std::size_t l = k + 1; l < params.r(); ++l) {
            const FockMatrix rl = ops::raising_summand(params, l).to_matrix(basis);
            json j = inst;
            j["k"] = one_based(k);
            j["l"] = one_based(l);
            out.push_back(matrix_identity_report("bracket-summands-commute", std::move(j), commutator(rk, rl),
                                                 FockMatrix(basis), 2));
        }
    }
    out.push_back(literal(
        matrix_identity_report("conjugation-literal", inst, e_plus * (h0 - r_i) * e_minus, hbar, 2)));
    out.push_back(matrix_identity_report("conjugation", inst, e_plus * (h0 + r_i) * e_minus, hbar, 2));
    return out;
}

std::vector<RelationReport> su11_checks(const Params& params, int max_degree)
{
    if (params.r() != 1) throw std::invalid_argument("SU(1,1) checks require r = 1");
    require_degree(max_degree, 4);
    const BasisPtr basis = make_basis(1, max_degree);
    const FockMatrix id = FockMatrix::identity(basis);
    std::vector<RelationReport> out;

    auto algebra = [&](const std::string& tag, const FockMatrix& j0, const FockMatrix& jp, const FockMatrix& jm,
                       const Rational& casimir) {
        json inst = base_instance(params, max_degree);
        inst["realization"] = tag;
        out.push_back(matrix_identity_report("su11-[J0,J+]=J+", inst, commutator(j0, jp), jp, 2));
        out.push_back(matrix_identity_report("su11-[J0,J-]=-J-", inst, commutator(j0, jm), jm * Rational(-1), 2));
        out.push_back(matrix_identity_report("su11-[J+,J-]=-2J0", inst, commutator(jp, jm), j0 * Rational(-2), 2));
        const FockMatrix c = j0 * j0 - (jp * jm + jm * jp) * Rational(1, 2);
        inst["casimir"] = casimir;
        out.push_back(matrix_identity_report("su11-casimir", std::move(inst), c, id * casimir, 2));
    };

    const Rational half_beta = params.beta() / Rational(2);
    algebra("oscillator", ops::su11_zero(params).to_matrix(basis), ops::su11_plus(params).to_matrix(basis),
            ops::su11_minus(params).to_matrix(basis), half_beta * (half_beta - Rational(1)));
    algebra("metaplectic", ops::meta_zero().to_matrix(basis), ops::meta_plus().to_matrix(basis),
            ops::meta_minus().to_matrix(basis), Rational(-3, 16));

    const Rational c = params.c(0);
    const Rational om = Rational(1) - c;
    const WeylOp h = ops::hamiltonian(params, 0);
    const WeylOp in_j_basis = ops::su11_minus(params) + ops::su11_zero(params) * ((Rational(1) + c) / om) +
                              ops::su11_plus(params) * (c / (om * om));
    json inst = base_instance(params, max_degree);
    out.push_back(matrix_identity_report("su11-H=Hbar", inst, h.to_matrix(basis),
                                         ops::hamiltonian_bar(params, 0).to_matrix(basis), 1));
    out.push_back(matrix_identity_report("su11-H+beta/2", std::move(inst),
                                         (h + WeylOp::scalar(1, half_beta)).to_matrix(basis),
                                         in_j_basis.to_matrix(basis), 1));
    return out;
}

std::vector<RelationReport> check_ccr(const Params& params, int max_degree)
{
    require_degree(max_degree, 2);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    const FockMatrix zero(basis);
    const FockMatrix id = FockMatrix::identity(basis);
    std::vector<RelationReport> out;
    for (std::size_t i = 0; i < params.r(); ++i) {
        const FockMatrix ai = ops::a(params, i).to_matrix(basis);
        const FockMatrix ci = ops::adag(params, i).to_matrix(basis);
        for (std::size_t j = 0; j < params.r(); ++j) {
            const FockMatrix aj = ops::a(params, j).to_matrix(basis);
            const FockMatrix cj = ops::adag(params, j).to_matrix(basis);
            json inst = {{"N", max_degree}, {"i", one_based(i)}, {"j", one_based(j)}};
            out.push_back(matrix_identity_report("ccr-[a,a+]", inst, commutator(ai, cj), i == j ? id : zero, 2));
            out.push_back(matrix_identity_report("ccr-[a,a]", inst, commutator(ai, aj), zero, 2));
            out.push_back(matrix_identity_report("ccr-[a+,a+]", std::move(inst), commutator(ci, cj), zero, 2));
        }
    }
    return out;
}

RelationReport check_margin_tightness(const Params& params, const Rational& x, int max_degree)
{
    require_degree(max_degree, 3);
    const BasisPtr basis = make_basis(params.r(), max_degree);
    MeixnerTable table(params);
    const FockVector v = eigvec(table, x, basis);
    const FockVector hv = ops::hamiltonian(params, 0).to_matrix(basis) * v;
    const auto eigen_violation = first_boundary_mismatch(hv, v * x, 1);

    const FockMatrix a = ops::a(params, 0).to_matrix(basis);
    const FockMatrix c = ops::adag(params, 0).to_matrix(basis);
    const auto ccr_violation = first_boundary_mismatch(commutator(a, c), FockMatrix::identity(basis), 2);

    RelationReport r;
    r.relation = "margin-tightness";
    r.instance = base_instance(params, max_degree);
    r.instance["x"] = x;
    r.pass = eigen_violation.has_value() && ccr_violation.has_value();
    if (eigen_violation) {
        r.lhs = {{"eigen-boundary-component", basis->state(eigen_violation->component)},
                 {"value", eigen_violation->lhs},
                 {"expected", eigen_violation->rhs}};
    }
    if (ccr_violation) {
        r.rhs = {{"ccr-boundary-column", basis->state(ccr_violation->column)},
                 {"value", ccr_violation->lhs},
                 {"expected", ccr_violation->rhs}};
    }
    return r;
}

}  // namespace mm
