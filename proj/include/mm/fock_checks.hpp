#pragma once

#include <vector>

#include "mm/operators.hpp"
#include "mm/report.hpp"

namespace mm {

// Interior-margin contract: an identity involving products of p factors that
// each raise the degree by at most one is compared on columns (or vector
// components) with |n| <= N - p. Reports name the first violating column/row.

RelationReport matrix_identity_report(std::string relation, json instance, const FockMatrix& lhs,
                                      const FockMatrix& rhs, int margin);
RelationReport vector_identity_report(std::string relation, json instance, const FockVector& lhs,
                                      const FockVector& rhs, int margin);

enum class HamiltonianKind { plain, bar };

/// (H_i - x) v or (Hbar_i - x) v vanishes on components |n| <= N-1. Requires N >= 2.
RelationReport check_eigen(const Params& params, const Rational& x, int max_degree, std::size_t i,
                           HamiltonianKind kind = HamiltonianKind::plain);

/// Literal commutator claim [H_i, H_j] = a_i - a_j + (c_i-c_j)/((1-c_i)(1-c_j)) (beta + H0), margin 2.
RelationReport check_commutator(const Params& params, int max_degree, std::size_t i, std::size_t j);
/// Exact commutator [H_i, H_j] = (1 + g_i + g_j + P)(H_i - H_j), g = c/(1-c),
/// P = sum_k c_k/(1-c_k)^2 a_k^+, margin 2.
RelationReport check_commutator_factored(const Params& params, int max_degree, std::size_t i, std::size_t j);
/// [H_i, H_j] v = 0 on components |n| <= N-2. `use_claimed_rhs` applies the
/// literal commutator right-hand side instead of the matrix commutator.
RelationReport check_weak_commute(const Params& params, const Rational& x, int max_degree, std::size_t i,
                                  std::size_t j, bool use_claimed_rhs = false);

/// True when beta - 1 > 0, i.e. the Y / Yhat identities have a valid target family.
bool has_lower_sibling(const Params& params);

/// Ladder (X_j, Y) and intertwiner (Xhat_j, Yhat) operator identities for all
/// i, j (margin 2), their eigenvector forms, and the four vector actions at each
/// x (margin 1). The Y/Yhat parts are omitted when beta <= 1.
std::vector<RelationReport> check_shift_relations(const Params& params, int max_degree,
                                                  const std::vector<Rational>& xs);

/// exp(t L) for a lowering operator: exact finite sum on the truncated space.
FockMatrix nilpotent_exp(const FockMatrix& lowering, const Rational& t);

/// Bracket premises and the conjugation H̄_i = exp(L_i)(H0 ± R_i)exp(-L_i),
/// both in the literal form and with the sign fixed. Requires N >= 4.
std::vector<RelationReport> check_conjugation(const Params& params, int max_degree, std::size_t i);

/// r = 1 checks: oscillator and metaplectic SU(1,1) realizations, Casimir
/// values, H = Hbar, and H + beta/2 in the J basis. Requires r = 1, N >= 4.
std::vector<RelationReport> su11_checks(const Params& params, int max_degree);

/// [a_i, a_j^+] = delta_ij, [a_i, a_j] = [a_i^+, a_j^+] = 0 on columns |n| <= N-2.
std::vector<RelationReport> check_ccr(const Params& params, int max_degree);

/// pass <=> the boundary just outside the margin genuinely violates the
/// identity, for both the eigen-relation (margin 1) and the canonical
/// commutator (margin 2).
RelationReport check_margin_tightness(const Params& params, const Rational& x, int max_degree);

}  // namespace mm
