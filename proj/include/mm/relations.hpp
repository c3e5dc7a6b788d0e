#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mm/meixner.hpp"
#include "mm/report.hpp"

namespace mm {

/// M_{e_i} = x - c_i beta/(1-c_i).
RelationReport check_closed_form(TableFamily& family, std::size_t i);

/// The same M_n from tables built along different construction paths.
RelationReport check_path_independence(const Params& params, const MultiIndex& n,
                                       const std::vector<PathRule>& rules);

/// M_{sigma(n)} with relabeled c equals M_n (perm[k] is the old coordinate placed at k).
RelationReport check_relabel_symmetry(const Params& params, const MultiIndex& n, const std::vector<std::size_t>& perm);

/// M_{n+e_i} - M_{n+e_j} = (beta+|n|)(c_j-c_i)/((1-c_i)(1-c_j)) M_n. Requires i != j.
RelationReport check_pairwise(TableFamily& family, const MultiIndex& n, std::size_t i, std::size_t j);

/// Reading of the third sum in the non-nearest-neighbour recurrence.
enum class NonNearestVariant {
    k_equals_i,     ///< only the k = i term
    k_not_equal_i,  ///< all k != i
    all_k,          ///< k = 1..r
};
std::string_view to_string(NonNearestVariant v);

RelationReport check_non_nearest(TableFamily& family, const MultiIndex& n, std::size_t i, NonNearestVariant variant);

/// Step and contiguity relations between the tables at beta and beta +- 1.
enum class StepRelation { backward1, forward1, backward2, step2, raising, lowering };
std::string_view to_string(StepRelation kind);
std::optional<StepRelation> step_relation_from_string(std::string_view name);
bool needs_index(StepRelation kind);
/// Offsets of beta the relation reads (e.g. {0, +1}).
std::vector<int> beta_shifts(StepRelation kind);

/// Throws std::invalid_argument if an index is required but missing (or vice versa),
/// or if a needed sibling beta is not > 0.
RelationReport check_relation(StepRelation kind, TableFamily& family, const MultiIndex& n,
                              std::optional<std::size_t> i);

/// Difference equation in x. `ordering` lists the product factors left to
/// right (zero-based coordinates); the leftmost factor is applied last.
RelationReport check_diffeq_x(TableFamily& family, const MultiIndex& n, const std::vector<std::size_t>& ordering);

/// Difference equation in beta, checked at each sampled beta with x symbolic.
RelationReport check_diffeq_beta(const Params& params, const MultiIndex& n, const std::vector<Rational>& beta_samples,
                                 const std::vector<std::size_t>& ordering);

/// All permutations of 0..r-1 in lexicographic order.
std::vector<std::vector<std::size_t>> all_orderings(std::size_t r);

}  // namespace mm
