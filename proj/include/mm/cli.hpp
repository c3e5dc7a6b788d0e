#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mm/report.hpp"

namespace mm {

/// Test-only knobs that never reach argv.
struct RunHooks {
    /// Added to every diagonal recurrence coefficient with |n| >= 1.
    std::optional<Rational> recurrence_fault;
};

/// Sizes and instance filters shared by the `check` relations.
struct CheckOptions {
    int max_degree = 5;   ///< polynomial checks cover |n| <= max_degree
    int fock_degree = 8;  ///< truncation N of the monomial basis
    int order = 6;        ///< generating-function expansion order
    std::optional<MultiIndex> n;                          ///< restrict polynomial checks to one index
    std::vector<Rational> xs{Rational(0), Rational(2), Rational(7, 2)};
    std::optional<std::vector<std::size_t>> ordering;     ///< zero-based; all orderings when absent
};

/// Relation names accepted by `check`, in the order `check all` runs them.
const std::vector<std::string>& relation_names();

/// r=1 beta=1 c=1/2; r=2 beta=3/2 c=(1/3,1/2); r=3 beta=2 c=(1/5,1/3,1/2).
std::vector<Params> default_param_sets();

/// Runs one relation (or "all") on one parameter set. Throws
/// std::invalid_argument for an unknown relation or unusable options.
std::vector<CheckSummary> run_relation(std::string_view relation, const Params& params, const CheckOptions& opts);

/// Full report over several parameter sets; "pass" ignores informational summaries.
json check_report(std::string_view relation, const std::vector<Params>& sets, const CheckOptions& opts);

/// Command-line entry point. Returns 0 when everything passes, 1 when a check
/// fails, 2 on usage or validation errors (one diagnostic line on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunHooks& hooks = {});

}  // namespace mm
