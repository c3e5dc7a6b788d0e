#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mm/params.hpp"
#include "mm/polynomial.hpp"
#include "mm/rational.hpp"

namespace mm {

using json = nlohmann::json;

// Wire formats: rationals as "p/q" strings, polynomials as arrays of
// coefficient strings (lowest power first), multi-indices as integer arrays.
void to_json(json& j, const Rational& q);
void to_json(json& j, const Polynomial& p);
void to_json(json& j, const MultiIndex& n);
json params_json(const Params& p);

Rational rational_from_json(const json& j);
PolyX poly_from_json(const json& j);

/// Outcome of one identity at one instance. pass <=> lhs == rhs exactly.
struct RelationReport {
    std::string relation;
    json instance = json::object();  ///< n, i, j (one-based), x, beta, column, ... as applicable
    bool pass = false;
    json lhs;
    json rhs;
    std::string note;
};

void to_json(json& j, const RelationReport& r);

/// Aggregate of many instances of one check; keeps the first violation.
struct CheckSummary {
    std::string check;
    json params;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::optional<RelationReport> first_failure;
    std::vector<std::string> notes;
    /// Recorded for the report only; does not count toward an overall verdict.
    bool informational = false;

    bool pass() const { return failures == 0; }
    void add(RelationReport report);
    void merge(const CheckSummary& other);
};

void to_json(json& j, const CheckSummary& s);

/// One-based index for reports.
inline int one_based(std::size_t i) { return static_cast<int>(i) + 1; }

}  // namespace mm
