#include "mm/report.hpp"

#include <stdexcept>

namespace mm {

void to_json(json& j, const Rational& q) { j = q.str(); }

void to_json(json& j, const Polynomial& p)
{
    j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
}

void to_json(json& j, const MultiIndex& n) { j = n.entries(); }

json params_json(const Params& p)
{
    json c = json::array();
    for (const auto& ci : p.c()) c.push_back(ci.str());
    return {{"r", p.r()}, {"beta", p.beta().str()}, {"c", c}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational string \"p/q\"");
}

PolyX poly_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array of coefficient strings");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return PolyX(std::move(c));
}

void to_json(json& j, const RelationReport& r)
{
    j = {{"relation", r.relation}, {"instance", r.instance}, {"pass", r.pass}, {"lhs", r.lhs}, {"rhs", r.rhs}};
    if (!r.note.empty()) j["note"] = r.note;
}

void CheckSummary::add(RelationReport report)
{
    ++instances;
    if (report.pass) return;
    ++failures;
    if (!first_failure) first_failure = std::move(report);
}

void CheckSummary::merge(const CheckSummary& other)
{
    instances += other.instances;
    failures += other.failures;
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void to_json(json& j, const CheckSummary& s)
{
    j = {{"check", s.check},
         {"params", s.params},
         {"instances", s.instances},
         {"failures", s.failures},
         {"pass", s.pass()}};
    if (s.first_failure) j["first_failure"] = *s.first_failure;
    if (!s.notes.empty()) j["notes"] = s.notes;
    if (s.informational) j["informational"] = true;
}

}  // namespace mm
