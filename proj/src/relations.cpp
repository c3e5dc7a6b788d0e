#include "mm/relations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mm {

namespace {

const PolyX kX = PolyX::variable();

PolyX cst(const Rational& q) { return PolyX::constant(q); }

RelationReport make_report(std::string relation, json instance, const PolyX& lhs, const PolyX& rhs)
{
    RelationReport r;
    r.relation = std::move(relation);
    r.instance = std::move(instance);
    r.pass = lhs == rhs;
    r.lhs = lhs;
    r.rhs = rhs;
    return r;
}

json ordering_json(const std::vector<std::size_t>& ordering)
{
    json o = json::array();
    for (std::size_t k : ordering) o.push_back(one_based(k));
    return o;
}

void require_ordering(const std::vector<std::size_t>& ordering, std::size_t r)
{
    std::vector<std::size_t> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> ident(r);
    std::iota(ident.begin(), ident.end(), 0);
    if (sorted != ident) throw std::invalid_argument("ordering must be a permutation of 1..r");
}

}  // namespace

RelationReport check_closed_form(TableFamily& family, std::size_t i)
{
    const Params& p = family.params();
    const MultiIndex e = MultiIndex::unit(p.r(), i);
    const PolyX expected = kX - cst(p.gamma(i) * p.beta());
    return make_report("closed-form", {{"n", e}, {"i", one_based(i)}}, family.base().poly(e), expected);
}

RelationReport check_path_independence(const Params& params, const MultiIndex& n, const std::vector<PathRule>& rules)
{
    if (rules.size() < 2) throw std::invalid_argument("path independence needs at least two rules");
    MeixnerTable first(params, rules.front());
    const PolyX reference = first.poly(n);
    json names = json::array({std::string(to_string(rules.front()))});
    for (std::size_t k = 1; k < rules.size(); ++k) {
        MeixnerTable other(params, rules[k]);
        names.push_back(std::string(to_string(rules[k])));
        const PolyX candidate = other.poly(n);
        if (candidate != reference) {
            return make_report("recurrence-path", {{"n", n}, {"paths", names}}, reference, candidate);
        }
    }
    return make_report("recurrence-path", {{"n", n}, {"paths", names}}, reference, reference);
}

RelationReport check_relabel_symmetry(const Params& params, const MultiIndex& n, const std::vector<std::size_t>& perm)
{
    require_ordering(perm, params.r());
    std::vector<int> moved(params.r());
    for (std::size_t k = 0; k < perm.size(); ++k) moved[k] = n[perm[k]];
    const PolyX lhs = mm_poly(params.permuted(perm), MultiIndex(moved));
    return make_report("relabel-symmetry", {{"n", n}, {"perm", ordering_json(perm)}}, lhs, mm_poly(params, n));
}

RelationReport check_pairwise(TableFamily& family, const MultiIndex& n, std::size_t i, std::size_t j)
{
    if (i == j) throw std::invalid_argument("pairwise relation requires i != j");
    const Params& p = family.params();
    MeixnerTable& t = family.base();
    const Rational coeff = (p.beta() + Rational(n.total())) * (p.c(j) - p.c(i)) /
                           ((Rational(1) - p.c(i)) * (Rational(1) - p.c(j)));
    const PolyX lhs = t.poly(n.raised(i)) - t.poly(n.raised(j));
    const PolyX rhs = t.poly(n) * coeff;
    return make_report("pairwise", {{"n", n}, {"i", one_based(i)}, {"j", one_based(j)}}, lhs, rhs);
}

std::string_view to_string(NonNearestVariant v)
{
    switch (v) {
    case NonNearestVariant::k_equals_i: return "k-equals-i";
    case NonNearestVariant::k_not_equal_i: return "k-not-equal-i";
    case NonNearestVariant::all_k: return "all-k";
    }
    return "unknown";
}

RelationReport check_non_nearest(TableFamily& family, const MultiIndex& n, std::size_t i, NonNearestVariant variant)
{
    const Params& p = family.params();
    MeixnerTable& t = family.base();
    const Rational total(n.total());
    const Rational inv_i = p.inv_one_minus(i);

    PolyX rhs = t.poly(n.raised(i)) + t.poly(n) * (p.gamma(i) * p.beta() + total * inv_i);
    for (std::size_t k = 0; k < p.r(); ++k) {
        const bool included = variant == NonNearestVariant::all_k ||
                              (variant == NonNearestVariant::k_equals_i && k == i) ||
                              (variant == NonNearestVariant::k_not_equal_i && k != i);
        if (!included || n[k] == 0) continue;
        rhs += t.poly(n.raised(i).lowered(k)) * (p.gamma(k) * Rational(n[k]));
    }
    for (std::size_t k = 0; k < p.r(); ++k) {
        if (n[k] == 0) continue;
        const Rational coeff = p.c(k) * inv_i * p.inv_one_minus(k) * Rational(n[k]) * (p.beta() + total - Rational(1));
        rhs += t.poly(n.lowered(k)) * coeff;
    }
    const PolyX lhs = kX * t.poly(n);
    auto report = make_report("non-nearest", {{"n", n}, {"i", one_based(i)}, {"variant", std::string(to_string(variant))}},
                              lhs, rhs);
    return report;
}

std::string_view to_string(StepRelation kind)
{
    switch (kind) {
    case StepRelation::backward1: return "backward1";
    case StepRelation::forward1: return "forward1";
    case StepRelation::backward2: return "backward2";
    case StepRelation::step2: return "step2";
    case StepRelation::raising: return "raising";
    case StepRelation::lowering: return "lowering";
    }
    return "unknown";
}

std::optional<StepRelation> step_relation_from_string(std::string_view name)
{
    for (auto k : {StepRelation::backward1, StepRelation::forward1, StepRelation::backward2, StepRelation::step2,
                   StepRelation::raising, StepRelation::lowering}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

bool needs_index(StepRelation kind)
{
    return kind == StepRelation::backward1 || kind == StepRelation::backward2 || kind == StepRelation::raising;
}

std::vector<int> beta_shifts(StepRelation kind)
{
    switch (kind) {
    case StepRelation::forward1:
    case StepRelation::step2: return {-1, 0};
    default: return {0, 1};
    }
}

RelationReport check_relation(StepRelation kind, TableFamily& family, const MultiIndex& n,
                              std::optional<std::size_t> i)
{
    if (needs_index(kind) != i.has_value())
        throw std::invalid_argument(std::string(to_string(kind)) +
                                    (needs_index(kind) ? " requires an index i" : " takes no index i"));
    const Params& p = family.params();
    if (i && *i >= p.r()) throw std::invalid_argument("index i out of range");
    const Rational& beta = p.beta();
    const Rational total(n.total());
    MeixnerTable& cur = family.base();

    PolyX lhs;
    PolyX rhs;
    switch (kind) {
    case StepRelation::backward1: {
        MeixnerTable& up = family.shifted(1);
        lhs = kX * poly_shift(up.poly(n), Rational(-1));
        rhs = cur.poly(n.raised(*i)) + cur.poly(n) * (p.gamma(*i) * (beta + total));
        break;
    }
    case StepRelation::forward1: {
        MeixnerTable& down = family.shifted(-1);
        lhs = poly_shift(down.poly(n), Rational(1));
        rhs = cur.poly(n);
        for (std::size_t k = 0; k < p.r(); ++k)
            if (n[k] > 0) rhs += cur.poly(n.lowered(k)) * (Rational(n[k]) * p.inv_one_minus(k));
        break;
    }
    case StepRelation::backward2: {
        MeixnerTable& up = family.shifted(1);
        lhs = (kX + cst(beta)) * up.poly(n);
        rhs = cur.poly(n.raised(*i)) + cur.poly(n) * ((beta + total) * p.inv_one_minus(*i));
        break;
    }
    case StepRelation::step2: {
        MeixnerTable& down = family.shifted(-1);
        lhs = down.poly(n);
        rhs = cur.poly(n);
        for (std::size_t k = 0; k < p.r(); ++k)
            if (n[k] > 0) rhs += cur.poly(n.lowered(k)) * (p.gamma(k) * Rational(n[k]));
        break;
    }
    case StepRelation::raising: {
        MeixnerTable& up = family.shifted(1);
        const PolyX& m_up = up.poly(n);
        lhs = kX * poly_shift(m_up, Rational(-1)) - (kX + cst(beta)) * m_up * p.c(*i);
        rhs = cur.poly(n.raised(*i)) * (Rational(1) - p.c(*i));
        break;
    }
    case StepRelation::lowering: {
        MeixnerTable& up = family.shifted(1);
        lhs = poly_shift(cur.poly(n), Rational(1)) - cur.poly(n);
        for (std::size_t k = 0; k < p.r(); ++k)
            if (n[k] > 0) rhs += up.poly(n.lowered(k)) * Rational(n[k]);
        break;
    }
    }
    json instance = {{"n", n}, {"beta", beta}};
    if (i) instance["i"] = one_based(*i);
    return make_report(std::string(to_string(kind)), std::move(instance), lhs, rhs);
}

RelationReport check_diffeq_x(TableFamily& family, const MultiIndex& n, const std::vector<std::size_t>& ordering)
{
    const Params& p = family.params();
    require_ordering(ordering, p.r());
    const PolyX x_plus_beta = kX + cst(p.beta());
    // c_j (x+beta) f(x) - x f(x-1)
    auto factor = [&](std::size_t j, const PolyX& f) {
        return x_plus_beta * f * p.c(j) - kX * poly_shift(f, Rational(-1));
    };
    auto apply_product = [&](const std::vector<std::size_t>& order, PolyX f) {
        for (auto it = order.rbegin(); it != order.rend(); ++it) f = factor(*it, f);
        return f;
    };

    const PolyX& m = family.base().poly(n);
    const PolyX lhs = apply_product(ordering, poly_shift(m, Rational(1)) - m);
    PolyX rhs;
    for (std::size_t k = 0; k < p.r(); ++k) {
        if (n[k] == 0) continue;
        std::vector<std::size_t> rest;
        std::copy_if(ordering.begin(), ordering.end(), std::back_inserter(rest), [k](std::size_t j) { return j != k; });
        rhs += apply_product(rest, m) * ((p.c(k) - Rational(1)) * Rational(n[k]));
    }
    return make_report("diffeq-x", {{"n", n}, {"beta", p.beta()}, {"ordering", ordering_json(ordering)}}, lhs, rhs);
}

RelationReport check_diffeq_beta(const Params& params, const MultiIndex& n, const std::vector<Rational>& beta_samples,
                                 const std::vector<std::size_t>& ordering)
{
    require_ordering(ordering, params.r());
    if (beta_samples.empty()) throw std::invalid_argument("diffeq-beta needs at least one beta sample");
    if (std::set<Rational>(beta_samples.begin(), beta_samples.end()).size() != beta_samples.size())
        throw std::invalid_argument("beta samples must be pairwise distinct");

    TableFamily family(params);
    const Rational total(n.total());
    using BetaFn = std::function<PolyX(const Rational&)>;

    // [(c_j - 1)(x + beta + 1) T_beta + (beta + |n|)] applied to e
    auto factor = [&](std::size_t j, BetaFn e) -> BetaFn {
        const Rational cj = params.c(j);
        return [cj, total, e = std::move(e)](const Rational& b) {
            return (kX + cst(b + Rational(1))) * e(b + Rational(1)) * (cj - Rational(1)) + e(b) * (b + total);
        };
    };
    auto apply_product = [&](const std::vector<std::size_t>& order, BetaFn e) {
        for (auto it = order.rbegin(); it != order.rend(); ++it) e = factor(*it, std::move(e));
        return e;
    };

    BetaFn m = [&](const Rational& b) { return family.at_beta(b).poly(n); };
    BetaFn m_up = [&](const Rational& b) { return family.at_beta(b + Rational(1)).poly(n); };
    BetaFn diff = [&](const Rational& b) { return m(b + Rational(1)) - m(b); };

    const BetaFn lhs_fn = apply_product(ordering, diff);
    std::vector<std::pair<std::size_t, BetaFn>> rhs_terms;
    for (std::size_t k = 0; k < params.r(); ++k) {
        if (n[k] == 0) continue;
        std::vector<std::size_t> rest;
        std::copy_if(ordering.begin(), ordering.end(), std::back_inserter(rest), [k](std::size_t j) { return j != k; });
        rhs_terms.emplace_back(k, apply_product(rest, m_up));
    }

    json samples = json::array();
    for (const auto& b : beta_samples) samples.push_back(b.str());
    json instance = {{"n", n}, {"beta_samples", samples}, {"ordering", ordering_json(ordering)}};

    RelationReport last;
    for (const auto& b : beta_samples) {
        if (b.sign() <= 0) throw std::invalid_argument("beta samples must be > 0");
        const PolyX lhs = lhs_fn(b);
        PolyX rhs;
        for (const auto& [k, fn] : rhs_terms) rhs += fn(b) * (params.c(k) * Rational(n[k]));
        json inst = instance;
        inst["beta"] = b;
        last = make_report("diffeq-beta", std::move(inst), lhs, rhs);
        if (!last.pass) return last;
    }
    last.instance.erase("beta");
    return last;
}

std::vector<std::vector<std::size_t>> all_orderings(std::size_t r)
{
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace mm
