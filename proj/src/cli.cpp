#include "mm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mm/fock_checks.hpp"
#include "mm/genfun.hpp"
#include "mm/moments.hpp"
#include "mm/relations.hpp"
#include "mm/spectrum.hpp"

namespace mm {

namespace {

CheckSummary summary_for(std::string name, const Params& p)
{
    CheckSummary s;
    s.check = std::move(name);
    s.params = params_json(p);
    return s;
}

std::vector<MultiIndex> poly_indices(const Params& p, const CheckOptions& o)
{
    if (o.n) {
        if (o.n->size() != p.r())
            throw std::invalid_argument("--n has " + std::to_string(o.n->size()) + " entries but r = " +
                                        std::to_string(p.r()));
        return {*o.n};
    }
    return indices_up_to(p.r(), o.max_degree);
}

std::vector<std::vector<std::size_t>> orderings_for(const Params& p, const CheckOptions& o)
{
    if (!o.ordering) return all_orderings(p.r());
    std::vector<std::size_t> sorted = *o.ordering;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted.size() != p.r() || sorted[k] != k)
            throw std::invalid_argument("--ordering must be a permutation of 1.." + std::to_string(p.r()));
    }
    return {*o.ordering};
}

std::string ordering_str(const std::vector<std::size_t>& ordering)
{
    std::string s;
    for (std::size_t k : ordering) s += (s.empty() ? "" : ",") + std::to_string(k + 1);
    return s;
}

// Groups a flat list of reports into one summary per relation name, keeping
// first-seen order.
void group_reports(std::vector<CheckSummary>& out, const Params& p, const std::vector<RelationReport>& reports,
                   const std::map<std::string, std::string>& notes = {})
{
    for (const auto& r : reports) {
        auto it = std::find_if(out.begin(), out.end(), [&](const CheckSummary& s) { return s.check == r.relation; });
        if (it == out.end()) {
            out.push_back(summary_for(r.relation, p));
            if (auto n = notes.find(r.relation); n != notes.end()) out.back().notes.push_back(n->second);
            it = out.end() - 1;
        }
        it->add(r);
    }
}

std::vector<CheckSummary> recurrence_path(const Params& p, const CheckOptions& o)
{
    TableFamily family(p);
    MeixnerTable& table = family.base();
    auto closed = summary_for("closed-form", p);
    for (std::size_t i = 0; i < p.r(); ++i) closed.add(check_closed_form(family, i));

    auto monic = summary_for("monic-degree", p);
    auto paths = summary_for("recurrence-path", p);
    auto relabel = summary_for("relabel-symmetry", p);
    const std::vector<PathRule> rules{PathRule::canonical, PathRule::reverse, PathRule::balanced,
                                      PathRule::scrambled};
    const auto perms = all_orderings(p.r());
    for (const auto& n : poly_indices(p, o)) {
        const PolyX& m = table.poly(n);
        RelationReport r;
        r.relation = "monic-degree";
        r.instance = {{"n", n}};
        r.pass = m.is_monic() && m.degree() == n.total();
        r.lhs = {{"degree", m.degree()}, {"leading", m.leading()}};
        r.rhs = {{"degree", n.total()}, {"leading", "1"}};
        monic.add(std::move(r));
        paths.add(check_path_independence(p, n, rules));
        for (std::size_t k = 1; k < perms.size(); ++k) relabel.add(check_relabel_symmetry(p, n, perms[k]));
    }
    if (p.r() == 1) relabel.notes.push_back("r = 1 has no nontrivial relabeling");
    return {closed, monic, paths, relabel};
}

std::vector<CheckSummary> pairwise(const Params& p, const CheckOptions& o)
{
    TableFamily family(p);
    auto s = summary_for("pairwise", p);
    if (p.r() < 2) s.notes.push_back("needs r >= 2");
    for (const auto& n : poly_indices(p, o)) {
        for (std::size_t i = 0; i < p.r(); ++i) {
            for (std::size_t j = 0; j < p.r(); ++j) {
                if (i != j) s.add(check_pairwise(family, n, i, j));
            }
        }
    }
    return {s};
}

std::vector<CheckSummary> non_nearest(const Params& p, const CheckOptions& o)
{
    TableFamily family(p);
    const std::vector<NonNearestVariant> variants{NonNearestVariant::k_equals_i, NonNearestVariant::k_not_equal_i,
                                                  NonNearestVariant::all_k};
    auto main = summary_for("non-nearest", p);
    std::vector<CheckSummary> per_variant;
    for (auto v : variants) {
        per_variant.push_back(summary_for("non-nearest[" + std::string(to_string(v)) + "]", p));
        per_variant.back().informational = true;
    }
    for (const auto& n : poly_indices(p, o)) {
        for (std::size_t i = 0; i < p.r(); ++i) {
            RelationReport first;
            bool any = false;
            for (std::size_t v = 0; v < variants.size(); ++v) {
                RelationReport r = check_non_nearest(family, n, i, variants[v]);
                any = any || r.pass;
                if (v == 0) first = r;
                per_variant[v].add(std::move(r));
            }
            first.pass = any;
            first.instance.erase("variant");
            first.relation = "non-nearest";
            main.add(std::move(first));
        }
    }
    std::string consistent;
    for (const auto& s : per_variant) {
        if (s.pass()) consistent += (consistent.empty() ? "" : ", ") + s.check;
    }
    main.notes.push_back("readings consistent on every instance: " + (consistent.empty() ? "none" : consistent));
    std::vector<CheckSummary> out{main};
    out.insert(out.end(), per_variant.begin(), per_variant.end());
    return out;
}

std::vector<CheckSummary> step_relation(StepRelation kind, const Params& p, const CheckOptions& o)
{
    auto s = summary_for(std::string(to_string(kind)), p);
    for (int shift : beta_shifts(kind)) {
        if (p.beta() + Rational(shift) <= Rational(0)) {
            s.notes.push_back("skipped: needs the family at beta " + std::string(shift < 0 ? "- " : "+ ") +
                              std::to_string(std::abs(shift)) + " > 0");
            return {s};
        }
    }
    TableFamily family(p);
    for (const auto& n : poly_indices(p, o)) {
        if (needs_index(kind)) {
            for (std::size_t i = 0; i < p.r(); ++i) s.add(check_relation(kind, family, n, i));
        } else {
            s.add(check_relation(kind, family, n, std::nullopt));
        }
    }
    return {s};
}

// An instance passes when at least one factor ordering yields the identity;
// per-ordering outcomes are recorded alongside.
std::vector<CheckSummary> diffeq(const std::string& name, const Params& p, const CheckOptions& o,
                                 const std::function<RelationReport(const MultiIndex&,
                                                                    const std::vector<std::size_t>&)>& check)
{
    const auto orderings = orderings_for(p, o);
    auto main = summary_for(name, p);
    std::vector<CheckSummary> per_ordering;
    for (const auto& ord : orderings) {
        per_ordering.push_back(summary_for(name + "[" + ordering_str(ord) + "]", p));
        per_ordering.back().informational = true;
    }
    for (const auto& n : poly_indices(p, o)) {
        RelationReport first;
        std::vector<std::string> passing;
        for (std::size_t k = 0; k < orderings.size(); ++k) {
            RelationReport r = check(n, orderings[k]);
            if (r.pass) passing.push_back(ordering_str(orderings[k]));
            if (k == 0) first = r;
            per_ordering[k].add(std::move(r));
        }
        first.pass = !passing.empty();
        first.relation = name;
        first.instance["orderings_passing"] = passing;
        main.add(std::move(first));
    }
    std::vector<CheckSummary> out{main};
    out.insert(out.end(), per_ordering.begin(), per_ordering.end());
    return out;
}

std::vector<Rational> default_beta_samples(const Rational& beta)
{
    std::vector<Rational> out;
    for (int k = 0; k <= 4; ++k) out.push_back(beta + Rational(k, 2));
    return out;
}

std::vector<CheckSummary> orthogonality(const Params& p, const CheckOptions& o)
{
    MeixnerTable table(p);
    auto s = summary_for("orthogonality", p);
    auto beyond = summary_for("orthogonality-nonvacuous", p);
    std::optional<RelationReport> witness;
    for (const auto& n : poly_indices(p, o)) {
        for (std::size_t i = 0; i < p.r(); ++i) {
            if (n[i] == 0) continue;
            s.add(orthogonality_check(table, n, i));
            if (!witness) {
                const auto j = static_cast<std::size_t>(n[i]);
                const Rational value = orthogonality_contraction(table, n, i, j);
                if (!value.is_zero()) {
                    RelationReport r;
                    r.relation = "orthogonality-nonvacuous";
                    r.instance = {{"n", n}, {"i", one_based(i)}, {"j", n[i]}};
                    r.pass = true;
                    r.lhs = value;
                    r.rhs = "nonzero";
                    witness = r;
                }
            }
        }
    }
    if (witness) {
        beyond.add(*witness);
    } else if (s.instances > 0) {
        RelationReport r;
        r.relation = "orthogonality-nonvacuous";
        r.pass = false;
        r.lhs = "0";
        r.rhs = "nonzero";
        r.note = "every contraction at j = n_i vanished";
        beyond.add(r);
    }
    return {s, beyond};
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t r)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i != j) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<CheckSummary> fock_eigen(const Params& p, const CheckOptions& o)
{
    auto plain = summary_for("fock-eigen", p);
    auto bar = summary_for("fock-eigen-bar", p);
    for (const auto& x : o.xs) {
        for (std::size_t i = 0; i < p.r(); ++i) {
            plain.add(check_eigen(p, x, o.fock_degree, i, HamiltonianKind::plain));
            bar.add(check_eigen(p, x, o.fock_degree, i, HamiltonianKind::bar));
        }
    }
    return {plain, bar};
}

std::vector<CheckSummary> fock_commutator(const Params& p, const CheckOptions& o)
{
    auto literal = summary_for("fock-commutator", p);
    auto factored = summary_for("fock-commutator-factored", p);
    literal.notes.push_back("[H_i,H_j] = a_i - a_j + (c_i-c_j)/((1-c_i)(1-c_j)) (beta + H0)");
    factored.notes.push_back("[H_i,H_j] = (1 + g_i + g_j + P)(H_i - H_j), g = c/(1-c), P = sum_k c_k/(1-c_k)^2 a_k^+");
    if (p.r() < 2) literal.notes.push_back("needs r >= 2");
    for (auto [i, j] : ordered_pairs(p.r())) {
        literal.add(check_commutator(p, o.fock_degree, i, j));
        factored.add(check_commutator_factored(p, o.fock_degree, i, j));
    }
    return {literal, factored};
}

std::vector<CheckSummary> fock_weak(const Params& p, const CheckOptions& o)
{
    auto s = summary_for("fock-weak", p);
    auto rhs = summary_for("fock-weak-claimed-rhs", p);
    if (p.r() < 2) s.notes.push_back("needs r >= 2");
    for (const auto& x : o.xs) {
        for (auto [i, j] : ordered_pairs(p.r())) {
            s.add(check_weak_commute(p, x, o.fock_degree, i, j, false));
            rhs.add(check_weak_commute(p, x, o.fock_degree, i, j, true));
        }
    }
    return {s, rhs};
}

std::vector<CheckSummary> fock_shift(const Params& p, const CheckOptions& o)
{
    std::vector<CheckSummary> out;
    group_reports(out, p, check_shift_relations(p, o.fock_degree, o.xs));
    if (!has_lower_sibling(p)) {
        auto s = summary_for("ladder-Y", p);
        s.notes.push_back("skipped: Y and Yhat need the family at beta - 1 > 0");
        out.push_back(s);
    }
    return out;
}

std::vector<CheckSummary> fock_conjugation(const Params& p, const CheckOptions& o)
{
    std::vector<CheckSummary> out;
    const std::map<std::string, std::string> notes{
        {"bracket-R-H0-literal", "stated form [R_i, H0] = R_i"},
        {"conjugation-literal", "stated form Hbar_i = exp(L_i)(H0 - R_i)exp(-L_i)"},
        {"conjugation", "Hbar_i = exp(L_i)(H0 + R_i)exp(-L_i)"}};
    for (std::size_t i = 0; i < p.r(); ++i) group_reports(out, p, check_conjugation(p, o.fock_degree, i), notes);
    return out;
}

std::vector<CheckSummary> su11(const Params& p, const CheckOptions& o, bool strict)
{
    if (p.r() != 1) {
        if (strict) throw std::invalid_argument("su11 checks require r = 1");
        auto s = summary_for("su11", p);
        s.notes.push_back("skipped: defined for r = 1 only");
        return {s};
    }
    std::vector<CheckSummary> out;
    group_reports(out, p, su11_checks(p, o.fock_degree));
    return out;
}

std::vector<CheckSummary> fock_ccr(const Params& p, const CheckOptions& o)
{
    std::vector<CheckSummary> out;
    group_reports(out, p, check_ccr(p, o.fock_degree));
    return out;
}

std::vector<CheckSummary> fock_margins(const Params& p, const CheckOptions& o)
{
    auto s = summary_for("margin-tightness", p);
    s.add(check_margin_tightness(p, o.xs.empty() ? Rational(0) : o.xs.front(), o.fock_degree));
    return {s};
}

using RelationFn = std::function<std::vector<CheckSummary>(const Params&, const CheckOptions&, bool)>;

const std::vector<std::pair<std::string, RelationFn>>& relation_table()
{
    static const std::vector<std::pair<std::string, RelationFn>> table = [] {
        std::vector<std::pair<std::string, RelationFn>> t;
        auto plain = [](auto fn) {
            return [fn](const Params& p, const CheckOptions& o, bool) { return fn(p, o); };
        };
        t.emplace_back("recurrence-path", plain(recurrence_path));
        t.emplace_back("pairwise", plain(pairwise));
        t.emplace_back("non-nearest", plain(non_nearest));
        for (auto kind : {StepRelation::backward1, StepRelation::forward1, StepRelation::backward2,
                          StepRelation::step2, StepRelation::raising, StepRelation::lowering}) {
            t.emplace_back(std::string(to_string(kind)),
                           [kind](const Params& p, const CheckOptions& o, bool) { return step_relation(kind, p, o); });
        }
        t.emplace_back("diffeq-x", [](const Params& p, const CheckOptions& o, bool) {
            TableFamily family(p);
            return diffeq("diffeq-x", p, o, [&](const MultiIndex& n, const std::vector<std::size_t>& ord) {
                return check_diffeq_x(family, n, ord);
            });
        });
        t.emplace_back("diffeq-beta", [](const Params& p, const CheckOptions& o, bool) {
            const auto samples = default_beta_samples(p.beta());
            auto out = diffeq("diffeq-beta", p, o, [&](const MultiIndex& n, const std::vector<std::size_t>& ord) {
                return check_diffeq_beta(p, n, samples, ord);
            });
            std::string listed;
            for (const auto& b : samples) listed += (listed.empty() ? "" : ", ") + b.str();
            out.front().notes.push_back("beta samples: " + listed);
            return out;
        });
        t.emplace_back("orthogonality", plain(orthogonality));
        t.emplace_back("genfun", [](const Params& p, const CheckOptions& o, bool) {
            return std::vector<CheckSummary>{oracle_compare(p, o.order)};
        });
        t.emplace_back("fock-eigen", plain(fock_eigen));
        t.emplace_back("fock-commutator", plain(fock_commutator));
        t.emplace_back("fock-weak", plain(fock_weak));
        t.emplace_back("fock-shift", plain(fock_shift));
        t.emplace_back("fock-conjugation", plain(fock_conjugation));
        t.emplace_back("su11", [](const Params& p, const CheckOptions& o, bool strict) { return su11(p, o, strict); });
        t.emplace_back("fock-ccr", plain(fock_ccr));
        t.emplace_back("fock-margins", plain(fock_margins));
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<std::string>& relation_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : relation_table()) out.push_back(name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

std::vector<Params> default_param_sets()
{
    return {Params(Rational(1), {Rational(1, 2)}),
            Params(Rational(3, 2), {Rational(1, 3), Rational(1, 2)}),
            Params(Rational(2), {Rational(1, 5), Rational(1, 3), Rational(1, 2)})};
}

std::vector<CheckSummary> run_relation(std::string_view relation, const Params& params, const CheckOptions& opts)
{
    std::vector<CheckSummary> out;
    for (const auto& [name, fn] : relation_table()) {
        if (relation == "all") {
            auto part = fn(params, opts, false);
            out.insert(out.end(), part.begin(), part.end());
        } else if (relation == name) {
            return fn(params, opts, true);
        }
    }
    if (relation != "all") throw std::invalid_argument("unknown relation '" + std::string(relation) + "'");
    return out;
}

json check_report(std::string_view relation, const std::vector<Params>& sets, const CheckOptions& opts)
{
    json report = {{"relation", std::string(relation)}, {"sets", json::array()}};
    bool pass = true;
    json first_failure;
    json failing = json::array();
    for (const auto& p : sets) {
        json checks = json::array();
        for (const auto& s : run_relation(relation, p, opts)) {
            checks.push_back(s);
            if (s.informational || s.pass()) continue;
            pass = false;
            failing.push_back({{"check", s.check}, {"params", s.params}, {"failures", s.failures}});
            if (first_failure.is_null() && s.first_failure) {
                first_failure = *s.first_failure;
                first_failure["check"] = s.check;
                first_failure["params"] = s.params;
            }
        }
        report["sets"].push_back({{"params", params_json(p)}, {"checks", checks}});
    }
    report["pass"] = pass;
    report["failing"] = failing;
    if (!first_failure.is_null()) report["first_failure"] = first_failure;
    return report;
}

namespace {

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.emplace_back();
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const std::string& flag)
{
    std::vector<Rational> out;
    for (const auto& item : split_commas(text)) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(flag + ": malformed rational '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(flag + ": expected at least one value");
    return out;
}

std::vector<int> parse_ints(const std::string& text, const std::string& flag)
{
    std::vector<int> out;
    for (const auto& item : split_commas(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw std::invalid_argument(flag + ": malformed integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Params load_params_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open params file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception&) {
        throw std::invalid_argument("params file '" + path + "' is not valid JSON");
    }
    if (!j.is_object() || !j.contains("r") || !j.contains("beta") || !j.contains("c"))
        throw std::invalid_argument("params file needs the keys \"r\", \"beta\" and \"c\"");
    if (!j["r"].is_number_integer() || j["r"].get<long>() < 1)
        throw std::invalid_argument("params file: \"r\" must be a positive integer");
    if (!j["c"].is_array()) throw std::invalid_argument("params file: \"c\" must be an array");
    const auto r = j["r"].get<std::size_t>();
    if (j["c"].size() != r)
        throw std::invalid_argument("params file: c has " + std::to_string(j["c"].size()) + " entries but r = " +
                                    std::to_string(r));
    std::vector<Rational> c;
    for (const auto& e : j["c"]) c.push_back(rational_from_json(e));
    return Params(rational_from_json(j["beta"]), std::move(c));
}

struct Cli {
    std::optional<int> r;
    std::optional<std::string> beta;
    std::optional<std::string> c;
    std::optional<std::string> params_file;
    std::optional<std::string> n;
    std::optional<std::string> x;
    std::optional<int> degree;
    std::optional<int> order;
    std::optional<int> max_degree;
    std::optional<std::string> ordering;
    std::string format = "json";
    std::optional<std::string> out;
    std::string relation;
    std::string op;
};

// nullopt when no parameter source was given.
std::optional<Params> resolve_params(const Cli& cli, const RunHooks& hooks)
{
    const bool flags = cli.r || cli.beta || cli.c;
    if (flags && cli.params_file) throw std::invalid_argument("give either --params-file or --r/--beta/--c, not both");
    std::optional<Params> p;
    if (cli.params_file) {
        p = load_params_file(*cli.params_file);
    } else if (flags) {
        if (!cli.beta || !cli.c) throw std::invalid_argument("--beta and --c are both required");
        std::vector<Rational> c = parse_rationals(*cli.c, "--c");
        if (cli.r && (*cli.r < 1 || static_cast<std::size_t>(*cli.r) != c.size()))
            throw std::invalid_argument("--c has " + std::to_string(c.size()) + " entries but --r is " +
                                        std::to_string(*cli.r));
        p = Params(parse_rationals(*cli.beta, "--beta").front(), std::move(c));
    }
    if (p && hooks.recurrence_fault) p = p->with_recurrence_fault(*hooks.recurrence_fault);
    return p;
}

Params require_params(const Cli& cli, const RunHooks& hooks)
{
    auto p = resolve_params(cli, hooks);
    if (!p) throw std::invalid_argument("parameters required: --r/--beta/--c or --params-file");
    return *p;
}

MultiIndex require_index(const Cli& cli, const Params& p)
{
    if (!cli.n) throw std::invalid_argument("--n is required");
    MultiIndex n(parse_ints(*cli.n, "--n"));
    if (n.size() != p.r())
        throw std::invalid_argument("--n has " + std::to_string(n.size()) + " entries but r = " + std::to_string(p.r()));
    return n;
}

int positive_or(const std::optional<int>& v, int fallback, const std::string& flag)
{
    if (v && *v < 0) throw std::invalid_argument(flag + " must be non-negative");
    return v.value_or(fallback);
}

void emit(const json& payload, const Cli& cli, std::ostream& out)
{
    if (cli.out) {
        std::ofstream f(*cli.out);
        if (!f) throw std::invalid_argument("cannot write '" + *cli.out + "'");
        f << payload.dump(2) << "\n";
    } else {
        out << payload.dump() << "\n";
    }
}

void require_json(const Cli& cli)
{
    if (cli.format != "json") throw std::invalid_argument("--format csv is available for `table` only");
}

int cmd_poly(const Cli& cli, const RunHooks& hooks, std::ostream& out)
{
    require_json(cli);
    const Params p = require_params(cli, hooks);
    MeixnerTable table(p);
    emit({{"poly", table.poly(require_index(cli, p))}}, cli, out);
    return 0;
}

int cmd_eval(const Cli& cli, const RunHooks& hooks, std::ostream& out)
{
    require_json(cli);
    const Params p = require_params(cli, hooks);
    const MultiIndex n = require_index(cli, p);
    if (!cli.x) throw std::invalid_argument("--x is required");
    const auto xs = parse_rationals(*cli.x, "--x");
    if (xs.size() != 1) throw std::invalid_argument("--x takes a single value for eval");
    MeixnerTable table(p);
    emit({{"value", table.eval(n, xs.front())}}, cli, out);
    return 0;
}

int cmd_table(const Cli& cli, const RunHooks& hooks, std::ostream& out)
{
    const Params p = require_params(cli, hooks);
    const int bound = positive_or(cli.max_degree, 5, "--max-degree");
    MeixnerTable table(p);
    if (cli.format == "csv") {
        std::ostringstream os;
        for (std::size_t k = 0; k < p.r(); ++k) os << "n" << k + 1 << ",";
        os << "power,coefficient\n";
        for (const auto& n : indices_up_to(p.r(), bound)) {
            const PolyX& m = table.poly(n);
            for (std::size_t e = 0; e < m.coeffs().size(); ++e) {
                for (int v : n.entries()) os << v << ",";
                os << e << "," << m.coeffs()[e] << "\n";
            }
        }
        if (cli.out) {
            std::ofstream f(*cli.out);
            if (!f) throw std::invalid_argument("cannot write '" + *cli.out + "'");
            f << os.str();
        } else {
            out << os.str();
        }
        return 0;
    }
    if (cli.format != "json") throw std::invalid_argument("--format must be json or csv");
    json entries = json::array();
    for (const auto& n : indices_up_to(p.r(), bound)) entries.push_back({{"index", n}, {"poly", table.poly(n)}});
    emit({{"params", params_json(p)}, {"max_degree", bound}, {"entries", entries}}, cli, out);
    return 0;
}

int cmd_genfun(const Cli& cli, const RunHooks& hooks, std::ostream& out)
{
    require_json(cli);
    const Params p = require_params(cli, hooks);
    const int order = positive_or(cli.order, 6, "--order");
    json coeffs = json::array();
    const auto all = genfun_coeffs(p, order);
    for (const auto& n : indices_up_to(p.r(), order)) coeffs.push_back({{"index", n}, {"poly", all.at(n)}});
    emit({{"params", params_json(p)}, {"order", order}, {"coefficients", coeffs}}, cli, out);
    return 0;
}

CheckOptions check_options(const Cli& cli)
{
    CheckOptions o;
    o.max_degree = positive_or(cli.max_degree, o.max_degree, "--max-degree");
    o.fock_degree = positive_or(cli.degree, o.fock_degree, "--degree");
    o.order = positive_or(cli.order, o.order, "--order");
    if (cli.n) o.n = MultiIndex(parse_ints(*cli.n, "--n"));
    if (cli.x) o.xs = parse_rationals(*cli.x, "--x");
    if (cli.ordering) {
        std::vector<std::size_t> ord;
        for (int v : parse_ints(*cli.ordering, "--ordering")) {
            if (v < 1) throw std::invalid_argument("--ordering entries are one-based");
            ord.push_back(static_cast<std::size_t>(v - 1));
        }
        o.ordering = ord;
    }
    return o;
}

int cmd_check(const Cli& cli, const RunHooks& hooks, std::ostream& out)
{
    require_json(cli);
    const auto& names = relation_names();
    if (std::find(names.begin(), names.end(), cli.relation) == names.end())
        throw std::invalid_argument("unknown relation '" + cli.relation + "'");
    std::vector<Params> sets;
    if (auto p = resolve_params(cli, hooks)) {
        sets.push_back(*p);
    } else {
        for (const auto& p : default_param_sets())
            sets.push_back(hooks.recurrence_fault ? p.with_recurrence_fault(*hooks.recurrence_fault) : p);
    }
    const json report = check_report(cli.relation, sets, check_options(cli));
    if (cli.out) {
        emit(report, cli, out);
        json brief = {{"relation", report["relation"]}, {"pass", report["pass"]}, {"failing", report["failing"]}};
        if (report.contains("first_failure")) brief["first_failure"] = report["first_failure"];
        out << brief.dump() << "\n";
    } else {
        out << report.dump() << "\n";
    }
    return report["pass"].get<bool>() ? 0 : 1;
}

int cmd_fock_dump(const Cli& cli, const RunHooks& hooks, std::ostream& out)
{
    require_json(cli);
    const Params p = require_params(cli, hooks);
    const int degree = positive_or(cli.degree, 8, "--degree");
    const FockMatrix m = op_matrix(cli.op, p, degree);
    json entries = json::array();
    for (std::size_t col = 0; col < m.dim(); ++col) {
        for (const auto& [row, v] : m.column(col)) entries.push_back({row, col, v.str()});
    }
    json states = json::array();
    for (std::size_t k = 0; k < m.basis().size(); ++k) states.push_back(m.basis().state(k));
    emit({{"operator", cli.op},
          {"params", params_json(p)},
          {"basis", {{"modes", p.r()}, {"max_degree", degree}, {"ordering", "graded-lex"}, {"states", states}}},
          {"entries", entries}},
         cli, out);
    return 0;
}

int cmd_spectrum(const Cli& cli, const RunHooks& hooks, std::ostream& out)
{
    require_json(cli);
    const Params p = require_params(cli, hooks);
    const int degree = positive_or(cli.degree, 8, "--degree");
    json spectra = json::array();
    for (std::size_t i = 0; i < p.r(); ++i) {
        for (auto kind : {HamiltonianKind::plain, HamiltonianKind::bar}) {
            json values = json::array();
            for (const auto& z : spectrum_diag(p, i, degree, kind)) values.push_back({z.real(), z.imag()});
            spectra.push_back({{"operator", std::string(kind == HamiltonianKind::plain ? "H_" : "Hbar_") +
                                                 std::to_string(i + 1)},
                               {"eigenvalues", values}});
        }
    }
    emit({{"params", params_json(p)},
          {"N", degree},
          {"note", "diagnostic: truncation perturbs the spectrum"},
          {"spectra", spectra}},
         cli, out);
    return 0;
}

void add_common_options(CLI::App& app, Cli& cli)
{
    app.add_option("--r", cli.r, "number of measures");
    app.add_option("--beta", cli.beta, "beta as p/q");
    app.add_option("--c", cli.c, "comma-separated c_1..c_r");
    app.add_option("--params-file", cli.params_file, "JSON file {\"r\", \"beta\", \"c\"}");
    app.add_option("--n", cli.n, "comma-separated multi-index");
    app.add_option("--x", cli.x, "spectral value(s), comma-separated");
    app.add_option("--degree", cli.degree, "Fock truncation degree N");
    app.add_option("--order", cli.order, "generating-function order");
    app.add_option("--max-degree", cli.max_degree, "bound on |n| for polynomial checks and tables");
    app.add_option("--ordering", cli.ordering, "factor ordering for the difference equations, one-based");
    app.add_option("--format", cli.format, "json or csv");
    app.add_option("--out", cli.out, "write the full report to a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunHooks& hooks)
{
    Cli cli;
    CLI::App app{"Multiple Meixner polynomials: exact construction and identity checks", "mm"};
    app.require_subcommand(1);
    add_common_options(app, cli);
    app.fallthrough();

    auto* poly = app.add_subcommand("poly", "print M_n as coefficient strings");
    auto* eval = app.add_subcommand("eval", "evaluate M_n at x");
    auto* table = app.add_subcommand("table", "all M_n with |n| <= max-degree");
    auto* genfun = app.add_subcommand("genfun", "generating-function coefficients times n!");
    auto* check = app.add_subcommand("check", "verify a relation (or all)");
    check->add_option("relation", cli.relation, "relation name")->required();
    auto* fock = app.add_subcommand("fock", "truncated Fock-space operators");
    fock->require_subcommand(1);
    fock->fallthrough();
    auto* dump = fock->add_subcommand("dump", "dump an operator matrix");
    dump->add_option("op", cli.op, "operator name")->required();
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the truncated Hamiltonians (diagnostic)");
    for (auto* sub : {poly, eval, table, genfun, check, spectrum, dump}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "mm: " << e.what() << "\n";
        return 2;
    }

    try {
        if (poly->parsed()) return cmd_poly(cli, hooks, out);
        if (eval->parsed()) return cmd_eval(cli, hooks, out);
        if (table->parsed()) return cmd_table(cli, hooks, out);
        if (genfun->parsed()) return cmd_genfun(cli, hooks, out);
        if (check->parsed()) return cmd_check(cli, hooks, out);
        if (dump->parsed()) return cmd_fock_dump(cli, hooks, out);
        if (spectrum->parsed()) return cmd_spectrum(cli, hooks, out);
    } catch (const std::invalid_argument& e) {
        err << "mm: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "mm: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "mm: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "mm: " << e.what() << "\n";
        return 2;
    }
    err << "mm: no subcommand\n";
    return 2;
}

}  // namespace mm
