#include "mm/operators.hpp"

#include <charconv>
#include <stdexcept>

namespace mm {

namespace ops {

WeylOp identity(const Params& p) { return WeylOp::identity(p.r()); }
WeylOp a(const Params& p, std::size_t i) { return WeylOp::annihilate(p.r(), i); }
WeylOp adag(const Params& p, std::size_t i) { return WeylOp::create(p.r(), i); }
WeylOp number(const Params& p, std::size_t i) { return adag(p, i) * a(p, i); }

WeylOp h0(const Params& p)
{
    WeylOp out(p.r());
    for (std::size_t k = 0; k < p.r(); ++k) out += number(p, k);
    return out;
}

WeylOp shifted_h0(const Params& p) { return h0(p) + WeylOp::scalar(p.r(), p.beta()); }

WeylOp p_factor(const Params& p)
{
    WeylOp out(p.r());
    for (std::size_t j = 0; j < p.r(); ++j) {
        const Rational om = Rational(1) - p.c(j);
        out += adag(p, j) * (p.c(j) / (om * om));
    }
    return out;
}

WeylOp hamiltonian(const Params& p, std::size_t i)
{
    WeylOp out = a(p, i);
    for (std::size_t k = 0; k < p.r(); ++k) out += number(p, k) * p.inv_one_minus(k);
    out += (WeylOp::scalar(p.r(), p.gamma(i)) + p_factor(p)) * shifted_h0(p);
    return out;
}

WeylOp raising_summand(const Params& p, std::size_t k) { return adag(p, k) * shifted_h0(p); }

WeylOp r_factor(const Params& p, std::size_t i)
{
    WeylOp out(p.r());
    for (std::size_t k = 0; k < p.r(); ++k)
        out += raising_summand(p, k) * (p.c(k) * p.inv_one_minus(i) * p.inv_one_minus(k));
    return out;
}

WeylOp hamiltonian_bar(const Params& p, std::size_t i)
{
    WeylOp out = a(p, i) + WeylOp::scalar(p.r(), p.gamma(i) * p.beta()) + h0(p) * p.inv_one_minus(i);
    for (std::size_t k = 0; k < p.r(); ++k) out += adag(p, k) * a(p, i) * p.gamma(k);
    out += r_factor(p, i);
    return out;
}

WeylOp l_factor(const Params& p, std::size_t i) { return a(p, i) * (Rational(1) - p.c(i)); }

WeylOp x_ladder(const Params& p, std::size_t i) { return a(p, i) + shifted_h0(p) * p.gamma(i); }

WeylOp y_ladder(const Params& p)
{
    WeylOp out = identity(p);
    for (std::size_t k = 0; k < p.r(); ++k) out += adag(p, k) * p.inv_one_minus(k);
    return out;
}

WeylOp x_intertwiner(const Params& p, std::size_t i) { return a(p, i) + shifted_h0(p) * p.inv_one_minus(i); }

WeylOp y_intertwiner(const Params& p)
{
    WeylOp out = identity(p);
    for (std::size_t k = 0; k < p.r(); ++k) out += adag(p, k) * p.gamma(k);
    return out;
}

namespace {

void require_single_mode(const Params& p)
{
    if (p.r() != 1) throw std::invalid_argument("SU(1,1) generators are defined for r = 1 only");
}

}  // namespace

WeylOp su11_minus(const Params& p)
{
    require_single_mode(p);
    return a(p, 0);
}

WeylOp su11_plus(const Params& p)
{
    require_single_mode(p);
    return adag(p, 0) * shifted_h0(p);
}

WeylOp su11_zero(const Params& p)
{
    require_single_mode(p);
    return h0(p) + WeylOp::scalar(1, p.beta() / Rational(2));
}

WeylOp meta_minus()
{
    const WeylOp a1 = WeylOp::annihilate(1, 0);
    return a1 * a1 * Rational(1, 2);
}

WeylOp meta_plus()
{
    const WeylOp c1 = WeylOp::create(1, 0);
    return c1 * c1 * Rational(1, 2);
}

WeylOp meta_zero()
{
    const WeylOp a1 = WeylOp::annihilate(1, 0);
    const WeylOp c1 = WeylOp::create(1, 0);
    return (a1 * c1 + c1 * a1) * Rational(1, 4);
}

}  // namespace ops

std::vector<std::string> operator_names(std::size_t r)
{
    std::vector<std::string> names{"I", "H0", "Y", "Yhat"};
    for (const char* stem : {"a", "adag", "N", "H", "Hbar", "X", "Xhat", "L", "R"}) {
        for (std::size_t i = 1; i <= r; ++i) names.push_back(std::string(stem) + "_" + std::to_string(i));
    }
    if (r == 1) {
        for (const char* s : {"J0", "J+", "J-", "J0_meta", "J+_meta", "J-_meta"}) names.emplace_back(s);
    }
    return names;
}

WeylOp op_symbol(std::string_view name, const Params& params)
{
    auto unknown = [&]() -> WeylOp { throw std::invalid_argument("unknown operator '" + std::string(name) + "'"); };

    if (name == "I") return ops::identity(params);
    if (name == "H0") return ops::h0(params);
    if (name == "Y") return ops::y_ladder(params);
    if (name == "Yhat") return ops::y_intertwiner(params);
    if (name == "J0") return ops::su11_zero(params);
    if (name == "J+") return ops::su11_plus(params);
    if (name == "J-") return ops::su11_minus(params);
    if (name == "J0_meta" || name == "J+_meta" || name == "J-_meta") {
        if (params.r() != 1) throw std::invalid_argument("SU(1,1) generators are defined for r = 1 only");
        if (name == "J0_meta") return ops::meta_zero();
        return name == "J+_meta" ? ops::meta_plus() : ops::meta_minus();
    }

    const auto underscore = name.rfind('_');
    if (underscore == std::string_view::npos) return unknown();
    const std::string_view stem = name.substr(0, underscore);
    const std::string_view digits = name.substr(underscore + 1);
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || idx < 1 || idx > params.r())
        throw std::invalid_argument("operator '" + std::string(name) + "' has an index outside 1.." +
                                    std::to_string(params.r()));
    const std::size_t i = idx - 1;

    if (stem == "a") return ops::a(params, i);
    if (stem == "adag") return ops::adag(params, i);
    if (stem == "N") return ops::number(params, i);
    if (stem == "H") return ops::hamiltonian(params, i);
    if (stem == "Hbar") return ops::hamiltonian_bar(params, i);
    if (stem == "X") return ops::x_ladder(params, i);
    if (stem == "Xhat") return ops::x_intertwiner(params, i);
    if (stem == "L") return ops::l_factor(params, i);
    if (stem == "R") return ops::r_factor(params, i);
    return unknown();
}

FockMatrix op_matrix(std::string_view name, const Params& params, int max_degree)
{
    if (max_degree < 1) throw std::invalid_argument("degree bound N must be >= 1");
    return op_symbol(name, params).to_matrix(make_basis(params.r(), max_degree));
}

FockVector eigvec(MeixnerTable& table, const Rational& x, const BasisPtr& basis)
{
    if (basis->modes() != table.params().r()) throw std::invalid_argument("basis and table disagree on r");
    FockVector v(basis);
    for (std::size_t k = 0; k < basis->size(); ++k) {
        const MultiIndex& n = basis->state(k);
        v.add(k, table.poly(n)(x) / n.factorial());
    }
    return v;
}

FockVector eigvec(const Params& params, const Rational& x, int max_degree)
{
    MeixnerTable table(params);
    return eigvec(table, x, make_basis(params.r(), max_degree));
}

}  // namespace mm
