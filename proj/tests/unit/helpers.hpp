#pragma once

#include <random>

#include "mm/params.hpp"
#include "mm/polynomial.hpp"

namespace mmtest {

using mm::Params;
using mm::PolyX;
using mm::Rational;

inline Params set_r1() { return Params(Rational(1), {Rational(1, 2)}); }
inline Params set_r2() { return Params(Rational(3, 2), {Rational(1, 3), Rational(1, 2)}); }
inline Params set_r3() { return Params(Rational(2), {Rational(1, 5), Rational(1, 3), Rational(1, 2)}); }

inline PolyX X() { return PolyX::variable(); }

inline Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 17);
    return Rational(num(rng), den(rng));
}

inline PolyX random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = random_rational(rng);
    return PolyX(std::move(c));
}

}  // namespace mmtest
