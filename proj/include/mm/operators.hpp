#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mm/fock.hpp"
#include "mm/meixner.hpp"
#include "mm/weyl.hpp"

namespace mm {

// Model operators as normal-ordered oscillator-algebra elements. Indices are
// zero-based; `B` below stands for beta + H0.
namespace ops {

WeylOp identity(const Params& p);
WeylOp a(const Params& p, std::size_t i);
WeylOp adag(const Params& p, std::size_t i);
WeylOp number(const Params& p, std::size_t i);
/// H0 = sum_k a_k^+ a_k
WeylOp h0(const Params& p);
/// beta + H0
WeylOp shifted_h0(const Params& p);

/// a_i + sum_k N_k/(1-c_k) + (c_i/(1-c_i) + sum_j c_j/(1-c_j)^2 a_j^+)(beta + H0)
WeylOp hamiltonian(const Params& p, std::size_t i);
/// a_i + c_i beta/(1-c_i) + H0/(1-c_i) + sum_k c_k/(1-c_k) a_k^+ a_i + R_i
WeylOp hamiltonian_bar(const Params& p, std::size_t i);
/// sum_k c_k/((1-c_i)(1-c_k)) a_k^+ (beta + H0)
WeylOp r_factor(const Params& p, std::size_t i);
/// a single summand a_k^+ (beta + H0) of R_i
WeylOp raising_summand(const Params& p, std::size_t k);
/// (1-c_i) a_i
WeylOp l_factor(const Params& p, std::size_t i);
/// sum_j c_j/(1-c_j)^2 a_j^+
WeylOp p_factor(const Params& p);

WeylOp x_ladder(const Params& p, std::size_t i);      ///< a_i + c_i/(1-c_i)(beta + H0)
WeylOp y_ladder(const Params& p);                     ///< 1 + sum_k a_k^+/(1-c_k)
WeylOp x_intertwiner(const Params& p, std::size_t i); ///< a_i + (beta + H0)/(1-c_i)
WeylOp y_intertwiner(const Params& p);                ///< 1 + sum_k c_k/(1-c_k) a_k^+

/// Oscillator realization for r = 1: J- = a, J+ = a^+(beta + a^+ a), J0 = a^+ a + beta/2.
WeylOp su11_minus(const Params& p);
WeylOp su11_plus(const Params& p);
WeylOp su11_zero(const Params& p);
/// Metaplectic realization for one mode: J- = a^2/2, J+ = (a^+)^2/2, J0 = (a a^+ + a^+ a)/4.
WeylOp meta_minus();
WeylOp meta_plus();
WeylOp meta_zero();

}  // namespace ops

/// Recognized names: I, H0, a_i, adag_i, N_i, H_i, Hbar_i, X_i, Y, Xhat_i, Yhat,
/// L_i, R_i (one-based i), and for r = 1: J0, J+, J-, J0_meta, J+_meta, J-_meta.
std::vector<std::string> operator_names(std::size_t r);

/// Throws std::invalid_argument for an unknown name or an SU(1,1) name with r != 1.
WeylOp op_symbol(std::string_view name, const Params& params);
/// Matrix of a named operator on the monomial basis of degree <= max_degree (>= 1).
FockMatrix op_matrix(std::string_view name, const Params& params, int max_degree);

/// |x, beta, c>> in the monomial basis: component n is M_n(x)/(n_1! ... n_r!).
FockVector eigvec(MeixnerTable& table, const Rational& x, const BasisPtr& basis);
FockVector eigvec(const Params& params, const Rational& x, int max_degree);

}  // namespace mm
