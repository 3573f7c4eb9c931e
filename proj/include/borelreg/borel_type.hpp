#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "borelreg/ideal.hpp"
#include "borelreg/monomial.hpp"

namespace borelreg {

/// (I : x_j^inf) = (I : (x_1, ..., x_j)^inf) for every j. Throws DomainError
/// on the zero ideal.
bool is_borel_type(const MonomialIdeal& ideal);

/// A generator u and variables j < i for which no 0 <= t <= nu_i(u) puts
/// x_j^t u / x_i^{nu_i(u)} back into the ideal.
struct SbtViolation {
  Monomial generator;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Strong Borel type, checked on minimal generators.
///
/// Sufficient for all of I: if v = u w with u in G(I) and t witnesses (u, i, j),
/// then x_j^t v / x_i^{nu_i(v)} = (x_j^t u / x_i^{nu_i(u)}) (w / x_i^{nu_i(w)})
/// lies in I, and t <= nu_i(u) <= nu_i(v).
bool is_sbt(const MonomialIdeal& ideal);
std::optional<SbtViolation> sbt_violation(const MonomialIdeal& ideal);

/// Principal SBT ideal of u = prod x_{i_q}^{alpha_q}: the product over q of
/// (x_1^{alpha_q}, ..., x_{i_q}^{alpha_q}). Throws DomainError for u = 1.
MonomialIdeal sbt_principal(const Monomial& u);

/// Smallest SBT ideal containing `seeds`, by fixpoint: whenever a generator
/// u has no witness for (i, j), add x_j^{nu_i(u)} u / x_i^{nu_i(u)}, which
/// every SBT ideal containing u must contain. Throws DomainError on empty
/// input or a unit seed.
MonomialIdeal sbt_closure(const std::vector<Monomial>& seeds);

struct ChainStep {
  MonomialIdeal ideal;           ///< I_l in the full ring
  std::size_t top_variable = 0;  ///< n_l = m(I_l), 0-based
  MonomialIdeal section;         ///< J_l, generated by G(I_l) in n_l + 1 variables
  MonomialIdeal section_saturation;
  std::optional<Exponent> s;     ///< s(J_l^sat / J_l)
};

/// I = I_0 < I_1 < ... < I_r = S with I_{l+1} = (I_l : x_{n_l}^inf).
struct SequentialChain {
  std::vector<ChainStep> steps;
  MonomialIdeal terminal;  ///< the unit ideal
};

/// Throws DomainError unless the ideal is of Borel type and proper nonzero.
SequentialChain sequential_chain(const MonomialIdeal& ideal);

/// max_l s(J_l^sat / J_l) + 1 over the sequential chain.
Exponent reg_sequential(const MonomialIdeal& ideal);
Exponent reg_sequential(const SequentialChain& chain);

/// Row of the chi table for one (q, f).
struct ChiRow {
  std::size_t q = 0;  ///< 0-based block index
  std::size_t f = 0;  ///< 0-based comparison block, alpha_f <= alpha_q
  std::vector<Exponent> entries;  ///< chi_{qj}^{(f)} for j = 1 .. i_q
  Exponent total = 0;
};

/// chi-table evaluated literally from the closed-form case split
///   chi_{qj}^{(f)} = alpha_j + alpha_q - 1  if j < q and alpha_j >= alpha_f,
///                    alpha_f - 1            otherwise,
/// with j ranging over variables 1 .. i_q (alpha_j undefined, hence the
/// second branch, for j > r). Reports label it "published form": on x2^6 x3^7 it
/// gives chi_2 = 22 while the enumerated s(J^sat / J) is 23.
struct ChiTableSbt {
  std::vector<std::size_t> block_variables;  ///< i_q, 0-based
  std::vector<Exponent> block_exponents;     ///< alpha_q
  std::vector<ChiRow> rows;
  std::vector<Exponent> chi;                 ///< chi_q = max_f chi_q^{(f)}
  Exponent reg_formula = 0;                  ///< max_q chi_q + 1
};

ChiTableSbt chi_table(const Monomial& u);
Exponent reg_sbt_formula(const Monomial& u);

/// min { e >= deg(I) : I_{>=e} stable }, scanning up to n(deg(I) - 1) + 1.
/// Throws BoundExceeded if no such e is found within the bound.
Exponent reg_truncation(const MonomialIdeal& ideal);

/// n (deg(I) - 1) + 1.
Exponent reg_upper_bound(const MonomialIdeal& ideal);

}  // namespace borelreg
