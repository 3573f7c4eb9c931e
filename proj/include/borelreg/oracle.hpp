#pragma once

// Brute-force ground truth. Nothing here calls the closed-form paths in
// borel_type.hpp or dfixed.hpp (apart from DSequence digit arithmetic);
// only monomial and ideal primitives are shared.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "borelreg/dfixed.hpp"
#include "borelreg/ideal.hpp"
#include "borelreg/monomial.hpp"

namespace borelreg::oracle {

struct SocleReport {
  std::vector<Monomial> socle;  ///< monomials of (I : m) \ I, graded-lex order
  std::optional<Exponent> max_degree;
  std::optional<Exponent> reg;  ///< max_degree + 1
};

/// Enumerates the standard monomials of an artinian ideal degree by degree
/// and keeps those killed by every variable. The scan stops at the first
/// degree without standard monomials (divisors of a standard monomial are
/// standard), and is capped by sum_i (a_i - 1) over the pure powers x_i^{a_i}.
/// Throws DomainError for zero, unit, or non-artinian input.
SocleReport socle_oracle(const MonomialIdeal& ideal);

/// Largest degree of a standard monomial of an artinian ideal.
Exponent top_standard_degree(const MonomialIdeal& ideal);

/// socle_oracle(I).reg.
Exponent reg_oracle(const MonomialIdeal& ideal);

/// Number of standard monomials (dim_K S/I) of an artinian ideal.
std::size_t standard_count(const MonomialIdeal& ideal);

/// Monomials of saturated \ ideal killed by every variable, i.e. the socle
/// of the finite-length module saturated / ideal. Scans degree by degree and
/// stops at the first slice of `saturated` at or above its generator degree
/// that lies inside `ideal`; capped by the Taylor bound of `ideal`.
std::vector<Monomial> quotient_socle(const MonomialIdeal& ideal, const MonomialIdeal& saturated);

/// Regularity of a Borel-type ideal from socles: rebuilds the saturation
/// chain from ideal primitives (J_l = G(I_l) in m(I_l) variables, saturated by
/// the maximal ideal there) and returns 1 + the largest socle degree of
/// J_l^sat / J_l. Artinian input reduces to socle_oracle.
struct ChainSocle {
  std::vector<std::vector<Monomial>> socles;  ///< per chain step
  Exponent reg = 0;
};
ChainSocle chain_socle(const MonomialIdeal& ideal);

/// Violation found by an exhaustive check, with the offending monomial.
struct Counterexample {
  Monomial monomial;
  std::size_t i = 0;
  std::size_t j = 0;
  Exponent t = 0;
  std::string describe() const;
};

struct CheckResult {
  bool holds = true;
  std::optional<Counterexample> witness;
  std::size_t monomials_checked = 0;
};

/// Strong Borel type over every monomial of I of degree <= deg(I) + extra.
CheckResult exhaustive_sbt_check(const MonomialIdeal& ideal, Exponent extra);
/// d-fixed over every monomial of I of degree <= deg(I) + extra.
CheckResult exhaustive_dfixed_check(const MonomialIdeal& ideal, const DSequence& d,
                                    Exponent extra);
/// Stability over every monomial of I of degree <= deg(I) + extra.
CheckResult exhaustive_stability_check(const MonomialIdeal& ideal, Exponent extra);

/// Borel type via the witness characterization: for every monomial u in I
/// (degree <= deg(I) + extra) and j < i with nu_i(u) > 0, some t > 0 puts
/// x_j^t u / x_i^{nu_i(u)} in I. t is searched up to the largest x_j
/// exponent among the generators (beyond that membership cannot change).
CheckResult borel_witness_check(const MonomialIdeal& ideal, Exponent extra = 2);

/// Monomials of I of degree exactly e, enumerated from scratch.
std::vector<Monomial> ideal_slice(const MonomialIdeal& ideal, Exponent degree);

}  // namespace borelreg::oracle
