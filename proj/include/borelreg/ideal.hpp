#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "borelreg/monomial.hpp"

namespace borelreg {

/// Monomial ideal stored by its minimal generators G(I).
///
/// The generator list is always a divisibility antichain sorted in graded-lex
/// order, so two ideals are equal exactly when their generator lists are.
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t ambient = 0) : ambient_(ambient) {}
  /// Minimalizes `gens`. Throws AmbientMismatch on a generator of the wrong
  /// ambient.
  MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t ambient) { return MonomialIdeal(ambient); }
  static MonomialIdeal unit(std::size_t ambient);
  /// (x_first, ..., x_last) with 0-based inclusive bounds.
  static MonomialIdeal variables(std::size_t ambient, std::size_t first, std::size_t last);
  /// The irrelevant ideal (x_1, ..., x_n).
  static MonomialIdeal irrelevant(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& u) const;
  bool contains(std::span<const Exponent> u) const;
  bool contains(const MonomialIdeal& other) const;

  /// Same generators viewed in `ambient` variables (see Monomial::restricted).
  MonomialIdeal with_ambient(std::size_t ambient) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens);

  std::size_t ambient_ = 0;
  std::vector<Monomial> gens_;
  std::vector<Exponent> degrees_;  // parallel to gens_, ascending
};

/// Antichain of the divisibility-minimal elements of `gens`.
MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^k, with a^0 the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, std::size_t k);

/// (I : v), generated by u / gcd(u, v) over u in G(I).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);
/// (I : J) = intersection of (I : v) over v in G(J). J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// (I : x_var^inf): zero out the var-th exponent of every generator.
MonomialIdeal saturate_variable(const MonomialIdeal& ideal, std::size_t var);
/// (I : P^inf), the fixed point of repeated colon by P. P must be nonzero.
/// Ideals generated by variables take the intersection of the single
/// variable saturations instead of iterating.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// Always iterates colon to the fixed point.
MonomialIdeal saturate_by_colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

struct GradedSlice {
  Exponent degree = 0;
  std::vector<Monomial> inside;
  std::vector<Monomial> outside;
};

GradedSlice graded_slice(const MonomialIdeal& ideal, Exponent degree);
/// Ideal generated by I_e. Requires e >= deg_ideal(I), in which case the
/// result is I_{>=e}.
MonomialIdeal truncate(const MonomialIdeal& ideal, Exponent degree);

/// Stable: x_j u / x_{m(u)} in I for all u in G(I) and j < m(u).
bool is_stable(const MonomialIdeal& ideal);

struct StabilityViolation {
  Monomial generator;
  std::size_t from = 0;  // m(u)
  std::size_t to = 0;    // j
};
std::optional<StabilityViolation> stability_violation(const MonomialIdeal& ideal);

/// Largest degree of a minimal generator; 0 for the zero ideal.
Exponent deg_ideal(const MonomialIdeal& ideal);
/// m(I): largest variable index occurring in G(I); nullopt if none occurs.
std::optional<std::size_t> max_support(const MonomialIdeal& ideal);
/// Contains a pure power of every variable.
bool is_artinian(const MonomialIdeal& ideal);
/// Exponent of the minimal pure power of x_var in I, if any.
std::optional<Exponent> pure_power(const MonomialIdeal& ideal, std::size_t var);

/// s(Jsat / J): the largest degree with a monomial of `saturated` outside
/// `ideal`, or nullopt when the quotient is zero.
///
/// Scans degrees upward and stops at the first empty slice at or above
/// deg_ideal(saturated); from there on every monomial of `saturated` is a
/// multiple of one in that slice and therefore lies in `ideal`. The scan is
/// capped by the Taylor bound sum(deg g) over G(ideal); reaching the cap
/// throws BoundExceeded. Throws std::invalid_argument unless
/// ideal is contained in saturated.
std::optional<Exponent> s_quotient(const MonomialIdeal& saturated, const MonomialIdeal& ideal);

/// Taylor-complex bound sum of generator degrees.
Exponent taylor_bound(const MonomialIdeal& ideal);

}  // namespace borelreg
