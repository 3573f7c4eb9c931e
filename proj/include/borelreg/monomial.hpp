#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace borelreg {

using Exponent = std::int64_t;

/// A monomial x_1^{a_1} ... x_n^{a_n} in a fixed number of variables.
///
/// Variables are 0-based in this API; x1 in printed text is index 0.
/// The unit monomial is the all-zero vector.
class Monomial {
 public:
  explicit Monomial(std::size_t ambient = 0) : exps_(ambient, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  static Monomial unit(std::size_t ambient) { return Monomial(ambient); }
  /// x_var^power in `ambient` variables.
  static Monomial power(std::size_t ambient, std::size_t var, Exponent power);

  std::size_t ambient() const { return exps_.size(); }
  std::span<const Exponent> exponents() const { return exps_; }
  Exponent operator[](std::size_t var) const { return exps_[var]; }

  Exponent degree() const;
  /// Exponent of x_var; throws std::out_of_range for var >= ambient.
  Exponent nu(std::size_t var) const;
  /// Largest variable index occurring in the monomial, nullopt for 1.
  std::optional<std::size_t> max_support() const;
  bool is_unit() const;

  /// Same exponents, viewed in the first `ambient` variables. Throws
  /// std::invalid_argument if a dropped variable has positive exponent.
  Monomial restricted(std::size_t ambient) const;
  /// Same exponents padded with zeros to `ambient` variables.
  Monomial extended(std::size_t ambient) const;

  /// Copy with exponent of `var` replaced.
  Monomial with(std::size_t var, Exponent value) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic order: degree first, then x1 > x2 > ... exponents
  /// compared left to right (larger leading exponent sorts first).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& u, const Monomial& v);
bool divides(std::span<const Exponent> u, std::span<const Exponent> v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
/// Throws std::overflow_error when an exponent overflows.
Monomial multiply(const Monomial& u, const Monomial& v);
/// v / u; throws std::invalid_argument unless u divides v.
Monomial quotient(const Monomial& v, const Monomial& u);

inline Monomial operator*(const Monomial& u, const Monomial& v) {
  return multiply(u, v);
}

/// Calls fn(exponents) for every monomial of total degree `degree` in
/// `ambient` variables, in graded-lex order. The span is only valid during
/// the call. Stops early if fn returns false.
void for_each_of_degree(std::size_t ambient, Exponent degree,
                        const std::function<bool(std::span<const Exponent>)>& fn);

std::vector<Monomial> monomials_of_degree(std::size_t ambient, Exponent degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace borelreg
