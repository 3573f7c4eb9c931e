#include "borelreg/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "borelreg/error.hpp"

namespace borelreg {

namespace {

void require_same_ambient(const Monomial& u, const Monomial& v) {
  if (u.ambient() != v.ambient()) throw AmbientMismatch(u.ambient(), v.ambient());
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::power(std::size_t ambient, std::size_t var, Exponent power) {
  if (var >= ambient) throw std::out_of_range("variable index out of range");
  Monomial m(ambient);
  if (power < 0) throw std::invalid_argument("negative exponent");
  m.exps_[var] = power;
  return m;
}

Exponent Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
}

Exponent Monomial::nu(std::size_t var) const {
  if (var >= exps_.size())
    throw std::out_of_range("variable x" + std::to_string(var + 1) +
                            " outside ambient of " + std::to_string(exps_.size()));
  return exps_[var];
}

std::optional<std::size_t> Monomial::max_support() const {
  for (std::size_t k = exps_.size(); k-- > 0;)
    if (exps_[k] > 0) return k;
  return std::nullopt;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::restricted(std::size_t ambient) const {
  if (ambient > exps_.size()) return extended(ambient);
  for (std::size_t k = ambient; k < exps_.size(); ++k)
    if (exps_[k] != 0)
      throw std::invalid_argument(to_string() + " involves x" + std::to_string(k + 1) +
                                  ", cannot restrict to " + std::to_string(ambient) +
                                  " variables");
  return Monomial(std::vector<Exponent>(exps_.begin(), exps_.begin() + ambient));
}

Monomial Monomial::extended(std::size_t ambient) const {
  if (ambient < exps_.size()) return restricted(ambient);
  auto e = exps_;
  e.resize(ambient, 0);
  return Monomial(std::move(e));
}

Monomial Monomial::with(std::size_t var, Exponent value) const {
  auto e = exps_;
  e.at(var) = value;
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(k + 1);
    if (exps_[k] != 1) out += '^' + std::to_string(exps_[k]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Larger leading exponent sorts first within a degree.
  for (std::size_t k = 0; k < a.ambient(); ++k)
    if (auto c = b[k] <=> a[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool divides(std::span<const Exponent> u, std::span<const Exponent> v) {
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] > v[k]) return false;
  return true;
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  return divides(u.exponents(), v.exponents());
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<Exponent> e(u.ambient());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(u[k], v[k]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<Exponent> e(u.ambient());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::min(u[k], v[k]);
  return Monomial(std::move(e));
}

Monomial multiply(const Monomial& u, const Monomial& v) {
  require_same_ambient(u, v);
  std::vector<Exponent> e(u.ambient());
  for (std::size_t k = 0; k < e.size(); ++k)
    if (__builtin_add_overflow(u[k], v[k], &e[k]))
      throw std::overflow_error("exponent overflow in monomial product");
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& v, const Monomial& u) {
  if (!divides(u, v))
    throw std::invalid_argument(u.to_string() + " does not divide " + v.to_string());
  std::vector<Exponent> e(v.ambient());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = v[k] - u[k];
  return Monomial(std::move(e));
}

void for_each_of_degree(std::size_t ambient, Exponent degree,
                        const std::function<bool(std::span<const Exponent>)>& fn) {
  if (degree < 0) return;
  if (ambient == 0) {
    if (degree == 0) fn({});
    return;
  }
  // Odometer over compositions of `degree`, leading exponent descending.
  std::vector<Exponent> e(ambient, 0);
  e[0] = degree;
  for (;;) {
    if (!fn(e)) return;
    // Find the rightmost position before the last with a positive entry,
    // move one unit right and gather the tail into the next slot.
    std::size_t last = ambient - 1;
    Exponent tail = e[last];
    e[last] = 0;
    std::size_t k = last;
    while (k-- > 0 && e[k] == 0) {
    }
    if (k == static_cast<std::size_t>(-1)) return;
    e[k] -= 1;
    e[k + 1] = tail + 1;
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t ambient, Exponent degree) {
  std::vector<Monomial> out;
  for_each_of_degree(ambient, degree, [&](std::span<const Exponent> e) {
    out.emplace_back(std::vector<Exponent>(e.begin(), e.end()));
    return true;
  });
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.ambient();
  for (Exponent e : m.exponents())
    h ^= std::hash<Exponent>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace borelreg
