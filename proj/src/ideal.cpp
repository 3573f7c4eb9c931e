#include "borelreg/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "borelreg/error.hpp"

namespace borelreg {

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
}

Exponent span_degree(std::span<const Exponent> u) {
  Exponent d = 0;
  for (Exponent e : u) d += e;
  return d;
}

// Graded-lex "sorts before" on raw spans of equal degree.
bool lex_before(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(ambient, std::move(gens))) {}

MonomialIdeal MonomialIdeal::unit(std::size_t ambient) {
  return minimalize(ambient, {Monomial::unit(ambient)});
}

MonomialIdeal MonomialIdeal::variables(std::size_t ambient, std::size_t first,
                                       std::size_t last) {
  if (last >= ambient || first > last) throw std::out_of_range("bad variable range");
  std::vector<Monomial> gens;
  for (std::size_t k = first; k <= last; ++k) gens.push_back(Monomial::power(ambient, k, 1));
  return minimalize(ambient, std::move(gens));
}

MonomialIdeal MonomialIdeal::irrelevant(std::size_t ambient) {
  if (ambient == 0) return zero(0);
  return variables(ambient, 0, ambient - 1);
}

bool MonomialIdeal::contains(std::span<const Exponent> u) const {
  if (u.size() != ambient_) throw AmbientMismatch(ambient_, u.size());
  const Exponent deg = span_degree(u);
  std::size_t k = 0;
  for (; k < gens_.size() && degrees_[k] < deg; ++k)
    if (divides(gens_[k].exponents(), u)) return true;
  // A generator of the same degree divides u only if it equals u; these are
  // contiguous and sorted, so binary search.
  auto first = gens_.begin() + static_cast<std::ptrdiff_t>(k);
  auto last = std::upper_bound(degrees_.begin() + static_cast<std::ptrdiff_t>(k),
                               degrees_.end(), deg);
  auto end = gens_.begin() + (last - degrees_.begin());
  auto it = std::lower_bound(first, end, u, [](const Monomial& g, std::span<const Exponent> v) {
    return lex_before(g.exponents(), v);
  });
  return it != end && std::equal(u.begin(), u.end(), it->exponents().begin());
}

bool MonomialIdeal::contains(const Monomial& u) const { return contains(u.exponents()); }

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch(ambient_, other.ambient_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::with_ambient(std::size_t ambient) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.extended(ambient));
  return minimalize(ambient, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ", ";
    out += gens_[k].to_string();
  }
  return out + ")";
}

MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.ambient() != ambient) throw AmbientMismatch(ambient, g.ambient());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(ambient);
  // Sorted by degree, so only strictly lower-degree survivors can divide.
  std::size_t lower_end = 0;
  Exponent current = -1;
  for (auto& g : gens) {
    const Exponent deg = g.degree();
    if (deg != current) {
      lower_end = out.gens_.size();
      current = deg;
    }
    bool redundant = false;
    for (std::size_t k = 0; k < lower_end && !redundant; ++k)
      redundant = divides(out.gens_[k].exponents(), g.exponents());
    if (!redundant) {
      out.gens_.push_back(std::move(g));
      out.degrees_.push_back(deg);
    }
  }
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(multiply(u, v));
  return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
  return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::size_t k) {
  MonomialIdeal out = MonomialIdeal::unit(a.ambient());
  for (std::size_t i = 0; i < k; ++i) out = product(out, a);
  return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
  if (v.ambient() != ideal.ambient()) throw AmbientMismatch(ideal.ambient(), v.ambient());
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) gens.push_back(quotient(u, gcd(u, v)));
  return minimalize(ideal.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ambient(ideal, by);
  if (by.is_zero()) throw DomainError("colon by the zero ideal");
  std::optional<MonomialIdeal> acc;
  for (const auto& v : by.generators()) {
    auto part = colon(ideal, v);
    acc = acc ? intersect(*acc, part) : std::move(part);
  }
  return *acc;
}

MonomialIdeal saturate_variable(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.ambient()) throw std::out_of_range("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) gens.push_back(u.with(var, 0));
  return minimalize(ideal.ambient(), std::move(gens));
}

namespace {

// Variables generating `by`, if it is generated by variables.
std::optional<std::vector<std::size_t>> variable_support(const MonomialIdeal& by) {
  std::vector<std::size_t> vars;
  for (const auto& g : by.generators()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(*g.max_support());
  }
  return vars;
}

}  // namespace

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  if (by.is_zero()) throw DomainError("saturation by the zero ideal");
  require_same_ambient(ideal, by);
  // (I : (x_k : k in S)^inf) is the intersection of the (I : x_k^inf):
  // u lies in it iff every (I : u) holds a pure power of each x_k, k in S.
  if (auto vars = variable_support(by)) {
    MonomialIdeal out = saturate_variable(ideal, vars->front());
    for (std::size_t k = 1; k < vars->size(); ++k)
      out = intersect(out, saturate_variable(ideal, (*vars)[k]));
    return out;
  }
  return saturate_by_colon(ideal, by);
}

MonomialIdeal saturate_by_colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  if (by.is_zero()) throw DomainError("saturation by the zero ideal");
  MonomialIdeal current = ideal;
  for (;;) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

GradedSlice graded_slice(const MonomialIdeal& ideal, Exponent degree) {
  GradedSlice slice;
  slice.degree = degree;
  for_each_of_degree(ideal.ambient(), degree, [&](std::span<const Exponent> e) {
    Monomial m(std::vector<Exponent>(e.begin(), e.end()));
    (ideal.contains(e) ? slice.inside : slice.outside).push_back(std::move(m));
    return true;
  });
  return slice;
}

MonomialIdeal truncate(const MonomialIdeal& ideal, Exponent degree) {
  if (ideal.is_zero()) return ideal;
  if (degree < deg_ideal(ideal))
    throw std::invalid_argument("truncation degree " + std::to_string(degree) +
                                " below generator degree " +
                                std::to_string(deg_ideal(ideal)));
  return minimalize(ideal.ambient(), graded_slice(ideal, degree).inside);
}

std::optional<StabilityViolation> stability_violation(const MonomialIdeal& ideal) {
  std::vector<Exponent> buf(ideal.ambient());
  for (const auto& u : ideal.generators()) {
    auto m = u.max_support();
    if (!m) continue;
    std::copy(u.exponents().begin(), u.exponents().end(), buf.begin());
    buf[*m] -= 1;
    for (std::size_t j = 0; j < *m; ++j) {
      buf[j] += 1;
      const bool ok = ideal.contains(buf);
      buf[j] -= 1;
      if (!ok) return StabilityViolation{u, *m, j};
    }
  }
  return std::nullopt;
}

bool is_stable(const MonomialIdeal& ideal) { return !stability_violation(ideal); }

Exponent deg_ideal(const MonomialIdeal& ideal) {
  Exponent d = 0;
  for (const auto& g : ideal.generators()) d = std::max(d, g.degree());
  return d;
}

std::optional<std::size_t> max_support(const MonomialIdeal& ideal) {
  std::optional<std::size_t> m;
  for (const auto& g : ideal.generators())
    if (auto k = g.max_support(); k && (!m || *k > *m)) m = k;
  return m;
}

std::optional<Exponent> pure_power(const MonomialIdeal& ideal, std::size_t var) {
  std::optional<Exponent> best;
  for (const auto& g : ideal.generators()) {
    bool pure = true;
    for (std::size_t k = 0; k < g.ambient() && pure; ++k) pure = (k == var) || g[k] == 0;
    if (pure && (!best || g[var] < *best)) best = g[var];
  }
  return best;
}

bool is_artinian(const MonomialIdeal& ideal) {
  for (std::size_t k = 0; k < ideal.ambient(); ++k)
    if (!pure_power(ideal, k)) return false;
  return !ideal.is_zero();
}

Exponent taylor_bound(const MonomialIdeal& ideal) {
  Exponent b = 0;
  for (const auto& g : ideal.generators()) b += g.degree();
  return b;
}

std::optional<Exponent> s_quotient(const MonomialIdeal& saturated, const MonomialIdeal& ideal) {
  require_same_ambient(saturated, ideal);
  if (!saturated.contains(ideal))
    throw std::invalid_argument("s_quotient: " + ideal.to_string() + " is not contained in " +
                                saturated.to_string());
  const Exponent floor = deg_ideal(saturated);
  const Exponent cap = std::max(taylor_bound(ideal), floor);
  std::optional<Exponent> top;
  for (Exponent e = 0; e <= cap + 1; ++e) {
    bool nonempty = false;
    for_each_of_degree(saturated.ambient(), e, [&](std::span<const Exponent> u) {
      nonempty = saturated.contains(u) && !ideal.contains(u);
      return !nonempty;
    });
    if (nonempty) {
      top = e;
    } else if (e >= floor) {
      return top;
    }
  }
  throw BoundExceeded("s_quotient: quotient nonzero beyond the Taylor bound " +
                      std::to_string(cap) + "; not of finite length");
}

}  // namespace borelreg
