#include "borelreg/oracle.hpp"

#include <algorithm>

#include "borelreg/error.hpp"

namespace borelreg::oracle {

namespace {

void require_artinian(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw DomainError("socle scan needs a proper nonzero ideal");
  if (!is_artinian(ideal))
    throw DomainError(ideal.to_string() + " is not artinian; its socle scan is unbounded");
}

Exponent box_bound(const MonomialIdeal& ideal) {
  Exponent b = 0;
  for (std::size_t k = 0; k < ideal.ambient(); ++k) b += *pure_power(ideal, k) - 1;
  return b;
}

// Calls fn on every standard monomial of degree e; returns whether any exist.
template <typename Fn>
bool scan_standard(const MonomialIdeal& ideal, Exponent e, Fn&& fn) {
  bool any = false;
  for_each_of_degree(ideal.ambient(), e, [&](std::span<const Exponent> u) {
    if (!ideal.contains(u)) {
      any = true;
      fn(u);
    }
    return true;
  });
  return any;
}

}  // namespace

SocleReport socle_oracle(const MonomialIdeal& ideal) {
  require_artinian(ideal);
  const std::size_t n = ideal.ambient();
  const Exponent cap = box_bound(ideal);
  SocleReport report;
  std::vector<Exponent> buf(n);
  for (Exponent e = 0;; ++e) {
    const bool any = scan_standard(ideal, e, [&](std::span<const Exponent> u) {
      std::copy(u.begin(), u.end(), buf.begin());
      for (std::size_t j = 0; j < n; ++j) {
        buf[j] += 1;
        const bool in = ideal.contains(buf);
        buf[j] -= 1;
        if (!in) return;
      }
      report.socle.emplace_back(std::vector<Exponent>(u.begin(), u.end()));
    });
    if (!any) break;
    if (e > cap) throw BoundExceeded("standard monomial above the pure-power box bound");
  }
  if (!report.socle.empty()) {
    report.max_degree = report.socle.back().degree();
    report.reg = *report.max_degree + 1;
  }
  return report;
}

Exponent top_standard_degree(const MonomialIdeal& ideal) {
  require_artinian(ideal);
  const Exponent cap = box_bound(ideal);
  Exponent top = 0;
  for (Exponent e = 0;; ++e) {
    if (!scan_standard(ideal, e, [](std::span<const Exponent>) {})) break;
    if (e > cap) throw BoundExceeded("standard monomial above the pure-power box bound");
    top = e;
  }
  return top;
}

Exponent reg_oracle(const MonomialIdeal& ideal) {
  auto report = socle_oracle(ideal);
  if (!report.reg) throw std::logic_error("artinian ideal with empty socle");
  return *report.reg;
}

std::size_t standard_count(const MonomialIdeal& ideal) {
  require_artinian(ideal);
  std::size_t count = 0;
  for (Exponent e = 0;; ++e)
    if (!scan_standard(ideal, e, [&](std::span<const Exponent>) { ++count; })) break;
  return count;
}

std::vector<Monomial> quotient_socle(const MonomialIdeal& ideal, const MonomialIdeal& saturated) {
  const std::size_t n = ideal.ambient();
  std::vector<Monomial> out;
  if (saturated == ideal) return out;
  Exponent cap = 0;
  for (const auto& g : ideal.generators()) cap += g.degree();
  const Exponent floor = deg_ideal(saturated);
  std::vector<Exponent> buf(n);
  for (Exponent e = 0;; ++e) {
    bool outside = false;
    for (const auto& u : ideal_slice(saturated, e)) {
      if (ideal.contains(u)) continue;
      outside = true;
      std::copy(u.exponents().begin(), u.exponents().end(), buf.begin());
      bool killed = true;
      for (std::size_t j = 0; j < n && killed; ++j) {
        buf[j] += 1;
        killed = ideal.contains(buf);
        buf[j] -= 1;
      }
      if (killed) out.push_back(u);
    }
    if (!outside && e >= floor) break;
    if (e > cap) throw BoundExceeded("saturation quotient beyond the Taylor bound");
  }
  return out;
}

ChainSocle chain_socle(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw DomainError("socle regularity needs a proper nonzero ideal");
  const std::size_t n = ideal.ambient();
  ChainSocle out;
  Exponent top = -1;
  MonomialIdeal current = ideal;
  while (!current.is_unit()) {
    std::size_t m = 0;
    for (const auto& g : current.generators()) m = std::max(m, *g.max_support());
    const auto j = current.with_ambient(m + 1);
    const auto jsat = saturate(j, MonomialIdeal::irrelevant(m + 1));
    if (jsat == j) throw DomainError(ideal.to_string() + " is not of Borel type");
    out.socles.push_back(quotient_socle(j, jsat));
    for (const auto& u : out.socles.back()) top = std::max(top, u.degree());
    current = jsat.with_ambient(n);
  }
  if (top < 0) throw std::logic_error("chain without socle");
  out.reg = top + 1;
  return out;
}

std::string Counterexample::describe() const {
  std::string out = "u = " + monomial.to_string() + ", i = x" + std::to_string(i + 1) +
                    ", j = x" + std::to_string(j + 1);
  if (t) out += ", t = " + std::to_string(t);
  return out;
}

std::vector<Monomial> ideal_slice(const MonomialIdeal& ideal, Exponent degree) {
  std::vector<Monomial> out;
  for_each_of_degree(ideal.ambient(), degree, [&](std::span<const Exponent> u) {
    for (const auto& g : ideal.generators()) {
      if (divides(g.exponents(), u)) {
        out.emplace_back(std::vector<Exponent>(u.begin(), u.end()));
        break;
      }
    }
    return true;
  });
  return out;
}

namespace {

// Runs `check` over every monomial of I up to deg(I) + extra.
template <typename Check>
CheckResult over_ideal(const MonomialIdeal& ideal, Exponent extra, Check&& check) {
  CheckResult result;
  const Exponent top = deg_ideal(ideal) + extra;
  for (Exponent e = 0; e <= top && result.holds; ++e) {
    for (const auto& u : ideal_slice(ideal, e)) {
      ++result.monomials_checked;
      if (auto c = check(u)) {
        result.holds = false;
        result.witness = std::move(c);
        break;
      }
    }
  }
  return result;
}

}  // namespace

CheckResult exhaustive_sbt_check(const MonomialIdeal& ideal, Exponent extra) {
  const std::size_t n = ideal.ambient();
  return over_ideal(ideal, extra, [&](const Monomial& u) -> std::optional<Counterexample> {
    for (std::size_t i = 0; i < n; ++i) {
      const Exponent nu = u[i];
      for (std::size_t j = 0; j < i; ++j) {
        bool found = false;
        for (Exponent t = 0; t <= nu && !found; ++t)
          found = ideal.contains(u.with(i, 0).with(j, u[j] + t));
        if (!found) return Counterexample{u, i, j, 0};
      }
    }
    return std::nullopt;
  });
}

CheckResult exhaustive_dfixed_check(const MonomialIdeal& ideal, const DSequence& d,
                                    Exponent extra) {
  const std::size_t n = ideal.ambient();
  return over_ideal(ideal, extra, [&](const Monomial& u) -> std::optional<Counterexample> {
    for (std::size_t i = 0; i < n; ++i) {
      for (Exponent t = 1; t <= u[i]; ++t) {
        if (!leq_d(t, u[i], d)) continue;
        for (std::size_t j = 0; j < i; ++j)
          if (!ideal.contains(u.with(i, u[i] - t).with(j, u[j] + t)))
            return Counterexample{u, i, j, t};
      }
    }
    return std::nullopt;
  });
}

CheckResult exhaustive_stability_check(const MonomialIdeal& ideal, Exponent extra) {
  return over_ideal(ideal, extra, [&](const Monomial& u) -> std::optional<Counterexample> {
    auto m = u.max_support();
    if (!m) return std::nullopt;
    for (std::size_t j = 0; j < *m; ++j)
      if (!ideal.contains(u.with(*m, u[*m] - 1).with(j, u[j] + 1)))
        return Counterexample{u, *m, j, 0};
    return std::nullopt;
  });
}

CheckResult borel_witness_check(const MonomialIdeal& ideal, Exponent extra) {
  const std::size_t n = ideal.ambient();
  std::vector<Exponent> reach(n, 1);
  for (const auto& g : ideal.generators())
    for (std::size_t k = 0; k < n; ++k) reach[k] = std::max(reach[k], g[k]);
  return over_ideal(ideal, extra, [&](const Monomial& u) -> std::optional<Counterexample> {
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        bool found = false;
        for (Exponent t = 1; t <= reach[j] && !found; ++t)
          found = ideal.contains(u.with(i, 0).with(j, u[j] + t));
        if (!found) return Counterexample{u, i, j, 0};
      }
    }
    return std::nullopt;
  });
}

}  // namespace borelreg::oracle
