#include "borelreg/borel_type.hpp"

#include <algorithm>
#include <string>

#include "borelreg/error.hpp"

namespace borelreg {

bool is_borel_type(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("Borel-type test on the zero ideal");
  const std::size_t n = ideal.ambient();
  for (std::size_t j = 0; j < n; ++j) {
    if (saturate_variable(ideal, j) != saturate(ideal, MonomialIdeal::variables(n, 0, j)))
      return false;
  }
  return true;
}

std::optional<SbtViolation> sbt_violation(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  std::vector<Exponent> buf(n);
  for (const auto& u : ideal.generators()) {
    for (std::size_t i = 1; i < n; ++i) {
      const Exponent nu = u[i];
      if (nu == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        std::copy(u.exponents().begin(), u.exponents().end(), buf.begin());
        buf[i] = 0;
        // Membership is monotone in t, so t = nu_i(u) decides.
        buf[j] += nu;
        if (!ideal.contains(buf)) return SbtViolation{u, i, j};
      }
    }
  }
  return std::nullopt;
}

bool is_sbt(const MonomialIdeal& ideal) { return !sbt_violation(ideal); }

MonomialIdeal sbt_principal(const Monomial& u) {
  if (u.is_unit()) throw DomainError("principal SBT ideal of the unit monomial");
  const std::size_t n = u.ambient();
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    std::vector<Monomial> row;
    for (std::size_t k = 0; k <= i; ++k) row.push_back(Monomial::power(n, k, u[i]));
    out = product(out, MonomialIdeal(n, std::move(row)));
  }
  return out;
}

MonomialIdeal sbt_closure(const std::vector<Monomial>& seeds) {
  if (seeds.empty()) throw DomainError("SBT closure of an empty set");
  const std::size_t n = seeds.front().ambient();
  for (const auto& s : seeds)
    if (s.is_unit()) throw DomainError("SBT closure seed is the unit monomial");
  MonomialIdeal ideal(n, seeds);
  while (auto v = sbt_violation(ideal)) {
    const Exponent nu = v->generator[v->i];
    Monomial forced = v->generator.with(v->i, 0).with(v->j, v->generator[v->j] + nu);
    ideal = sum(ideal, MonomialIdeal(n, {forced}));
  }
  return ideal;
}

SequentialChain sequential_chain(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw DomainError("sequential chain needs a proper nonzero ideal");
  if (!is_borel_type(ideal))
    throw DomainError("sequential chain needs a Borel-type ideal; " + ideal.to_string() +
                      " is not");
  SequentialChain chain;
  MonomialIdeal current = ideal;
  while (!current.is_unit()) {
    ChainStep step;
    step.ideal = current;
    step.top_variable = *max_support(current);
    const std::size_t vars = step.top_variable + 1;
    step.section = current.with_ambient(vars);
    step.section_saturation = saturate(step.section, MonomialIdeal::irrelevant(vars));
    step.s = s_quotient(step.section_saturation, step.section);
    // Borel-type sections obey reg <= n (deg - 1) + 1.
    const Exponent bound = static_cast<Exponent>(vars) * (deg_ideal(step.section) - 1);
    if (step.s && *step.s > bound)
      throw BoundExceeded("s(J^sat/J) = " + std::to_string(*step.s) +
                          " exceeds n(deg - 1) = " + std::to_string(bound) + " at step " +
                          std::to_string(chain.steps.size()));
    MonomialIdeal next = saturate_variable(current, step.top_variable);
    chain.steps.push_back(std::move(step));
    current = std::move(next);
  }
  chain.terminal = current;
  return chain;
}

Exponent reg_sequential(const SequentialChain& chain) {
  std::optional<Exponent> top;
  for (const auto& step : chain.steps)
    if (step.s) top = std::max(top.value_or(*step.s), *step.s);
  if (!top) throw DomainError("no chain step has J^sat != J; regularity undefined by the chain");
  return *top + 1;
}

Exponent reg_sequential(const MonomialIdeal& ideal) {
  return reg_sequential(sequential_chain(ideal));
}

ChiTableSbt chi_table(const Monomial& u) {
  if (u.is_unit()) throw DomainError("chi table of the unit monomial");
  ChiTableSbt table;
  for (std::size_t i = 0; i < u.ambient(); ++i) {
    if (u[i] == 0) continue;
    table.block_variables.push_back(i);
    table.block_exponents.push_back(u[i]);
  }
  const auto& alpha = table.block_exponents;
  const std::size_t r = alpha.size();
  // Indices below are 1-based to mirror the closed form: the condition
  // "j < q" compares a variable index with a block index.
  for (std::size_t q = 1; q <= r; ++q) {
    const std::size_t vars = table.block_variables[q - 1] + 1;
    Exponent best = 0;
    bool any = false;
    for (std::size_t f = 1; f <= q; ++f) {
      if (alpha[f - 1] > alpha[q - 1]) continue;
      ChiRow row;
      row.q = q - 1;
      row.f = f - 1;
      for (std::size_t j = 1; j <= vars; ++j) {
        const bool first_case = j < q && j <= r && alpha[j - 1] >= alpha[f - 1];
        row.entries.push_back(first_case ? alpha[j - 1] + alpha[q - 1] - 1 : alpha[f - 1] - 1);
      }
      for (Exponent e : row.entries) row.total += e;
      best = any ? std::max(best, row.total) : row.total;
      any = true;
      table.rows.push_back(std::move(row));
    }
    table.chi.push_back(best);
  }
  table.reg_formula = *std::max_element(table.chi.begin(), table.chi.end()) + 1;
  return table;
}

Exponent reg_sbt_formula(const Monomial& u) { return chi_table(u).reg_formula; }

Exponent reg_upper_bound(const MonomialIdeal& ideal) {
  return static_cast<Exponent>(ideal.ambient()) * (deg_ideal(ideal) - 1) + 1;
}

Exponent reg_truncation(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw DomainError("regularity by truncation needs a proper nonzero ideal");
  if (!is_borel_type(ideal))
    throw DomainError("stable-truncation regularity needs a Borel-type ideal; " +
                      ideal.to_string() + " is not");
  const Exponent bound = reg_upper_bound(ideal);
  for (Exponent e = deg_ideal(ideal); e <= bound; ++e)
    if (is_stable(truncate(ideal, e))) return e;
  throw BoundExceeded("no stable truncation up to n(deg - 1) + 1 = " + std::to_string(bound));
}

}  // namespace borelreg
