#include "borelreg/dfixed.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "borelreg/error.hpp"

namespace borelreg {

DSequence::DSequence(std::vector<Exponent> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1)
    throw std::invalid_argument("d-sequence must start with 1");
  for (std::size_t t = 0; t + 1 < entries_.size(); ++t) {
    if (entries_[t + 1] <= entries_[t])
      throw std::invalid_argument("d-sequence must be strictly increasing");
    if (entries_[t + 1] % entries_[t] != 0)
      throw std::invalid_argument("d-sequence entries must divide their successors: " +
                                  std::to_string(entries_[t]) + " does not divide " +
                                  std::to_string(entries_[t + 1]));
  }
}

DSequence DSequence::powers(Exponent p, std::size_t top) {
  std::vector<Exponent> e{1};
  for (std::size_t t = 0; t < top; ++t) e.push_back(e.back() * p);
  return DSequence(std::move(e));
}

std::string DSequence::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    if (t) out += '|';
    out += std::to_string(entries_[t]);
  }
  return out;
}

std::optional<std::size_t> DDecomposition::top_index() const {
  for (std::size_t t = digits.size(); t-- > 0;)
    if (digits[t] > 0) return t;
  return std::nullopt;
}

DDecomposition d_decompose(Exponent a, const DSequence& d) {
  if (a < 0) throw std::invalid_argument("d-decomposition of a negative integer");
  DDecomposition out;
  out.value = a;
  out.digits.assign(d.size(), 0);
  for (std::size_t t = d.size(); t-- > 0;) {
    out.digits[t] = a / d[t];
    a %= d[t];
  }
  return out;
}

bool leq_d(Exponent a, Exponent b, const DSequence& d) {
  const auto da = d_decompose(a, d);
  const auto db = d_decompose(b, d);
  for (std::size_t t = 0; t < d.size(); ++t)
    if (da.digits[t] > db.digits[t]) return false;
  return true;
}

std::optional<DFixedViolation> d_fixed_violation(const MonomialIdeal& ideal, const DSequence& d) {
  const std::size_t n = ideal.ambient();
  std::vector<Exponent> buf(n);
  for (const auto& u : ideal.generators()) {
    for (std::size_t i = 1; i < n; ++i) {
      const Exponent nu = u[i];
      for (Exponent t = 1; t <= nu; ++t) {
        if (!leq_d(t, nu, d)) continue;
        for (std::size_t j = 0; j < i; ++j) {
          std::copy(u.exponents().begin(), u.exponents().end(), buf.begin());
          buf[i] -= t;
          buf[j] += t;
          if (!ideal.contains(buf)) return DFixedViolation{u, i, j, t};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_d_fixed(const MonomialIdeal& ideal, const DSequence& d) {
  return !d_fixed_violation(ideal, d);
}

namespace {

// (x_first^p, ..., x_last^p), 0-based inclusive.
MonomialIdeal bracket_power(std::size_t ambient, std::size_t first, std::size_t last, Exponent p) {
  std::vector<Monomial> gens;
  for (std::size_t k = first; k <= last; ++k) gens.push_back(Monomial::power(ambient, k, p));
  return MonomialIdeal(ambient, std::move(gens));
}

}  // namespace

MonomialIdeal principal_d_fixed(std::size_t ambient, std::size_t var, Exponent alpha,
                                const DSequence& d) {
  if (var >= ambient) throw std::out_of_range("variable index out of range");
  if (alpha <= 0) throw std::invalid_argument("principal d-fixed ideal needs a positive exponent");
  const auto dec = d_decompose(alpha, d);
  MonomialIdeal out = MonomialIdeal::unit(ambient);
  for (std::size_t t = 0; t < d.size(); ++t)
    out = product(out, power(bracket_power(ambient, 0, var, d[t]),
                             static_cast<std::size_t>(dec.digits[t])));
  return out;
}

Exponent reg_principal_d_fixed(std::size_t ambient, Exponent alpha, const DSequence& d) {
  if (ambient == 0 || alpha <= 0) throw std::invalid_argument("bad principal d-fixed data");
  if (ambient == 1) return alpha;
  const auto dec = d_decompose(alpha, d);
  const std::size_t s = *dec.top_index();
  return dec.digits[s] * d[s] + static_cast<Exponent>(ambient - 1) * (d[s] - 1);
}

MonomialIdeal socle_principal_d_fixed(std::size_t ambient, Exponent alpha, const DSequence& d) {
  if (ambient == 0 || alpha <= 0) throw std::invalid_argument("bad principal d-fixed data");
  if (ambient == 1) return MonomialIdeal(1, {Monomial{alpha - 1}});
  const auto dec = d_decompose(alpha, d);
  const std::size_t last = ambient - 1;
  MonomialIdeal out = MonomialIdeal::zero(ambient);
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (dec.digits[t] == 0) continue;
    MonomialIdeal term(ambient, {Monomial(std::vector<Exponent>(ambient, d[t] - 1))});
    term = product(term, power(bracket_power(ambient, 0, last, d[t]),
                               static_cast<std::size_t>(dec.digits[t] - 1)));
    for (std::size_t j = t + 1; j < d.size(); ++j)
      term = product(term, power(bracket_power(ambient, 0, last, d[j]),
                                 static_cast<std::size_t>(dec.digits[j])));
    out = sum(out, term);
  }
  return out;
}

std::string VariablePowerSpec::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out += ", ";
    out += Monomial::power(ambient, pairs[k].var, pairs[k].exponent).to_string();
  }
  return out;
}

VariablePowerSpec normalize_spec(std::size_t ambient, std::vector<VariablePower> pairs) {
  if (pairs.empty()) throw std::invalid_argument("empty variable-power list");
  for (const auto& p : pairs) {
    if (p.var >= ambient) throw std::invalid_argument("variable outside the ambient ring");
    if (p.exponent <= 0) throw std::invalid_argument("variable powers need positive exponents");
  }
  std::sort(pairs.begin(), pairs.end(), [](const VariablePower& a, const VariablePower& b) {
    return a.var != b.var ? a.var < b.var : a.exponent < b.exponent;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  VariablePowerSpec spec{ambient, {}};
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < pairs.size() && !dominated; ++b)
      dominated = b != a && pairs[a].var <= pairs[b].var && pairs[a].exponent >= pairs[b].exponent;
    if (!dominated) spec.pairs.push_back(pairs[a]);
  }
  return spec;
}

bool is_normalized(const VariablePowerSpec& spec) {
  if (spec.pairs.empty()) return false;
  for (std::size_t k = 0; k < spec.pairs.size(); ++k) {
    if (spec.pairs[k].var >= spec.ambient || spec.pairs[k].exponent <= 0) return false;
    if (k && (spec.pairs[k].var <= spec.pairs[k - 1].var ||
              spec.pairs[k].exponent <= spec.pairs[k - 1].exponent))
      return false;
  }
  return true;
}

namespace {

void require_normalized(const VariablePowerSpec& spec) {
  if (!is_normalized(spec))
    throw std::invalid_argument("variable-power spec is not normalized: " + spec.to_string());
}

}  // namespace

MonomialIdeal dfixed_from_powers(const VariablePowerSpec& spec, const DSequence& d) {
  require_normalized(spec);
  MonomialIdeal out = MonomialIdeal::zero(spec.ambient);
  for (const auto& p : spec.pairs)
    out = sum(out, principal_d_fixed(spec.ambient, p.var, p.exponent, d));
  return out;
}

GammaFamily gamma_families(const VariablePowerSpec& spec, const DSequence& d, std::size_t q,
                           GammaRule rule) {
  require_normalized(spec);
  if (q == 0 || q > spec.pairs.size()) throw std::out_of_range("gamma family index out of range");
  const Exponent target = spec.pairs[q - 1].exponent;
  const auto top = d_decompose(target, d);

  std::vector<Exponent> candidates;
  for (Exponent g = 0; g <= target; ++g)
    if (leq_d(g, target, d)) candidates.push_back(g);

  GammaFamily family{q, {}};
  std::vector<Exponent> tuple;
  std::vector<Exponent> digit_sum(d.size(), 0);

  std::function<void(Exponent)> extend = [&](Exponent partial) {
    const std::size_t i = tuple.size();
    if (i + 1 == q) {
      const Exponent last = target - partial;
      if (last < 0 || !leq_d(last, target, d)) return;
      if (rule == GammaRule::kDigitwise) {
        const auto dl = d_decompose(last, d);
        for (std::size_t t = 0; t < d.size(); ++t)
          if (digit_sum[t] + dl.digits[t] != top.digits[t]) return;
      }
      tuple.push_back(last);
      family.tuples.push_back(tuple);
      tuple.pop_back();
      return;
    }
    for (Exponent g : candidates) {
      const Exponent next = partial + g;
      if (next >= spec.pairs[i].exponent || next == target) continue;
      const auto dg = d_decompose(g, d);
      bool ok = true;
      if (rule == GammaRule::kDigitwise) {
        for (std::size_t t = 0; t < d.size() && ok; ++t)
          ok = digit_sum[t] + dg.digits[t] <= top.digits[t];
      } else {
        ok = leq_d(next, target, d);
      }
      if (!ok) continue;
      for (std::size_t t = 0; t < d.size(); ++t) digit_sum[t] += dg.digits[t];
      tuple.push_back(g);
      extend(next);
      tuple.pop_back();
      for (std::size_t t = 0; t < d.size(); ++t) digit_sum[t] -= dg.digits[t];
    }
  };
  extend(0);
  std::sort(family.tuples.begin(), family.tuples.end());
  return family;
}

MonomialIdeal gamma_component(const VariablePowerSpec& spec, const DSequence& d, std::size_t q,
                              GammaRule rule) {
  const auto family = gamma_families(spec, d, q, rule);
  const std::size_t n = spec.ambient;
  MonomialIdeal out = MonomialIdeal::zero(n);
  for (const auto& tuple : family.tuples) {
    MonomialIdeal term = MonomialIdeal::unit(n);
    for (std::size_t e = 0; e < tuple.size(); ++e) {
      const std::size_t first = e == 0 ? 0 : spec.pairs[e - 1].var + 1;
      const std::size_t last = spec.pairs[e].var;
      const auto dec = d_decompose(tuple[e], d);
      for (std::size_t t = 0; t < d.size(); ++t)
        term = product(term, power(bracket_power(n, first, last, d[t]),
                                   static_cast<std::size_t>(dec.digits[t])));
    }
    out = sum(out, term);
  }
  return out;
}

DFixedDecomposition dfixed_decomposition(const VariablePowerSpec& spec, const DSequence& d,
                                         GammaRule rule) {
  require_normalized(spec);
  DFixedDecomposition out{{}, MonomialIdeal::zero(spec.ambient)};
  for (std::size_t q = 1; q <= spec.pairs.size(); ++q) {
    out.components.push_back(gamma_component(spec, d, q, rule));
    out.total = sum(out.total, out.components.back());
  }
  return out;
}

Exponent BlockStructure::chi_sum() const {
  Exponent s = 0;
  for (const auto& b : blocks) s += b.chi;
  return s;
}

BlockStructure block_structure(const VariablePowerSpec& spec, const DSequence& d,
                               BranchRule rule) {
  require_normalized(spec);
  if (spec.pairs.back().var + 1 != spec.ambient)
    throw DomainError("chi sequence needs the last generator in the last variable x" +
                      std::to_string(spec.ambient));
  BlockStructure bs;
  const auto& pairs = spec.pairs;
  const std::size_t r = pairs.size();
  std::vector<std::size_t> tops;
  for (const auto& p : pairs) {
    bs.decompositions.push_back(d_decompose(p.exponent, d));
    tops.push_back(*bs.decompositions.back().top_index());
  }
  for (std::size_t q = 1; q < r; ++q)
    if (tops[q] < tops[q - 1])
      throw std::logic_error("top digit indices must be nondecreasing for a normalized spec");

  for (std::size_t q = 0; q < r; ++q) {
    if (q + 1 < r && tops[q + 1] == tops[q]) continue;
    Block b;
    b.first = bs.blocks.empty() ? 0 : bs.blocks.back().last + 1;
    b.last = q;
    b.top = tops[q];
    const std::size_t prev_vars = bs.blocks.empty() ? 0 : pairs[bs.blocks.back().last].var + 1;
    b.gap = pairs[q].var + 1 - prev_vars;
    b.branch = b.gap >= 2 ? BlockBranch::kDirect : BlockBranch::kRecursive;
    bs.blocks.push_back(b);
  }

  auto digit = [&](std::size_t gen, std::size_t t) { return bs.decompositions[gen].digits[t]; };

  for (std::size_t j = 0; j < bs.blocks.size();) {
    Block& b = bs.blocks[j];
    if (b.branch == BlockBranch::kDirect) {
      const Exponent dt = d[b.top];
      b.chi = (dt - 1) * static_cast<Exponent>(b.gap) + dt * (digit(b.last, b.top) - 1);
      ++j;
      continue;
    }
    // Maximal run of gap-1 blocks; each holds exactly one generator.
    std::size_t len = 0;
    while (j + len < bs.blocks.size() && bs.blocks[j + len].branch == BlockBranch::kRecursive)
      ++len;
    const std::size_t start = bs.blocks[j].first;
    for (std::size_t m = len; m >= 1;) {
      const std::size_t cur = start + m - 1;
      Block& cur_block = bs.blocks[j + m - 1];
      if (cur == 0) {
        cur_block.chi = pairs[0].exponent - 1;
        m -= 1;
        continue;
      }
      const std::size_t prev = cur - 1;
      const std::size_t sp = tops[prev];
      const std::size_t sc = tops[cur];
      const Exponent lhs = digit(prev, sp);
      const Exponent rhs = rule == BranchRule::kPreviousTopDigit ? digit(cur, sp) : digit(cur, sc);
      Exponent tail = 0;
      for (std::size_t t = sp + 1; t <= sc; ++t) tail += digit(cur, t) * d[t];
      if (lhs > rhs) {
        cur_block.chi = tail - 1;
        m -= 1;
      } else {
        cur_block.chi = (digit(cur, sp) - lhs + 1) * d[sp] + tail - 1;
        if (m >= 2) {
          bs.blocks[j + m - 2].chi = lhs * d[sp] - 1;
          m -= 2;
        } else {
          m -= 1;
        }
      }
    }
    j += len;
  }
  return bs;
}

std::vector<Exponent> chi_sequence(const VariablePowerSpec& spec, const DSequence& d,
                                   BranchRule rule) {
  std::vector<Exponent> out;
  for (const auto& b : block_structure(spec, d, rule).blocks) out.push_back(b.chi);
  return out;
}

Exponent max_socle_degree(const VariablePowerSpec& spec, const DSequence& d, BranchRule rule) {
  return block_structure(spec, d, rule).chi_sum();
}

Exponent reg_dfixed_powers(const VariablePowerSpec& spec, const DSequence& d, BranchRule rule) {
  return max_socle_degree(spec, d, rule) + 1;
}

SocleWitness socle_witness_ideal(const VariablePowerSpec& spec, const DSequence& d,
                                 BranchRule rule, WitnessForm form) {
  const auto bs = block_structure(spec, d, rule);
  const std::size_t n = spec.ambient;
  const auto& pairs = spec.pairs;
  MonomialIdeal witness = MonomialIdeal::unit(n);
  for (std::size_t j = 0; j < bs.blocks.size(); ++j) {
    const Block& b = bs.blocks[j];
    MonomialIdeal factor(n);
    if (b.branch == BlockBranch::kRecursive) {
      if (b.chi < 0) throw std::logic_error("negative chi in a witness factor");
      factor = MonomialIdeal(n, {Monomial::power(n, pairs[b.last].var, b.chi)});
    } else {
      const Exponent dt = d[b.top];
      const std::size_t first_var = j == 0 ? 0 : pairs[bs.blocks[j - 1].last].var + 1;
      std::vector<Exponent> corner(n, 0);
      for (std::size_t k = first_var; k <= pairs[b.last].var; ++k) corner[k] = dt - 1;
      MonomialIdeal inner = MonomialIdeal::zero(n);
      const std::size_t from = form == WitnessForm::kLastGenerator ? b.last : b.first;
      for (std::size_t e = from; e <= b.last; ++e) {
        const std::size_t lo = e == 0 ? 0 : pairs[e - 1].var + 1;
        inner = sum(inner, power(bracket_power(n, lo, pairs[e].var, dt),
                                 static_cast<std::size_t>(bs.decompositions[e].digits[b.top] - 1)));
      }
      factor = product(MonomialIdeal(n, {Monomial(std::move(corner))}), inner);
    }
    witness = product(witness, factor);
  }

  const MonomialIdeal ideal = dfixed_from_powers(spec, d);
  SocleWitness out;
  out.ideal = witness;
  out.inside_colon = colon(ideal, MonomialIdeal::irrelevant(n)).contains(witness);
  out.avoids_ideal = std::none_of(witness.generators().begin(), witness.generators().end(),
                                  [&](const Monomial& g) { return ideal.contains(g); });
  out.degree_matches = deg_ideal(witness) == bs.chi_sum();
  return out;
}

}  // namespace borelreg
