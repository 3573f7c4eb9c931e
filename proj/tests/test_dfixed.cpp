#include "doctest.h"

#include <algorithm>

#include "borelreg/borel_type.hpp"
#include "borelreg/dfixed.hpp"
#include "borelreg/error.hpp"
#include "borelreg/oracle.hpp"
#include "support/generators.hpp"

using namespace borelreg;
using borelreg::testing::Rng;

namespace {

// (x_first^p, ..., x_last^p), 1-based bounds
MonomialIdeal row(std::size_t n, std::size_t first, std::size_t last, Exponent p) {
  std::vector<Monomial> g;
  for (std::size_t v = first; v <= last; ++v) g.push_back(Monomial::power(n, v - 1, p));
  return MonomialIdeal(n, std::move(g));
}

MonomialIdeal xpow(std::size_t n, std::size_t var, Exponent p) {
  return MonomialIdeal(n, {Monomial::power(n, var - 1, p)});
}

MonomialIdeal prod(std::initializer_list<MonomialIdeal> parts) {
  MonomialIdeal out = MonomialIdeal::unit(parts.begin()->ambient());
  for (const auto& p : parts) out = product(out, p);
  return out;
}

// pairs with 1-based variables
VariablePowerSpec spec(std::size_t n, std::vector<std::pair<std::size_t, Exponent>> pairs) {
  std::vector<VariablePower> out;
  for (auto [v, a] : pairs) out.push_back({v - 1, a});
  return normalize_spec(n, out);
}

const DSequence d1_2_4_12({1, 2, 4, 12});
const DSequence d1_2_6_12({1, 2, 6, 12});
const DSequence d1_4_12({1, 4, 12});
const DSequence d1_2({1, 2});
const DSequence d1_4({1, 4});
const DSequence d1_2_4({1, 2, 4});

Exponent binomial_mod(Exponent b, Exponent a, Exponent p) {
  // Pascal's triangle mod p
  std::vector<std::vector<Exponent>> c(b + 1, std::vector<Exponent>(b + 1, 0));
  for (Exponent i = 0; i <= b; ++i) {
    c[i][0] = 1;
    for (Exponent j = 1; j <= i; ++j) c[i][j] = (c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0)) % p;
  }
  return c[b][a];
}

}  // namespace

TEST_CASE("DSequence validation") {
  CHECK_THROWS(DSequence({2, 4}));
  CHECK_THROWS(DSequence({1, 3, 4}));
  CHECK_THROWS(DSequence({1, 1}));
  CHECK_THROWS(DSequence({}));
  CHECK(DSequence({1}).top() == 0);
  CHECK(DSequence::powers(3, 2) == DSequence({1, 3, 9}));
  CHECK(d1_2_4_12.to_string() == "1|2|4|12");
}

TEST_CASE("d_decompose") {
  CHECK(d_decompose(7, d1_2_4_12).digits == std::vector<Exponent>{1, 1, 1, 0});
  CHECK(d_decompose(10, d1_2_4_12).digits == std::vector<Exponent>{0, 1, 2, 0});
  CHECK(d_decompose(17, d1_2_4_12).digits == std::vector<Exponent>{1, 0, 1, 1});
  CHECK(d_decompose(0, d1_2_4_12).digits == std::vector<Exponent>{0, 0, 0, 0});
  CHECK_FALSE(d_decompose(0, d1_2).top_index().has_value());
  CHECK(d_decompose(17, d1_2_4_12).top_index() == 3u);
  CHECK(d_decompose(30, d1_4).digits == std::vector<Exponent>{2, 7});
}

TEST_CASE("leq_d") {
  CHECK(leq_d(2, 10, d1_2_4_12));
  CHECK(leq_d(9, 9, d1_2_4_12));
  CHECK_FALSE(leq_d(3, 4, d1_4));
  CHECK_FALSE(leq_d(1, 10, d1_2_4_12));
}

TEST_CASE("is_d_fixed") {
  CHECK(is_d_fixed(principal_d_fixed(3, 2, 16, d1_4_12), d1_4_12));
  auto bad = MonomialIdeal(2, {Monomial{0, 2}});
  CHECK_FALSE(is_d_fixed(bad, d1_2));
  auto v = d_fixed_violation(bad, d1_2);
  REQUIRE(v);
  CHECK(v->t == 2);
  for (Exponent k = 1; k <= 5; ++k) CHECK(is_d_fixed(MonomialIdeal(1, {Monomial{k}}), d1_2_4));
}

TEST_CASE("principal d-fixed ideals") {
  CHECK(principal_d_fixed(2, 1, 7, d1_2_4_12) == prod({row(2, 1, 2, 1), row(2, 1, 2, 2), row(2, 1, 2, 4)}));
  for (Exponent a = 1; a <= 9; ++a)
    CHECK(principal_d_fixed(1, 0, a, d1_2_4) == MonomialIdeal(1, {Monomial{a}}));
  CHECK(principal_d_fixed(2, 1, 7, d1_4_12) == power(MonomialIdeal::irrelevant(2), 7));
  // embedded in more variables
  CHECK(principal_d_fixed(5, 1, 7, d1_2_4_12) == prod({row(5, 1, 2, 1), row(5, 1, 2, 2), row(5, 1, 2, 4)}));
}

TEST_CASE("principal d-fixed regularity and socle") {
  CHECK(reg_principal_d_fixed(3, 16, d1_4_12) == 34);
  CHECK(oracle::reg_oracle(principal_d_fixed(3, 2, 16, d1_4_12)) == 34);
  for (Exponent a = 1; a <= 7; ++a) CHECK(reg_principal_d_fixed(1, a, d1_2_4) == a);
  CHECK(reg_principal_d_fixed(2, 2, d1_2) == 3);

  CHECK(socle_principal_d_fixed(2, 2, d1_2) == MonomialIdeal(2, {Monomial{1, 1}}));
  CHECK(socle_principal_d_fixed(1, 4, d1_2) == MonomialIdeal(1, {Monomial{3}}));

  // alpha = 3 = (1, 1) over 1|2
  auto i = principal_d_fixed(2, 1, 3, d1_2);
  CHECK(i == product(MonomialIdeal::irrelevant(2), row(2, 1, 2, 2)));
  auto j = socle_principal_d_fixed(2, 3, d1_2);
  auto report = oracle::socle_oracle(i);
  std::vector<Monomial> from_j;
  for (const auto& g : j.generators())
    if (!i.contains(g)) from_j.push_back(g);
  std::sort(from_j.begin(), from_j.end());
  auto socle = report.socle;
  std::sort(socle.begin(), socle.end());
  CHECK(from_j == socle);
  CHECK(report.reg == reg_principal_d_fixed(2, 3, d1_2));
}

TEST_CASE("normalize_spec") {
  auto s = spec(5, {{2, 7}, {3, 10}, {5, 17}});
  CHECK(s.pairs.size() == 3);
  CHECK(is_normalized(s));
  CHECK(spec(3, {{2, 7}, {3, 5}}).pairs == std::vector<VariablePower>{{2, 5}});
  CHECK(spec(1, {{1, 4}}).pairs == std::vector<VariablePower>{{0, 4}});
  CHECK(spec(3, {{3, 5}, {3, 4}}).pairs == std::vector<VariablePower>{{2, 4}});
  CHECK_THROWS(normalize_spec(3, {}));
  CHECK_THROWS(normalize_spec(3, {{3, 1}}));
  CHECK_THROWS(normalize_spec(3, {{0, 0}}));
  CHECK(s.to_string() == "x2^7, x3^10, x5^17");
}

TEST_CASE("dfixed_from_powers") {
  auto s = spec(5, {{2, 7}, {3, 10}, {5, 17}});
  auto expected = sum(sum(principal_d_fixed(5, 1, 7, d1_2_4_12), principal_d_fixed(5, 2, 10, d1_2_4_12)),
                      principal_d_fixed(5, 4, 17, d1_2_4_12));
  CHECK(dfixed_from_powers(s, d1_2_4_12) == expected);
  CHECK(dfixed_from_powers(spec(3, {{2, 7}}), d1_2_4) == principal_d_fixed(3, 1, 7, d1_2_4));

  auto i = dfixed_from_powers(spec(3, {{1, 2}, {2, 7}, {3, 16}}), d1_4_12);
  auto by_hand = sum(sum(xpow(3, 1, 2), product(power(row(3, 1, 2, 1), 3), row(3, 1, 2, 4))),
                     product(row(3, 1, 3, 4), row(3, 1, 3, 12)));
  CHECK(i == by_hand);

  VariablePowerSpec raw{3, {{2, 4}, {1, 7}}};
  CHECK_THROWS_AS(dfixed_from_powers(raw, d1_2), std::invalid_argument);
}

TEST_CASE("gamma families over 1|2|4|12") {
  auto s = spec(5, {{2, 7}, {3, 10}, {5, 17}});
  CHECK(gamma_families(s, d1_2_4_12, 1).tuples == std::vector<std::vector<Exponent>>{{7}});
  CHECK(gamma_families(s, d1_2_4_12, 2).tuples ==
        std::vector<std::vector<Exponent>>{{0, 10}, {2, 8}, {4, 6}, {6, 4}});
  CHECK(gamma_families(s, d1_2_4_12, 3).tuples ==
        std::vector<std::vector<Exponent>>{{0, 0, 17}, {0, 1, 16}, {0, 4, 13}, {0, 5, 12}, {1, 0, 16},
                                           {1, 4, 12}, {4, 0, 13}, {4, 1, 12}, {5, 0, 12}});
  for (std::size_t q = 1; q <= 3; ++q)
    CHECK(gamma_families(s, d1_2_4_12, q, GammaRule::kPartialSums).tuples ==
          gamma_families(s, d1_2_4_12, q).tuples);
}

TEST_CASE("decomposition components over 1|2|4|12") {
  const std::size_t n = 5;
  auto s = spec(n, {{2, 7}, {3, 10}, {5, 17}});
  auto dec = dfixed_decomposition(s, d1_2_4_12);
  REQUIRE(dec.components.size() == 3);
  auto m12 = [&](Exponent p) { return row(n, 1, 2, p); };
  auto m45 = [&](Exponent p) { return row(n, 4, 5, p); };
  auto x3 = [&](Exponent p) { return xpow(n, 3, p); };

  CHECK(dec.components[0] == prod({m12(1), m12(2), m12(4)}));

  MonomialIdeal i2 = prod({m12(2), m12(4), x3(4)});
  i2 = sum(i2, prod({m12(4), x3(6)}));
  i2 = sum(i2, prod({m12(2), x3(8)}));
  i2 = sum(i2, x3(10));
  CHECK(dec.components[1] == i2);

  MonomialIdeal i3 = prod({m12(1), m12(4), m45(12)});
  for (const auto& term : {prod({m12(4), x3(1), m45(12)}), prod({m12(4), m45(1), m45(12)}),
                           prod({m12(1), x3(4), m45(12)}), prod({m12(1), m45(4), m45(12)}),
                           prod({x3(1), m45(4), m45(12)}), prod({x3(4), m45(1), m45(12)}),
                           prod({x3(5), m45(12)}), prod({m45(1), m45(4), m45(12)})})
    i3 = sum(i3, term);
  CHECK(dec.components[2] == i3);
  CHECK(dec.total == dfixed_from_powers(s, d1_2_4_12));
}

TEST_CASE("partial-sum gamma rule admits a carry tuple") {
  auto s = spec(3, {{1, 2}, {2, 5}, {3, 11}});
  auto digitwise = gamma_families(s, d1_2, 3).tuples;
  auto partial = gamma_families(s, d1_2, 3, GammaRule::kPartialSums).tuples;
  const std::vector<Exponent> carry{1, 1, 9};
  CHECK(std::find(partial.begin(), partial.end(), carry) != partial.end());
  CHECK(std::find(digitwise.begin(), digitwise.end(), carry) == digitwise.end());
  // its product x1 x2 (x1^2, x2^2, x3^2)^4 x3 falls outside the ideal
  auto i = dfixed_from_powers(s, d1_2);
  CHECK_FALSE(i.contains(Monomial{1, 1, 9}));
  CHECK_FALSE(dfixed_decomposition(s, d1_2, GammaRule::kPartialSums).total == i);
  CHECK(dfixed_decomposition(s, d1_2).total == i);
}

TEST_CASE("block structure, five variables") {
  auto s = spec(5, {{2, 7}, {3, 10}, {5, 17}});
  auto b = block_structure(s, d1_2_6_12);
  REQUIRE(b.blocks.size() == 2);
  CHECK(b.blocks[0].branch == BlockBranch::kDirect);
  CHECK(b.blocks[1].branch == BlockBranch::kDirect);
  CHECK(chi_sequence(s, d1_2_6_12) == std::vector<Exponent>{15, 22});
  CHECK(max_socle_degree(s, d1_2_6_12) == 37);
  CHECK(reg_dfixed_powers(s, d1_2_6_12) == 38);

  auto w = socle_witness_ideal(s, d1_2_6_12);
  CHECK(w.holds());
  CHECK(w.ideal.contains(Monomial{5, 5, 5, 11, 11}));
  CHECK(deg_ideal(w.ideal) == 37);
}

TEST_CASE("block structure, three variables") {
  auto s = spec(3, {{1, 2}, {2, 7}, {3, 16}});
  auto b = block_structure(s, d1_4_12);
  REQUIRE(b.blocks.size() == 3);
  for (const auto& block : b.blocks) CHECK(block.branch == BlockBranch::kRecursive);
  CHECK(chi_sequence(s, d1_4_12) == std::vector<Exponent>{1, 3, 15});
  CHECK(max_socle_degree(s, d1_4_12) == 19);
  CHECK(reg_dfixed_powers(s, d1_4_12) == 20);

  auto w = socle_witness_ideal(s, d1_4_12);
  CHECK(w.holds());
  CHECK(w.ideal.contains(Monomial{1, 3, 15}));
  // the monomial x1 x2^3 x3^19 is in I, not in its socle
  CHECK(dfixed_from_powers(s, d1_4_12).contains(Monomial{1, 3, 19}));
}

TEST_CASE("block structure, single pair") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (Exponent a = 1; a <= 12; ++a)
      for (const auto& d : {d1_2, d1_4, d1_2_4}) {
        auto s = spec(n, {{n, a}});
        auto b = block_structure(s, d);
        REQUIRE(b.blocks.size() == 1);
        auto dec = d_decompose(a, d);
        const std::size_t top = *dec.top_index();
        const Exponent ds = d[top];
        CHECK(b.blocks[0].chi == (ds - 1) * static_cast<Exponent>(n) + ds * (dec.digits[top] - 1));
        CHECK(reg_dfixed_powers(s, d) == reg_principal_d_fixed(n, a, d));
      }
  auto s = spec(2, {{2, 2}});
  CHECK(max_socle_degree(s, d1_2) == 2);
  CHECK(reg_dfixed_powers(s, d1_2) == 3);
  CHECK(socle_witness_ideal(s, d1_2).ideal == MonomialIdeal(2, {Monomial{1, 1}}));
}

TEST_CASE("block structure needs the last variable") {
  CHECK_THROWS_AS(block_structure(spec(3, {{2, 4}}), d1_2), DomainError);
}

TEST_CASE("regularity equality beyond a single block") {
  // reg(I) = reg(I_r) with two blocks
  auto s = spec(2, {{1, 3}, {2, 10}});
  auto b = block_structure(s, d1_2_4);
  CHECK(b.blocks.size() == 2);
  auto i = dfixed_from_powers(s, d1_2_4);
  auto ir = principal_d_fixed(2, 1, 10, d1_2_4);
  CHECK(oracle::reg_oracle(i) == 11);
  CHECK(oracle::reg_oracle(ir) == 11);
  for (auto [a, b2, d] : {std::tuple{1, 7, d1_2}, {2, 11, d1_4}, {1, 3, d1_2}}) {
    auto t = spec(2, {{1, a}, {2, b2}});
    CHECK(block_structure(t, d).blocks.size() == 2);
    CHECK(oracle::reg_oracle(dfixed_from_powers(t, d)) == oracle::reg_oracle(principal_d_fixed(2, 1, b2, d)));
  }
}

TEST_CASE("property: d-decomposition round trip") {
  for (const auto& d : testing::small_dsequences()) {
    for (Exponent a = 0; a <= 200; ++a) {
      auto dec = d_decompose(a, d);
      Exponent back = 0;
      for (std::size_t t = 0; t < d.size(); ++t) {
        back += dec.digits[t] * d[t];
        if (t < d.top()) CHECK(dec.digits[t] < d[t + 1] / d[t]);
      }
      CHECK(back == a);
      CHECK(dec.value == a);
    }
  }
}

TEST_CASE("property: leq_d is a partial order") {
  for (const auto& d : {d1_2_4, d1_2_6_12, d1_4}) {
    for (Exponent a = 0; a <= 60; ++a)
      for (Exponent b = 0; b <= 60; ++b) {
        CHECK((leq_d(a, b, d) && leq_d(b, a, d)) == (a == b));
        if (!leq_d(a, b, d)) continue;
        for (Exponent c = 0; c <= 60; ++c)
          if (leq_d(b, c, d)) CHECK(leq_d(a, c, d));
      }
  }
}

TEST_CASE("property: prime powers follow Lucas") {
  for (Exponent p : {2, 3}) {
    auto d = DSequence::powers(p, p == 2 ? 6 : 4);
    for (Exponent b = 0; b <= 64; ++b)
      for (Exponent a = 0; a <= b; ++a) CHECK(leq_d(a, b, d) == (binomial_mod(b, a, p) != 0));
  }
}

TEST_CASE("property: ideals from powers") {
  Rng rng(8080);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = testing::pick(rng, 1, 4);
    const auto ds = testing::small_dsequences();
    const auto& d = ds[testing::pick(rng, 0, 2)];
    auto s = testing::random_spec(rng, n, 3, 12);
    auto i = dfixed_from_powers(s, d);
    CHECK(is_d_fixed(i, d));
    CHECK(dfixed_decomposition(s, d).total == i);
  }
}

TEST_CASE("property: generator-level d-fixed matches the exhaustive check") {
  Rng rng(6060);
  int yes = 0, no = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = testing::pick(rng, 1, 3);
    const auto ds = testing::small_dsequences();
    const auto& d = ds[testing::pick(rng, 0, 3)];
    MonomialIdeal i = round % 3 == 0 ? dfixed_from_powers(testing::random_spec(rng, n, 3, 6), d)
                                     : testing::random_ideal(rng, n, 3, 4);
    const bool gen = is_d_fixed(i, d);
    (gen ? yes : no)++;
    CHECK(gen == oracle::exhaustive_dfixed_check(i, d, 2).holds);
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("property: socle formula matches enumeration") {
  Rng rng(7070);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = testing::pick(rng, 1, 4);
    const auto ds = testing::small_dsequences();
    const auto& d = ds[testing::pick(rng, 0, 3)];
    auto s = testing::random_spec(rng, n, 3, n >= 4 ? 8 : 12);
    auto i = dfixed_from_powers(s, d);
    auto report = oracle::socle_oracle(i);
    CHECK(max_socle_degree(s, d) == report.max_degree);
    CHECK(socle_witness_ideal(s, d, BranchRule::kPreviousTopDigit, WitnessForm::kLastGenerator).holds());
    bool shared = false;
    for (const auto& b : block_structure(s, d).blocks)
      shared = shared || (b.branch == BlockBranch::kDirect && b.first < b.last);
    if (!shared) CHECK(socle_witness_ideal(s, d).holds());
  }
}

TEST_CASE("published witness with two generators in a direct block") {
  auto s = spec(2, {{1, 3}, {2, 5}});
  const DSequence d({1, 2, 6});
  auto b = block_structure(s, d);
  REQUIRE(b.blocks.size() == 1);
  CHECK(b.blocks[0].branch == BlockBranch::kDirect);
  CHECK(b.blocks[0].chi == 4);
  CHECK(oracle::socle_oracle(dfixed_from_powers(s, d)).max_degree == 4);

  auto published = socle_witness_ideal(s, d);
  CHECK(published.ideal == MonomialIdeal(2, {Monomial{1, 1}}));
  CHECK_FALSE(published.inside_colon);
  CHECK_FALSE(published.degree_matches);

  auto last = socle_witness_ideal(s, d, BranchRule::kPreviousTopDigit, WitnessForm::kLastGenerator);
  CHECK(last.holds());
  CHECK(last.ideal == MonomialIdeal(2, {Monomial{1, 3}}));
}

TEST_CASE("property: intermediate colon chain") {
  Rng rng(9090);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = testing::pick(rng, 2, 4);
    const auto ds = testing::small_dsequences();
    const auto& d = ds[testing::pick(rng, 0, 3)];
    auto s = testing::random_spec(rng, n, 3, 8);
    MonomialIdeal partial = MonomialIdeal::zero(n);
    for (std::size_t q = 0; q < s.pairs.size(); ++q) {
      const auto iq = principal_d_fixed(n, s.pairs[q].var, s.pairs[q].exponent, d);
      partial = sum(partial, iq);
      const auto mq = MonomialIdeal::variables(n, 0, s.pairs[q].var);
      const auto nq = MonomialIdeal::variables(n, q ? s.pairs[q - 1].var + 1 : 0, s.pairs[q].var);
      const auto left = sum(colon(iq, mq), partial);
      const auto mid = colon(partial, mq);
      const auto right = colon(partial, nq);
      CHECK(mid.contains(left));
      CHECK(right.contains(mid));
      CHECK(right == sum(colon(iq, nq), partial));
    }
  }
}

TEST_CASE("property: principal regularity calibration") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& d : {d1_2, d1_4, d1_2_4})
      for (Exponent a = 1; a <= 12; ++a) {
        auto i = principal_d_fixed(n, n - 1, a, d);
        CHECK(oracle::reg_oracle(i) == reg_principal_d_fixed(n, a, d));
      }
}

TEST_CASE("branch comparison against the next generator's own top digit") {
  // 2 = (2, 0) and 9 = (0, 3) over 1|3
  auto s = spec(2, {{1, 2}, {2, 9}});
  const DSequence d({1, 3});
  const auto truth = oracle::socle_oracle(dfixed_from_powers(s, d)).max_degree;
  CHECK(truth == 9);
  CHECK(max_socle_degree(s, d) == 9);
  CHECK(max_socle_degree(s, d, BranchRule::kOwnTopDigit) == 8);
}
