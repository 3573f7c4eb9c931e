#include "doctest.h"

#include <limits>
#include <stdexcept>

#include "borelreg/monomial.hpp"
#include "support/generators.hpp"

using namespace borelreg;
using borelreg::testing::Rng;

TEST_CASE("degree") {
  CHECK(Monomial::unit(3).degree() == 0);
  CHECK(Monomial{0, 6, 7}.degree() == 13);
  CHECK(Monomial{5, 5, 5, 11, 11}.degree() == 37);
}

TEST_CASE("nu and max_support") {
  const Monomial u{0, 6, 7};
  CHECK(u.nu(2) == 7);
  CHECK(u.nu(0) == 0);
  CHECK_THROWS_AS(u.nu(3), std::out_of_range);
  for (std::size_t i = 0; i < 4; ++i) CHECK(Monomial::unit(4).nu(i) == 0);

  CHECK(u.max_support() == 2u);
  CHECK(Monomial{13}.max_support() == 0u);
  CHECK_FALSE(Monomial::unit(2).max_support().has_value());
}

TEST_CASE("divisibility algebra") {
  CHECK(divides(Monomial{6, 0}, Monomial{6, 7}));
  CHECK_FALSE(divides(Monomial{6, 1}, Monomial{6, 0}));
  CHECK(lcm(Monomial{6, 0}, Monomial{0, 6}) == Monomial{6, 6});
  CHECK(gcd(Monomial{6, 2}, Monomial{1, 6}) == Monomial{1, 2});
  CHECK(quotient(Monomial{0, 6, 7}, Monomial{0, 0, 7}) == Monomial{0, 6, 0});
  CHECK(multiply(Monomial{1, 2}, Monomial{3, 0}) == Monomial{4, 2});
}

TEST_CASE("errors") {
  CHECK_THROWS(Monomial{-1, 0});
  CHECK_THROWS(divides(Monomial{1}, Monomial{1, 0}));
  CHECK_THROWS(lcm(Monomial{1}, Monomial{1, 0}));
  CHECK_THROWS_AS(quotient(Monomial{1, 0}, Monomial{0, 1}), std::invalid_argument);
  const auto big = std::numeric_limits<Exponent>::max();
  CHECK_THROWS_AS(multiply(Monomial{big}, Monomial{1}), std::overflow_error);
}

TEST_CASE("printing") {
  CHECK(Monomial{0, 6, 7}.to_string() == "x2^6*x3^7");
  CHECK(Monomial{1, 0, 1}.to_string() == "x1*x3");
  CHECK(Monomial::unit(2).to_string() == "1");
}

TEST_CASE("graded lex order") {
  CHECK(Monomial{0, 1} < Monomial{2, 0});
  CHECK(Monomial{2, 0} < Monomial{1, 1});
  CHECK(Monomial{1, 1} < Monomial{0, 2});
}

TEST_CASE("enumeration by degree") {
  auto all = monomials_of_degree(3, 4);
  CHECK(all.size() == 15);
  CHECK(all.front() == Monomial{4, 0, 0});
  CHECK(all.back() == Monomial{0, 0, 4});
  for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1] < all[k]);
  CHECK(monomials_of_degree(2, 0).size() == 1);
  CHECK(monomials_of_degree(1, 5).size() == 1);

  int seen = 0;
  for_each_of_degree(3, 4, [&](std::span<const Exponent>) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("restricted and extended") {
  CHECK(Monomial{6, 6, 0}.restricted(2) == Monomial{6, 6});
  CHECK_THROWS(Monomial{6, 6, 1}.restricted(2));
  CHECK(Monomial{1}.extended(3) == Monomial{1, 0, 0});
}

TEST_CASE("property: divisibility laws") {
  Rng rng(11);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = testing::pick(rng, 1, 5);
    auto u = testing::random_monomial(rng, n, 6);
    auto v = testing::random_monomial(rng, n, 6);
    if (divides(u, v) && divides(v, u)) CHECK(u == v);
    CHECK(divides(gcd(u, v), u));
    CHECK(divides(u, lcm(u, v)));
    CHECK(quotient(multiply(u, v), v) == u);
    CHECK(multiply(u, v).degree() == u.degree() + v.degree());
    CHECK(divides(u, u));
  }
}
