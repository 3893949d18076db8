#include <doctest.h>

#include <set>
#include <vector>

#include "dihedral/container.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/modular.hpp"
#include "dihedral/order.hpp"
#include "oracles.hpp"
#include "reference_orders.hpp"

using namespace dihedral;

TEST_CASE("center-sum order examples") {
  CHECK(order_center_sum(Side::right, GroupParams(3)) == 6);
  CHECK(order_center_sum(Side::left, GroupParams(3)) == 9);
  CHECK(order_center_sum(Side::right, GroupParams(101)) == 10201);
  CHECK(order_center_sum(Side::left, GroupParams(101)) == 10201);
}

TEST_CASE("simplified order examples") {
  CHECK(order_simplified(Side::right, GroupParams(16)) == 22);
  CHECK(order_simplified(Side::left, GroupParams(16)) == 22);
  CHECK(order_simplified(Side::right, GroupParams(7)) == 49);
  CHECK(order_simplified(Side::left, GroupParams(7)) == 28);
}

TEST_CASE("historical order examples") {
  CHECK(order_historical(Side::right, GroupParams(24)) == 33);
  CHECK(order_historical(Side::left, GroupParams(24)) == 36);
  CHECK(order_historical(Side::left, GroupParams(9)) == 63);
  CHECK(historical_formula_kind(GroupParams(9)) == FormulaKind::historical_odd);
  CHECK(historical_formula_kind(GroupParams(32)) == FormulaKind::historical_power_of_two);
  CHECK(historical_formula_kind(GroupParams(24)) == FormulaKind::historical_even);
}

TEST_CASE("p versus 2p examples") {
  CHECK(check_p_vs_2p(5));
  CHECK(check_p_vs_2p(7));
  CHECK(check_p_vs_2p(47));
  CHECK(order_center_sum(Side::right, GroupParams(94)) == 2209);
  CHECK(order_center_sum(Side::left, GroupParams(94)) == 1128);
  CHECK_THROWS_AS(check_p_vs_2p(9), ParameterError);
  CHECK_THROWS_AS(check_p_vs_2p(2), ParameterError);
}

TEST_CASE("isomorphism criterion examples") {
  CHECK_FALSE(iso_prime_criterion(GroupParams(15)));
  CHECK(iso_prime_criterion(GroupParams(5)));
  CHECK(iso_prime_criterion(GroupParams(16)));
  CHECK(iso_prime_criterion(GroupParams(10)));
}

TEST_CASE("prime left-order comparison examples") {
  CHECK(prime_left_orders_equal(7, 7));
  CHECK_FALSE(prime_left_orders_equal(3, 5));
  CHECK_FALSE(prime_left_orders_equal(5, 7));
  CHECK_THROWS_AS(prime_left_orders_equal(4, 7), ParameterError);
}

TEST_CASE("orders reproduce the reference table for m = 3 .. 101") {
  for (auto const& row : testdata::reference_orders) {
    GroupParams const g(row.m);
    CHECK(order_center_sum(Side::right, g) == row.right);
    CHECK(order_center_sum(Side::left, g) == row.left);
  }
}

TEST_CASE("orders match the permutation closure for m <= 40") {
  for (int m = 3; m <= 40; ++m) {
    GroupParams const g(m);
    CHECK(order_center_sum(Side::right, g)
          == static_cast<std::int64_t>(oracle::commutation_semigroup(m, true).size()));
    CHECK(order_center_sum(Side::left, g)
          == static_cast<std::int64_t>(oracle::commutation_semigroup(m, false).size()));
  }
}

TEST_CASE("three order routes agree for m = 3 .. 4096") {
  for (std::int64_t m = 3; m <= 4096; ++m) {
    GroupParams const g(m);
    for (auto side : {Side::right, Side::left}) {
      auto const main = order_center_sum(side, g);
      CHECK(order_simplified(side, g) == main);
      CHECK(order_historical(side, g) == main);
      CHECK(main <= m * m);
    }
  }
}

TEST_CASE("formula t against the decomposition length") {
  for (std::int64_t m = 3; m <= 1024; ++m) {
    GroupParams const g(m);
    for (auto side : {Side::right, Side::left}) {
      auto const t = order_formula_t(side, g);
      auto const d = decomposition_length(side, g);
      // The union runs to t - 1 when m is even and to t - 1 = ord when odd.
      CHECK(t == d + 1);
      CHECK(decompose(side, g).parts.size() == static_cast<std::size_t>(t));
    }
  }
}

TEST_CASE("least return exponent past ell equals ell plus the period") {
  for (std::int64_t m = 3; m <= 2048; ++m) {
    GroupParams const g(m);
    if (g.ell() == 0 || g.odd_part() == 1) {
      continue;
    }
    for (Residue x : {-2, 2}) {
      auto const target = power_mod(x, g.ell(), m);
      std::int64_t i    = g.ell() + 1;
      while (power_mod(x, i, m) != target) {
        ++i;
      }
      CHECK(i == g.ell() + oracle::index_period(x, m).period);
    }
  }
}

TEST_CASE("order report") {
  auto const r3 = order_report(GroupParams(3));
  CHECK(r3.p_order == 6);
  CHECK(r3.lambda_order == 9);
  CHECK_FALSE(r3.formula_in_stated_range);
  CHECK(order_report(GroupParams(4)).formula_in_stated_range);
  auto const r15 = order_report(GroupParams(15));
  CHECK(r15.p_order == 75);
  CHECK(r15.lambda_order == 75);
  CHECK(r15.iso_pl == IsoStatus::not_isomorphic);
  CHECK(r15.formula_used == FormulaKind::center_sum);
  auto const r8 = order_report(GroupParams(8));
  CHECK(r8.iso_pl == IsoStatus::isomorphic);
  CHECK(r8.t_right == 3);
  CHECK(to_string(FormulaKind::center_sum) == "center_sum");
  CHECK(to_string(IsoStatus::unknown) == "unknown");
}

TEST_CASE("prime sweeps") {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 3; p < 500; p += 2) {
    if (is_prime(p)) {
      primes.push_back(p);
    }
  }
  for (auto p : primes) {
    CHECK(check_p_vs_2p(p));
  }
  for (auto side : {Side::right, Side::left}) {
    std::set<std::int64_t> seen;
    for (auto p : primes) {
      if (p < 200) {
        CHECK(seen.insert(order_center_sum(side, GroupParams(p))).second);
      }
    }
  }
  for (auto p : primes) {
    for (auto q : primes) {
      if (p < 200 && q < 200) {
        CHECK(prime_left_orders_equal(p, q) == (p == q));
      }
    }
  }
}
