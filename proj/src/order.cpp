#include "dihedral/order.hpp"

#include "dihedral/central_series.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/modular.hpp"

namespace dihedral {

  std::string to_string(FormulaKind kind) {
    switch (kind) {
      case FormulaKind::center_sum:
        return "center_sum";
      case FormulaKind::historical_odd:
        return "historical_odd";
      case FormulaKind::historical_power_of_two:
        return "historical_power_of_two";
      case FormulaKind::historical_even:
        return "historical_even";
      case FormulaKind::simplified:
        return "simplified";
    }
    return "unknown";
  }

  std::string to_string(IsoStatus status) {
    switch (status) {
      case IsoStatus::isomorphic:
        return "isomorphic";
      case IsoStatus::not_isomorphic:
        return "not_isomorphic";
      case IsoStatus::unknown:
        return "unknown";
    }
    return "unknown";
  }

  std::int64_t order_formula_t(Side side, GroupParams const& g) {
    auto const x = side_base(side);
    if (g.ell() == 0) {
      return 1 + *multiplicative_order(x, g.m());
    }
    if (g.odd_part() > 1) {
      return g.ell() + orbit_profile(x, g.m()).period;
    }
    return g.ell();
  }

  std::int64_t order_center_sum(Side side, GroupParams const& g) {
    auto const t = order_formula_t(side, g);
    auto term = [&](int i) {
      auto const z = center_order(i, g);
      if (!center_in_rotations(i, g) || g.m() % z != 0) {
        throw ConsistencyError("non-exact term m/|Z_" + std::to_string(i)
                               + "| for m = " + std::to_string(g.m()));
      }
      return g.m() / z;
    };
    std::int64_t total = term(1);
    for (std::int64_t i = 1; i <= t - 1; ++i) {
      total += term(static_cast<int>(i));
    }
    return total;
  }

  std::int64_t order_simplified(Side side, GroupParams const& g) {
    auto const x   = side_base(side);
    auto const two = std::int64_t{1} << g.ell();
    if (g.ell() == 0) {
      return g.m() * (*multiplicative_order(x, g.m()) + 1);
    }
    if (g.odd_part() == 1) {
      return two + two / 2 - 2;
    }
    return g.odd_part() * (two + two / 2 - 2 + orbit_profile(x, g.m()).period);
  }

  FormulaKind historical_formula_kind(GroupParams const& g) {
    if (g.ell() == 0) {
      return FormulaKind::historical_odd;
    }
    return g.odd_part() == 1 ? FormulaKind::historical_power_of_two
                             : FormulaKind::historical_even;
  }

  namespace {
    // min { i > 0 : x^i = 1 (mod m) }, searched literally.
    std::int64_t least_exponent_to_one(Residue x, std::int64_t m) {
      Residue p = mod(x, m);
      for (std::int64_t i = 1; i <= m; ++i) {
        if (p == mod(1, m)) {
          return i;
        }
        p = mod(p * mod(x, m), m);
      }
      throw ConsistencyError("no power of " + std::to_string(x)
                             + " is 1 mod " + std::to_string(m));
    }

    // min { i > ell : x^i = x^ell (mod m) }, searched literally.
    std::int64_t least_return_exponent(Residue x, int ell, std::int64_t m) {
      Residue const target = power_mod(x, ell, m);
      Residue       p      = mod(target * mod(x, m), m);
      for (std::int64_t i = ell + 1; i <= ell + m; ++i) {
        if (p == target) {
          return i;
        }
        p = mod(p * mod(x, m), m);
      }
      throw ConsistencyError("powers of " + std::to_string(x)
                             + " never return mod " + std::to_string(m));
    }
  }  // namespace

  std::int64_t order_historical(Side side, GroupParams const& g) {
    auto const x   = side_base(side);
    auto const two = std::int64_t{1} << g.ell();
    switch (historical_formula_kind(g)) {
      case FormulaKind::historical_odd:
        return g.m() * (least_exponent_to_one(x, g.m()) + 1);
      case FormulaKind::historical_power_of_two:
        return two + two / 2 - 2;
      default: {
        auto const m_x = least_return_exponent(x, g.ell(), g.m());
        return g.odd_part() * (two + two / 2 - 2 + m_x - g.ell());
      }
    }
  }

  bool check_p_vs_2p(std::int64_t p) {
    if (p % 2 == 0 || !is_prime(p)) {
      throw ParameterError(std::to_string(p) + " is not an odd prime");
    }
    GroupParams const gp(p);
    GroupParams const g2p(2 * p);
    return order_center_sum(Side::right, gp) == order_center_sum(Side::right, g2p)
           && order_center_sum(Side::left, gp)
                  == order_center_sum(Side::left, g2p);
  }

  bool iso_prime_criterion(GroupParams const& g) {
    for (auto p : odd_prime_factors(g.m())) {
      if (*multiplicative_order(2, p) % 4 != 0) {
        return false;
      }
    }
    return true;
  }

  bool prime_left_orders_equal(std::int64_t p, std::int64_t q) {
    for (auto r : {p, q}) {
      if (r % 2 == 0 || !is_prime(r)) {
        throw ParameterError(std::to_string(r) + " is not an odd prime");
      }
    }
    return order_center_sum(Side::left, GroupParams(p))
           == order_center_sum(Side::left, GroupParams(q));
  }

  OrderReport order_report(GroupParams const& g) {
    OrderReport r{g.m(),
                  order_center_sum(Side::right, g),
                  order_center_sum(Side::left, g),
                  order_formula_t(Side::right, g),
                  order_formula_t(Side::left, g),
                  FormulaKind::center_sum,
                  iso_prime_criterion(g) ? IsoStatus::isomorphic
                                         : IsoStatus::not_isomorphic,
                  g.m() > 3};
    for (auto side : {Side::right, Side::left}) {
      auto const main = side == Side::right ? r.p_order : r.lambda_order;
      if (order_simplified(side, g) != main
          || order_historical(side, g) != main) {
        throw ConsistencyError("order formulas disagree for m = "
                               + std::to_string(g.m()) + ", side "
                               + std::string(to_string(side)));
      }
      if (main > g.m() * g.m()) {
        throw ConsistencyError("order exceeds m^2 for m = "
                               + std::to_string(g.m()));
      }
    }
    return r;
  }

}  // namespace dihedral
