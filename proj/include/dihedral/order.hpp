// Closed-form orders of P(D_m) and Lambda(D_m).
//
// Three independent routes are provided and must agree for every m >= 3:
//
//   order_center_sum   m (1/|Z_1| + sum_{i=1}^{t-1} 1/|Z_i|), t from the
//                      case table on (ell, n)
//   order_simplified   m (ord_m(x) + 1)                  m odd
//                      n (2^ell + 2^(ell-1) - 2 + per_m(x))  ell > 0, n > 1
//                      2^ell + 2^(ell-1) - 2             m = 2^ell
//   order_historical   the historical odd / 2-power / even formulas with
//                      their own minimum-exponent definitions
//
// where x = -2 for the right semigroup and x = 2 for the left one.

#pragma once

#include <cstdint>
#include <string>

#include "dihedral/group.hpp"
#include "dihedral/side.hpp"

namespace dihedral {

  enum class FormulaKind {
    center_sum,
    historical_odd,
    historical_power_of_two,
    historical_even,
    simplified
  };
  enum class IsoStatus { isomorphic, not_isomorphic, unknown };

  std::string to_string(FormulaKind kind);
  std::string to_string(IsoStatus status);

  //! The t of the order formula (not the decomposition length):
  //!   ell = 0          1 + ord_m(x)
  //!   ell > 0, n > 1   ell + per_m(x)
  //!   n = 1            ell
  std::int64_t order_formula_t(Side side, GroupParams const& g);

  //! Throws ConsistencyError if a term m / |Z_i| is not an exact integer.
  std::int64_t order_center_sum(Side side, GroupParams const& g);
  std::int64_t order_simplified(Side side, GroupParams const& g);
  std::int64_t order_historical(Side side, GroupParams const& g);

  //! Which historical formula order_historical dispatches to for m.
  FormulaKind historical_formula_kind(GroupParams const& g);

  //! Whether |P| and |Lambda| agree between D_p and D_(2p).
  //! Throws ParameterError unless p is an odd prime.
  bool check_p_vs_2p(std::int64_t p);

  //! ord_p(2) = 0 (mod 4) for every odd prime p dividing m; the criterion
  //! for P(D_m) and Lambda(D_m) to be isomorphic.
  bool iso_prime_criterion(GroupParams const& g);

  //! |Lambda(D_p)| == |Lambda(D_q)|. Throws ParameterError unless p and q
  //! are odd primes.
  bool prime_left_orders_equal(std::int64_t p, std::int64_t q);

  struct OrderReport {
    std::int64_t m;
    std::int64_t p_order;
    std::int64_t lambda_order;
    std::int64_t t_right;
    std::int64_t t_left;
    FormulaKind  formula_used;
    IsoStatus    iso_pl;
    //! False for m = 3, which lies outside the stated range m > 3 of the
    //! main formula; such values are backed by closure only.
    bool formula_in_stated_range;
  };

  //! Computes both orders through order_center_sum and cross-checks them
  //! against the other two routes. Throws ConsistencyError on disagreement.
  OrderReport order_report(GroupParams const& g);

}  // namespace dihedral
