// Monogenic-semigroup data of residues under multiplication mod m.
//
// For x in Z_m the powers x, x^2, x^3, ... eventually repeat. The index is
// the least c with x^c = x^(c+k) for some k > 0, and the period is the least
// such k. When the index is 1 and x is a unit, the period is the
// multiplicative order of x.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dihedral/group.hpp"

namespace dihedral {

  struct OrbitProfile {
    Residue                     x;
    std::int64_t                modulus;
    std::int64_t                index;
    std::int64_t                period;
    std::optional<std::int64_t> order;

    friend bool operator==(OrbitProfile const&, OrbitProfile const&) = default;
  };

  //! Index, period and (when defined) order of x modulo m. Negative x is
  //! normalised first. Throws ParameterError when m < 2.
  OrbitProfile orbit_profile(Residue x, std::int64_t m);

  //! Multiplicative order of x mod m, or nullopt if x is not a unit.
  std::optional<std::int64_t> multiplicative_order(Residue x, std::int64_t m);

  //! Whether the profile of x in {-2, 2} matches the case table for m = 2^ell n:
  //!   m odd          -> index 1 and period = order
  //!   m even, n > 1  -> index ell
  //!   m = 2^ell      -> index ell and period 1
  //! Throws ParameterError unless x is -2 or 2.
  bool orbit_matches_case_table(GroupParams const& g, Residue x);

  //! Whether x u = x v (mod x y). Equivalent to u = v (mod y) for x, y >= 1.
  //! Throws ParameterError unless x, y >= 1.
  bool cancel_congruence(std::int64_t x,
                         std::int64_t u,
                         std::int64_t v,
                         std::int64_t y);

  //! Trial division.
  bool is_prime(std::int64_t p);
  //! Distinct odd primes dividing m, ascending.
  std::vector<std::int64_t> odd_prime_factors(std::int64_t m);

  //! x^e mod m for e >= 0.
  Residue power_mod(Residue x, std::int64_t e, std::int64_t m);

}  // namespace dihedral
