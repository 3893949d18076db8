// Upper central series of D_m.
//
// Z_0 = {1} and Z_(u+1) = { g : [g, x] in Z_u for every x }. With
// m = 2^ell n (n odd):
//   m odd            Z_u = {1} for all u
//   n > 1, u < ell   Z_u = { a^(2^(ell-u) n x) : 0 <= x < 2^u }
//   n > 1, u >= ell  Z_u = { a^(n x) : 0 <= x < 2^ell }
//   n = 1, u < ell   Z_u = { a^(2^(ell-u) x) : 0 <= x < 2^u }
//   n = 1, u >= ell  Z_u = D_m

#pragma once

#include <cstdint>
#include <vector>

#include "dihedral/group.hpp"

namespace dihedral {

  struct CentralSeriesProfile {
    //! orders[u] = |Z_u(D_m)| for u = 0 .. stabilization_index.
    std::vector<std::int64_t> orders;
    //! Least c with Z_c = Z_(c+1).
    int stabilization_index;
    //! True iff the series reaches D_m, which happens iff m is a power of 2.
    bool nilpotent;
  };

  //! |Z_u(D_m)| from the closed form. Throws ParameterError when u < 0.
  std::int64_t center_order(int u, GroupParams const& g);

  //! Z_u(D_m) from the closed form, sorted in enumeration order.
  std::vector<Element> center_members(int u, GroupParams const& g);

  //! Whether Z_u(D_m) lies inside the rotation subgroup <a>.
  bool center_in_rotations(int u, GroupParams const& g);

  //! Z_u computed from the definition: Z_(u+1) = { g : [g, x] in Z_u for
  //! all x }. Throws ResourceError when m > 64 or u > 8.
  std::vector<Element> nth_center_bruteforce(int u, GroupParams const& g);

  //! Whether g1^-1 g2 lies in Z_u. Equivalent, in a metabelian group, to
  //! [g1, x_1, ..., x_u] = [g2, x_1, ..., x_u] for all x_1, ..., x_u.
  //! Throws ResourceError when m > 24 or u > 4, and ParameterError when
  //! u < 1.
  bool commutator_tuple_equivalent(Element const&     g1,
                                   Element const&     g2,
                                   int                u,
                                   GroupParams const& g);

  CentralSeriesProfile central_series_profile(GroupParams const& g);

}  // namespace dihedral
