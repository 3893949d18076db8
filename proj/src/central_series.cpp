#include "dihedral/central_series.hpp"

#include <algorithm>
#include <string>

#include "dihedral/errors.hpp"

namespace dihedral {

  namespace {
    void check_u(int u) {
      if (u < 0) {
        throw ParameterError("centre index u must be non-negative, got "
                             + std::to_string(u));
      }
    }

    // Step between consecutive exponents of Z_u when Z_u <= <a>.
    std::int64_t rotation_step(int u, GroupParams const& g) {
      int const k = std::min(u, g.ell());
      return g.m() >> k;
    }
  }  // namespace

  bool center_in_rotations(int u, GroupParams const& g) {
    check_u(u);
    return !(g.odd_part() == 1 && u >= g.ell());
  }

  std::int64_t center_order(int u, GroupParams const& g) {
    check_u(u);
    if (!center_in_rotations(u, g)) {
      return 2 * g.m();
    }
    return g.m() / rotation_step(u, g);
  }

  std::vector<Element> center_members(int u, GroupParams const& g) {
    check_u(u);
    if (!center_in_rotations(u, g)) {
      return enumerate_elements(g);
    }
    std::vector<Element> out;
    auto const           step = rotation_step(u, g);
    for (std::int64_t e = 0; e < g.m(); e += step) {
      out.emplace_back(g, e, 0);
    }
    return out;
  }

  std::vector<Element> nth_center_bruteforce(int u, GroupParams const& g) {
    check_u(u);
    if (g.m() > 64 || u > 8) {
      throw ResourceError("nth_center_bruteforce is limited to m <= 64 and "
                          "u <= 8");
    }
    auto const        all = enumerate_elements(g);
    std::vector<char> member(g.order(), 0);
    member[identity(g).index()] = 1;
    for (int level = 0; level < u; ++level) {
      std::vector<char> next(g.order(), 0);
      for (auto const& x : all) {
        next[x.index()] = std::all_of(all.begin(), all.end(), [&](auto const& y) {
          return member[commutator(x, y, g).index()] != 0;
        });
      }
      member = std::move(next);
    }
    std::vector<Element> out;
    for (auto const& x : all) {
      if (member[x.index()]) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool commutator_tuple_equivalent(Element const&     g1,
                                   Element const&     g2,
                                   int                u,
                                   GroupParams const& g) {
    if (u < 1) {
      throw ParameterError("commutator_tuple_equivalent requires u >= 1");
    }
    if (g.m() > 24 || u > 4) {
      throw ResourceError(
          "commutator_tuple_equivalent is limited to m <= 24 and u <= 4");
    }
    auto const q = multiply(inverse(g1, g), g2, g);
    auto const z = center_members(u, g);
    return std::binary_search(z.begin(), z.end(), q);
  }

  CentralSeriesProfile central_series_profile(GroupParams const& g) {
    CentralSeriesProfile p{{}, 0, false};
    p.orders.push_back(center_order(0, g));
    int u = 0;
    while (center_order(u + 1, g) != center_order(u, g)) {
      ++u;
      p.orders.push_back(center_order(u, g));
    }
    p.stabilization_index = u;
    p.nilpotent = p.orders.back() == static_cast<std::int64_t>(g.order());
    return p;
  }

}  // namespace dihedral
