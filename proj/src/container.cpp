#include "dihedral/container.hpp"

#include <algorithm>
#include <numeric>

#include "dihedral/central_series.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/modular.hpp"

namespace dihedral {

  Container::Container(GroupParams const& g, Residue a, Residue b)
      : _m(g.m()), _a(mod(a, g.m())), _d(std::gcd(mod(b, g.m()), g.m())) {}

  std::string to_string(Container const& c) {
    return "C(" + std::to_string(c.a()) + "," + std::to_string(c.divisor())
           + ")";
  }

  std::vector<MuCanonical> container_members(Container const& c) {
    GroupParams const        g(c.modulus());
    std::vector<MuCanonical> out;
    for (std::int64_t y = 0; y < g.m(); y += c.divisor()) {
      out.push_back(mu_canonicalize(MuMap(g, c.a(), y)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Container container_product(Container const& c1, Container const& c2) {
    if (c1.modulus() != c2.modulus()) {
      throw ParameterError("containers over different moduli");
    }
    GroupParams const g(c1.modulus());
    return Container(g, c1.a() * c2.a(), c1.divisor() * c2.a());
  }

  bool containers_disjoint(Container const& c1, Container const& c2) {
    if (c1.modulus() != c2.modulus()) {
      throw ParameterError("containers over different moduli");
    }
    return c1.a() != c2.a();
  }

  std::string to_string(CountMethod method) {
    switch (method) {
      case CountMethod::formula:
        return "formula";
      case CountMethod::direct:
        return "direct";
      case CountMethod::direct_fallback:
        return "direct_fallback";
    }
    return "unknown";
  }

  Cardinality container_cardinality(Container const& c) {
    return {static_cast<std::int64_t>(container_members(c).size()),
            CountMethod::direct};
  }

  namespace {
    Container power_container(Side side, int u, GroupParams const& g) {
      if (u == 0) {
        return Container(g, 0, 1);
      }
      auto const x = side_base(side);
      return Container(g, power_mod(x, u, g.m()), power_mod(x, u - 1, g.m()));
    }
  }  // namespace

  Cardinality container_cardinality(Side side, int u, GroupParams const& g) {
    if (u < 0) {
      throw ParameterError("container power must be non-negative");
    }
    int const level = std::max(u, 1);
    if (!center_in_rotations(level, g)) {
      auto c   = container_cardinality(power_container(side, u, g));
      c.method = CountMethod::direct_fallback;
      return c;
    }
    auto const z = center_order(level, g);
    if (g.m() % z != 0) {
      throw ConsistencyError("|Z_u| does not divide m");
    }
    return {g.m() / z, CountMethod::formula};
  }

  std::int64_t decomposition_length(Side side, GroupParams const& g) {
    auto const x = side_base(side);
    if (g.ell() == 0) {
      return *multiplicative_order(x, g.m());
    }
    if (g.odd_part() > 1) {
      return g.ell() + orbit_profile(x, g.m()).period - 1;
    }
    return g.ell() - 1;
  }

  Decomposition decompose(Side side, GroupParams const& g) {
    Decomposition d{side, decomposition_length(side, g), {}};
    d.parts.push_back({Container(g, 0, 1), 0});
    for (std::int64_t i = 1; i <= d.t; ++i) {
      d.parts.push_back({power_container(side, static_cast<int>(i), g),
                         static_cast<int>(i)});
    }
    return d;
  }

  std::int64_t decomposition_size(Decomposition const& d, GroupParams const& g) {
    std::int64_t total = 0;
    for (auto const& part : d.parts) {
      total += container_cardinality(d.side, part.power, g).value;
    }
    return total;
  }

}  // namespace dihedral
