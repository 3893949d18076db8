#include "dihedral/modular.hpp"

#include <algorithm>
#include <numeric>
#include <vector>
#include <string>

#include "dihedral/errors.hpp"

namespace dihedral {

  namespace {
    Residue mul_mod(Residue x, Residue y, std::int64_t m) {
      return static_cast<Residue>((static_cast<__int128>(x) * y) % m);
    }

    struct PrimePower {
      std::int64_t p;
      int          e;
    };

    std::vector<PrimePower> factorize(std::int64_t n) {
      std::vector<PrimePower> out;
      for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          int e = 0;
          while (n % d == 0) {
            n /= d;
            ++e;
          }
          out.push_back({d, e});
        }
      }
      if (n > 1) {
        out.push_back({n, 1});
      }
      return out;
    }

    // Order of a unit x modulo n: divide phi(n) by each prime while the
    // power stays 1.
    std::int64_t unit_order(Residue x, std::int64_t n) {
      if (n == 1) {
        return 1;
      }
      std::int64_t phi = n;
      for (auto const& [p, e] : factorize(n)) {
        phi = phi / p * (p - 1);
      }
      std::int64_t order = phi;
      for (auto const& [p, e] : factorize(phi)) {
        while (order % p == 0 && power_mod(x, order / p, n) == 1) {
          order /= p;
        }
      }
      return order;
    }
  }  // namespace

  Residue power_mod(Residue x, std::int64_t e, std::int64_t m) {
    if (e < 0) {
      throw ParameterError("negative exponent in power_mod");
    }
    Residue base   = mod(x, m);
    Residue result = mod(1, m);
    while (e > 0) {
      if (e & 1) {
        result = mul_mod(result, base, m);
      }
      base = mul_mod(base, base, m);
      e >>= 1;
    }
    return result;
  }

  OrbitProfile orbit_profile(Residue x, std::int64_t m) {
    if (m < 2) {
      throw ParameterError("orbit_profile requires m >= 2, got "
                           + std::to_string(m));
    }
    Residue const xr = mod(x, m);
    // Split m = m1 m2 with every prime of m1 dividing x and m2 coprime to x.
    // Modulo m1 the powers reach 0 after the index and stay there; modulo
    // m2 x is a unit, so the period is its order there.
    std::int64_t index = 1;
    std::int64_t m2    = m;
    for (auto const& [p, e] : factorize(m)) {
      if (xr % p != 0) {
        continue;
      }
      std::int64_t pe = 1;
      for (int k = 0; k < e; ++k) {
        pe *= p;
      }
      m2 /= pe;
      // v = v_p(x), capped at e since only x mod p^e matters.
      int     v = 0;
      Residue y = xr;
      while (v < e && y % p == 0 && y != 0) {
        y /= p;
        ++v;
      }
      if (y == 0) {
        v = e;
      }
      index = std::max<std::int64_t>(index, (e + v - 1) / v);
    }
    std::int64_t const period = unit_order(mod(xr, m2), m2);

    OrbitProfile out{xr, m, index, period, std::nullopt};
    if (index == 1 && std::gcd(xr, m) == 1) {
      out.order = period;
    }
    return out;
  }

  std::optional<std::int64_t> multiplicative_order(Residue x, std::int64_t m) {
    return orbit_profile(x, m).order;
  }

  bool orbit_matches_case_table(GroupParams const& g, Residue x) {
    if (x != 2 && x != -2) {
      throw ParameterError("orbit_matches_case_table is defined for x = 2 or x = -2");
    }
    auto const p = orbit_profile(x, g.m());
    if (g.ell() == 0) {
      return p.index == 1 && p.order.has_value() && *p.order == p.period;
    }
    if (g.odd_part() > 1) {
      return p.index == g.ell();
    }
    return p.index == g.ell() && p.period == 1;
  }

  bool cancel_congruence(std::int64_t x,
                         std::int64_t u,
                         std::int64_t v,
                         std::int64_t y) {
    if (x < 1 || y < 1) {
      throw ParameterError("cancel_congruence requires x, y >= 1");
    }
    auto const modulus = static_cast<__int128>(x) * y;
    auto const diff    = static_cast<__int128>(x) * u - static_cast<__int128>(x) * v;
    return diff % modulus == 0;
  }

  bool is_prime(std::int64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::int64_t> odd_prime_factors(std::int64_t m) {
    std::vector<std::int64_t> out;
    while (m % 2 == 0 && m != 0) {
      m /= 2;
    }
    for (std::int64_t d = 3; d * d <= m; d += 2) {
      if (m % d == 0) {
        out.push_back(d);
        while (m % d == 0) {
          m /= d;
        }
      }
    }
    if (m > 1) {
      out.push_back(m);
    }
    return out;
  }

}  // namespace dihedral
