#include "dihedral/mu_map.hpp"

#include <ostream>
#include <sstream>

#include "dihedral/errors.hpp"

namespace dihedral {

  namespace {
    constexpr Residue alpha(Residue s) noexcept {
      return mod(s, 2) == 0 ? 1 : -1;
    }
    constexpr Residue beta(Residue s) noexcept {
      return alpha(s) - 1;
    }

    void check_same(std::int64_t m1, std::int64_t m2) {
      if (m1 != m2) {
        throw ParameterError("mu-maps over D_" + std::to_string(m1) + " and D_"
                             + std::to_string(m2) + " cannot be combined");
      }
    }
  }  // namespace

  std::ostream& operator<<(std::ostream& os, MuCanonical const& c) {
    return os << "mu(" << c.a << "," << c.b_star << ")";
  }

  MuMap::MuMap(GroupParams const& g, Residue a, Residue b)
      : _m(g.m()), _a(mod(a, g.m())), _b(mod(b, g.m())) {}

  std::ostream& operator<<(std::ostream& os, MuMap const& f) {
    return os << "mu(" << f.a() << "," << f.b() << ")";
  }

  std::string to_string(MuMap const& f) {
    std::ostringstream os;
    os << f;
    return os.str();
  }

  Element mu_apply(MuMap const& f, Element const& x) {
    check_same(f.modulus(), x.modulus());
    GroupParams const g(f.modulus());
    Residue const     j = x.reflection();
    Residue const     n = mod(f.a() * x.rotation(), g.m()) * alpha(j)
                      - f.b() * beta(j);
    return Element(g, n, 0);
  }

  MuMap rho_of(GroupParams const& g, Residue r, Residue s) {
    return MuMap(g, beta(s), mod(r, g.m()) * alpha(s));
  }

  MuMap lambda_of(GroupParams const& g, Residue r, Residue s) {
    return MuMap(g, -beta(s), -mod(r, g.m()) * alpha(s));
  }

  MuMap commutation_map(Side side, GroupParams const& g, Element const& y) {
    return side == Side::right ? rho_of(g, y.rotation(), y.reflection())
                               : lambda_of(g, y.rotation(), y.reflection());
  }

  MuMap mu_compose(MuMap const& f, MuMap const& h) {
    check_same(f.modulus(), h.modulus());
    GroupParams const g(f.modulus());
    return MuMap(g, mod(f.a() * h.a(), g.m()), mod(f.b() * h.a(), g.m()));
  }

  MuCanonical mu_canonicalize(MuMap const& f) {
    return MuCanonical{f.a(), mod(f.b(), canonical_b_modulus(f.modulus()))};
  }

  MuMap mu_representative(GroupParams const& g, MuCanonical const& c) {
    return MuMap(g, c.a, c.b_star);
  }

}  // namespace dihedral
