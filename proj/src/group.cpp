#include "dihedral/group.hpp"

#include <ostream>
#include <sstream>

#include "dihedral/errors.hpp"
#include "dihedral/side.hpp"

namespace dihedral {

  Side parse_side(std::string_view text) {
    if (text == "right") {
      return Side::right;
    }
    if (text == "left") {
      return Side::left;
    }
    throw ParameterError("side must be 'right' or 'left', got '"
                         + std::string(text) + "'");
  }

  GroupParams::GroupParams(std::int64_t m) : _m(m), _ell(0), _n(m) {
    if (m < 3) {
      throw ParameterError("the dihedral group D_m requires m >= 3, got m = "
                           + std::to_string(m));
    }
    while (_n % 2 == 0) {
      _n /= 2;
      ++_ell;
    }
  }

  Element::Element(GroupParams const& g, Residue i, Residue j)
      : _m(g.m()), _i(mod(i, g.m())), _j(static_cast<int>(mod(j, 2))) {}

  std::string to_string(Element const& x) {
    std::ostringstream os;
    os << x;
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Element const& x) {
    if (x.is_identity()) {
      return os << "1";
    }
    if (x.rotation() != 0) {
      os << "a^" << x.rotation();
    }
    if (x.reflection() != 0) {
      os << (x.rotation() != 0 ? " b" : "b");
    }
    return os;
  }

  Element identity(GroupParams const& g) {
    return Element(g, 0, 0);
  }

  Element element_at(GroupParams const& g, std::size_t index) {
    auto const m = static_cast<std::size_t>(g.m());
    if (index >= 2 * m) {
      throw ParameterError("element index " + std::to_string(index)
                           + " out of range for D_" + std::to_string(g.m()));
    }
    return Element(g, static_cast<Residue>(index % m),
                   static_cast<Residue>(index / m));
  }

  namespace {
    void check_modulus(Element const& x, GroupParams const& g) {
      if (x.modulus() != g.m()) {
        throw ParameterError("element of D_" + std::to_string(x.modulus())
                             + " used with D_" + std::to_string(g.m()));
      }
    }
  }  // namespace

  Element multiply(Element const& x, Element const& y, GroupParams const& g) {
    check_modulus(x, g);
    check_modulus(y, g);
    Residue const r = x.reflection() == 0 ? y.rotation() : -y.rotation();
    return Element(
        g, x.rotation() + r, x.reflection() + y.reflection());
  }

  Element inverse(Element const& x, GroupParams const& g) {
    check_modulus(x, g);
    if (x.reflection() == 1) {
      return x;
    }
    return Element(g, -x.rotation(), 0);
  }

  Element conjugate(Element const& x, Element const& y, GroupParams const& g) {
    return multiply(multiply(inverse(y, g), x, g), y, g);
  }

  Element power(Element const& x, std::int64_t k, GroupParams const& g) {
    check_modulus(x, g);
    if (x.reflection() == 1) {
      return mod(k, 2) == 0 ? identity(g) : x;
    }
    // a^i has order dividing m, so k can be reduced first.
    Residue const e = mod(k, g.m());
    return Element(
        g, static_cast<Residue>((static_cast<__int128>(x.rotation()) * e)
                                % g.m()),
        0);
  }

  Element commutator(Element const& x, Element const& y, GroupParams const& g) {
    return multiply(multiply(inverse(x, g), inverse(y, g), g),
                    multiply(x, y, g),
                    g);
  }

  Element left_normed_commutator(Element const&           x,
                                 std::span<Element const> entries,
                                 GroupParams const&       g) {
    if (entries.empty()) {
      throw ParameterError("left-normed commutator needs at least one entry");
    }
    Element acc = x;
    for (auto const& e : entries) {
      acc = commutator(acc, e, g);
    }
    return acc;
  }

  std::vector<Element> enumerate_elements(GroupParams const& g) {
    std::vector<Element> out;
    out.reserve(g.order());
    for (Residue j = 0; j < 2; ++j) {
      for (Residue i = 0; i < g.m(); ++i) {
        out.emplace_back(g, i, j);
      }
    }
    return out;
  }

}  // namespace dihedral
