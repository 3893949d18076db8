// Exact arithmetic in the dihedral group
//
//   D_m = < a, b ; a^m = 1, b^2 = 1, a^b = a^-1 >
//
// of order 2m. Every element is stored in the normal form a^i b^j with
// 0 <= i < m and j in {0, 1}. Conjugation is x^y = y^-1 x y and the
// commutator is [x, y] = x^-1 y^-1 x y.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace dihedral {

  using Residue = std::int64_t;

  //! Least non-negative residue of x modulo m (m > 0).
  constexpr Residue mod(Residue x, Residue m) noexcept {
    Residue r = x % m;
    return r < 0 ? r + m : r;
  }

  //! The modulus m >= 3 together with its factorisation m = 2^ell * n, n odd.
  class GroupParams {
   public:
    //! Throws ParameterError when m < 3.
    explicit GroupParams(std::int64_t m);

    std::int64_t m() const noexcept {
      return _m;
    }
    //! 2-adic valuation of m.
    int ell() const noexcept {
      return _ell;
    }
    //! Odd part of m.
    std::int64_t odd_part() const noexcept {
      return _n;
    }
    //! Number of group elements, 2m.
    std::size_t order() const noexcept {
      return static_cast<std::size_t>(2 * _m);
    }

    friend bool operator==(GroupParams const&, GroupParams const&) = default;

   private:
    std::int64_t _m;
    int          _ell;
    std::int64_t _n;
  };

  //! The element a^i b^j of D_m in canonical form.
  class Element {
   public:
    //! Reduces i modulo m and j modulo 2.
    Element(GroupParams const& g, Residue i, Residue j);

    std::int64_t modulus() const noexcept {
      return _m;
    }
    Residue rotation() const noexcept {
      return _i;
    }
    int reflection() const noexcept {
      return _j;
    }
    bool is_identity() const noexcept {
      return _i == 0 && _j == 0;
    }

    //! Position in the fixed enumeration order: j * m + i.
    std::size_t index() const noexcept {
      return static_cast<std::size_t>(_j * _m + _i);
    }

    friend bool operator==(Element const&, Element const&) = default;
    friend auto operator<=>(Element const& x, Element const& y) noexcept {
      if (auto c = x._m <=> y._m; c != 0) {
        return c;
      }
      if (auto c = x._j <=> y._j; c != 0) {
        return c;
      }
      return x._i <=> y._i;
    }

   private:
    std::int64_t _m;
    Residue      _i;
    int          _j;
  };

  std::string   to_string(Element const& x);
  std::ostream& operator<<(std::ostream& os, Element const& x);

  Element identity(GroupParams const& g);
  //! a^i b^j from its enumeration index j * m + i.
  Element element_at(GroupParams const& g, std::size_t index);

  //! (a^i b^j)(a^r b^s) = a^(i + (-1)^j r) b^(j + s).
  //! Throws ParameterError if either operand was built for another modulus.
  Element multiply(Element const& x, Element const& y, GroupParams const& g);
  Element inverse(Element const& x, GroupParams const& g);
  //! y^-1 x y.
  Element conjugate(Element const& x, Element const& y, GroupParams const& g);
  //! x^k for any integer k.
  Element power(Element const& x, std::int64_t k, GroupParams const& g);

  //! [x, y] = x^-1 y^-1 x y; always lies in <a>.
  Element commutator(Element const& x, Element const& y, GroupParams const& g);

  //! The left-normed commutator [... [[x, e_1], e_2], ..., e_w].
  //! Throws ParameterError when entries is empty.
  Element left_normed_commutator(Element const&        x,
                                 std::span<Element const> entries,
                                 GroupParams const&   g);

  //! All 2m elements, i ascending within j ascending.
  std::vector<Element> enumerate_elements(GroupParams const& g);

}  // namespace dihedral
