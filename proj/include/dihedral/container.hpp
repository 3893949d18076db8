// Containers: C(A, B) = { mu(A, x B) : x in Z_m }.
//
// The formal pair set depends on B only through d = gcd(B, m), so a
// container is keyed by (A, d). Products follow C(A, B) o C(A', B') =
// C(A A', B A'); two containers meet iff their first coordinates agree.
// P(D_m) and Lambda(D_m) are disjoint unions of C(0, 1) and the powers
// C(x^i, x^(i-1)), i = 1..t, with x = -2 (right) or x = 2 (left).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/mu_map.hpp"
#include "dihedral/side.hpp"

namespace dihedral {

  class Container {
   public:
    //! C(a, b) for arbitrary residues; stored as (a mod m, gcd(b, m)).
    Container(GroupParams const& g, Residue a, Residue b);

    std::int64_t modulus() const noexcept {
      return _m;
    }
    Residue a() const noexcept {
      return _a;
    }
    //! gcd(B, m), a positive divisor of m.
    std::int64_t divisor() const noexcept {
      return _d;
    }

    friend bool operator==(Container const&, Container const&) = default;

   private:
    std::int64_t _m;
    Residue      _a;
    std::int64_t _d;
  };

  //! "C(A,d)".
  std::string to_string(Container const& c);

  //! The distinct functions in c, sorted.
  std::vector<MuCanonical> container_members(Container const& c);

  //! C(A A', d A'), reduced to canonical (A, d). Throws ParameterError on a
  //! modulus mismatch.
  Container container_product(Container const& c1, Container const& c2);

  //! Disjoint as function sets iff the first coordinates differ.
  //! Throws ParameterError on a modulus mismatch.
  bool containers_disjoint(Container const& c1, Container const& c2);

  enum class CountMethod {
    //! m / |Z_u| (u >= 1) or m / |Z_1| for C(0, 1).
    formula,
    //! Counted distinct canonical members.
    direct,
    //! Formula requested outside its hypothesis; counted directly instead.
    direct_fallback
  };

  std::string to_string(CountMethod method);

  struct Cardinality {
    std::int64_t value;
    CountMethod  method;
  };

  //! Number of distinct functions in c, counted directly.
  Cardinality container_cardinality(Container const& c);

  //! Number of distinct functions in C(x^u, x^(u-1)) for the side's x, or
  //! in C(0, 1) when u == 0. Uses m / |Z_u| (m / |Z_1| for u == 0) when
  //! Z_u <= <a>; otherwise falls back to direct counting and says so.
  Cardinality container_cardinality(Side side, int u, GroupParams const& g);

  struct DecompositionPart {
    Container container;
    //! 0 for C(0, 1); otherwise the power i in C(x^i, x^(i-1)).
    int power;
  };

  struct Decomposition {
    Side side;
    //! Upper index of the union: C(0, 1) plus t power containers. This is
    //! one less than the t used by the order formula when m is even.
    std::int64_t                   t;
    std::vector<DecompositionPart> parts;
  };

  //! Number of power containers after C(0, 1), for x = side_base(side):
  //!   ell = 0          ord_m(x)
  //!   ell > 0, n > 1   ell + per_m(x) - 1
  //!   n = 1            ell - 1
  std::int64_t decomposition_length(Side side, GroupParams const& g);

  Decomposition decompose(Side side, GroupParams const& g);

  //! Sum of part cardinalities computed through container_cardinality(side,
  //! u, g).
  std::int64_t decomposition_size(Decomposition const& d, GroupParams const& g);

}  // namespace dihedral
