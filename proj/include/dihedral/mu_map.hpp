// The mu-maps of D_m.
//
// For (A, B) in Z_m x Z_m the map mu(A, B) sends a^i b^j to a^N with
//
//   N = A i alpha_j - B beta_j,   alpha_j = (-1)^j,  beta_j = (-1)^j - 1.
//
// Maps act on the right, so f o h means "apply f, then h", and
// mu(A, B) o mu(A', B') = mu(A A', B A'). Every right and left commutation
// map of D_m is a mu-map.
//
// On a^i the map reads A i, and on b it reads 2B, so two pairs denote the
// same function exactly when A agrees mod m and 2B agrees mod m. That is,
// B matters mod m for odd m and mod m/2 for even m (see MuCanonical).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "dihedral/group.hpp"
#include "dihedral/side.hpp"

namespace dihedral {

  //! Modulus for the second coordinate of a canonical mu-map: m if m is odd,
  //! m / 2 if m is even.
  constexpr std::int64_t canonical_b_modulus(std::int64_t m) noexcept {
    return m % 2 == 0 ? m / 2 : m;
  }

  //! Functional-equality class of a mu-map. Two MuMaps denote the same
  //! function on D_m iff their canonical forms are equal.
  struct MuCanonical {
    Residue a;
    Residue b_star;

    friend bool operator==(MuCanonical const&, MuCanonical const&) = default;
    friend auto operator<=>(MuCanonical const&, MuCanonical const&) = default;
  };

  std::ostream& operator<<(std::ostream& os, MuCanonical const& c);

  class MuMap {
   public:
    MuMap(GroupParams const& g, Residue a, Residue b);

    std::int64_t modulus() const noexcept {
      return _m;
    }
    Residue a() const noexcept {
      return _a;
    }
    Residue b() const noexcept {
      return _b;
    }

    friend bool operator==(MuMap const&, MuMap const&) = default;

   private:
    std::int64_t _m;
    Residue      _a;
    Residue      _b;
  };

  std::ostream& operator<<(std::ostream& os, MuMap const& f);
  std::string   to_string(MuMap const& f);

  //! (a^i b^j) mu(A, B) = a^(A i alpha_j - B beta_j).
  //! Throws ParameterError on a modulus mismatch.
  Element mu_apply(MuMap const& f, Element const& x);

  //! rho(a^r b^s) = mu(beta_s, r alpha_s), i.e. x -> [x, a^r b^s].
  MuMap rho_of(GroupParams const& g, Residue r, Residue s);
  //! lambda(a^r b^s) = mu(-beta_s, -r alpha_s), i.e. x -> [a^r b^s, x].
  MuMap lambda_of(GroupParams const& g, Residue r, Residue s);
  //! rho_of or lambda_of according to side.
  MuMap commutation_map(Side side, GroupParams const& g, Element const& y);

  //! f then h: mu(A, B) o mu(A', B') = mu(A A', B A').
  //! Throws ParameterError on a modulus mismatch.
  MuMap mu_compose(MuMap const& f, MuMap const& h);

  MuCanonical mu_canonicalize(MuMap const& f);
  //! The representative mu(A, B*) of a canonical class.
  MuMap mu_representative(GroupParams const& g, MuCanonical const& c);

  //! Composition on canonical forms; well defined because the second
  //! coordinate of the product is B A'.
  constexpr MuCanonical compose_canonical(MuCanonical const& f,
                                          MuCanonical const& h,
                                          std::int64_t       m) noexcept {
    return MuCanonical{mod(f.a * h.a, m), mod(f.b_star * h.a, canonical_b_modulus(m))};
  }

  //! Dense index a * b_modulus + b_star, in [0, m * canonical_b_modulus(m)).
  constexpr std::size_t canonical_key(MuCanonical const& c,
                                      std::int64_t       m) noexcept {
    return static_cast<std::size_t>(c.a * canonical_b_modulus(m) + c.b_star);
  }

  constexpr MuCanonical canonical_from_key(std::size_t key,
                                           std::int64_t m) noexcept {
    auto const bm = static_cast<std::size_t>(canonical_b_modulus(m));
    return MuCanonical{static_cast<Residue>(key / bm),
                       static_cast<Residue>(key % bm)};
  }

  struct MuCanonicalHash {
    std::size_t operator()(MuCanonical const& c) const noexcept {
      return std::hash<std::uint64_t>{}(
          (static_cast<std::uint64_t>(c.a) << 32)
          ^ static_cast<std::uint64_t>(c.b_star));
    }
  };

}  // namespace dihedral
