#pragma once

#include <string>
#include <string_view>

namespace dihedral {

  //! Which commutation maps generate the semigroup: right maps x -> [x, g]
  //! give P(D_m), left maps x -> [g, x] give Lambda(D_m).
  enum class Side { right, left };

  constexpr std::string_view to_string(Side s) noexcept {
    return s == Side::right ? "right" : "left";
  }

  //! Throws ParameterError for anything other than "right" or "left".
  Side parse_side(std::string_view text);

  //! The multiplier whose powers index the containers: -2 for right, 2 for
  //! left.
  constexpr long long side_base(Side s) noexcept {
    return s == Side::right ? -2 : 2;
  }

}  // namespace dihedral
