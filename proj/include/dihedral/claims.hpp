// Named checks of the structural facts the library is expected to
// reproduce, run by `dihedral verify-claims`.

#pragma once

#include <string>
#include <vector>

namespace dihedral {

  struct ClaimResult {
    std::string name;
    bool        passed;
    std::string detail;
  };

  std::vector<ClaimResult> verify_claims();

}  // namespace dihedral
