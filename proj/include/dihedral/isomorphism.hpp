// Isomorphism testing for small finite semigroups given by Cayley tables.
//
// The search first compares isomorphism invariants of the elements
// (idempotency, index and period, row and column image sizes, fixed-point
// counts, commuting counts, preimage counts), refined by the classes of
// products until stable. Differing invariant multisets prove the
// semigroups non-isomorphic. Otherwise elements are matched one at a
// time, choosing from the largest remaining colour class; each choice is
// propagated through phi(x g) = phi(x) phi(g), the matched pairs receive
// private colours and the refinement is repeated. Every witness is
// checked against the complete Cayley tables before it is returned.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dihedral/closure.hpp"

namespace dihedral {

  class CayleyTable {
   public:
    //! products[a * n + b] = a o b. Throws ParameterError if the size is not
    //! n * n or an entry is out of range.
    CayleyTable(std::size_t n, std::vector<std::uint32_t> products);

    std::size_t size() const noexcept {
      return _n;
    }
    std::uint32_t product(std::size_t a, std::size_t b) const noexcept {
      return _products[a * _n + b];
    }
    bool is_associative() const;

   private:
    std::size_t                _n;
    std::vector<std::uint32_t> _products;
  };

  //! Cayley table of a closure result, elements in the summary's order.
  CayleyTable cayley_table(SemigroupSummary const& s);

  enum class IsoSearchStatus { isomorphic_with_witness, not_isomorphic, budget_exhausted };
  std::string to_string(IsoSearchStatus status);

  struct IsoSearchResult {
    IsoSearchStatus status;
    //! witness[a] = image of element a, when status is
    //! isomorphic_with_witness.
    std::vector<std::uint32_t> witness;
    //! Candidate images tried.
    std::uint64_t nodes;
    //! Why the answer was reached (for example "invariants differ").
    std::string reason;
  };

  constexpr std::uint64_t default_search_budget = 10'000'000;

  IsoSearchResult search_isomorphism(CayleyTable const& s1,
                                     CayleyTable const& s2,
                                     std::uint64_t budget = default_search_budget);

  IsoSearchResult search_isomorphism(SemigroupSummary const& s1,
                                     SemigroupSummary const& s2,
                                     std::uint64_t budget = default_search_budget);

  //! Whether phi is a bijection preserving every product.
  bool is_isomorphism(CayleyTable const&                s1,
                      CayleyTable const&                s2,
                      std::vector<std::uint32_t> const& phi);

}  // namespace dihedral
