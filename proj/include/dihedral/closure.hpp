// Ground truth for P(D_m) and Lambda(D_m) by closing generator sets.
//
// Two oracles are provided:
//
//   close_raw    builds every commutation map as a table of images, straight
//                from the group commutator, and closes under composition of
//                tables. It never touches the mu-map formulas.
//   close_pairs  builds the generators as canonical mu-pairs and closes
//                under the pair composition law. Fast enough for m <= 4096.
//
// Both use a worklist: every new element is composed on the right with each
// generator until no new element appears. Since every product of
// generators can be bracketed to the left, this yields the full generated
// subsemigroup.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/mu_map.hpp"
#include "dihedral/side.hpp"

namespace dihedral {

  //! A self-map of D_m given by the enumeration index of the image of each
  //! element (index j * m + i).
  struct FunctionTable {
    std::vector<std::uint16_t> images;

    friend bool operator==(FunctionTable const&, FunctionTable const&) = default;
    friend auto operator<=>(FunctionTable const&, FunctionTable const&) = default;
  };

  struct FunctionTableHash {
    std::size_t operator()(FunctionTable const& t) const noexcept;
  };

  //! Apply f, then h.
  FunctionTable compose_tables(FunctionTable const& f, FunctionTable const& h);

  //! Table of x -> [x, y] (right) or x -> [y, x] (left), from the group
  //! commutator.
  FunctionTable commutation_table(Side               side,
                                  Element const&     y,
                                  GroupParams const& g);

  //! Table of a mu-map, from mu_apply.
  FunctionTable mu_table(MuMap const& f);

  //! The canonical mu-pair of t, or nullopt when t is not a mu-map.
  std::optional<MuCanonical> identify_mu(FunctionTable const& t,
                                         GroupParams const&   g);

  enum class OracleKind { raw_tables, mu_pairs };
  std::string to_string(OracleKind kind);

  struct SemigroupSummary {
    std::int64_t m;
    Side         side;
    std::size_t  size;
    //! Number of distinct generators (distinct commutation maps).
    std::size_t generator_count;
    OracleKind  oracle;
    //! Sorted element set for the mu_pairs oracle; empty for raw_tables.
    std::vector<MuCanonical> elements;
    //! Sorted element tables for the raw_tables oracle; empty for mu_pairs.
    std::vector<FunctionTable> tables;
  };

  //! Throws ResourceError when m > 128.
  SemigroupSummary close_raw(Side side, GroupParams const& g);

  //! Throws ResourceError when m > 4096.
  SemigroupSummary close_pairs(Side side, GroupParams const& g);

  //! close_pairs(side, g).size without materialising the elements.
  std::size_t pairs_closure_size(Side side, GroupParams const& g);

  //! Canonical element set of a summary from either oracle. For raw
  //! summaries, throws ConsistencyError if some table is not a mu-map.
  std::vector<MuCanonical> canonical_elements(SemigroupSummary const& s);

  //! Whether C(0, 1) together with the closure of C(-2, 1) alone equals the
  //! right semigroup produced by close_pairs. Throws ResourceError when
  //! m > 256.
  bool right_closure_only_needs_minus2_container(GroupParams const& g);

  //! A rule on mu-pairs (A, B) -> (A', B'), applied to canonical
  //! representatives.
  using PairRule
      = std::function<std::pair<Residue, Residue>(Residue, Residue)>;

  struct IsoMapCheck {
    bool        ok;
    std::string reason;
    //! A pair (s, t) of source elements with rule(s o t) != rule(s) o
    //! rule(t), or a single offending element in .first.
    std::optional<std::pair<MuCanonical, MuCanonical>> counterexample;
  };

  //! Whether rule is a bijection from source onto target that preserves
  //! composition. Both summaries must come from the mu_pairs oracle for the
  //! same m; otherwise ParameterError.
  IsoMapCheck verify_iso_map(SemigroupSummary const& source,
                             SemigroupSummary const& target,
                             PairRule const&         rule);

}  // namespace dihedral
