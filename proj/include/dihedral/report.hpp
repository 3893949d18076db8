// Table rows for the command-line front end, with CSV, JSON and text
// serialisation.
//
// CSV schema (header row included):
//
//   m,p_order,lambda_order,t_right,t_left,per_minus2,per_plus2,iso_gupta,verified
//
// JSON is an array of objects with the same keys. With provenance metadata
// enabled, CSV gains leading "# key: value" lines and JSON becomes
// {"meta": {...}, "rows": [...]}. Both parsers accept either form.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/side.hpp"

namespace dihedral {

  enum class VerifyLevel { none, pairs, raw };
  enum class VerifyStatus { formula_only, pairs_verified, raw_verified };

  std::string  to_string(VerifyLevel level);
  std::string  to_string(VerifyStatus status);
  VerifyLevel  parse_verify_level(std::string const& text);
  VerifyStatus parse_verify_status(std::string const& text);

  struct TableRow {
    std::int64_t m;
    std::int64_t p_order;
    std::int64_t lambda_order;
    std::int64_t t_right;
    std::int64_t t_left;
    std::int64_t per_minus2;
    std::int64_t per_plus2;
    bool         iso_gupta;
    VerifyStatus verified;

    friend bool operator==(TableRow const&, TableRow const&) = default;
  };

  //! A closed-form order that disagrees with a closure oracle.
  class VerificationError : public std::runtime_error {
   public:
    VerificationError(std::int64_t m,
                      Side         side,
                      std::string  oracle,
                      std::int64_t formula_value,
                      std::int64_t oracle_value);

    std::int64_t m;
    Side         side;
    std::string  oracle;
    std::int64_t formula_value;
    std::int64_t oracle_value;
  };

  //! Raw verification is only available for m <= 128.
  constexpr std::int64_t max_raw_verify_m   = 128;
  constexpr std::int64_t max_default_pairs_m = 512;

  //! Verification level used when none is requested.
  VerifyLevel default_verify_level(std::int64_t m);

  //! Throws VerificationError on a formula/oracle mismatch.
  TableRow compute_row(GroupParams const& g, VerifyLevel level);

  using Meta = std::map<std::string, std::string>;

  std::string format_csv(std::vector<TableRow> const& rows, Meta const* meta = nullptr);
  std::string format_json(std::vector<TableRow> const& rows, Meta const* meta = nullptr);
  std::string format_text(std::vector<TableRow> const& rows, Meta const* meta = nullptr);

  //! Throws ParameterError on malformed input.
  std::vector<TableRow> parse_csv(std::string const& text);
  std::vector<TableRow> parse_json(std::string const& text);

}  // namespace dihedral
