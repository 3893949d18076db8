#include "dihedral/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "dihedral/closure.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/modular.hpp"
#include "dihedral/order.hpp"

namespace dihedral {

  namespace {
    constexpr char const* csv_header
        = "m,p_order,lambda_order,t_right,t_left,per_minus2,per_plus2,"
          "iso_gupta,verified";

    std::int64_t parse_int(std::string const& field) {
      std::size_t used = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(field, &used);
      } catch (std::exception const&) {
        throw ParameterError("not an integer: '" + field + "'");
      }
      if (used != field.size()) {
        throw ParameterError("not an integer: '" + field + "'");
      }
      return value;
    }

    bool parse_bool(std::string const& field) {
      if (field == "true") {
        return true;
      }
      if (field == "false") {
        return false;
      }
      throw ParameterError("not a boolean: '" + field + "'");
    }
  }  // namespace

  std::string to_string(VerifyLevel level) {
    switch (level) {
      case VerifyLevel::none:
        return "none";
      case VerifyLevel::pairs:
        return "pairs";
      case VerifyLevel::raw:
        return "raw";
    }
    return "none";
  }

  std::string to_string(VerifyStatus status) {
    switch (status) {
      case VerifyStatus::formula_only:
        return "formula_only";
      case VerifyStatus::pairs_verified:
        return "pairs_verified";
      case VerifyStatus::raw_verified:
        return "raw_verified";
    }
    return "formula_only";
  }

  VerifyLevel parse_verify_level(std::string const& text) {
    for (auto level : {VerifyLevel::none, VerifyLevel::pairs, VerifyLevel::raw}) {
      if (text == to_string(level)) {
        return level;
      }
    }
    throw ParameterError("unknown verify level '" + text + "'");
  }

  VerifyStatus parse_verify_status(std::string const& text) {
    for (auto s : {VerifyStatus::formula_only, VerifyStatus::pairs_verified,
                   VerifyStatus::raw_verified}) {
      if (text == to_string(s)) {
        return s;
      }
    }
    throw ParameterError("unknown verification status '" + text + "'");
  }

  VerificationError::VerificationError(std::int64_t m_,
                                       Side         side_,
                                       std::string  oracle_,
                                       std::int64_t formula_value_,
                                       std::int64_t oracle_value_)
      : std::runtime_error("verification failed: m=" + std::to_string(m_)
                           + " side=" + std::string(to_string(side_))
                           + " formula=" + std::to_string(formula_value_)
                           + " oracle(" + oracle_ + ")="
                           + std::to_string(oracle_value_)),
        m(m_),
        side(side_),
        oracle(std::move(oracle_)),
        formula_value(formula_value_),
        oracle_value(oracle_value_) {}

  VerifyLevel default_verify_level(std::int64_t m) {
    return m <= max_default_pairs_m ? VerifyLevel::pairs : VerifyLevel::none;
  }

  TableRow compute_row(GroupParams const& g, VerifyLevel level) {
    auto const report = order_report(g);
    TableRow   row{g.m(),
                 report.p_order,
                 report.lambda_order,
                 report.t_right,
                 report.t_left,
                 orbit_profile(-2, g.m()).period,
                 orbit_profile(2, g.m()).period,
                 iso_prime_criterion(g),
                 VerifyStatus::formula_only};
    if (level == VerifyLevel::none) {
      return row;
    }
    if (level == VerifyLevel::raw && g.m() > max_raw_verify_m) {
      throw ParameterError("raw verification is limited to m <= "
                           + std::to_string(max_raw_verify_m));
    }
    for (auto side : {Side::right, Side::left}) {
      auto const formula = side == Side::right ? row.p_order : row.lambda_order;
      auto const pairs   = close_pairs(side, g);
      if (static_cast<std::int64_t>(pairs.size) != formula) {
        throw VerificationError(g.m(), side, "pairs", formula,
                                static_cast<std::int64_t>(pairs.size));
      }
      if (level == VerifyLevel::raw) {
        auto const raw = close_raw(side, g);
        if (static_cast<std::int64_t>(raw.size) != formula) {
          throw VerificationError(g.m(), side, "raw", formula,
                                  static_cast<std::int64_t>(raw.size));
        }
      }
    }
    row.verified = level == VerifyLevel::raw ? VerifyStatus::raw_verified
                                             : VerifyStatus::pairs_verified;
    return row;
  }

  std::string format_csv(std::vector<TableRow> const& rows, Meta const* meta) {
    std::ostringstream os;
    if (meta != nullptr) {
      for (auto const& [key, value] : *meta) {
        os << "# " << key << ": " << value << '\n';
      }
    }
    os << csv_header << '\n';
    for (auto const& r : rows) {
      os << r.m << ',' << r.p_order << ',' << r.lambda_order << ',' << r.t_right
         << ',' << r.t_left << ',' << r.per_minus2 << ',' << r.per_plus2 << ','
         << (r.iso_gupta ? "true" : "false") << ',' << to_string(r.verified)
         << '\n';
    }
    return os.str();
  }

  namespace {
    nlohmann::ordered_json row_to_json(TableRow const& r) {
      nlohmann::ordered_json j;
      j["m"]            = r.m;
      j["p_order"]      = r.p_order;
      j["lambda_order"] = r.lambda_order;
      j["t_right"]      = r.t_right;
      j["t_left"]       = r.t_left;
      j["per_minus2"]   = r.per_minus2;
      j["per_plus2"]    = r.per_plus2;
      j["iso_gupta"]     = r.iso_gupta;
      j["verified"]     = to_string(r.verified);
      return j;
    }

    TableRow row_from_json(nlohmann::json const& j) {
      try {
        return TableRow{j.at("m").get<std::int64_t>(),
                        j.at("p_order").get<std::int64_t>(),
                        j.at("lambda_order").get<std::int64_t>(),
                        j.at("t_right").get<std::int64_t>(),
                        j.at("t_left").get<std::int64_t>(),
                        j.at("per_minus2").get<std::int64_t>(),
                        j.at("per_plus2").get<std::int64_t>(),
                        j.at("iso_gupta").get<bool>(),
                        parse_verify_status(j.at("verified").get<std::string>())};
      } catch (nlohmann::json::exception const& e) {
        throw ParameterError(std::string("malformed table row: ") + e.what());
      }
    }
  }  // namespace

  std::string format_json(std::vector<TableRow> const& rows, Meta const* meta) {
    auto array = nlohmann::ordered_json::array();
    for (auto const& r : rows) {
      array.push_back(row_to_json(r));
    }
    if (meta == nullptr) {
      return array.dump(2) + "\n";
    }
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (auto const& [key, value] : *meta) {
      doc["meta"][key] = value;
    }
    doc["rows"] = std::move(array);
    return doc.dump(2) + "\n";
  }

  std::string format_text(std::vector<TableRow> const& rows, Meta const* meta) {
    std::ostringstream os;
    if (meta != nullptr) {
      for (auto const& [key, value] : *meta) {
        os << "# " << key << ": " << value << '\n';
      }
    }
    os << std::setw(6) << "m" << std::setw(10) << "|P|" << std::setw(10)
       << "|Lambda|" << std::setw(8) << "t" << std::setw(8) << "t'"
       << std::setw(8) << "per(-2)" << std::setw(8) << "per(2)" << std::setw(7)
       << "iso" << "  verified\n";
    for (auto const& r : rows) {
      os << std::setw(6) << r.m << std::setw(10) << r.p_order << std::setw(10)
         << r.lambda_order << std::setw(8) << r.t_right << std::setw(8)
         << r.t_left << std::setw(8) << r.per_minus2 << std::setw(8)
         << r.per_plus2 << std::setw(7) << (r.iso_gupta ? "yes" : "no") << "  "
         << to_string(r.verified) << '\n';
    }
    return os.str();
  }

  std::vector<TableRow> parse_csv(std::string const& text) {
    std::istringstream    in(text);
    std::string           line;
    std::vector<TableRow> rows;
    bool                  header_seen = false;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty() || line.front() == '#') {
        continue;
      }
      if (!header_seen) {
        if (line != csv_header) {
          throw ParameterError("unexpected CSV header: '" + line + "'");
        }
        header_seen = true;
        continue;
      }
      std::vector<std::string> fields;
      std::istringstream       ls(line);
      std::string              field;
      while (std::getline(ls, field, ',')) {
        fields.push_back(field);
      }
      if (fields.size() != 9) {
        throw ParameterError("expected 9 CSV fields, got "
                             + std::to_string(fields.size()));
      }
      rows.push_back(TableRow{parse_int(fields[0]),
                              parse_int(fields[1]),
                              parse_int(fields[2]),
                              parse_int(fields[3]),
                              parse_int(fields[4]),
                              parse_int(fields[5]),
                              parse_int(fields[6]),
                              parse_bool(fields[7]),
                              parse_verify_status(fields[8])});
    }
    if (!header_seen) {
      throw ParameterError("CSV input has no header row");
    }
    return rows;
  }

  std::vector<TableRow> parse_json(std::string const& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParameterError(std::string("invalid JSON: ") + e.what());
    }
    auto const& array = doc.is_object() && doc.contains("rows") ? doc["rows"] : doc;
    if (!array.is_array()) {
      throw ParameterError("JSON table must be an array of rows");
    }
    std::vector<TableRow> rows;
    for (auto const& j : array) {
      rows.push_back(row_from_json(j));
    }
    return rows;
  }

}  // namespace dihedral
