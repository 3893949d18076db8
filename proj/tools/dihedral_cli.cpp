// Command-line front end.
//
// Exit codes: 0 success, 1 usage or unsupported request, 2 a formula
// disagreed with an oracle or a named claim failed. Data goes to stdout,
// diagnostics to stderr. Output depends only on the arguments; --meta adds
// provenance lines (tool, version, command line) and nothing time-dependent.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dihedral/central_series.hpp"
#include "dihedral/claims.hpp"
#include "dihedral/closure.hpp"
#include "dihedral/container.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/isomorphism.hpp"
#include "dihedral/modular.hpp"
#include "dihedral/order.hpp"
#include "dihedral/report.hpp"

using namespace dihedral;
using Json = nlohmann::ordered_json;

namespace {

  constexpr int exit_ok       = 0;
  constexpr int exit_usage    = 1;
  constexpr int exit_mismatch = 2;

  constexpr std::int64_t max_m = 2147483647;
  // Cayley tables hold size^2 entries; keep iso requests modest.
  constexpr std::int64_t max_iso_m = 512;

  //! A failed verification that should end the run with exit code 2.
  struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Options {
    std::int64_t  m      = 0;
    std::int64_t  m2     = 0;
    std::int64_t  from   = 0;
    std::int64_t  to     = 0;
    std::int64_t  x      = 0;
    bool          x_set  = false;
    std::string   side   = "both";
    std::string   format = "text";
    std::string   verify;
    std::uint64_t budget = default_search_budget;
    bool          meta   = false;
  };

  std::vector<Side> sides_of(std::string const& side) {
    if (side == "right") {
      return {Side::right};
    }
    if (side == "left") {
      return {Side::left};
    }
    return {Side::right, Side::left};
  }

  char const* semigroup_name(Side side) {
    return side == Side::right ? "P" : "Lambda";
  }

  Meta provenance(std::vector<std::string> const& argv) {
    std::string command;
    for (auto const& a : argv) {
      command += (command.empty() ? "" : " ") + a;
    }
    return {{"command", command}, {"tool", "dihedral"}, {"version", DIHEDRAL_VERSION}};
  }

  // Emits a list of flat records in the requested format. Every record has
  // the keys of the first one, in the same order.
  void emit_records(std::vector<Json> const& records,
                    Options const&           opt,
                    Meta const&              meta,
                    std::ostream&            out) {
    if (opt.format == "json") {
      if (!opt.meta) {
        out << Json(records).dump(2) << '\n';
        return;
      }
      Json doc;
      doc["meta"] = meta;
      doc["rows"] = records;
      out << doc.dump(2) << '\n';
      return;
    }
    if (opt.meta) {
      for (auto const& [key, value] : meta) {
        out << "# " << key << ": " << value << '\n';
      }
    }
    if (records.empty()) {
      return;
    }
    auto const cell = [](Json const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (opt.format == "csv") {
      bool first = true;
      for (auto const& [key, value] : records.front().items()) {
        out << (first ? "" : ",") << key;
        first = false;
      }
      out << '\n';
      for (auto const& r : records) {
        first = true;
        for (auto const& [key, value] : r.items()) {
          out << (first ? "" : ",") << cell(value);
          first = false;
        }
        out << '\n';
      }
      return;
    }
    std::vector<std::size_t> width;
    for (auto const& [key, value] : records.front().items()) {
      width.push_back(key.size());
    }
    for (auto const& r : records) {
      std::size_t k = 0;
      for (auto const& [key, value] : r.items()) {
        width[k] = std::max(width[k], cell(value).size());
        ++k;
      }
    }
    auto const line = [&](auto const& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) {
        out << (k == 0 ? "" : "  ") << std::setw(static_cast<int>(width[k]))
            << cells[k];
      }
      out << '\n';
    };
    std::vector<std::string> cells;
    for (auto const& [key, value] : records.front().items()) {
      cells.push_back(key);
    }
    line(cells);
    for (auto const& r : records) {
      cells.clear();
      for (auto const& [key, value] : r.items()) {
        cells.push_back(cell(value));
      }
      line(cells);
    }
  }

  // Oracle check of one order, for --verify on single-m commands.
  void verify_order(Side side, GroupParams const& g, std::int64_t formula,
                    VerifyLevel level) {
    if (level == VerifyLevel::none) {
      return;
    }
    auto const pairs = static_cast<std::int64_t>(pairs_closure_size(side, g));
    if (pairs != formula) {
      throw VerificationError(g.m(), side, "pairs", formula, pairs);
    }
    if (level == VerifyLevel::raw) {
      auto const raw = static_cast<std::int64_t>(close_raw(side, g).size);
      if (raw != formula) {
        throw VerificationError(g.m(), side, "raw", formula, raw);
      }
    }
  }

  VerifyStatus status_of(VerifyLevel level) {
    switch (level) {
      case VerifyLevel::none:
        return VerifyStatus::formula_only;
      case VerifyLevel::pairs:
        return VerifyStatus::pairs_verified;
      case VerifyLevel::raw:
        return VerifyStatus::raw_verified;
    }
    return VerifyStatus::formula_only;
  }

  VerifyLevel level_for(Options const& opt, std::int64_t m) {
    return opt.verify.empty() ? default_verify_level(m) : parse_verify_level(opt.verify);
  }

  int cmd_order(Options const& opt, Meta const& meta) {
    GroupParams const g(opt.m);
    auto const        report = order_report(g);
    auto const        level  = level_for(opt, opt.m);
    std::vector<Json> records;
    for (auto side : sides_of(opt.side)) {
      auto const order = side == Side::right ? report.p_order : report.lambda_order;
      verify_order(side, g, order, level);
      Json r;
      r["m"]               = opt.m;
      r["semigroup"]       = semigroup_name(side);
      r["order"]           = order;
      r["t"]               = side == Side::right ? report.t_right : report.t_left;
      r["formula"]         = to_string(report.formula_used);
      r["historical"]      = to_string(historical_formula_kind(g));
      r["iso_gupta"]       = iso_prime_criterion(g);
      r["in_stated_range"] = report.formula_in_stated_range;
      r["verified"]        = to_string(status_of(level));
      records.push_back(std::move(r));
    }
    emit_records(records, opt, meta, std::cout);
    return exit_ok;
  }

  int cmd_table(Options const& opt, Meta const& meta) {
    if (opt.from > opt.to) {
      throw ParameterError("--from must not exceed --to");
    }
    std::vector<TableRow> rows;
    for (auto m = opt.from; m <= opt.to; ++m) {
      rows.push_back(compute_row(GroupParams(m), level_for(opt, m)));
    }
    Meta const* const m = opt.meta ? &meta : nullptr;
    if (opt.format == "csv") {
      std::cout << format_csv(rows, m);
    } else if (opt.format == "json") {
      std::cout << format_json(rows, m);
    } else {
      std::cout << format_text(rows, m);
    }
    return exit_ok;
  }

  int cmd_decompose(Options const& opt, Meta const& meta) {
    GroupParams const g(opt.m);
    auto const        report = order_report(g);
    std::vector<Json> records;
    for (auto side : sides_of(opt.side)) {
      auto const   d     = decompose(side, g);
      std::int64_t total = 0;
      for (auto const& part : d.parts) {
        auto const card = container_cardinality(side, part.power, g);
        total += card.value;
        Json r;
        r["m"]             = opt.m;
        r["semigroup"]     = semigroup_name(side);
        r["power"]         = part.power;
        r["container"]     = to_string(part.container);
        r["size"]          = card.value;
        r["count"]         = to_string(card.method);
        r["running_total"] = total;
        records.push_back(std::move(r));
      }
      auto const order = side == Side::right ? report.p_order : report.lambda_order;
      if (total != order) {
        throw VerificationError(opt.m, side, "decomposition", order, total);
      }
    }
    if (opt.format == "text") {
      if (opt.meta) {
        for (auto const& [key, value] : meta) {
          std::cout << "# " << key << ": " << value << '\n';
        }
      }
      std::string current;
      for (auto const& r : records) {
        auto const name = r["semigroup"].get<std::string>();
        if (name != current) {
          if (!current.empty()) {
            std::cout << '\n';
          }
          current = name;
          std::cout << name << "(D_" << opt.m << "):\n";
        }
        std::cout << "  " << r["container"].get<std::string>() << ": "
                  << r["size"].get<std::int64_t>() << "  (running total "
                  << r["running_total"].get<std::int64_t>() << ")\n";
        bool const last = &r == &records.back()
                          || (&r + 1)->at("semigroup").get<std::string>() != name;
        if (last) {
          std::cout << "  total: " << r["running_total"].get<std::int64_t>() << '\n';
        }
      }
      return exit_ok;
    }
    emit_records(records, opt, meta, std::cout);
    return exit_ok;
  }

  int cmd_central_series(Options const& opt, Meta const& meta) {
    GroupParams const g(opt.m);
    auto const        profile = central_series_profile(g);
    std::vector<Json> records;
    for (std::size_t u = 0; u < profile.orders.size(); ++u) {
      Json r;
      r["m"]         = opt.m;
      r["u"]         = u;
      r["order"]     = profile.orders[u];
      r["rotations"] = center_in_rotations(static_cast<int>(u), g);
      records.push_back(std::move(r));
    }
    emit_records(records, opt, meta, std::cout);
    if (opt.format == "text") {
      std::cout << "stabilises at u = " << profile.stabilization_index << "; "
                << (profile.nilpotent ? "nilpotent" : "not nilpotent") << '\n';
    }
    return exit_ok;
  }

  int cmd_orbit(Options const& opt, Meta const& meta) {
    std::vector<Residue> xs;
    if (opt.x_set) {
      xs.push_back(opt.x);
    } else {
      xs = {-2, 2};
    }
    std::vector<Json> records;
    for (auto x : xs) {
      auto const p = orbit_profile(x, opt.m);
      Json       r;
      r["m"]      = opt.m;
      r["x"]      = x;
      r["index"]  = p.index;
      r["period"] = p.period;
      r["order"]  = p.order ? Json(*p.order) : Json("none");
      records.push_back(std::move(r));
    }
    emit_records(records, opt, meta, std::cout);
    return exit_ok;
  }

  int cmd_verify_claims(Options const& opt, Meta const& meta) {
    auto const        results = verify_claims();
    std::vector<Json> records;
    bool              all     = true;
    for (auto const& c : results) {
      Json r;
      r["claim"]  = c.name;
      r["result"] = c.passed ? "PASS" : "FAIL";
      r["detail"] = c.detail;
      records.push_back(std::move(r));
      if (!c.passed) {
        all = false;
        std::cerr << "claim failed: " << c.name << ": " << c.detail << '\n';
      }
    }
    emit_records(records, opt, meta, std::cout);
    return all ? exit_ok : exit_mismatch;
  }

  int cmd_iso(Options const& opt, Meta const& meta) {
    // Without --m2 compare P(D_m) with Lambda(D_m); with it compare the
    // same side of D_m and D_m2.
    struct Pairing {
      Side         side1;
      std::int64_t m1;
      Side         side2;
      std::int64_t m2;
    };
    std::vector<Pairing> pairings;
    if (opt.m2 == 0) {
      pairings.push_back({Side::right, opt.m, Side::left, opt.m});
    } else {
      for (auto side : sides_of(opt.side)) {
        pairings.push_back({side, opt.m, side, opt.m2});
      }
    }
    std::vector<Json> records;
    for (auto const& p : pairings) {
      GroupParams const g1(p.m1), g2(p.m2);
      auto const        s1 = close_pairs(p.side1, g1);
      auto const        s2 = close_pairs(p.side2, g2);
      auto const        r  = search_isomorphism(s1, s2, opt.budget);
      if (r.status == IsoSearchStatus::isomorphic_with_witness
          && !is_isomorphism(cayley_table(s1), cayley_table(s2), r.witness)) {
        throw Mismatch("search returned a map that is not an isomorphism");
      }
      Json rec;
      rec["first"]  = std::string(semigroup_name(p.side1)) + "(D_" + std::to_string(p.m1) + ")";
      rec["second"] = std::string(semigroup_name(p.side2)) + "(D_" + std::to_string(p.m2) + ")";
      rec["size1"]  = s1.size;
      rec["size2"]  = s2.size;
      rec["status"] = to_string(r.status);
      rec["nodes"]  = r.nodes;
      rec["reason"] = r.reason;
      records.push_back(std::move(rec));
    }
    emit_records(records, opt, meta, std::cout);
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutation semigroups of dihedral groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DIHEDRAL_VERSION);

  Options opt;
  auto const add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_flag("--meta", opt.meta, "Prepend provenance metadata");
  };
  auto const add_m = [&](CLI::App* sub, std::int64_t hi) {
    sub->add_option("--m", opt.m, "Dihedral parameter m (D_m has order 2m)")
        ->required()
        ->check(CLI::Range(std::int64_t{3}, hi));
  };
  auto const add_side = [&](CLI::App* sub) {
    sub->add_option("--side", opt.side, "right for P, left for Lambda, or both")
        ->check(CLI::IsMember({"right", "left", "both"}));
  };
  auto const add_verify = [&](CLI::App* sub) {
    sub->add_option("--verify", opt.verify,
                    "Oracle cross-check; default pairs for m <= 512, none above")
        ->check(CLI::IsMember({"none", "pairs", "raw"}));
  };

  auto* order = app.add_subcommand("order", "Orders of P(D_m) and Lambda(D_m)");
  add_m(order, max_m);
  add_side(order);
  add_verify(order);
  add_format(order);

  auto* table = app.add_subcommand("table", "Table rows for a range of m");
  table->add_option("--from", opt.from, "First m")->required()->check(CLI::Range(std::int64_t{3}, max_m));
  table->add_option("--to", opt.to, "Last m")->required()->check(CLI::Range(std::int64_t{3}, max_m));
  add_verify(table);
  add_format(table);

  auto* decomp = app.add_subcommand("decompose", "Container decomposition");
  add_m(decomp, max_m);
  add_side(decomp);
  add_format(decomp);

  auto* central = app.add_subcommand("central-series", "Upper central series orders");
  add_m(central, max_m);
  add_format(central);

  auto* orbit = app.add_subcommand("orbit", "Index, period and order of x mod m");
  add_m(orbit, max_m);
  orbit->add_option("--x", opt.x, "Residue; default reports -2 and 2")
      ->each([&](std::string const&) { opt.x_set = true; });
  add_format(orbit);

  auto* claims = app.add_subcommand("verify-claims", "Check the named structural claims");
  add_format(claims);

  auto* iso = app.add_subcommand("iso", "Isomorphism search between semigroups");
  add_m(iso, max_iso_m);
  iso->add_option("--m2", opt.m2, "Compare with D_m2 instead of the other side")
      ->check(CLI::Range(std::int64_t{3}, max_iso_m));
  add_side(iso);
  iso->add_option("--budget", opt.budget, "Search node budget");
  add_format(iso);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  Meta const meta = provenance(std::vector<std::string>(argv + 1, argv + argc));
  try {
    if (*order) {
      return cmd_order(opt, meta);
    }
    if (*table) {
      return cmd_table(opt, meta);
    }
    if (*decomp) {
      return cmd_decompose(opt, meta);
    }
    if (*central) {
      return cmd_central_series(opt, meta);
    }
    if (*orbit) {
      return cmd_orbit(opt, meta);
    }
    if (*claims) {
      return cmd_verify_claims(opt, meta);
    }
    return cmd_iso(opt, meta);
  } catch (VerificationError const& e) {
    std::cerr << "dihedral: " << e.what() << '\n';
    return exit_mismatch;
  } catch (Mismatch const& e) {
    std::cerr << "dihedral: " << e.what() << '\n';
    return exit_mismatch;
  } catch (ConsistencyError const& e) {
    std::cerr << "dihedral: " << e.what() << '\n';
    return exit_mismatch;
  } catch (std::exception const& e) {
    std::cerr << "dihedral: " << e.what() << '\n';
    return exit_usage;
  }
}
