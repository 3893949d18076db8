#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "dihedral/central_series.hpp"
#include "dihedral/claims.hpp"
#include "dihedral/closure.hpp"
#include "dihedral/container.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/isomorphism.hpp"
#include "dihedral/modular.hpp"
#include "dihedral/order.hpp"
#include "dihedral/report.hpp"

namespace py = pybind11;
using namespace dihedral;

namespace {

  Side parse_side(std::string const& side) {
    if (side == "right") {
      return Side::right;
    }
    if (side == "left") {
      return Side::left;
    }
    throw ParameterError("side must be 'right' or 'left', got '" + side + "'");
  }

  py::dict row_dict(TableRow const& r) {
    py::dict d;
    d["m"]            = r.m;
    d["p_order"]      = r.p_order;
    d["lambda_order"] = r.lambda_order;
    d["t_right"]      = r.t_right;
    d["t_left"]       = r.t_left;
    d["per_minus2"]   = r.per_minus2;
    d["per_plus2"]    = r.per_plus2;
    d["iso_gupta"]    = r.iso_gupta;
    d["verified"]     = to_string(r.verified);
    return d;
  }

  std::vector<TableRow> table_rows(std::int64_t from, std::int64_t to,
                                   std::string const& verify) {
    if (from > to) {
      throw ParameterError("from must not exceed to");
    }
    std::vector<TableRow> rows;
    for (auto m = from; m <= to; ++m) {
      auto const level = verify.empty() ? default_verify_level(m) : parse_verify_level(verify);
      rows.push_back(compute_row(GroupParams(m), level));
    }
    return rows;
  }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc()                 = "Commutation semigroups of dihedral groups";
  mod.attr("__version__")   = DIHEDRAL_VERSION;

  py::register_exception<ParameterError>(mod, "ParameterError", PyExc_ValueError);
  py::register_exception<ResourceError>(mod, "ResourceError", PyExc_RuntimeError);
  py::register_exception<VerificationError>(mod, "VerificationError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(mod, "ConsistencyError", PyExc_RuntimeError);

  mod.def(
      "order",
      [](std::int64_t m, std::string const& side) {
        return order_center_sum(parse_side(side), GroupParams(m));
      },
      py::arg("m"), py::arg("side") = "right",
      "Closed-form order of P(D_m) (side='right') or Lambda(D_m) (side='left').");

  mod.def(
      "order_report",
      [](std::int64_t m) {
        auto const r = order_report(GroupParams(m));
        py::dict   d;
        d["m"]                = r.m;
        d["p_order"]          = r.p_order;
        d["lambda_order"]     = r.lambda_order;
        d["t_right"]          = r.t_right;
        d["t_left"]           = r.t_left;
        d["formula"]          = to_string(r.formula_used);
        d["iso"]              = to_string(r.iso_pl);
        d["formula_in_stated_range"] = r.formula_in_stated_range;
        return d;
      },
      py::arg("m"));

  mod.def(
      "orbit_profile",
      [](std::int64_t x, std::int64_t m) {
        auto const p = orbit_profile(x, m);
        py::dict   d;
        d["x"]      = p.x;
        d["modulus"] = p.modulus;
        d["index"]  = p.index;
        d["period"] = p.period;
        d["order"]  = p.order ? py::object(py::int_(*p.order)) : py::none();
        return d;
      },
      py::arg("x"), py::arg("m"), "Index, period and (for units) order of x mod m.");

  mod.def(
      "central_series_orders",
      [](std::int64_t m) { return central_series_profile(GroupParams(m)).orders; },
      py::arg("m"), "|Z_u(D_m)| for u = 0 up to stabilisation.");

  mod.def(
      "decompose",
      [](std::int64_t m, std::string const& side) {
        GroupParams const g(m);
        auto const        s = parse_side(side);
        py::list          parts;
        for (auto const& part : decompose(s, g).parts) {
          py::dict d;
          d["container"] = to_string(part.container);
          d["a"]         = part.container.a();
          d["d"]         = part.container.divisor();
          d["power"]     = part.power;
          d["size"]      = container_cardinality(s, part.power, g).value;
          parts.append(d);
        }
        return parts;
      },
      py::arg("m"), py::arg("side") = "right",
      "Disjoint containers whose union is the semigroup.");

  mod.def(
      "close_pairs",
      [](std::int64_t m, std::string const& side) {
        std::vector<std::pair<Residue, Residue>> out;
        for (auto const& e : close_pairs(parse_side(side), GroupParams(m)).elements) {
          out.emplace_back(e.a, e.b_star);
        }
        return out;
      },
      py::arg("m"), py::arg("side") = "right",
      "Canonical (A, B) pairs of the semigroup, sorted. m <= 4096.");

  mod.def(
      "closure_size",
      [](std::int64_t m, std::string const& side, std::string const& oracle) {
        GroupParams const g(m);
        auto const        s = parse_side(side);
        if (oracle == "raw") {
          return close_raw(s, g).size;
        }
        if (oracle == "pairs") {
          return pairs_closure_size(s, g);
        }
        throw ParameterError("oracle must be 'pairs' or 'raw'");
      },
      py::arg("m"), py::arg("side") = "right", py::arg("oracle") = "pairs",
      "Order by closure: 'pairs' for m <= 4096, 'raw' for m <= 128.");

  mod.def(
      "iso_search",
      [](std::int64_t m1, std::string const& side1, std::int64_t m2,
         std::string const& side2, std::uint64_t budget) {
        auto const s1 = close_pairs(parse_side(side1), GroupParams(m1));
        auto const s2 = close_pairs(parse_side(side2), GroupParams(m2));
        auto const r  = search_isomorphism(s1, s2, budget);
        py::dict   d;
        d["status"]  = to_string(r.status);
        d["witness"] = r.witness;
        d["nodes"]   = r.nodes;
        d["reason"]  = r.reason;
        return d;
      },
      py::arg("m1"), py::arg("side1"), py::arg("m2"), py::arg("side2"),
      py::arg("budget") = default_search_budget);

  mod.def("iso_prime_criterion",
          [](std::int64_t m) { return iso_prime_criterion(GroupParams(m)); },
          py::arg("m"));

  mod.def(
      "table",
      [](std::int64_t from, std::int64_t to, std::string const& verify) {
        py::list rows;
        for (auto const& r : table_rows(from, to, verify)) {
          rows.append(row_dict(r));
        }
        return rows;
      },
      py::arg("from_m"), py::arg("to_m"), py::arg("verify") = "",
      "Table rows; verify is 'none', 'pairs', 'raw' or '' for the default.");

  mod.def(
      "table_csv",
      [](std::int64_t from, std::int64_t to, std::string const& verify) {
        return format_csv(table_rows(from, to, verify));
      },
      py::arg("from_m"), py::arg("to_m"), py::arg("verify") = "");

  mod.def("verify_claims", [] {
    py::list out;
    for (auto const& c : verify_claims()) {
      py::dict d;
      d["name"]   = c.name;
      d["passed"] = c.passed;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  });
}
