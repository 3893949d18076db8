// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Expected orders come from the reference table; everything else is
// cross-checked between independent oracles.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "dihedral/closure.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/isomorphism.hpp"
#include "dihedral/modular.hpp"
#include "dihedral/order.hpp"
#include "dihedral/report.hpp"
#include "property_suites.hpp"
#include "reference_orders.hpp"

using namespace dihedral;

namespace {

  // Empty string on success, otherwise what went wrong.
  using Check = std::function<std::string()>;

  struct Criterion {
    int         number;
    std::string name;
    double      target_seconds;
    Check       check;
  };

  std::string run_command(std::string const& cmd, int& code) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      code = -1;
      return {};
    }
    std::string            out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    int const status = pclose(pipe);
    code             = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
  }

  std::vector<std::int64_t> odd_primes_below(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 3; p < bound; p += 2) {
      if (is_prime(p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  std::string table_reproduction() {
    int        code = 0;
    auto const out  = run_command(
        std::string(DIHEDRAL_CLI_PATH) + " table --from 3 --to 101 --verify pairs --format csv",
        code);
    if (code != 0) {
      return "table command exited with " + std::to_string(code);
    }
    auto const rows = parse_csv(out);
    if (rows.size() != testdata::reference_orders.size()) {
      return std::to_string(rows.size()) + " rows instead of 99";
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      auto const& ref = testdata::reference_orders[k];
      auto const& row = rows[k];
      if (row.m != ref.m || row.p_order != ref.right || row.lambda_order != ref.left
          || row.verified != VerifyStatus::pairs_verified) {
        return "row for m=" + std::to_string(ref.m) + " differs from the reference";
      }
    }
    return "";
  }

  std::string oracle_independence() {
    for (std::int64_t m = 3; m <= 64; ++m) {
      GroupParams const g(m);
      for (auto side : {Side::right, Side::left}) {
        auto const raw   = close_raw(side, g);
        auto const pairs = close_pairs(side, g);
        auto       a     = canonical_elements(raw);
        auto       b     = canonical_elements(pairs);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (raw.size != pairs.size || a != b) {
          return "oracles disagree at m=" + std::to_string(m) + " side "
                 + std::string(to_string(side));
        }
      }
    }
    return "";
  }

  std::string triple_agreement() {
    for (std::int64_t m = 3; m <= 4096; ++m) {
      GroupParams const g(m);
      for (auto side : {Side::right, Side::left}) {
        auto const a = order_center_sum(side, g);
        if (order_simplified(side, g) != a || order_historical(side, g) != a) {
          return "formulas disagree at m=" + std::to_string(m) + " side "
                 + std::string(to_string(side));
        }
      }
    }
    return "";
  }

  std::string d3_anchor() {
    GroupParams const g(3);
    auto const        p = close_raw(Side::right, g).size;
    auto const        l = close_raw(Side::left, g).size;
    if (p != 6 || l != 9) {
      return "raw closure gives " + std::to_string(p) + " and " + std::to_string(l);
    }
    return "";
  }

  std::string counterexamples() {
    GroupParams const g8(8), g15(15), g10(10), g5(5);
    auto const        p8 = close_pairs(Side::right, g8);
    auto const        l8 = close_pairs(Side::left, g8);
    if (p8.size != 10 || l8.size != 10) {
      return "D8 orders are not both 10";
    }
    if (close_raw(Side::right, g8).size != 10 || close_raw(Side::left, g8).size != 10) {
      return "D8 raw orders are not both 10";
    }
    if (p8.elements == l8.elements) {
      return "P(D8) and Lambda(D8) coincide as sets";
    }
    auto const contained = [](auto const& a, auto const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    if (contained(p8.elements, l8.elements) || contained(l8.elements, p8.elements)) {
      return "one D8 semigroup contains the other";
    }
    auto const tripled = verify_iso_map(p8, l8, [](Residue a, Residue b) {
      return std::pair<Residue, Residue>{3 * a, b};
    });
    if (!tripled.ok) {
      return "(x, y) -> (3x, y) is not an isomorphism: " + tripled.reason;
    }
    auto const p15 = close_pairs(Side::right, g15);
    auto const l15 = close_pairs(Side::left, g15);
    if (p15.size != 75 || l15.size != 75) {
      return "D15 orders are not both 75";
    }
    if (search_isomorphism(p15, l15).status != IsoSearchStatus::not_isomorphic) {
      return "D15 search did not prove non-isomorphism";
    }
    for (auto side : {Side::right, Side::left}) {
      auto const a = close_pairs(side, g10);
      auto const b = close_pairs(side, g5);
      auto const r = search_isomorphism(a, b);
      if (r.status != IsoSearchStatus::isomorphic_with_witness
          || !is_isomorphism(cayley_table(a), cayley_table(b), r.witness)) {
        return "no verified witness for D10 and D5, side " + std::string(to_string(side));
      }
    }
    return "";
  }

  std::string p_versus_2p() {
    for (auto p : odd_primes_below(500)) {
      if (!check_p_vs_2p(p)) {
        return "formula orders differ for p=" + std::to_string(p);
      }
      for (auto side : {Side::right, Side::left}) {
        if (pairs_closure_size(side, GroupParams(p))
            != pairs_closure_size(side, GroupParams(2 * p))) {
          return "closure orders differ for p=" + std::to_string(p);
        }
      }
    }
    return "";
  }

  std::string distinct_prime_left_orders() {
    std::set<std::int64_t> formula, closure;
    auto const             primes = odd_primes_below(200);
    for (auto p : primes) {
      formula.insert(order_center_sum(Side::left, GroupParams(p)));
      closure.insert(
          static_cast<std::int64_t>(pairs_closure_size(Side::left, GroupParams(p))));
    }
    if (formula != closure) {
      return "formula and closure orders differ";
    }
    if (formula.size() != primes.size()) {
      return "two primes share an order";
    }
    return "";
  }

  std::string property_suites() {
    std::string failed;
    for (std::string const path : property_suite_paths) {
      int code = 0;
      run_command(path + " > /dev/null 2>&1", code);
      if (code != 0) {
        failed += (failed.empty() ? "" : ", ") + path.substr(path.rfind('/') + 1);
      }
    }
    return failed.empty() ? "" : "failing suites: " + failed;
  }

  std::string criterion_consistency() {
    constexpr std::size_t max_search_size = 200;
    for (std::int64_t m = 3; m <= 101; ++m) {
      GroupParams const g(m);
      auto const        report = order_report(g);
      bool const        crit   = iso_prime_criterion(g);
      if (report.p_order != report.lambda_order) {
        continue;
      }
      auto const p = close_pairs(Side::right, g);
      auto const l = close_pairs(Side::left, g);
      if (!crit) {
        if (search_isomorphism(p, l).status == IsoSearchStatus::isomorphic_with_witness) {
          return "witness found against the criterion at m=" + std::to_string(m);
        }
      } else if (p.size <= max_search_size) {
        auto const r = search_isomorphism(p, l);
        if (r.status != IsoSearchStatus::isomorphic_with_witness
            || !is_isomorphism(cayley_table(p), cayley_table(l), r.witness)) {
          return "no witness at m=" + std::to_string(m) + " (" + r.reason + ")";
        }
      }
    }
    return "";
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "table reproduction for m = 3..101", 5, table_reproduction},
      {2, "raw and pair oracles agree for m = 3..64", 60, oracle_independence},
      {3, "three order formulas agree for m = 3..4096", 30, triple_agreement},
      {4, "D3 orders 6 and 9 by raw closure", 0, d3_anchor},
      {5, "D8, D15, D10/D5 counterexample suite", 120, counterexamples},
      {6, "D_p and D_2p orders agree for odd primes p < 500", 0, p_versus_2p},
      {7, "left orders distinct over odd primes p < 200", 0, distinct_prime_left_orders},
      {8, "property suites", 0, property_suites},
      {9, "isomorphism search consistent with the prime criterion", 0,
       criterion_consistency},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto const  start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.check();
    } catch (std::exception const& e) {
      detail = std::string("exception: ") + e.what();
    }
    double const seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const passed = detail.empty();
    all &= passed;
    std::printf("%s criterion %d: %s (%.2f s", passed ? "PASS" : "FAIL", c.number,
                c.name.c_str(), seconds);
    if (c.target_seconds > 0) {
      std::printf(", expected < %.0f s", c.target_seconds);
    }
    std::printf(")%s%s\n", passed ? "" : ": ", detail.c_str());
  }
  return all ? 0 : 1;
}
