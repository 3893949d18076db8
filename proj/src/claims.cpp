#include "dihedral/claims.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>

#include "dihedral/closure.hpp"
#include "dihedral/isomorphism.hpp"
#include "dihedral/modular.hpp"
#include "dihedral/order.hpp"

namespace dihedral {

  namespace {
    ClaimResult run(std::string name, std::function<std::string()> const& body) {
      // body returns "" on success, otherwise the failure detail.
      try {
        auto detail = body();
        return {std::move(name), detail.empty(), detail};
      } catch (std::exception const& e) {
        return {std::move(name), false, e.what()};
      }
    }

    std::string expect_size(SemigroupSummary const& s, std::size_t expected) {
      if (s.size == expected) {
        return "";
      }
      std::ostringstream os;
      os << to_string(s.side) << " semigroup of D_" << s.m << " has "
         << s.size << " elements, expected " << expected;
      return os.str();
    }

    std::string expect_iso(SemigroupSummary const& s1,
                           SemigroupSummary const& s2,
                           IsoSearchStatus         expected) {
      auto const r = search_isomorphism(s1, s2);
      if (r.status == expected) {
        return "";
      }
      return "search returned " + to_string(r.status) + " (" + r.reason + ")";
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

    std::string orders_distinct(Side side, std::int64_t bound) {
      std::set<std::int64_t> seen;
      for (auto p : odd_primes_below(bound)) {
        if (!seen.insert(order_center_sum(side, GroupParams(p))).second) {
          return "repeated order at p = " + std::to_string(p);
        }
      }
      return "";
    }
  }  // namespace

  std::vector<ClaimResult> verify_claims() {
    GroupParams const d3(3), d5(5), d8(8), d10(10), d15(15);
    std::vector<ClaimResult> out;

    out.push_back(run("D3 orders 6 and 9 by table closure", [&] {
      auto detail = expect_size(close_raw(Side::right, d3), 6);
      return detail.empty() ? expect_size(close_raw(Side::left, d3), 9) : detail;
    }));

    auto const p8 = close_pairs(Side::right, d8);
    auto const l8 = close_pairs(Side::left, d8);
    out.push_back(run("D8 right and left orders both 10", [&] {
      auto detail = expect_size(p8, 10);
      return detail.empty() ? expect_size(l8, 10) : detail;
    }));
    out.push_back(run("D8 semigroups differ with neither containing the other", [&] {
      auto const& a = p8.elements;
      auto const& b = l8.elements;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())
          || std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        return std::string("one semigroup contains the other");
      }
      return std::string();
    }));
    out.push_back(run("D8 map (x, y) -> (3x, y) is an isomorphism right -> left", [&] {
      auto const check = verify_iso_map(p8, l8, [](Residue a, Residue b) {
        return std::make_pair(3 * a, b);
      });
      return check.ok ? std::string() : check.reason;
    }));
    out.push_back(run("D8 search finds an isomorphism", [&] {
      return expect_iso(p8, l8, IsoSearchStatus::isomorphic_with_witness);
    }));

    out.push_back(run("D15 equal orders 75 but not isomorphic", [&] {
      auto const p = close_pairs(Side::right, d15);
      auto const l = close_pairs(Side::left, d15);
      auto detail  = expect_size(p, 75);
      if (detail.empty()) {
        detail = expect_size(l, 75);
      }
      return detail.empty() ? expect_iso(p, l, IsoSearchStatus::not_isomorphic)
                            : detail;
    }));

    for (auto side : {Side::right, Side::left}) {
      out.push_back(run("D10 and D5 " + std::string(to_string(side))
                            + " semigroups isomorphic",
                        [&] {
                          return expect_iso(close_pairs(side, d10),
                                            close_pairs(side, d5),
                                            IsoSearchStatus::isomorphic_with_witness);
                        }));
    }

    out.push_back(run("D_p and D_2p share both orders for odd primes p < 500", [] {
      for (auto p : odd_primes_below(500)) {
        if (!check_p_vs_2p(p)) {
          return "orders differ at p = " + std::to_string(p);
        }
      }
      return std::string();
    }));
    out.push_back(run("left orders distinct over odd primes p < 200",
                      [] { return orders_distinct(Side::left, 200); }));
    out.push_back(run("right orders distinct over odd primes p < 200",
                      [] { return orders_distinct(Side::right, 200); }));
    return out;
  }

}  // namespace dihedral
