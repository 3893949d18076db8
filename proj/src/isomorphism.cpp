#include "dihedral/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "dihedral/errors.hpp"

namespace dihedral {

  CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> products)
      : _n(n), _products(std::move(products)) {
    if (_products.size() != n * n) {
      throw ParameterError("Cayley table must have n * n entries");
    }
    if (std::any_of(_products.begin(), _products.end(), [n](auto v) {
          return v >= n;
        })) {
      throw ParameterError("Cayley table entry out of range");
    }
  }

  bool CayleyTable::is_associative() const {
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        auto const ab = product(a, b);
        for (std::size_t c = 0; c < _n; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  CayleyTable cayley_table(SemigroupSummary const& s) {
    std::size_t const          n = s.size;
    std::vector<std::uint32_t> products(n * n);
    if (s.oracle == OracleKind::mu_pairs) {
      auto const m  = s.m;
      auto const bm = canonical_b_modulus(m);
      std::vector<std::uint32_t> position(static_cast<std::size_t>(m * bm),
                                          std::numeric_limits<std::uint32_t>::max());
      for (std::size_t k = 0; k < n; ++k) {
        position[canonical_key(s.elements[k], m)] = static_cast<std::uint32_t>(k);
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto const c = compose_canonical(s.elements[a], s.elements[b], m);
          products[a * n + b] = position[canonical_key(c, m)];
        }
      }
    } else {
      std::unordered_map<FunctionTable, std::uint32_t, FunctionTableHash> position;
      for (std::size_t k = 0; k < n; ++k) {
        position.emplace(s.tables[k], static_cast<std::uint32_t>(k));
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          products[a * n + b]
              = position.at(compose_tables(s.tables[a], s.tables[b]));
        }
      }
    }
    return CayleyTable(n, std::move(products));
  }

  std::string to_string(IsoSearchStatus status) {
    switch (status) {
      case IsoSearchStatus::isomorphic_with_witness:
        return "isomorphic_with_witness";
      case IsoSearchStatus::not_isomorphic:
        return "not_isomorphic";
      case IsoSearchStatus::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
  }

  bool is_isomorphism(CayleyTable const&                s1,
                      CayleyTable const&                s2,
                      std::vector<std::uint32_t> const& phi) {
    auto const n = s1.size();
    if (s2.size() != n || phi.size() != n) {
      return false;
    }
    std::vector<char> hit(n, 0);
    for (auto y : phi) {
      if (y >= n || hit[y]) {
        return false;
      }
      hit[y] = 1;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (phi[s1.product(a, b)] != s2.product(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    using Colours = std::vector<std::uint32_t>;

    // Assigns joint colour ids to signatures of both semigroups so that equal
    // ids mean equal signatures.
    std::pair<Colours, Colours>
    joint_colours(std::vector<std::vector<std::int64_t>> const& sig1,
                  std::vector<std::vector<std::int64_t>> const& sig2) {
      std::map<std::vector<std::int64_t>, std::uint32_t> ids;
      for (auto const* sigs : {&sig1, &sig2}) {
        for (auto const& s : *sigs) {
          ids.emplace(s, 0);
        }
      }
      std::uint32_t next = 0;
      for (auto& [key, id] : ids) {
        id = next++;
      }
      Colours c1, c2;
      for (auto const& s : sig1) {
        c1.push_back(ids.at(s));
      }
      for (auto const& s : sig2) {
        c2.push_back(ids.at(s));
      }
      return {c1, c2};
    }

    std::vector<std::vector<std::int64_t>> basic_signatures(CayleyTable const& s) {
      auto const                n = s.size();
      std::vector<std::int64_t> hits(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          ++hits[s.product(a, b)];
        }
      }
      std::vector<std::vector<std::int64_t>> out(n);
      std::vector<char>                      row_seen(n), col_seen(n);
      std::vector<std::int64_t>              first_power(n);
      for (std::size_t x = 0; x < n; ++x) {
        std::fill(row_seen.begin(), row_seen.end(), 0);
        std::fill(col_seen.begin(), col_seen.end(), 0);
        std::int64_t row = 0, col = 0, fix_l = 0, fix_r = 0, abs_l = 0,
                     abs_r = 0, commute = 0;
        for (std::size_t y = 0; y < n; ++y) {
          auto const xy = s.product(x, y);
          auto const yx = s.product(y, x);
          row += row_seen[xy] ? 0 : 1;
          row_seen[xy] = 1;
          col += col_seen[yx] ? 0 : 1;
          col_seen[yx] = 1;
          fix_l += xy == y;
          fix_r += yx == y;
          abs_l += xy == x;
          abs_r += yx == x;
          commute += xy == yx;
        }
        // Index and period of x in its monogenic subsemigroup.
        std::fill(first_power.begin(), first_power.end(), 0);
        std::size_t  p = x;
        std::int64_t k = 1;
        while (first_power[p] == 0) {
          first_power[p] = k++;
          p              = s.product(p, x);
        }
        std::int64_t const index  = first_power[p];
        std::int64_t const period = k - index;
        out[x] = {s.product(x, x) == x, index, period, row,   col,    fix_l,
                  fix_r,                abs_l, abs_r,  commute, hits[x]};
      }
      return out;
    }

    // Sorted multiset as (value, multiplicity) pairs.
    void append_run_lengths(std::vector<std::int64_t>& values,
                            std::vector<std::int64_t>& out) {
      std::sort(values.begin(), values.end());
      for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) {
          ++j;
        }
        out.push_back(values[i]);
        out.push_back(static_cast<std::int64_t>(j - i));
        i = j;
      }
    }

    std::vector<std::vector<std::int64_t>> refined_signatures(CayleyTable const& s,
                                                              Colours const& c,
                                                              std::int64_t   k) {
      auto const                             n = s.size();
      std::vector<std::vector<std::int64_t>> out(n);
      std::vector<std::int64_t>              right, left;
      for (std::size_t x = 0; x < n; ++x) {
        right.clear();
        left.clear();
        for (std::size_t y = 0; y < n; ++y) {
          right.push_back(c[s.product(x, y)] * k + c[y]);
          left.push_back(c[s.product(y, x)] * k + c[y]);
        }
        auto& sig = out[x];
        sig.push_back(c[x]);
        append_run_lengths(right, sig);
        sig.push_back(-1);
        append_run_lengths(left, sig);
      }
      return out;
    }

    bool same_multiset(Colours a, Colours b) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }

    std::size_t count_classes(Colours const& a, Colours const& b) {
      Colours all(a);
      all.insert(all.end(), b.begin(), b.end());
      std::sort(all.begin(), all.end());
      return static_cast<std::size_t>(
          std::unique(all.begin(), all.end()) - all.begin());
    }

    // Refines both colourings by the classes of products until the number
    // of classes stops growing. False when the colour multisets differ.
    bool refine_to_stable(CayleyTable const& s1,
                          CayleyTable const& s2,
                          Colours&           c1,
                          Colours&           c2) {
      if (!same_multiset(c1, c2)) {
        return false;
      }
      auto classes = count_classes(c1, c2);
      while (true) {
        auto const k  = static_cast<std::int64_t>(classes);
        auto [r1, r2] = joint_colours(refined_signatures(s1, c1, k),
                                      refined_signatures(s2, c2, k));
        if (!same_multiset(r1, r2)) {
          return false;
        }
        auto const refined = count_classes(r1, r2);
        c1                 = std::move(r1);
        c2                 = std::move(r2);
        if (refined == classes) {
          return true;
        }
        classes = refined;
      }
    }

    constexpr std::uint32_t unmapped = std::numeric_limits<std::uint32_t>::max();

    // Individualise and refine. Each level picks the unmapped element of
    // the first semigroup with the largest colour class and tries every
    // image of the same colour. The map is closed under phi(x g) =
    // phi(x) phi(g) for the chosen elements g; the mapped pairs then get
    // private colours and both colourings are refined again, which prunes
    // images that no extension could accept.
    class Backtracker {
     public:
      Backtracker(CayleyTable const& s1, CayleyTable const& s2, std::uint64_t budget)
          : _s1(s1),
            _s2(s2),
            _budget(budget),
            _phi(s1.size(), unmapped),
            _used(s2.size(), 0) {}

      IsoSearchResult run(Colours c1, Colours c2) {
        bool const found = descend(c1, c2);
        if (found) {
          return {IsoSearchStatus::isomorphic_with_witness, _phi, _nodes,
                  "witness found and checked"};
        }
        if (_exhausted) {
          return {IsoSearchStatus::budget_exhausted, {}, _nodes,
                  "node budget exhausted"};
        }
        return {IsoSearchStatus::not_isomorphic, {}, _nodes,
                "no consistent matching exists"};
      }

     private:
      bool descend(Colours const& c1, Colours const& c2) {
        auto const g = pick(c1);
        if (g == unmapped) {
          return is_isomorphism(_s1, _s2, _phi);
        }
        for (std::uint32_t y = 0; y < _s2.size(); ++y) {
          if (_used[y] || c2[y] != c1[g]) {
            continue;
          }
          if (++_nodes > _budget) {
            _exhausted = true;
            return false;
          }
          auto const mark = _trail.size();
          _chosen.push_back(g);
          if (assign(g, y) && propagate(mark)) {
            Colours n1 = c1, n2 = c2;
            if (individualise(n1, n2) && descend(n1, n2)) {
              return true;
            }
          }
          _chosen.pop_back();
          undo(mark);
          if (_exhausted) {
            return false;
          }
        }
        return false;
      }

      std::uint32_t pick(Colours const& c1) const {
        std::map<std::uint32_t, std::size_t> class_size;
        for (std::size_t x = 0; x < c1.size(); ++x) {
          if (_phi[x] == unmapped) {
            ++class_size[c1[x]];
          }
        }
        auto best = unmapped;
        for (std::uint32_t x = 0; x < c1.size(); ++x) {
          if (_phi[x] == unmapped
              && (best == unmapped || class_size[c1[x]] > class_size[c1[best]])) {
            best = x;
          }
        }
        return best;
      }

      bool individualise(Colours& c1, Colours& c2) const {
        auto next = static_cast<std::uint32_t>(count_classes(c1, c2));
        for (auto x : _trail) {
          c1[x]       = next;
          c2[_phi[x]] = next;
          ++next;
        }
        return refine_to_stable(_s1, _s2, c1, c2);
      }

      bool assign(std::uint32_t x, std::uint32_t y) {
        if (_used[y]) {
          return false;
        }
        _phi[x]  = y;
        _used[y] = 1;
        _trail.push_back(x);
        return true;
      }

      bool constrain(std::uint32_t x, std::uint32_t g) {
        auto const p      = _s1.product(x, g);
        auto const target = _s2.product(_phi[x], _phi[g]);
        if (_phi[p] != unmapped) {
          return _phi[p] == target;
        }
        return assign(p, target);
      }

      // Extends the map to the closure of the chosen elements.
      bool propagate(std::size_t mark) {
        auto const g = _chosen.back();
        // Elements mapped before this level, multiplied by the new choice.
        for (std::size_t k = 0; k < mark; ++k) {
          if (!constrain(_trail[k], g)) {
            return false;
          }
        }
        // Elements mapped at this level, multiplied by every choice.
        for (std::size_t k = mark; k < _trail.size(); ++k) {
          for (auto h : _chosen) {
            if (!constrain(_trail[k], h)) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          auto const x = _trail.back();
          _used[_phi[x]] = 0;
          _phi[x]        = unmapped;
          _trail.pop_back();
        }
      }

      CayleyTable const&         _s1;
      CayleyTable const&         _s2;
      std::uint64_t              _budget;
      std::uint64_t              _nodes     = 0;
      bool                       _exhausted = false;
      std::vector<std::uint32_t> _phi;
      std::vector<char>          _used;
      std::vector<std::uint32_t> _trail;
      std::vector<std::uint32_t> _chosen;
    };

  }  // namespace

  IsoSearchResult search_isomorphism(CayleyTable const& s1,
                                     CayleyTable const& s2,
                                     std::uint64_t      budget) {
    if (s1.size() != s2.size()) {
      return {IsoSearchStatus::not_isomorphic, {}, 0, "sizes differ"};
    }
    if (s1.size() == 0) {
      return {IsoSearchStatus::isomorphic_with_witness, {}, 0, "empty"};
    }
    auto [c1, c2] = joint_colours(basic_signatures(s1), basic_signatures(s2));
    if (!same_multiset(c1, c2)) {
      return {IsoSearchStatus::not_isomorphic, {}, 0, "element invariants differ"};
    }
    if (!refine_to_stable(s1, s2, c1, c2)) {
      return {IsoSearchStatus::not_isomorphic, {}, 0,
              "refined element invariants differ"};
    }
    return Backtracker(s1, s2, budget).run(std::move(c1), std::move(c2));
  }

  IsoSearchResult search_isomorphism(SemigroupSummary const& s1,
                                     SemigroupSummary const& s2,
                                     std::uint64_t           budget) {
    if (s1.size != s2.size) {
      return {IsoSearchStatus::not_isomorphic, {}, 0, "sizes differ"};
    }
    return search_isomorphism(cayley_table(s1), cayley_table(s2), budget);
  }

}  // namespace dihedral
