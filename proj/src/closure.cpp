#include "dihedral/closure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

#include "dihedral/container.hpp"
#include "dihedral/errors.hpp"

namespace dihedral {

  std::size_t FunctionTableHash::operator()(FunctionTable const& t) const noexcept {
    // FNV-1a over the image sequence.
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : t.images) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  FunctionTable compose_tables(FunctionTable const& f, FunctionTable const& h) {
    FunctionTable out;
    out.images.resize(f.images.size());
    for (std::size_t k = 0; k < f.images.size(); ++k) {
      out.images[k] = h.images[f.images[k]];
    }
    return out;
  }

  FunctionTable commutation_table(Side               side,
                                  Element const&     y,
                                  GroupParams const& g) {
    FunctionTable t;
    t.images.reserve(g.order());
    for (auto const& x : enumerate_elements(g)) {
      auto const c = side == Side::right ? commutator(x, y, g) : commutator(y, x, g);
      t.images.push_back(static_cast<std::uint16_t>(c.index()));
    }
    return t;
  }

  FunctionTable mu_table(MuMap const& f) {
    GroupParams const g(f.modulus());
    FunctionTable     t;
    t.images.reserve(g.order());
    for (auto const& x : enumerate_elements(g)) {
      t.images.push_back(static_cast<std::uint16_t>(mu_apply(f, x).index()));
    }
    return t;
  }

  std::optional<MuCanonical> identify_mu(FunctionTable const& t,
                                         GroupParams const&   g) {
    auto const m = g.m();
    if (t.images.size() != g.order()) {
      return std::nullopt;
    }
    auto const image_a = element_at(g, t.images[1]);
    auto const image_b = element_at(g, t.images[static_cast<std::size_t>(m)]);
    if (image_a.reflection() != 0 || image_b.reflection() != 0) {
      return std::nullopt;
    }
    // b maps to a^(2B).
    Residue b = 0;
    if (m % 2 == 1) {
      b = mod(image_b.rotation() * ((m + 1) / 2), m);
    } else {
      if (image_b.rotation() % 2 != 0) {
        return std::nullopt;
      }
      b = image_b.rotation() / 2;
    }
    MuMap const candidate(g, image_a.rotation(), b);
    if (mu_table(candidate) != t) {
      return std::nullopt;
    }
    return mu_canonicalize(candidate);
  }

  std::string to_string(OracleKind kind) {
    return kind == OracleKind::raw_tables ? "raw_tables" : "mu_pairs";
  }

  SemigroupSummary close_raw(Side side, GroupParams const& g) {
    if (g.m() > 128) {
      throw ResourceError("close_raw is limited to m <= 128");
    }
    std::unordered_set<FunctionTable, FunctionTableHash> seen;
    std::vector<FunctionTable>                           generators;
    for (auto const& y : enumerate_elements(g)) {
      auto t = commutation_table(side, y, g);
      if (seen.insert(t).second) {
        generators.push_back(std::move(t));
      }
    }
    std::vector<FunctionTable> elements(generators);
    for (std::size_t next = 0; next < elements.size(); ++next) {
      for (auto const& gen : generators) {
        auto product = compose_tables(elements[next], gen);
        if (seen.insert(product).second) {
          elements.push_back(std::move(product));
        }
      }
    }
    std::sort(elements.begin(), elements.end());
    return SemigroupSummary{g.m(),
                            side,
                            elements.size(),
                            generators.size(),
                            OracleKind::raw_tables,
                            {},
                            std::move(elements)};
  }

  namespace {
    // Closure of a set of canonical generators as a bitmap over canonical
    // keys; returns the number of elements.
    std::size_t close_canonical_bitmap(std::vector<MuCanonical> const& generators,
                                       std::int64_t                    m,
                                       std::vector<std::uint64_t>&     seen) {
      auto const bm = static_cast<std::uint32_t>(canonical_b_modulus(m));
      seen.assign((static_cast<std::size_t>(m) * bm + 63) / 64, 0);
      // Returns whether key was new.
      auto mark = [&seen](std::size_t key) {
        auto&      word = seen[key >> 6];
        auto const bit  = std::uint64_t{1} << (key & 63);
        bool const fresh = (word & bit) == 0;
        word |= bit;
        return fresh;
      };
      struct Pair {
        std::uint16_t a;
        std::uint16_t b;
      };
      std::vector<Pair> queue;
      // s o h depends on h only through its first coordinate, so one
      // right multiplier per distinct first coordinate suffices. Each
      // multiplier is tabulated on both coordinates.
      std::vector<std::vector<std::uint32_t>> times_a;
      std::vector<std::vector<std::uint16_t>> times_b;
      std::vector<Residue>                    multipliers;
      for (auto const& gen : generators) {
        if (mark(canonical_key(gen, m))) {
          queue.push_back({static_cast<std::uint16_t>(gen.a),
                           static_cast<std::uint16_t>(gen.b_star)});
        }
        if (std::find(multipliers.begin(), multipliers.end(), gen.a)
            != multipliers.end()) {
          continue;
        }
        multipliers.push_back(gen.a);
        std::vector<std::uint32_t> ta(static_cast<std::size_t>(m));
        std::vector<std::uint16_t> tb(bm);
        for (std::int64_t a = 0; a < m; ++a) {
          ta[a] = static_cast<std::uint32_t>(mod(a * gen.a, m)) * bm;
        }
        for (std::uint32_t b = 0; b < bm; ++b) {
          tb[b] = static_cast<std::uint16_t>(mod(b * gen.a, bm));
        }
        times_a.push_back(std::move(ta));
        times_b.push_back(std::move(tb));
      }
      for (std::size_t next = 0; next < queue.size(); ++next) {
        auto const [a, b] = queue[next];
        for (std::size_t h = 0; h < multipliers.size(); ++h) {
          auto const key = times_a[h][a] + times_b[h][b];
          if (mark(key)) {
            queue.push_back({static_cast<std::uint16_t>(key / bm),
                             times_b[h][b]});
          }
        }
      }
      return queue.size();
    }

    // Closure of a set of canonical generators; returns the sorted elements.
    std::vector<MuCanonical>
    close_canonical(std::vector<MuCanonical> const& generators,
                    std::int64_t                    m) {
      std::vector<std::uint64_t> seen;
      auto const                 count = close_canonical_bitmap(generators, m, seen);
      // Key order is (a, b_star) order.
      std::vector<MuCanonical> elements;
      elements.reserve(count);
      for (std::size_t w = 0; w < seen.size(); ++w) {
        for (auto bits = seen[w]; bits != 0; bits &= bits - 1) {
          auto const key = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          elements.push_back(canonical_from_key(key, m));
        }
      }
      return elements;
    }

    std::vector<MuCanonical> canonical_generators(Side side, GroupParams const& g) {
      std::vector<MuCanonical> gens;
      for (auto const& y : enumerate_elements(g)) {
        gens.push_back(mu_canonicalize(commutation_map(side, g, y)));
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      return gens;
    }
  }  // namespace

  std::size_t pairs_closure_size(Side side, GroupParams const& g) {
    if (g.m() > 4096) {
      throw ResourceError("close_pairs is limited to m <= 4096");
    }
    std::vector<std::uint64_t> seen;
    return close_canonical_bitmap(canonical_generators(side, g), g.m(), seen);
  }

  SemigroupSummary close_pairs(Side side, GroupParams const& g) {
    if (g.m() > 4096) {
      throw ResourceError("close_pairs is limited to m <= 4096");
    }
    auto const gens     = canonical_generators(side, g);
    auto       elements = close_canonical(gens, g.m());
    return SemigroupSummary{g.m(),
                            side,
                            elements.size(),
                            gens.size(),
                            OracleKind::mu_pairs,
                            std::move(elements),
                            {}};
  }

  std::vector<MuCanonical> canonical_elements(SemigroupSummary const& s) {
    if (s.oracle == OracleKind::mu_pairs) {
      return s.elements;
    }
    GroupParams const        g(s.m);
    std::vector<MuCanonical> out;
    out.reserve(s.tables.size());
    for (auto const& t : s.tables) {
      auto c = identify_mu(t, g);
      if (!c) {
        throw ConsistencyError("closure element is not a mu-map for m = "
                               + std::to_string(s.m));
      }
      out.push_back(*c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool right_closure_only_needs_minus2_container(GroupParams const& g) {
    if (g.m() > 256) {
      throw ResourceError(
          "right_closure_only_needs_minus2_container is limited to m <= 256");
    }
    auto powers = close_canonical(container_members(Container(g, -2, 1)), g.m());
    auto zero   = container_members(Container(g, 0, 1));
    std::vector<MuCanonical> combined;
    std::set_union(powers.begin(), powers.end(), zero.begin(), zero.end(),
                   std::back_inserter(combined));
    return combined == close_pairs(Side::right, g).elements;
  }

  IsoMapCheck verify_iso_map(SemigroupSummary const& source,
                             SemigroupSummary const& target,
                             PairRule const&         rule) {
    if (source.oracle != OracleKind::mu_pairs
        || target.oracle != OracleKind::mu_pairs || source.m != target.m) {
      throw ParameterError(
          "verify_iso_map needs mu_pairs summaries over the same m");
    }
    GroupParams const g(source.m);
    auto const        m = g.m();
    auto image = [&](MuCanonical const& c) {
      auto const [a, b] = rule(c.a, c.b_star);
      return mu_canonicalize(MuMap(g, a, b));
    };
    auto in_target = [&](MuCanonical const& c) {
      return std::binary_search(target.elements.begin(), target.elements.end(), c);
    };

    std::map<MuCanonical, MuCanonical> phi;
    std::vector<MuCanonical>           images;
    for (auto const& s : source.elements) {
      auto const t = image(s);
      if (!in_target(t)) {
        return {false, "image of " + to_string(mu_representative(g, s))
                           + " lies outside the target",
                std::make_pair(s, s)};
      }
      phi.emplace(s, t);
      images.push_back(t);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      return {false, "rule is not injective", std::nullopt};
    }
    if (images.size() != target.elements.size()) {
      return {false, "rule is not surjective", std::nullopt};
    }
    for (auto const& s : source.elements) {
      for (auto const& t : source.elements) {
        auto const st = compose_canonical(s, t, m);
        auto const it = phi.find(st);
        if (it == phi.end()) {
          return {false, "source is not closed", std::make_pair(s, t)};
        }
        if (it->second != compose_canonical(phi.at(s), phi.at(t), m)) {
          return {false, "rule does not preserve composition",
                  std::make_pair(s, t)};
        }
      }
    }
    return {true, "", std::nullopt};
  }

}  // namespace dihedral
