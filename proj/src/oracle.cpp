#include "matpart/oracle.hpp"

#include <algorithm>
#include <limits>

#include "matpart/errors.hpp"
#include "matpart/limits.hpp"

namespace matpart {

namespace {

void require_within(std::size_t size, std::size_t threshold, const char* what) {
  if (size > threshold) {
    throw CapacityError(std::string(what) + ": " + std::to_string(size) +
                        " elements exceed the threshold " + std::to_string(threshold));
  }
}

struct PartitionSearch {
  const Matroid& m1;
  const Matroid& m2;
  std::size_t k;
  std::vector<Element> order;
  std::vector<ElementSet> parts;
  std::uint64_t nodes = 0;

  bool run(std::size_t idx, std::size_t used) {
    ++nodes;
    if (idx == order.size()) return true;
    const Element e = order[idx];
    const std::size_t limit = std::min(used + 1, k);
    for (std::size_t p = 0; p < limit; ++p) {
      const ElementSet grown = parts[p].with(e);
      if (!m1.independent(grown) || !m2.independent(grown)) continue;
      parts[p] = grown;
      if (run(idx + 1, std::max(used, p + 1))) return true;
      parts[p] = grown.without(e);
    }
    return false;
  }
};

}  // namespace

ExhaustiveResult bf_partition_exists(const Matroid& m1, const Matroid& m2, std::size_t k) {
  if (m1.ground() != m2.ground()) throw ValidationError("matroids must share a ground set");
  require_within(m1.ground().size(), limits().brute_force, "bf_partition_exists");
  ExhaustiveResult out;
  if (k == 0) {
    out.found = m1.ground().empty();
    if (out.found) out.partition = std::vector<ElementSet>{};
    return out;
  }
  PartitionSearch search{m1, m2, k, m1.ground().to_vector(), std::vector<ElementSet>(k)};
  out.found = search.run(0, 0);
  out.nodes_explored = search.nodes;
  if (out.found) out.partition = search.parts;
  return out;
}

std::vector<ElementSet> bf_enumerate_family(const std::function<bool(ElementSet)>& pred,
                                            ElementSet ground) {
  require_within(ground.size(), limits().enumeration, "bf_enumerate_family");
  std::vector<ElementSet> out;
  for_each_subset(ground, [&](ElementSet s) {
    if (pred(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t bf_rank_formula(const Matroid& m, std::size_t k, ElementSet x) {
  require_within(x.size(), limits().enumeration, "bf_rank_formula");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_subset(x, [&](ElementSet y) {
    best = std::min(best, (x - y).size() + k * rank(m, y));
  });
  return best;
}

std::size_t bf_rank_formula(std::span<const MatroidPtr> matroids, ElementSet x) {
  require_within(x.size(), limits().enumeration, "bf_rank_formula");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_subset(x, [&](ElementSet y) {
    std::size_t value = (x - y).size();
    for (const auto& m : matroids) value += rank(*m, y);
    best = std::min(best, value);
  });
  return best;
}

ElementSet bf_max_common_independent(const Matroid& m1, const Matroid& m2) {
  if (m1.ground() != m2.ground()) throw ValidationError("matroids must share a ground set");
  require_within(m1.ground().size(), limits().enumeration, "bf_max_common_independent");
  ElementSet best;
  bool have = false;
  for_each_subset(m1.ground(), [&](ElementSet s) {
    if (have && s.size() <= best.size()) return;
    if (m1.independent(s) && m2.independent(s)) {
      best = s;
      have = true;
    }
  });
  return best;
}

namespace {

using namespace fig1;

const ElementSet kFigX{e1, e2p, e3p};
const ElementSet kFigY{e1p, e2p, e3};

template <typename Indep>
bool facts_hold(Indep&& indep, ElementSet ground) {
  const ElementSet all = ElementSet::first(6);
  if (ground != all) return false;
  // Cheap dependence facts first: they prune most of the 2^18 scan.
  if (indep(kFigX.with(e3))) return false;
  if (indep(ElementSet{e2p, e3, e3p})) return false;
  if (indep(ElementSet{e1p, e2, e3p})) return false;
  if (!indep(ElementSet{e1p, e2p, e3p})) return false;
  if (!indep(kFigX) || !indep(all - kFigX)) return false;
  if (!indep(kFigY) || !indep(all - kFigY)) return false;
  // rank 3: some 3-set is independent (shown above) and no 4-set is.
  bool four = false;
  for_each_subset(all, [&](ElementSet s) {
    if (!four && s.size() == 4 && indep(s)) four = true;
  });
  return !four;
}

BipartiteGraph graph_from_mask(std::uint32_t mask, std::size_t right) {
  BipartiteGraph g;
  g.left_size = 6;
  g.right_size = right;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t f = 0; f < right; ++f) {
      if ((mask >> (right * i + f)) & 1U) g.edges.emplace_back(i, f);
    }
  }
  return g;
}

// Left vertex i's neighbourhood as a bitmask over F, tested by Kuhn matching.
bool saturates(const std::vector<std::uint32_t>& nbr, ElementSet x) {
  std::vector<int> match_right(8, -1);
  std::function<bool(std::size_t, std::uint32_t&)> augment = [&](std::size_t i,
                                                                 std::uint32_t& seen) {
    for (std::size_t f = 0; f < 8; ++f) {
      if (!((nbr[i] >> f) & 1U) || ((seen >> f) & 1U)) continue;
      seen |= 1U << f;
      if (match_right[f] < 0 || augment(static_cast<std::size_t>(match_right[f]), seen)) {
        match_right[f] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (Element i : x) {
    std::uint32_t seen = 0;
    if (!augment(i, seen)) return false;
  }
  return true;
}

}  // namespace

bool figure1_facts_hold(const Matroid& m) {
  return facts_hold([&](ElementSet s) { return m.independent(s); }, m.ground());
}

Figure1 reconstruct_figure1() {
  Figure1 out;
  for (std::size_t right : {std::size_t{3}, std::size_t{4}}) {
    const std::uint32_t total = 1U << (6 * right);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      ++out.candidates_scanned;
      std::vector<std::uint32_t> nbr(6, 0);
      for (std::size_t i = 0; i < 6; ++i) {
        nbr[i] = (mask >> (right * i)) & ((1U << right) - 1);
      }
      auto indep = [&](ElementSet s) { return saturates(nbr, s); };
      if (!facts_hold(indep, ElementSet::first(6))) continue;
      out.graph = graph_from_mask(mask, right);
      out.matroid = std::make_shared<TransversalMatroid>(out.graph);
      if (!figure1_facts_hold(*out.matroid)) {
        throw InternalError("reconstructed graph disagrees with the transversal oracle");
      }
      out.adjacency = mask;
      out.labels = GroundSet(std::vector<std::string>{"e1", "e2", "e3", "e1'", "e2'", "e3'"});
      out.x = kFigX;
      out.y = kFigY;
      out.e = e3;
      return out;
    }
  }
  throw InternalError("no bipartite graph with |F| <= 4 satisfies the six-element facts");
}

K4Instance k4_instance() {
  K4Instance out;
  out.labels = GroundSet(std::vector<std::string>{"12", "13", "14", "23", "24", "34"});
  Multigraph g;
  g.vertex_count = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  out.graphic = std::make_shared<GraphicMatroid>(g);
  const ElementSet all = ElementSet::first(6);
  out.matching_partition = make_laminar(partition_matroid(
      6, all, {{ElementSet{0, 5}, 1}, {ElementSet{1, 4}, 1}, {ElementSet{2, 3}, 1}}));
  return out;
}

}  // namespace matpart
