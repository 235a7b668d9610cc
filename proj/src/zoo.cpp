#include "matpart/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "matpart/errors.hpp"
#include "matpart/limits.hpp"

namespace matpart {

// --- laminar ---------------------------------------------------------------

LaminarDescription::LaminarDescription(std::size_t universe_size, ElementSet ground,
                                       std::vector<CapacitySet> family)
    : universe_size_(universe_size), ground_(ground) {
  if (!ground.subset_of(ElementSet::first(universe_size))) {
    throw ValidationError("laminar ground set lies outside the universe");
  }
  std::sort(family.begin(), family.end(), [](const CapacitySet& a, const CapacitySet& b) {
    if (a.set.size() != b.set.size()) return a.set.size() > b.set.size();
    if (a.set != b.set) return a.set < b.set;
    return a.cap < b.cap;
  });
  for (const CapacitySet& member : family) {
    if (!member.set.subset_of(ground)) {
      throw ValidationError("laminar member " + member.set.to_string() +
                            " is not a subset of the ground set");
    }
    if (member.set.empty()) continue;
    if (!family_.empty() && family_.back().set == member.set) continue;  // keeps the minimum
    family_.push_back(member);
  }
  for (std::size_t i = 0; i < family_.size(); ++i) {
    for (std::size_t j = i + 1; j < family_.size(); ++j) {
      const ElementSet a = family_[i].set;
      const ElementSet b = family_[j].set;
      if (!a.disjoint_from(b) && !a.subset_of(b) && !b.subset_of(a)) {
        throw ValidationError("family is not laminar: " + a.to_string() + " and " + b.to_string() +
                              " cross");
      }
    }
  }
  parent_.assign(family_.size(), -1);
  children_.assign(family_.size() + 1, {});
  for (std::size_t i = 0; i < family_.size(); ++i) {
    for (std::size_t j = i; j-- > 0;) {
      if (family_[i].set.subset_of(family_[j].set)) {
        parent_[i] = static_cast<int>(j);
        break;
      }
    }
    children_[static_cast<std::size_t>(parent_[i] + 1)].push_back(i);
  }
  for (auto& list : children_) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return *family_[a].set.min() < *family_[b].set.min();
    });
  }
}

const std::vector<std::size_t>& LaminarDescription::children(int i) const {
  return children_.at(static_cast<std::size_t>(i + 1));
}

bool LaminarDescription::independent(ElementSet x) const {
  return std::all_of(family_.begin(), family_.end(), [&](const CapacitySet& m) {
    return (x & m.set).size() <= m.cap;
  });
}

std::optional<CapacitySet> LaminarDescription::first_violation(ElementSet x,
                                                               std::size_t factor) const {
  for (const CapacitySet& m : family_) {
    if ((x & m.set).size() > factor * m.cap) return m;
  }
  return std::nullopt;
}

std::vector<Element> LaminarDescription::dfs_from(int node) const {
  const ElementSet own = node < 0 ? ground_ : family_[static_cast<std::size_t>(node)].set;
  ElementSet covered;
  // (smallest element, child index or -1 for a loose element)
  std::vector<std::pair<Element, int>> items;
  for (std::size_t c : children(node)) {
    covered |= family_[c].set;
    items.emplace_back(*family_[c].set.min(), static_cast<int>(c));
  }
  for (Element e : own - covered) items.emplace_back(e, -1);
  std::sort(items.begin(), items.end());
  std::vector<Element> order;
  for (const auto& [first, child] : items) {
    if (child < 0) {
      order.push_back(first);
    } else {
      const auto sub = dfs_from(child);
      order.insert(order.end(), sub.begin(), sub.end());
    }
  }
  return order;
}

std::vector<Element> LaminarDescription::dfs_order() const { return dfs_from(-1); }

LaminarMatroid::LaminarMatroid(LaminarDescription description)
    : Matroid(description.universe_size(), description.ground()),
      description_(std::move(description)) {}

bool LaminarMatroid::test_independent(ElementSet x) const { return description_.independent(x); }

std::shared_ptr<const LaminarMatroid> make_laminar(LaminarDescription description) {
  return std::make_shared<LaminarMatroid>(std::move(description));
}

LaminarDescription laminar_restriction(const LaminarDescription& l, ElementSet s) {
  if (!s.subset_of(l.ground())) {
    throw PreconditionError("restriction set " + s.to_string() + " is not a subset of the ground set");
  }
  std::vector<CapacitySet> family;
  for (const CapacitySet& m : l.family()) family.push_back({m.set & s, m.cap});
  return LaminarDescription(l.universe_size(), s, std::move(family));
}

LaminarDescription laminar_power(const LaminarDescription& l, std::size_t k) {
  if (k == 0) throw PreconditionError("laminar_power needs k >= 1");
  std::vector<CapacitySet> family;
  for (const CapacitySet& m : l.family()) family.push_back({m.set, m.cap * k});
  return LaminarDescription(l.universe_size(), l.ground(), std::move(family));
}

std::vector<ElementSet> laminar_round_robin_partition(const LaminarDescription& l, ElementSet x,
                                                     std::size_t k) {
  if (k == 0) throw PreconditionError("round-robin partition needs k >= 1");
  if (!x.subset_of(l.ground())) {
    throw PreconditionError("set " + x.to_string() + " is not a subset of the ground set");
  }
  if (auto bad = l.first_violation(x, k)) {
    throw PreconditionError("infeasible: |X ∩ " + bad->set.to_string() + "| = " +
                            std::to_string((x & bad->set).size()) + " exceeds " +
                            std::to_string(k) + " * " + std::to_string(bad->cap));
  }
  std::vector<ElementSet> parts(k);
  std::size_t position = 0;
  for (Element e : l.dfs_order()) {
    if (!x.contains(e)) continue;
    parts[position % k].insert(e);
    ++position;
  }
  return parts;
}

LaminarDescription partition_matroid(std::size_t universe_size, ElementSet ground,
                                     const std::vector<CapacitySet>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (!blocks[i].set.disjoint_from(blocks[j].set)) {
        throw ValidationError("partition blocks " + blocks[i].set.to_string() + " and " +
                              blocks[j].set.to_string() + " overlap");
      }
    }
  }
  return LaminarDescription(universe_size, ground, blocks);
}

bool laminar_independent(const LaminarDescription& l, ElementSet x) { return l.independent(x); }

// --- transversal -----------------------------------------------------------

TransversalMatroid::TransversalMatroid(BipartiteGraph graph)
    : Matroid(graph.left_size, ElementSet::first(graph.left_size)), graph_(std::move(graph)) {
  adjacency_.assign(graph_.left_size, {});
  std::set<std::pair<Element, std::size_t>> seen;
  for (const auto& [left, right] : graph_.edges) {
    if (left >= graph_.left_size || right >= graph_.right_size) {
      throw ValidationError("bipartite edge (" + std::to_string(left) + ", " +
                            std::to_string(right) + ") is out of range");
    }
    if (!seen.insert({left, right}).second) {
      throw ValidationError("duplicate bipartite edge (" + std::to_string(left) + ", " +
                            std::to_string(right) + ")");
    }
    adjacency_[left].push_back(right);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool TransversalMatroid::has_saturating_matching(ElementSet x) const {
  if (x.size() > graph_.right_size) return false;
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(graph_.right_size, kFree);
  std::vector<char> visited(graph_.right_size, 0);
  // Kuhn's augmenting-path matching.
  auto augment = [&](auto&& self, Element left) -> bool {
    for (std::size_t right : adjacency_[left]) {
      if (visited[right]) continue;
      visited[right] = 1;
      if (owner[right] == kFree || self(self, owner[right])) {
        owner[right] = left;
        return true;
      }
    }
    return false;
  };
  for (Element left : x) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, left)) return false;
  }
  return true;
}

bool TransversalMatroid::test_independent(ElementSet x) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(x.bits());
    if (it != cache_.end()) return it->second;
  }
  const bool result = has_saturating_matching(x);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(x.bits(), result);
  return result;
}

bool transversal_independent(const BipartiteGraph& g, ElementSet x) {
  return TransversalMatroid(g).independent(x);
}

// --- graphic ---------------------------------------------------------------

GraphicMatroid::GraphicMatroid(Multigraph graph)
    : Matroid(graph.edges.size(), ElementSet::first(graph.edges.size())), graph_(std::move(graph)) {
  for (const auto& [u, v] : graph_.edges) {
    if (u >= graph_.vertex_count || v >= graph_.vertex_count) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint out of range");
    }
  }
}

bool GraphicMatroid::test_independent(ElementSet x) const {
  std::vector<std::size_t> parent(graph_.vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Element e : x) {
    const std::size_t a = find(graph_.edges[e].first);
    const std::size_t b = find(graph_.edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool graphic_independent(const Multigraph& h, ElementSet x) {
  return GraphicMatroid(h).independent(x);
}

// --- uniform / explicit ----------------------------------------------------

UniformMatroid::UniformMatroid(std::size_t n, std::size_t rank)
    : Matroid(n, ElementSet::first(n)), rank_(rank) {}

MatroidPtr free_matroid(std::size_t n) { return std::make_shared<UniformMatroid>(n, n); }

ExplicitMatroid::ExplicitMatroid(std::size_t universe_size, ElementSet ground,
                                 const std::vector<ElementSet>& family, Listing listing)
    : Matroid(universe_size, ground) {
  std::unordered_set<std::uint64_t> closed;
  for (ElementSet s : family) {
    if (!s.subset_of(ground)) {
      throw ValidationError("explicit member " + s.to_string() + " lies outside the ground set");
    }
    if (listing == Listing::bases) {
      for_each_subset(s, [&](ElementSet sub) { closed.insert(sub.bits()); });
    } else {
      closed.insert(s.bits());
    }
  }
  for (std::uint64_t bits : closed) family_.emplace_back(bits);
  std::sort(family_.begin(), family_.end());
  const AxiomReport report = axioms_check(family_, ground);
  if (!report.passed()) {
    const Violation& v = report.violations.front();
    std::string where;
    for (ElementSet s : v.sets) where += " " + s.to_string();
    throw ValidationError("explicit family is not a matroid: " + v.axiom + " fails at" + where);
  }
  for (ElementSet s : family_) members_.emplace(s.bits(), true);
}

bool ExplicitMatroid::test_independent(ElementSet x) const { return members_.contains(x.bits()); }

// --- intersecting-submodular bounds ----------------------------------------

IntersectingSubmodularSpec::IntersectingSubmodularSpec(
    std::size_t n, std::vector<std::optional<std::int64_t>> table)
    : n_(n), table_(std::move(table)) {
  if (n > limits().submodular_table) {
    throw CapacityError("submodular tables need |E| <= " +
                        std::to_string(limits().submodular_table));
  }
  if (table_.size() != (std::size_t{1} << n)) {
    throw ValidationError("submodular table must have 2^|E| entries");
  }
  for (std::size_t a = 0; a < table_.size(); ++a) {
    if (table_[a] && *table_[a] < 0) {
      throw ValidationError("bound b(" + ElementSet(a).to_string() + ") is negative");
    }
  }
  const std::size_t full = table_.size();
  for (std::size_t a = 0; a < full; ++a) {
    for (std::size_t b = 0; b < full; ++b) {
      const ElementSet sa(a);
      const ElementSet sb(b);
      if (!sa.intersects_properly(sb)) continue;
      if (!table_[a] || !table_[b]) continue;
      const auto& join = table_[a | b];
      const auto& meet = table_[a & b];
      if (!join || !meet || *table_[a] + *table_[b] < *join + *meet) {
        throw ValidationError("b is not intersecting submodular at " + sa.to_string() + ", " +
                              sb.to_string());
      }
    }
  }
}

IntersectingSubmodularSpec IntersectingSubmodularSpec::scaled(std::int64_t k) const {
  auto table = table_;
  for (auto& v : table) {
    if (v) *v *= k;
  }
  return IntersectingSubmodularSpec(n_, std::move(table));
}

SubmodularBoundMatroid::SubmodularBoundMatroid(IntersectingSubmodularSpec spec)
    : Matroid(spec.size(), ElementSet::first(spec.size())), spec_(std::move(spec)) {
  for (std::size_t a = 1; a < spec_.table().size(); ++a) {
    const auto& v = spec_.table()[a];
    if (v) finite_bounds_.push_back({ElementSet(a), static_cast<std::size_t>(*v)});
  }
}

bool SubmodularBoundMatroid::test_independent(ElementSet x) const {
  return std::all_of(finite_bounds_.begin(), finite_bounds_.end(), [&](const CapacitySet& c) {
    return (x & c.set).size() <= c.cap;
  });
}

bool isub_independent(const IntersectingSubmodularSpec& s, ElementSet x) {
  return SubmodularBoundMatroid(s).independent(x);
}

}  // namespace matpart
