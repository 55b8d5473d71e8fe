#pragma once

/**
 * @file poset.hpp
 * @brief The poset of torsions Gr M: pairs (A, l) with A independent and
 * l ∈ tor(A)^∨, covered by (A ∪ b, h) whenever π^∨_{A,b}(h) = l.
 *
 * Dual elements are residue tuples h against the cyclic decomposition of
 * tor(A) = ⊕ R/(d_j), read as the functional x -> Σ h_j x_j / d_j in Q(R)/R.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gtpoly/error.hpp"
#include "gtpoly/matroid.hpp"
#include "gtpoly/module.hpp"
#include "gtpoly/report.hpp"

namespace gtpoly {

inline constexpr std::size_t default_node_budget = 100'000;

template <SupportedRing R>
using DualTorsionElement = std::vector<QuadInt<R>>;

/// Coefficients of π^∨_{A,b} for one pair (A, b):
/// (π^∨ h)_j = reduce_{d_j}(Σ_k h_k c[k][j]).
template <SupportedRing R>
struct PushforwardMap {
  std::vector<std::vector<QuadInt<R>>> coeff;  // rows: summands of tor(A ∪ b); cols: summands of tor(A)
  std::vector<ResidueSystem<R>> target;

  DualTorsionElement<R> operator()(const DualTorsionElement<R>& h) const {
    if (h.size() != coeff.size()) throw invalid_input("dual element has the wrong number of coordinates");
    DualTorsionElement<R> out(target.size());
    for (std::size_t j = 0; j < target.size(); ++j) {
      QuadInt<R> s;
      for (std::size_t k = 0; k < h.size(); ++k) s += h[k] * coeff[k][j];
      out[j] = target[j].reduce(s);
    }
    return out;
  }
};

/// Builds π^∨_{A,b}: each generator g_j of tor(A) is written in the cyclic
/// coordinates of tor(A ∪ b), and h(π g_j) = Σ_k h_k (L g_j)_k / d'_k is
/// rescaled by d_j. The rescaled pairing must be integral.
template <SupportedRing R>
PushforwardMap<R> pushforward_map(const RealizedMatroid<R>& m, Subset a, std::size_t b) {
  if (contains(a, b)) throw invalid_input("b already lies in A");
  Subset ab = with(a, b);
  if (!m.is_independent(ab)) throw invalid_input("pushforward needs A ∪ b independent, got " + subset_to_string(ab, m.labels()));
  const auto& lower = m.presentation_of(a);
  const auto& upper = m.presentation_of(ab);
  PushforwardMap<R> map;
  map.target = lower.residues;
  map.coeff.assign(upper.size(), std::vector<QuadInt<R>>(lower.size()));
  for (std::size_t j = 0; j < lower.size(); ++j) {
    auto g = lower.generator(j);
    for (std::size_t k = 0; k < upper.free_coordinates.rows(); ++k) {
      QuadInt<R> s;
      for (std::size_t i = 0; i < g.size(); ++i) s += upper.free_coordinates(k, i) * g[i];
      if (!s.is_zero()) throw consistency_error("torsion generator of " + subset_to_string(a, m.labels()) + " is not torsion above");
    }
    for (std::size_t k = 0; k < upper.size(); ++k) {
      QuadInt<R> s;
      for (std::size_t i = 0; i < g.size(); ++i) s += upper.coordinates(k, i) * g[i];
      QuadInt<R> num = lower.chain[j] * s;
      if (!divides(upper.chain[k], num))
        throw consistency_error("pairing of " + subset_to_string(ab, m.labels()) + " on a generator of " +
                                subset_to_string(a, m.labels()) + " is not integral");
      map.coeff[k][j] = divexact(num, upper.chain[k]);
    }
  }
  return map;
}

template <SupportedRing R>
DualTorsionElement<R> dual_pushforward(const RealizedMatroid<R>& m, Subset a, std::size_t b, const DualTorsionElement<R>& h) {
  return pushforward_map(m, a, b)(h);
}

template <SupportedRing R>
struct PosetNode {
  Subset set = 0;
  DualTorsionElement<R> dual;
  std::size_t rank() const { return subset_size(set); }
  friend bool operator==(const PosetNode&, const PosetNode&) = default;
};

/// Finite poset with explicit nodes and cover relations (lower, upper).
template <SupportedRing R>
class TorsionPoset {
 public:
  TorsionPoset() = default;
  TorsionPoset(std::vector<PosetNode<R>> nodes, std::vector<std::pair<std::size_t, std::size_t>> covers,
               std::vector<std::size_t> labels)
      : nodes_(std::move(nodes)), covers_(std::move(covers)), labels_(std::move(labels)) {
    std::sort(covers_.begin(), covers_.end());
    up_.assign(nodes_.size(), {});
    down_.assign(nodes_.size(), {});
    for (auto [lo, hi] : covers_) {
      if (lo >= nodes_.size() || hi >= nodes_.size()) throw invalid_input("cover refers to a missing node");
      up_[lo].push_back(hi);
      down_[hi].push_back(lo);
    }
  }

  std::size_t size() const { return nodes_.size(); }
  const std::vector<PosetNode<R>>& nodes() const { return nodes_; }
  const PosetNode<R>& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t rank(std::size_t i) const { return nodes_[i].rank(); }

  /// "({1,2} | 1,0)"; the trivial functional on a zero group prints as e.
  std::string label(std::size_t i) const {
    const auto& n = nodes_[i];
    std::string s = "(" + subset_to_string(n.set, labels_) + " | ";
    if (n.dual.empty()) s += "e";
    for (std::size_t k = 0; k < n.dual.size(); ++k) s += (k ? "," : "") + n.dual[k].to_string();
    return s + ")";
  }

  /// All nodes y <= i (including i).
  std::vector<std::size_t> down_set(std::size_t i) const {
    std::set<std::size_t> seen{i};
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : down_[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<std::size_t> minima() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (down_[i].empty()) out.push_back(i);
    return out;
  }

  friend bool operator==(const TorsionPoset& a, const TorsionPoset& b) {
    return a.nodes_ == b.nodes_ && a.covers_ == b.covers_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<PosetNode<R>> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::size_t> labels_;
  std::vector<std::vector<std::size_t>> up_, down_;
};

/// Σ_{A independent} |tor(A)|, the node count of Gr M.
template <SupportedRing R>
mpz_class poset_node_count(const RealizedMatroid<R>& m) {
  mpz_class total = 0;
  for (Subset a : m.independents()) total += torsion_cardinality(m.class_of(a));
  return total;
}

/// Materializes Gr M. Nodes are ordered by (|A|, A, residue index). Every
/// commuting square of pushforwards is checked, which makes composed
/// pushforwards independent of the chosen chain.
template <SupportedRing R>
TorsionPoset<R> build_poset(const RealizedMatroid<R>& m, std::size_t node_budget = default_node_budget) {
  auto delta = m.independents();
  std::sort(delta.begin(), delta.end(), [](Subset x, Subset y) {
    return std::pair(subset_size(x), x) < std::pair(subset_size(y), y);
  });
  mpz_class total = 0;
  for (Subset a : delta) total += torsion_cardinality(m.class_of(a));
  if (total > node_budget) throw budget_exceeded("poset of torsions has " + total.get_str() + " nodes, budget " + std::to_string(node_budget), total);

  std::vector<PosetNode<R>> nodes;
  std::map<Subset, std::map<DualTorsionElement<R>, std::size_t>> index;
  for (Subset a : delta) {
    for (auto& h : enumerate_torsion(m.presentation_of(a), node_budget)) {
      index[a].emplace(h, nodes.size());
      nodes.push_back({a, std::move(h)});
    }
  }

  std::map<std::pair<Subset, std::size_t>, PushforwardMap<R>> maps;
  auto push = [&](Subset a, std::size_t b) -> const PushforwardMap<R>& {
    auto key = std::pair(a, b);
    auto it = maps.find(key);
    if (it == maps.end()) it = maps.emplace(key, pushforward_map(m, a, b)).first;
    return it->second;
  };

  // below[v][b]: the node reached from v by dropping element b; lower ranks
  // are filled first, so squares compare node indices
  std::vector<std::map<std::size_t, std::size_t>> below(nodes.size());
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const Subset s = nodes[v].set;
    const auto elems = subset_elements(s);
    for (auto b : elems) {
      Subset a = without(s, b);
      auto l = push(a, b)(nodes[v].dual);
      auto it = index[a].find(l);
      if (it == index[a].end()) throw consistency_error("pushforward left the residue domain at " + subset_to_string(a, m.labels()));
      covers.emplace_back(it->second, v);
      below[v][b] = it->second;
    }
    for (std::size_t x = 0; x < elems.size(); ++x)
      for (std::size_t y = x + 1; y < elems.size(); ++y) {
        auto b = elems[x], c = elems[y];
        if (below[below[v][b]][c] != below[below[v][c]][b])
          throw consistency_error("pushforwards from " + subset_to_string(s, m.labels()) + " depend on the chain order");
      }
  }
  return TorsionPoset<R>(std::move(nodes), std::move(covers), m.labels());
}

/// Sub-poset on the given nodes (kept in the given order).
template <SupportedRing R>
TorsionPoset<R> induced_subposet(const TorsionPoset<R>& p, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> pos(p.size(), p.size());
  std::vector<PosetNode<R>> nodes;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = i;
    nodes.push_back(p.node(keep[i]));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [lo, hi] : p.covers())
    if (pos[lo] < p.size() && pos[hi] < p.size()) covers.emplace_back(pos[lo], pos[hi]);
  return TorsionPoset<R>(std::move(nodes), std::move(covers), p.labels());
}

/// Connected components of the Hasse diagram, ordered by smallest node.
template <SupportedRing R>
std::vector<TorsionPoset<R>> poset_components(const TorsionPoset<R>& p) {
  std::vector<std::size_t> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [lo, hi] : p.covers()) {
    auto a = find(lo), b = find(hi);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < p.size(); ++i) groups[find(i)].push_back(i);
  std::vector<TorsionPoset<R>> out;
  for (const auto& [root, members] : groups) out.push_back(induced_subposet(p, members));
  return out;
}

/// Up-set of node i, i.e. its closed link.
template <SupportedRing R>
TorsionPoset<R> upper_interval(const TorsionPoset<R>& p, std::size_t i) {
  std::vector<char> seen(p.size(), 0);
  std::vector<std::size_t> stack{i}, keep;
  seen[i] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    keep.push_back(v);
    for (auto w : p.upper_covers(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(keep.begin(), keep.end());
  return induced_subposet(p, keep);
}

namespace detail {

class IsoSearch {
 public:
  IsoSearch(std::vector<std::vector<std::size_t>> up, std::vector<std::size_t> colors, std::size_t n1, std::size_t budget)
      : up_(std::move(up)), n1_(n1), budget_(budget) {
    down_.assign(up_.size(), {});
    for (std::size_t v = 0; v < up_.size(); ++v)
      for (auto w : up_[v]) down_[w].push_back(v);
    for (std::size_t v = 0; v < up_.size(); ++v) std::sort(up_[v].begin(), up_[v].end());
    initial_ = std::move(colors);
  }

  /// Greedy descent first; the backtracking search only runs if the greedy
  /// path dead-ends on graphs that refinement alone cannot tell apart.
  std::optional<std::vector<std::size_t>> run() {
    bool refuted = false;
    if (auto f = greedy(refuted)) return f;
    if (refuted) return std::nullopt;
    return search(initial_);
  }
  std::size_t explored() const { return explored_; }

 private:
  // joint colour refinement of both graphs; colours stay comparable across them
  std::vector<std::size_t> refine(std::vector<std::size_t> c) const {
    std::size_t classes = std::set<std::size_t>(c.begin(), c.end()).size();
    for (;;) {
      std::map<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> ids;
      std::vector<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>> sig(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) {
        std::vector<std::size_t> u, d;
        for (auto w : up_[v]) u.push_back(c[w]);
        for (auto w : down_[v]) d.push_back(c[w]);
        std::sort(u.begin(), u.end());
        std::sort(d.begin(), d.end());
        sig[v] = {c[v], std::move(u), std::move(d)};
        ids.emplace(sig[v], 0);
      }
      std::size_t next = 0;
      for (auto& [k, id] : ids) id = next++;
      std::vector<std::size_t> nc(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) nc[v] = ids[sig[v]];
      c = std::move(nc);
      if (next == classes) return c;
      classes = next;
    }
  }

  bool balanced(const std::vector<std::size_t>& c) const {
    std::map<std::size_t, long> hist;
    for (std::size_t v = 0; v < c.size(); ++v) hist[c[v]] += v < n1_ ? 1 : -1;
    return std::all_of(hist.begin(), hist.end(), [](const auto& kv) { return kv.second == 0; });
  }

  bool is_isomorphism(const std::vector<std::size_t>& f) const {
    for (std::size_t v = 0; v < n1_; ++v) {
      std::vector<std::size_t> img, target;
      for (auto w : up_[v]) img.push_back(f[w]);
      for (auto w : up_[n1_ + f[v]]) target.push_back(w - n1_);
      std::sort(img.begin(), img.end());
      std::sort(target.begin(), target.end());
      if (img != target) return false;
    }
    return true;
  }

  // Partition refinement with a splitter queue over the joint graph. Cells
  // hold vertices of both sides and must stay balanced.
  struct Partition {
    std::vector<std::size_t> cell_of;
    std::vector<std::vector<std::size_t>> cells;
    std::vector<char> queued;
    std::vector<std::size_t> queue;

    void push(std::size_t c) {
      if (queued.size() <= c) queued.resize(c + 1, 0);
      if (!queued[c]) {
        queued[c] = 1;
        queue.push_back(c);
      }
    }
  };

  bool balanced_cell(const std::vector<std::size_t>& vs) const {
    long d = 0;
    for (auto v : vs) d += v < n1_ ? 1 : -1;
    return d == 0;
  }

  bool refine_queue(Partition& p, std::vector<unsigned>& cnt_up, std::vector<unsigned>& cnt_dn) const {
    std::vector<std::size_t> touched;
    while (!p.queue.empty()) {
      const std::size_t sc = p.queue.back();
      p.queue.pop_back();
      p.queued[sc] = 0;
      const std::vector<std::size_t> splitter = p.cells[sc];
      touched.clear();
      for (auto u : splitter) {
        for (auto w : down_[u]) {
          if (cnt_up[w] == 0 && cnt_dn[w] == 0) touched.push_back(w);
          ++cnt_up[w];
        }
        for (auto w : up_[u]) {
          if (cnt_up[w] == 0 && cnt_dn[w] == 0) touched.push_back(w);
          ++cnt_dn[w];
        }
      }
      std::vector<std::size_t> hit;
      for (auto w : touched) hit.push_back(p.cell_of[w]);
      std::sort(hit.begin(), hit.end());
      hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
      bool ok = true;
      for (auto x : hit) {
        std::map<std::pair<unsigned, unsigned>, std::vector<std::size_t>> groups;
        for (auto v : p.cells[x]) groups[{cnt_up[v], cnt_dn[v]}].push_back(v);
        if (groups.size() == 1) continue;
        auto keep = groups.begin();
        for (auto it = groups.begin(); it != groups.end(); ++it) {
          if (!balanced_cell(it->second)) ok = false;
          if (it->second.size() > keep->second.size()) keep = it;
        }
        if (!ok) break;
        for (auto it = groups.begin(); it != groups.end(); ++it) {
          if (it == keep) continue;
          const std::size_t id = p.cells.size();
          for (auto v : it->second) p.cell_of[v] = id;
          p.cells.push_back(std::move(it->second));
          p.push(id);
        }
        p.cells[x] = std::move(keep->second);
      }
      for (auto w : touched) cnt_up[w] = cnt_dn[w] = 0;
      if (!ok) return false;
    }
    return true;
  }

  std::optional<std::vector<std::size_t>> greedy(bool& refuted) {
    const std::size_t n = up_.size();
    Partition p;
    p.cell_of.resize(n);
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t v = 0; v < n; ++v) ids.emplace(initial_[v], 0);
    for (auto& [col, id] : ids) {
      id = p.cells.size();
      p.cells.emplace_back();
    }
    for (std::size_t v = 0; v < n; ++v) {
      p.cell_of[v] = ids[initial_[v]];
      p.cells[p.cell_of[v]].push_back(v);
    }
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      if (!balanced_cell(p.cells[c])) {
        refuted = true;
        return std::nullopt;
      }
      p.push(c);
    }
    std::vector<unsigned> cnt_up(n, 0), cnt_dn(n, 0);
    if (!refine_queue(p, cnt_up, cnt_dn)) {
      refuted = true;
      return std::nullopt;
    }
    std::size_t scan = 0;
    for (;;) {
      while (scan < p.cells.size() && p.cells[scan].size() <= 2) ++scan;
      if (scan == p.cells.size()) break;
      if (++explored_ > budget_) throw budget_exceeded("isomorphism search exceeded " + std::to_string(budget_) + " nodes", explored_);
      auto& cell = p.cells[scan];
      auto v = std::find_if(cell.begin(), cell.end(), [&](std::size_t x) { return x < n1_; });
      auto w = std::find_if(cell.begin(), cell.end(), [&](std::size_t x) { return x >= n1_; });
      std::vector<std::size_t> pair{*v, *w};
      cell.erase(std::remove_if(cell.begin(), cell.end(), [&](std::size_t x) { return x == pair[0] || x == pair[1]; }),
                 cell.end());
      const std::size_t id = p.cells.size();
      for (auto x : pair) p.cell_of[x] = id;
      p.cells.push_back(std::move(pair));
      p.push(id);
      if (!refine_queue(p, cnt_up, cnt_dn)) return std::nullopt;
      scan = 0;
    }
    std::vector<std::size_t> f(n1_);
    for (const auto& cell : p.cells) {
      if (cell.empty()) continue;
      auto [a, b] = std::minmax(cell[0], cell[1]);
      f[a] = b - n1_;
    }
    if (is_isomorphism(f)) return f;
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>> search(std::vector<std::size_t> c) {
    if (++explored_ > budget_) throw budget_exceeded("isomorphism search exceeded " + std::to_string(budget_) + " nodes", explored_);
    c = refine(std::move(c));
    if (!balanced(c)) return std::nullopt;
    std::map<std::size_t, std::vector<std::size_t>> left, right;
    for (std::size_t v = 0; v < c.size(); ++v) (v < n1_ ? left : right)[c[v]].push_back(v);
    auto cell = std::find_if(left.begin(), left.end(), [](const auto& kv) { return kv.second.size() > 1; });
    if (cell == left.end()) {
      std::vector<std::size_t> f(n1_);
      for (const auto& [col, vs] : left) f[vs[0]] = right[col][0] - n1_;
      if (is_isomorphism(f)) return f;
      return std::nullopt;
    }
    const std::size_t fresh = c.size() + 1 + *std::max_element(c.begin(), c.end());
    const std::size_t v = cell->second[0];
    for (auto w : right[cell->first]) {
      auto nc = c;
      nc[v] = fresh;
      nc[w] = fresh;
      if (auto f = search(std::move(nc))) return f;
    }
    return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> up_, down_;
  std::vector<std::size_t> initial_;
  std::size_t n1_;
  std::size_t budget_;
  std::size_t explored_ = 0;
};

}  // namespace detail

enum class IsoColoring {
  rank,      ///< graded posets: nodes may map across different sets
  set_label  ///< nodes must keep their ground-set subset
};

namespace detail {

// Twins (same colour, same upper and lower covers) are interchangeable in any
// isomorphism, so each twin class collapses to one vertex coloured by its size.
struct TwinQuotient {
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::vector<std::size_t>> up;
  std::vector<std::pair<std::size_t, std::size_t>> color;  // (original colour, class size)
};

template <SupportedRing R, class ColorOf>
TwinQuotient twin_quotient(const TorsionPoset<R>& p, ColorOf&& color_of) {
  TwinQuotient t;
  std::map<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> ids;
  t.class_of.resize(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    auto key = std::tuple(color_of(p.node(v)), p.upper_covers(v), p.lower_covers(v));
    auto [it, fresh] = ids.emplace(std::move(key), t.members.size());
    if (fresh) t.members.emplace_back();
    t.members[it->second].push_back(v);
    t.class_of[v] = it->second;
  }
  t.up.resize(t.members.size());
  for (std::size_t c = 0; c < t.members.size(); ++c) {
    const std::size_t v = t.members[c][0];
    t.color.emplace_back(color_of(p.node(v)), t.members[c].size());
    for (auto w : p.upper_covers(v)) t.up[c].push_back(t.class_of[w]);
    std::sort(t.up[c].begin(), t.up[c].end());
    t.up[c].erase(std::unique(t.up[c].begin(), t.up[c].end()), t.up[c].end());
  }
  return t;
}

}  // namespace detail

/// An isomorphism of Hasse diagrams f: p -> q (as node index map), if one
/// exists. Twin classes are collapsed first; the quotients are matched by
/// colour refinement with individualization, which counts refinement calls
/// against budget.
template <SupportedRing R>
std::optional<std::vector<std::size_t>> poset_isomorphism(const TorsionPoset<R>& p, const TorsionPoset<R>& q,
                                                          IsoColoring coloring = IsoColoring::rank,
                                                          std::size_t budget = default_node_budget) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  const std::size_t n = p.size();
  if (n == 0) return std::vector<std::size_t>{};
  std::map<std::pair<std::size_t, Subset>, std::size_t> ids;
  auto color_of = [&](const PosetNode<R>& node) {
    auto key = std::pair<std::size_t, Subset>(node.rank(), coloring == IsoColoring::set_label ? node.set : 0);
    return ids.emplace(key, ids.size()).first->second;
  };
  auto tp = detail::twin_quotient(p, color_of);
  auto tq = detail::twin_quotient(q, color_of);
  const std::size_t k = tp.members.size();
  if (tq.members.size() != k) return std::nullopt;

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> qids;
  std::vector<std::vector<std::size_t>> up(2 * k);
  std::vector<std::size_t> colors(2 * k);
  for (std::size_t c = 0; c < k; ++c) {
    colors[c] = qids.emplace(tp.color[c], qids.size()).first->second;
    colors[k + c] = qids.emplace(tq.color[c], qids.size()).first->second;
    up[c] = tp.up[c];
    for (auto w : tq.up[c]) up[k + c].push_back(k + w);
  }
  detail::IsoSearch s(std::move(up), std::move(colors), k, budget);
  auto g = s.run();
  if (!g) return std::nullopt;

  std::vector<std::size_t> f(n);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& from = tp.members[c];
    const auto& to = tq.members[(*g)[c]];
    for (std::size_t j = 0; j < from.size(); ++j) f[from[j]] = to[j];
  }
  for (auto [lo, hi] : p.covers())
    if (!std::binary_search(q.covers().begin(), q.covers().end(), std::pair(f[lo], f[hi])))
      throw consistency_error("lifted isomorphism does not preserve covers");
  return f;
}

/// Number of nodes per rank, i.e. (f_{-1}, f_0, ...).
template <SupportedRing R>
std::vector<mpz_class> poset_f_vector(const TorsionPoset<R>& p) {
  std::vector<mpz_class> f;
  for (const auto& node : p.nodes()) {
    if (node.rank() >= f.size()) f.resize(node.rank() + 1, 0);
    f[node.rank()] += 1;
  }
  return f;
}

/// Per component: a unique minimum, and every lower interval [min, x] is a
/// Boolean lattice on the elements of x's set above the minimum's. Across
/// components: the links of the minima (the components themselves) are
/// pairwise isomorphic.
template <SupportedRing R>
CheckReport verify_simplicial(const TorsionPoset<R>& p, std::size_t iso_budget = default_node_budget) {
  CheckReport rep;
  rep.name = "simplicial";
  auto comps = poset_components(p);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& c = comps[ci];
    const std::string where = "component " + std::to_string(ci + 1);
    auto mins = c.minima();
    rep.record(mins.size() == 1, where + ": " + std::to_string(mins.size()) + " minimum element(s)");
    if (mins.size() != 1) continue;
    const Subset base = c.node(mins[0]).set;
    std::size_t bad = 0;
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t x = 0; x < c.size(); ++x) {
      const Subset sx = c.node(x).set;
      const std::size_t k = c.rank(x) - subset_size(base);
      auto below = c.down_set(x);
      bool ok = below.size() == (std::size_t{1} << k) && (sx & base) == base;
      // one lower cover per removable element
      std::map<Subset, std::size_t> lower;
      for (auto y : c.lower_covers(x)) ++lower[c.node(y).set];
      for (auto e : subset_elements(sx & ~base)) ok = ok && lower[without(sx, e)] == 1;
      ok = ok && c.lower_covers(x).size() == k;
      // y -> set(y) is a bijection onto the sets between base and sx, and an order embedding
      std::map<Subset, std::size_t> by_set;
      for (auto y : below) ok = ok && by_set.emplace(c.node(y).set, y).second;
      if (ok)
        for (auto z : below) {
          auto dz = c.down_set(z);
          for (auto y : below) {
            bool le = std::binary_search(dz.begin(), dz.end(), y);
            bool sub = (c.node(y).set & ~c.node(z).set) == 0;
            if (le != sub) ok = false;
          }
        }
      ++sizes[below.size()];
      if (!ok) ++bad;
    }
    std::string sz;
    for (auto [s, cnt] : sizes) sz += (sz.empty() ? "" : ",") + std::to_string(s);
    rep.record(bad == 0, where + ": lower intervals Boolean (sizes " + sz + ")" +
                             (bad ? ", " + std::to_string(bad) + " failing" : ""));
  }
  for (std::size_t ci = 1; ci < comps.size(); ++ci) {
    bool iso = poset_isomorphism(comps[0], comps[ci], IsoColoring::rank, iso_budget).has_value();
    rep.record(iso, "component " + std::to_string(ci + 1) + " isomorphic to component 1");
  }
  return rep;
}

/// Hasse diagram in Graphviz DOT, bottom to top.
template <SupportedRing R>
std::string poset_to_dot(const TorsionPoset<R>& p, const std::string& name = "GrM") {
  std::string s = "digraph " + name + " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i) s += "  n" + std::to_string(i) + " [label=\"" + p.label(i) + "\"];\n";
  for (auto [lo, hi] : p.covers()) s += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return s + "}\n";
}

}  // namespace gtpoly
