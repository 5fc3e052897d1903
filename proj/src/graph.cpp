#include "opetope/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "opetope/error.hpp"

namespace ope {

Graph::Graph(Shape dom, Shape cod, std::vector<VarIndex> mate)
    : dom_(std::move(dom)), cod_(std::move(cod)), mate_(std::move(mate)) {
  const std::size_t n = dom_.leaf_count() + cod_.leaf_count();
  if (mate_.size() != n)
    throw Error(ErrorCode::Incomplete, "pairing covers " + std::to_string(mate_.size()) +
                                           " of " + std::to_string(n) + " variables");
  for (std::size_t v = 0; v < n; ++v) {
    const VarIndex w = mate_[v];
    if (w >= n || w == v || mate_[w] != v)
      throw Error(ErrorCode::Incomplete, "variable " + std::to_string(v) + " is not properly paired");
    if (variance(v) == variance(w))
      throw Error(ErrorCode::VarianceClash, "variables " + std::to_string(v) + " and " +
                                                std::to_string(w) + " have equal twisted variance");
  }
}

Graph Graph::identity(const Shape& shape) {
  const auto n = static_cast<VarIndex>(shape.leaf_count());
  std::vector<VarIndex> mate(2 * n);
  for (VarIndex i = 0; i < n; ++i) {
    mate[i] = n + i;
    mate[n + i] = i;
  }
  return Graph(shape, shape, std::move(mate));
}

Graph Graph::empty() { return Graph(Shape::unit(), Shape::unit(), {}); }

Variance Graph::variance(std::size_t v) const {
  const std::size_t d = dom_size();
  return v < d ? flip(dom_.leaf_variances()[v]) : cod_.leaf_variances()[v - d];
}

std::vector<VarPair> Graph::pairs() const {
  std::vector<VarPair> out;
  out.reserve(mate_.size() / 2);
  for (VarIndex v = 0; v < mate_.size(); ++v)
    if (v < mate_[v]) out.emplace_back(v, mate_[v]);
  return out;
}

std::size_t Graph::pair_ordinal(std::size_t v) const {
  const std::size_t lo = std::min<std::size_t>(v, mate_[v]);
  std::size_t ordinal = 0;
  for (std::size_t u = 0; u < lo; ++u)
    if (u < mate_[u]) ++ordinal;
  return ordinal;
}

Graph make_graph(const Shape& dom, const Shape& cod, std::span<const VarPair> pairs) {
  const std::size_t n = dom.leaf_count() + cod.leaf_count();
  constexpr VarIndex unset = ~VarIndex{0};
  std::vector<VarIndex> mate(n, unset);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n || a == b)
      throw Error(ErrorCode::Incomplete, "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                             ") does not name two distinct variables");
    if (mate[a] != unset || mate[b] != unset)
      throw Error(ErrorCode::Incomplete, "variable paired twice");
    mate[a] = b;
    mate[b] = a;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (mate[v] == unset) throw Error(ErrorCode::Incomplete, "variable " + std::to_string(v) + " is unpaired");
  return Graph(dom, cod, std::move(mate));
}

Graph make_graph(const Shape& dom, const Shape& cod,
                 const std::vector<std::pair<VarRef, VarRef>>& pairs) {
  auto index = [&](const VarRef& r) -> VarIndex {
    if (r.side == Side::Dom) return static_cast<VarIndex>(leaf_index(dom, r.path));
    return static_cast<VarIndex>(dom.leaf_count() + leaf_index(cod, r.path));
  };
  std::vector<VarPair> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) indexed.emplace_back(index(a), index(b));
  return make_graph(dom, cod, indexed);
}

// ---------------------------------------------------------------------------
// Tree family

Shape TreeFrameShape::dom() const {
  std::vector<Shape> frames;
  frames.reserve(node_arities.size());
  for (auto m : node_arities) frames.push_back(Shape::frame(m));
  return Shape::tensor_all(frames);
}

Shape TreeFrameShape::cod() const { return Shape::frame(out_arity); }

std::size_t TreeFrameShape::size() const {
  return std::accumulate(node_arities.begin(), node_arities.end(), std::size_t{1});
}

namespace {

std::optional<TreeFrameShape> match_tree(const Shape& dom, const Shape& cod) {
  const long n = frame_arity(cod);
  if (n < 0) return std::nullopt;
  TreeFrameShape out;
  out.out_arity = static_cast<std::size_t>(n);
  for (const auto& factor : tensor_factors(dom)) {
    const long m = frame_arity(factor);
    if (m < 0) return std::nullopt;
    out.node_arities.push_back(static_cast<std::size_t>(m));
  }
  return out;
}

}  // namespace

std::optional<TreeFrameShape> tree_frame_shape(const Graph& g) {
  if (auto direct = match_tree(g.dom(), g.cod())) return direct;
  if (g.dom_size() == 0 && g.cod().is_hom()) return match_tree(g.cod().left(), g.cod().right());
  return std::nullopt;
}

TreeLayout::TreeLayout(const TreeFrameShape& shape)
    : node_arity(shape.node_arities), out_arity(shape.out_arity) {
  std::size_t offset = 0;
  for (auto m : shape.node_arities) {
    node_offset.push_back(offset);
    offset += m + 1;
  }
  dom_size = offset;
}

VarIndex TreeLayout::node_input(std::size_t node, std::size_t slot) const {
  return static_cast<VarIndex>(node_offset[node] + slot);
}
VarIndex TreeLayout::node_output(std::size_t node) const {
  return static_cast<VarIndex>(node_offset[node] + node_arity[node]);
}
VarIndex TreeLayout::boundary_input(std::size_t j) const { return static_cast<VarIndex>(dom_size + j); }
VarIndex TreeLayout::boundary_output() const { return static_cast<VarIndex>(dom_size + out_arity); }

TreeLayout::Role TreeLayout::role(VarIndex v) const {
  if (v >= dom_size) {
    const std::size_t j = v - dom_size;
    if (j == out_arity) return {Role::BoundaryOutput, 0, 0};
    return {Role::BoundaryInput, 0, j};
  }
  auto it = std::upper_bound(node_offset.begin(), node_offset.end(), static_cast<std::size_t>(v));
  const std::size_t node = static_cast<std::size_t>(it - node_offset.begin()) - 1;
  const std::size_t slot = v - node_offset[node];
  if (slot == node_arity[node]) return {Role::NodeOutput, node, 0};
  return {Role::NodeInput, node, slot};
}

bool is_tree_allowable(const Graph& g) {
  auto shape = tree_frame_shape(g);
  if (!shape) throw Error(ErrorCode::WrongShapeFamily, "graph " + print_shape(g.dom()) + " -> " +
                                                           print_shape(g.cod()) + " is not tree-shaped");
  const std::size_t k = shape->node_arities.size();
  if (shape->out_arity + k != shape->size()) return false;

  const TreeLayout layout(*shape);
  constexpr std::size_t root = ~std::size_t{0};
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto r = layout.role(g.mate(layout.node_output(i)));
    if (r.kind == TreeLayout::Role::BoundaryOutput) {
      parent[i] = root;
    } else if (r.kind == TreeLayout::Role::NodeInput) {
      parent[i] = r.node;
    } else {
      return false;
    }
  }
  // Every node must reach the root; a walk longer than k steps has cycled.
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t cur = i;
    std::size_t steps = 0;
    while (cur != root) {
      if (++steps > k) return false;
      cur = parent[cur];
    }
  }
  return true;
}

std::vector<Graph> enumerate_allowable(const TreeFrameShape& shape, std::size_t max_leaves) {
  if (shape.size() > max_leaves)
    throw Error(ErrorCode::BoundExceeded, "tree size " + std::to_string(shape.size()) +
                                              " exceeds bound " + std::to_string(max_leaves));
  const std::size_t k = shape.node_arities.size();
  if (shape.out_arity + k != shape.size()) return {};

  const TreeLayout layout(shape);
  const Shape dom = shape.dom();
  const Shape cod = shape.cod();

  // Slots a node output or a leaf can feed: every node input, then the root.
  std::vector<VarIndex> slots;
  std::vector<std::size_t> slot_owner;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t p = 0; p < shape.node_arities[i]; ++p) {
      slots.push_back(layout.node_input(i, p));
      slot_owner.push_back(i);
    }
  const std::size_t root_slot = slots.size();
  slots.push_back(layout.boundary_output());
  slot_owner.push_back(k);

  std::vector<Graph> out;
  std::vector<std::size_t> feed(k);  // slot fed by node i
  std::vector<bool> used(slots.size(), false);

  auto acyclic = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t cur = i;
      for (std::size_t steps = 0; cur != k; ++steps) {
        if (steps > k) return false;
        cur = slot_owner[feed[cur]];
      }
    }
    return true;
  };

  auto emit_leaf_assignments = [&] {
    std::vector<std::size_t> free_slots;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (!used[s]) free_slots.push_back(s);
    std::vector<std::size_t> perm(free_slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<VarIndex> mate(dom.leaf_count() + cod.leaf_count());
      auto link = [&](VarIndex a, VarIndex b) {
        mate[a] = b;
        mate[b] = a;
      };
      for (std::size_t i = 0; i < k; ++i) link(layout.node_output(i), slots[feed[i]]);
      for (std::size_t j = 0; j < perm.size(); ++j)
        link(layout.boundary_input(j), slots[free_slots[perm[j]]]);
      out.emplace_back(dom, cod, std::move(mate));
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  auto assign = [&](auto&& self, std::size_t node) -> void {
    if (node == k) {
      if ((k == 0 || used[root_slot]) && acyclic()) emit_leaf_assignments();
      return;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (used[s] || slot_owner[s] == node) continue;
      used[s] = true;
      feed[node] = s;
      self(self, node + 1);
      used[s] = false;
    }
  };
  assign(assign, 0);

  std::vector<std::pair<std::vector<VarPair>, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(out[i].pairs(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> sorted;
  sorted.reserve(out.size());
  for (auto& [key, i] : keyed) sorted.push_back(std::move(out[i]));
  return sorted;
}

// ---------------------------------------------------------------------------
// Composition, tensor, currying

TracedComposite compose_traced(const Graph& g, const Graph& h) {
  if (!(g.cod() == h.dom()))
    throw Error(ErrorCode::ShapeMismatch, "cannot compose: " + print_shape(g.cod()) + " vs " +
                                              print_shape(h.dom()));
  const std::size_t nT = g.dom_size();
  const std::size_t nS = h.dom_size();
  const std::size_t nU = h.size() - nS;

  std::vector<VarIndex> mate(nT + nU);
  std::vector<std::vector<Hop>> paths(nT + nU);
  std::vector<bool> seen_middle(nS, false);

  // Result variances agree with g's on T and h's on U, so starting from a minus
  // end every hop leaves its factor from that factor's minus end.
  for (std::size_t r = 0; r < nT + nU; ++r) {
    const bool in_t = r < nT;
    const Variance rv = in_t ? g.variance(r) : h.variance(nS + (r - nT));
    if (rv != Variance::Minus) continue;
    bool in_g = in_t;
    VarIndex cur = static_cast<VarIndex>(in_t ? r : nS + (r - nT));
    std::vector<Hop> path;
    while (true) {
      path.push_back({in_g, cur});
      if (in_g) {
        const VarIndex x = g.mate(cur);
        if (x < nT) {
          mate[r] = x;
          break;
        }
        const std::size_t s = x - nT;
        seen_middle[s] = true;
        in_g = false;
        cur = static_cast<VarIndex>(s);
      } else {
        const VarIndex x = h.mate(cur);
        if (x >= nS) {
          mate[r] = static_cast<VarIndex>(nT + (x - nS));
          break;
        }
        seen_middle[x] = true;
        in_g = true;
        cur = static_cast<VarIndex>(nT + x);
      }
    }
    mate[mate[r]] = static_cast<VarIndex>(r);
    paths[r] = std::move(path);
  }
  for (std::size_t s = 0; s < nS; ++s)
    if (!seen_middle[s])
      throw Error(ErrorCode::ClosedLoop, "composition closes a loop through middle variable " +
                                             std::to_string(s));
  return {Graph(g.dom(), h.cod(), std::move(mate)), std::move(paths)};
}

Graph compose(const Graph& g, const Graph& h) { return compose_traced(g, h).graph; }

Graph tensor(const Graph& g, const Graph& h) {
  const std::size_t a = g.dom_size(), b = g.size() - a;
  const std::size_t c = h.dom_size(), d = h.size() - c;
  auto map_g = [&](std::size_t v) { return static_cast<VarIndex>(v < a ? v : a + c + (v - a)); };
  auto map_h = [&](std::size_t v) {
    return static_cast<VarIndex>(v < c ? a + v : a + c + b + (v - c));
  };
  std::vector<VarIndex> mate(a + b + c + d);
  for (std::size_t v = 0; v < g.size(); ++v) mate[map_g(v)] = map_g(g.mate(v));
  for (std::size_t v = 0; v < h.size(); ++v) mate[map_h(v)] = map_h(h.mate(v));
  return Graph(Shape::tensor(g.dom(), h.dom()), Shape::tensor(g.cod(), h.cod()), std::move(mate));
}

Graph tensor_all(std::span<const Graph> graphs) {
  std::vector<const Graph*> ptrs;
  for (const auto& g : graphs) ptrs.push_back(&g);
  return tensor_all(ptrs);
}

// Same result as folding tensor from the left, built in one pass: all domain
// blocks first, then all codomain blocks.
Graph tensor_all(std::span<const Graph* const> graphs) {
  if (graphs.empty()) return Graph::empty();
  std::vector<std::size_t> dom_off, cod_off;
  std::vector<Shape> doms, cods;
  std::size_t dom_total = 0, cod_total = 0;
  for (const Graph* g : graphs) {
    dom_off.push_back(dom_total);
    cod_off.push_back(cod_total);
    dom_total += g->dom_size();
    cod_total += g->size() - g->dom_size();
    doms.push_back(g->dom());
    cods.push_back(g->cod());
  }
  std::vector<VarIndex> mate(dom_total + cod_total);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = *graphs[i];
    const std::size_t a = g.dom_size();
    auto place = [&](std::size_t v) {
      return static_cast<VarIndex>(v < a ? dom_off[i] + v : dom_total + cod_off[i] + (v - a));
    };
    for (std::size_t v = 0; v < g.size(); ++v) mate[place(v)] = place(g.mate(v));
  }
  return Graph(Shape::tensor_all(doms), Shape::tensor_all(cods), std::move(mate));
}

Graph uncurry(const Graph& g) {
  if (!g.dom().is_unit() || !g.cod().is_hom())
    throw Error(ErrorCode::ShapeMismatch, "uncurry needs a graph I -> [A, B], got " +
                                              print_shape(g.dom()) + " -> " + print_shape(g.cod()));
  const auto m = g.mates();
  return Graph(g.cod().left(), g.cod().right(), {m.begin(), m.end()});
}

Graph curry(const Graph& g) {
  const auto m = g.mates();
  return Graph(Shape::unit(), Shape::hom(g.dom(), g.cod()), {m.begin(), m.end()});
}

Graph with_unit_domain(const Graph& g) {
  if (g.dom_size() != 0)
    throw Error(ErrorCode::ShapeMismatch, "domain " + print_shape(g.dom()) + " has variables");
  const auto m = g.mates();
  return Graph(Shape::unit(), g.cod(), {m.begin(), m.end()});
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  // d<i>: i-th domain leaf, c<j>: j-th codomain leaf.
  auto id = [&](std::size_t v) {
    return v < g.dom_size() ? "d" + std::to_string(v) : "c" + std::to_string(v - g.dom_size());
  };
  out << "graph \"" << name << "\" {\n";
  out << "  label=\"" << print_shape(g.dom()) << " -> " << print_shape(g.cod()) << "\";\n";
  out << "  node [shape=circle, fontsize=10];\n";
  auto emit_row = [&](std::size_t from, std::size_t to) {
    out << "  { rank=same;";
    for (std::size_t v = from; v < to; ++v) out << " " << id(v);
    out << " }\n";
    for (std::size_t v = from; v < to; ++v)
      out << "  " << id(v) << " [label=\"" << variance_char(g.variance(v)) << "\"];\n";
    for (std::size_t v = from; v + 1 < to; ++v)
      out << "  " << id(v) << " -- " << id(v + 1) << " [style=invis];\n";
  };
  emit_row(0, g.dom_size());
  emit_row(g.dom_size(), g.size());
  if (g.dom_size() > 0 && g.size() > g.dom_size())
    out << "  " << id(0) << " -- " << id(g.dom_size()) << " [style=invis];\n";
  for (auto [a, b] : g.pairs()) out << "  " << id(a) << " -- " << id(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ope
