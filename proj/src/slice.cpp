#include "opetope/slice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "opetope/error.hpp"

namespace ope::oracle {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) { return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)); }

std::size_t feed_hash(const Feed& f) {
  std::size_t h = mix(f.kind == Feed::Node ? 17 : 29, f.index);
  for (auto s : f.edge.sigma) h = mix(h, s);
  return h;
}

CellPtr make_cell(int level, CellPtr target, std::vector<CellPtr> nodes, std::vector<std::vector<Feed>> feeds,
                  Feed root) {
  auto c = std::make_shared<Cell>();
  c->level = level;
  c->target = std::move(target);
  c->nodes = std::move(nodes);
  c->feeds = std::move(feeds);
  c->root = std::move(root);
  std::size_t h = mix(0x736c696365ULL, static_cast<std::size_t>(level));
  if (c->target) h = mix(h, c->target->hash);
  for (const auto& n : c->nodes) h = mix(h, n->hash);
  for (const auto& slots : c->feeds)
    for (const auto& f : slots) h = mix(h, feed_hash(f));
  if (level >= 2) h = mix(h, feed_hash(c->root));
  c->hash = h;
  return c;
}

bool same_feed(const Feed& a, const Feed& b) {
  return a.kind == b.kind && a.index == b.index && a.edge.sigma == b.edge.sigma;
}

bool trivial(const Morph& m) { return m.sigma.empty(); }

}  // namespace

bool same_cell(const CellPtr& a, const CellPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->hash != b->hash || a->level != b->level || a->nodes.size() != b->nodes.size()) return false;
  if (!same_cell(a->target, b->target)) return false;
  for (std::size_t i = 0; i < a->nodes.size(); ++i)
    if (!same_cell(a->nodes[i], b->nodes[i])) return false;
  if (a->level < 2) return true;
  for (std::size_t i = 0; i < a->feeds.size(); ++i)
    for (std::size_t p = 0; p < a->feeds[i].size(); ++p)
      if (!same_feed(a->feeds[i][p], b->feeds[i][p])) return false;
  return same_feed(a->root, b->root);
}

CellPtr star() {
  static const CellPtr s = make_cell(0, nullptr, {}, {}, {});
  return s;
}

CellPtr identity_arrow() {
  static const CellPtr u = make_cell(1, star(), {star()}, {}, {});
  return u;
}

SliceLevel terminal_multicat() { return SliceLevel(0); }
SliceLevel slice(const SliceLevel& q) { return SliceLevel(q.level() + 1); }

namespace {

// b = a with nodes reindexed by sigma.
bool is_reindexing(const Cell& a, const Cell& b, const std::vector<std::uint32_t>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[sigma[i]] = i;
  auto moved = [&](const Feed& f) {
    Feed g = f;
    if (g.kind == Feed::Node) g.index = inv[g.index];
    return g;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!same_cell(b.nodes[i], a.nodes[sigma[i]])) return false;
    for (std::size_t p = 0; p < b.feeds[i].size(); ++p)
      if (!same_feed(b.feeds[i][p], moved(a.feeds[sigma[i]][p]))) return false;
  }
  return same_feed(b.root, moved(a.root));
}

}  // namespace

std::vector<Morph> oracle_hom(const CellPtr& a, const CellPtr& b) {
  if (a->level != b->level) return {};
  if (a->level <= 1) return {Morph{a, b, {}}};
  if (a->level > 2) throw Error(ErrorCode::InvalidArgument, "oracle morphisms are implemented up to level 2");
  if (a->arity() != b->arity() || !same_cell(a->target, b->target)) return {};
  std::vector<std::uint32_t> sigma(a->arity());
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::vector<Morph> out;
  do {
    if (is_reindexing(*a, *b, sigma)) out.push_back(Morph{a, b, sigma});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation by node replacement

WorkTree tree_of(const CellPtr& cell) {
  if (cell->level < 2) throw Error(ErrorCode::InvalidArgument, "cells below level 2 are not trees");
  return WorkTree{cell->target, cell->nodes, std::vector<long>(cell->nodes.size(), -1), cell->feeds, cell->root};
}

namespace {

WorkTree unit_tree(const CellPtr& a, long tag) {
  WorkTree t;
  t.target = a;
  t.nodes = {a};
  t.tags = {tag};
  t.feeds.resize(1);
  for (std::size_t s = 0; s < a->arity(); ++s) t.feeds[0].push_back(Feed{Feed::Leaf, s, {}});
  t.root = Feed{Feed::Node, 0, {}};
  return t;
}

// Re-addresses a tree over `a` as a tree over m.target: leaf r of the result
// is leaf sigma[r] of the input.
WorkTree retarget(WorkTree t, const Morph& m) {
  if (m.target) t.target = m.target;
  if (trivial(m)) return t;
  std::vector<std::size_t> inv(m.sigma.size());
  for (std::size_t r = 0; r < m.sigma.size(); ++r) inv[m.sigma[r]] = r;
  auto fix = [&](Feed& f) {
    if (f.kind == Feed::Leaf) f.index = inv[f.index];
  };
  for (auto& slots : t.feeds)
    for (auto& f : slots) fix(f);
  fix(t.root);
  return t;
}

}  // namespace

WorkTree node_replace_compose(const WorkTree& outer, const std::vector<WorkTree>& inners) {
  if (inners.size() != outer.nodes.size())
    throw Error(ErrorCode::ArityMismatch, "one inner tree per outer node is required");
  std::vector<std::size_t> offset(inners.size());
  WorkTree out;
  out.target = outer.target;
  for (std::size_t p = 0; p < inners.size(); ++p) {
    if (!same_cell(inners[p].target, outer.nodes[p]))
      throw Error(ErrorCode::ArityMismatch, "inner tree " + std::to_string(p) + " does not compose to its node");
    offset[p] = out.nodes.size();
    out.nodes.insert(out.nodes.end(), inners[p].nodes.begin(), inners[p].nodes.end());
    out.tags.insert(out.tags.end(), inners[p].tags.begin(), inners[p].tags.end());
  }
  for (const auto& slots : outer.feeds)
    for (const auto& f : slots)
      if (!trivial(f.edge)) throw Error(ErrorCode::InvalidArgument, "outer trees must have identity edges");

  // Where the thing entering an outer slot surfaces in the result.
  std::function<Feed(const Feed&)> resolve = [&](const Feed& f) -> Feed {
    if (f.kind == Feed::Leaf) return Feed{Feed::Leaf, f.index, {}};
    const WorkTree& inner = inners[f.index];
    if (inner.root.kind == Feed::Node) return Feed{Feed::Node, offset[f.index] + inner.root.index, {}};
    return resolve(outer.feeds[f.index][inner.root.index]);
  };
  for (std::size_t p = 0; p < inners.size(); ++p)
    for (const auto& slots : inners[p].feeds) {
      std::vector<Feed> fixed;
      for (const auto& f : slots) {
        if (f.kind == Feed::Node)
          fixed.push_back(Feed{Feed::Node, offset[p] + f.index, {}});
        else
          fixed.push_back(resolve(outer.feeds[p][f.index]));
      }
      out.feeds.push_back(std::move(fixed));
    }
  out.root = resolve(outer.root);
  return out;
}

namespace {

using LeafLabel = std::function<CellPtr(std::size_t)>;

// The composite of a cell's nodes along its tree; its nodes are tagged with
// the leaf they came from.
WorkTree compose_nodes(const Cell& c, const LeafLabel& leaf) {
  std::function<WorkTree(std::size_t)> at = [&](std::size_t i) {
    std::vector<WorkTree> inners;
    for (const auto& f : c.feeds[i]) {
      WorkTree y = f.kind == Feed::Node ? at(f.index) : unit_tree(leaf(f.index), static_cast<long>(f.index));
      inners.push_back(retarget(std::move(y), f.edge));
    }
    return node_replace_compose(tree_of(c.nodes[i]), inners);
  };
  const Feed& r = c.root;
  WorkTree y = r.kind == Feed::Node ? at(r.index) : unit_tree(leaf(r.index), static_cast<long>(r.index));
  return retarget(std::move(y), r.edge);
}

WorkTree reorder_by_tag(const WorkTree& t) {
  const std::size_t n = t.nodes.size();
  std::vector<bool> seen(n, false);
  for (auto tag : t.tags) {
    if (tag < 0 || static_cast<std::size_t>(tag) >= n || seen[tag])
      throw Error(ErrorCode::ArityMismatch, "composite nodes do not match the leaves one to one");
    seen[tag] = true;
  }
  WorkTree out;
  out.target = t.target;
  out.nodes.resize(n);
  out.tags.resize(n);
  out.feeds.resize(n);
  auto move = [&](Feed f) {
    if (f.kind == Feed::Node) f.index = static_cast<std::size_t>(t.tags[f.index]);
    return f;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(t.tags[i]);
    out.nodes[j] = t.nodes[i];
    out.tags[j] = static_cast<long>(j);
    for (const auto& f : t.feeds[i]) out.feeds[j].push_back(move(f));
  }
  out.root = move(t.root);
  return out;
}

bool tree_equals_cell(const WorkTree& t, const Cell& c) {
  if (!same_cell(t.target, c.target) || t.nodes.size() != c.nodes.size()) return false;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (!same_cell(t.nodes[i], c.nodes[i]) || t.feeds[i].size() != c.feeds[i].size()) return false;
    for (std::size_t p = 0; p < t.feeds[i].size(); ++p)
      if (!same_feed(t.feeds[i][p], c.feeds[i][p])) return false;
  }
  return same_feed(t.root, c.root);
}

}  // namespace

WorkTree evaluate(const CellPtr& cell) {
  if (cell->level < 3) throw Error(ErrorCode::InvalidArgument, "evaluation needs a cell of level >= 3");
  const auto& sources = cell->target->nodes;
  return reorder_by_tag(compose_nodes(*cell, [&](std::size_t j) { return sources.at(j); }));
}

// ---------------------------------------------------------------------------
// Tree generation by grafting

namespace {

struct TreeShape {
  std::vector<std::vector<Feed>> feeds;
  Feed root;
  std::size_t leaves = 0;
};

// Every rooted tree on the given nodes: pick a root, then fill open slots
// first-come first-served with a fresh leaf or an unused node. Leaves are
// numbered in the order they are created.
void graft(const std::vector<std::size_t>& slots, const std::function<void(const TreeShape&)>& emit) {
  const std::size_t n = slots.size();
  if (n == 0) {
    emit(TreeShape{{}, Feed{Feed::Leaf, 0, {}}, 1});
    return;
  }
  TreeShape t;
  t.feeds.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.feeds[i].resize(slots[i]);
  std::vector<bool> used(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> open;
  std::size_t placed = 0;

  std::function<void(std::size_t)> step = [&](std::size_t next) {
    if (next == open.size()) {
      if (placed == n) emit(t);
      return;
    }
    auto [node, slot] = open[next];
    t.feeds[node][slot] = Feed{Feed::Leaf, t.leaves, {}};
    ++t.leaves;
    step(next + 1);
    --t.leaves;
    for (std::size_t u = 0; u < n; ++u) {
      if (used[u]) continue;
      used[u] = true;
      ++placed;
      t.feeds[node][slot] = Feed{Feed::Node, u, {}};
      for (std::size_t s = 0; s < slots[u]; ++s) open.emplace_back(u, s);
      step(next + 1);
      open.resize(open.size() - slots[u]);
      --placed;
      used[u] = false;
    }
  };
  for (std::size_t r = 0; r < n; ++r) {
    used[r] = true;
    placed = 1;
    t.root = Feed{Feed::Node, r, {}};
    for (std::size_t s = 0; s < slots[r]; ++s) open.emplace_back(r, s);
    step(0);
    open.clear();
    used[r] = false;
  }
}

// Each tree with each numbering of its leaves.
void numbered_trees(const std::vector<std::size_t>& slots, const std::function<void(const TreeShape&)>& emit) {
  graft(slots, [&](const TreeShape& t) {
    std::vector<std::size_t> perm(t.leaves);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      TreeShape u = t;
      auto renumber = [&](Feed& f) {
        if (f.kind == Feed::Leaf) f.index = perm[f.index];
      };
      for (auto& s : u.feeds)
        for (auto& f : s) renumber(f);
      renumber(u.root);
      emit(u);
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

// Every choice of edge morphisms for a tree with fixed sources and target.
void label_edges(const TreeShape& shape, const std::vector<CellPtr>& nodes, const CellPtr& target,
                 const std::function<void(const TreeShape&)>& emit) {
  std::vector<Feed*> edges;
  std::vector<std::vector<Morph>> options;
  TreeShape t = shape;
  auto arriving = [&](const Feed& f) { return f.kind == Feed::Node ? nodes[f.index]->target : target->nodes[f.index]; };
  for (std::size_t i = 0; i < t.feeds.size(); ++i)
    for (std::size_t p = 0; p < t.feeds[i].size(); ++p) {
      edges.push_back(&t.feeds[i][p]);
      options.push_back(oracle_hom(arriving(t.feeds[i][p]), nodes[i]->nodes[p]));
    }
  edges.push_back(&t.root);
  options.push_back(oracle_hom(arriving(t.root), target->target));
  for (const auto& o : options)
    if (o.empty()) return;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    for (std::size_t e = 0; e < edges.size(); ++e) edges[e]->edge = options[e][pick[e]];
    emit(t);
    std::size_t e = options.size();
    while (e > 0) {
      --e;
      if (++pick[e] < options[e].size()) break;
      pick[e] = 0;
      if (e == 0) return;
    }
  }
}

void check_size(const std::vector<CellPtr>& sources, std::size_t max_leaves) {
  std::size_t size = 1;
  for (const auto& s : sources) size += s->arity();
  if (size > max_leaves)
    throw Error(ErrorCode::BoundExceeded, "tree size " + std::to_string(size) + " exceeds bound " +
                                              std::to_string(max_leaves));
}

std::vector<std::size_t> slot_counts(const std::vector<CellPtr>& sources) {
  std::vector<std::size_t> slots;
  for (const auto& s : sources) slots.push_back(s->arity());
  return slots;
}

}  // namespace

std::vector<CellPtr> SliceLevel::arrows(const std::vector<CellPtr>& sources, const CellPtr& target,
                                        std::size_t max_leaves) const {
  for (const auto& s : sources)
    if (s->level != level_) throw Error(ErrorCode::TypeMismatch, "source has the wrong level");
  if (target->level != level_) throw Error(ErrorCode::TypeMismatch, "target has the wrong level");
  if (level_ == 0) {
    if (sources.size() == 1) return {identity_arrow()};
    return {};
  }
  check_size(sources, max_leaves);
  const int k = level_ + 1;
  std::vector<CellPtr> out;
  numbered_trees(slot_counts(sources), [&](const TreeShape& shape) {
    if (shape.leaves != target->arity()) return;
    label_edges(shape, sources, target, [&](const TreeShape& t) {
      CellPtr c = make_cell(k, target, sources, t.feeds, t.root);
      if (k == 2) {
        out.push_back(std::move(c));  // every tree composes to the identity
        return;
      }
      try {
        if (tree_equals_cell(evaluate(c), *target)) out.push_back(std::move(c));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ArityMismatch) throw;
      }
    });
  });
  return out;
}

std::vector<CellPtr> SliceLevel::arrows_from(const std::vector<CellPtr>& sources, std::size_t max_leaves) const {
  if (level_ <= 1) return arrows(sources, level_ == 0 ? star() : identity_arrow(), max_leaves);
  if (level_ > 2) throw Error(ErrorCode::InvalidArgument, "targets are derived only up to level 3 arrows");
  for (const auto& s : sources)
    if (s->level != 2) throw Error(ErrorCode::TypeMismatch, "source has the wrong level");
  check_size(sources, max_leaves);
  std::size_t total = 0;
  for (const auto& s : sources) total += s->arity();
  if (sources.size() > total + 1) return {};
  const std::size_t leaves = total + 1 - sources.size();
  const std::vector<CellPtr> ids(leaves, identity_arrow());

  std::vector<CellPtr> out;
  numbered_trees(slot_counts(sources), [&](const TreeShape& t) {
    // Edges between identity arrows are trivial.
    Cell probe;
    probe.level = 3;
    probe.nodes = sources;
    probe.feeds = t.feeds;
    probe.root = t.root;
    WorkTree composite = reorder_by_tag(compose_nodes(probe, [&](std::size_t) { return identity_arrow(); }));
    CellPtr target = make_cell(2, identity_arrow(), ids, composite.feeds, composite.root);
    out.push_back(make_cell(3, target, sources, t.feeds, t.root));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Translation

namespace {

struct Translator {
  std::unordered_map<const Cell*, OpetopePtr> up;
  std::vector<CellPtr> keep;  // pins cached keys

  OpeMorphism morph(const Morph& m) {
    OpeMorphism f{cell(m.source), cell(m.target), {}, {}, {}};
    if (m.source->level >= 2) {
      f.sigma = m.sigma;
      for (std::size_t i = 0; i < m.sigma.size(); ++i)
        f.inputs.push_back(OpeMorphism{f.target->inputs[i], f.source->inputs[m.sigma[i]], {}, {}, {}});
      f.output.push_back(OpeMorphism{f.source->output, f.target->output, {}, {}, {}});
    }
    return f;
  }

  OpetopePtr cell(const CellPtr& c) {
    if (c->level == 0) return point();
    if (c->level == 1) return arrow();
    if (auto it = up.find(c.get()); it != up.end()) return it->second;
    std::vector<OpetopePtr> inputs;
    for (const auto& n : c->nodes) inputs.push_back(cell(n));
    OpetopePtr output = cell(c->target);

    TreeFrameShape ts;
    for (const auto& in : inputs) ts.node_arities.push_back(in->arity());
    ts.out_arity = output->arity();
    TreeLayout layout(ts);
    std::vector<VarIndex> mate(layout.dom_size + ts.out_arity + 1);
    std::map<VarIndex, Morph> minus_edge;
    auto source_var = [&](const Feed& f) {
      return f.kind == Feed::Node ? layout.node_output(f.index) : layout.boundary_input(f.index);
    };
    auto wire = [&](const Feed& f, VarIndex plus) {
      const VarIndex minus = source_var(f);
      mate[minus] = plus;
      mate[plus] = minus;
      minus_edge.emplace(minus, f.edge);
    };
    for (std::size_t i = 0; i < c->feeds.size(); ++i)
      for (std::size_t p = 0; p < c->feeds[i].size(); ++p) wire(c->feeds[i][p], layout.node_input(i, p));
    wire(c->root, layout.boundary_output());
    Graph g(ts.dom(), ts.cod(), std::move(mate));

    std::vector<OpetopePtr> dom, cod(output->inputs);
    for (const auto& in : inputs) {
      dom.insert(dom.end(), in->inputs.begin(), in->inputs.end());
      dom.push_back(in->output);
    }
    cod.push_back(output->output);
    std::vector<OpeMorphism> edges;
    if (c->level >= 4)
      for (auto [a, b] : g.pairs()) {
        const VarIndex minus = g.variance(a) == Variance::Minus ? a : b;
        edges.push_back(morph(minus_edge.at(minus)));
      }
    OpetopePtr out = make_opetope(std::move(inputs), std::move(output),
                                  LabelledGraph(std::move(g), std::move(dom), std::move(cod), c->level - 2,
                                                std::move(edges)));
    up.emplace(c.get(), out);
    keep.push_back(c);
    return out;
  }
};

struct Lifter {
  std::unordered_map<const Opetope*, CellPtr> down;
  std::vector<OpetopePtr> keep;

  Morph morph(const OpeMorphism& f) {
    Morph m{cell(f.source), cell(f.target), {}};
    if (f.dim() >= 2) m.sigma = f.sigma;
    return m;
  }

  CellPtr cell(const OpetopePtr& o) {
    if (o->dim == 0) return star();
    if (o->dim == 1) return identity_arrow();
    if (auto it = down.find(o.get()); it != down.end()) return it->second;
    std::vector<CellPtr> nodes;
    for (const auto& in : o->inputs) nodes.push_back(cell(in));
    CellPtr target = cell(o->output);
    const LabelledGraph& theta = *o->theta;
    const Graph& g = theta.graph();
    TreeLayout layout(*tree_frame_shape(g));
    auto feed_into = [&](VarIndex plus) {
      const VarIndex minus = g.mate(plus);
      const auto role = layout.role(minus);
      Feed f;
      if (role.kind == TreeLayout::Role::NodeOutput) {
        f.kind = Feed::Node;
        f.index = role.node;
      } else {
        f.kind = Feed::Leaf;
        f.index = role.slot;
      }
      if (!theta.terminal_base()) f.edge = morph(theta.edge_label_at(minus));
      return f;
    };
    std::vector<std::vector<Feed>> feeds(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t p = 0; p < o->inputs[i]->arity(); ++p) feeds[i].push_back(feed_into(layout.node_input(i, p)));
    CellPtr c = make_cell(o->dim, target, std::move(nodes), std::move(feeds), feed_into(layout.boundary_output()));
    down.emplace(o.get(), c);
    keep.push_back(o);
    return c;
  }
};

}  // namespace

OpetopePtr to_ladder(const CellPtr& cell) {
  Translator t;
  return t.cell(cell);
}

CellPtr to_oracle(const OpetopePtr& opetope) {
  Lifter l;
  return l.cell(opetope);
}

// ---------------------------------------------------------------------------
// Correspondence

std::string CorrespondenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["dim"] = dim;
  j["max_leaves"] = max_leaves;
  j["frames"] = nlohmann::ordered_json::array();
  for (const auto& f : frames)
    j["frames"].push_back({{"frame", f.frame}, {"oracle_count", f.oracle_count}, {"ladder_count", f.ladder_count},
                           {"match", f.match}});
  j["status"] = match ? "match" : "mismatch";
  if (!witness.empty()) j["witness"] = witness;
  return j.dump(2) + "\n";
}

namespace {

using Signature = std::vector<std::size_t>;  // input arities, then output arity

std::string signature_text(int k, const Signature& s) {
  if (k == 0) return "x";
  if (k == 1) return "(x)->x";
  std::string out = "(";
  for (std::size_t i = 0; i + 1 < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")->" + std::to_string(s.back());
}

Signature signature_of(const OpetopePtr& o) {
  Signature s;
  for (const auto& in : o->inputs) s.push_back(in->arity());
  s.push_back(o->output ? o->output->arity() : 0);
  return s;
}

using LadderSet = std::unordered_set<OpetopePtr, OpetopeHash, OpetopeEq>;

// Compares one batch: every oracle cell must translate to a distinct ladder
// opetope in `ladder`, and the sizes must agree.
bool compare_batch(const std::vector<CellPtr>& cells, const LadderSet& ladder, Translator& up,
                   std::string& witness) {
  LadderSet seen;
  for (const auto& c : cells) {
    OpetopePtr o;
    try {
      o = up.cell(c);
    } catch (const Error& e) {
      witness = std::string("oracle cell rejected by the ladder: ") + e.what();
      return false;
    }
    if (!ladder.count(o)) {
      witness = "oracle cell of signature " + signature_text(o->dim, signature_of(o)) + " missing from the ladder";
      return false;
    }
    if (!seen.insert(o).second) {
      witness = "two oracle cells translate to the same opetope";
      return false;
    }
  }
  if (seen.size() != ladder.size()) {
    witness = "ladder has " + std::to_string(ladder.size()) + " opetopes where the oracle has " +
              std::to_string(seen.size());
    return false;
  }
  return true;
}

struct Tally {
  std::map<Signature, FrameReport> frames;
  CorrespondenceReport report;

  void fail(std::string why) {
    if (report.match) report.witness = std::move(why);
    report.match = false;
  }
  void finish() {
    for (auto& [sig, f] : frames) {
      f.match = f.oracle_count == f.ladder_count;
      if (!f.match) fail("counts differ for " + f.frame);
      report.frames.push_back(f);
    }
  }
};

}  // namespace

CorrespondenceReport check_correspondence(int k, std::size_t max_leaves) {
  if (k < 0 || k > 3)
    throw Error(ErrorCode::InvalidArgument, "exhaustive correspondence is checked for dimensions 0 to 3");
  Tally tally;
  tally.report.dim = k;
  tally.report.max_leaves = max_leaves;
  const Bounds bounds{4, max_leaves};
  Translator up;
  auto frame_of = [&](const Signature& s) -> FrameReport& {
    auto& f = tally.frames[s];
    f.frame = signature_text(k, s);
    return f;
  };

  // Ladder side, on its own enumeration.
  for_each_opetope(k, bounds, [&](const OpetopePtr& o) { ++frame_of(signature_of(o)).ladder_count; });

  // Oracle side, batch by batch against the ladder with the same inputs.
  SliceLevel q0 = terminal_multicat();
  auto run_batch = [&](const std::vector<CellPtr>& cells, const std::vector<OpetopePtr>& ladder_inputs) {
    LadderSet ladder;
    for_each_with_inputs(k, ladder_inputs, bounds, [&](const OpetopePtr& o) { ladder.insert(o); });
    for (const auto& c : cells) ++frame_of(signature_of(up.cell(c))).oracle_count;
    std::string why;
    if (!compare_batch(cells, ladder, up, why)) tally.fail(why);
  };

  if (k == 0) {
    ++frame_of({0}).oracle_count;
    if (!same_opetope(up.cell(star()), point())) tally.fail("the point does not translate");
  } else if (k == 1) {
    run_batch(q0.arrows_from({star()}), {point()});
  } else if (k == 2) {
    SliceLevel q1 = slice(q0);
    for (std::size_t m = 0; m + 1 <= max_leaves; ++m)
      run_batch(q1.arrows_from(std::vector<CellPtr>(m, identity_arrow()), max_leaves),
                std::vector<OpetopePtr>(m, arrow()));
  } else {
    SliceLevel q1 = slice(q0);
    SliceLevel q2 = slice(q1);
    std::vector<std::vector<CellPtr>> by_arity;
    for (std::size_t a = 0; a + 1 <= max_leaves; ++a)
      by_arity.push_back(q1.arrows_from(std::vector<CellPtr>(a, identity_arrow()), max_leaves));
    std::vector<CellPtr> current;
    std::function<void(std::size_t)> extend = [&](std::size_t used) {
      if (current.size() <= used + 1) {
        std::vector<OpetopePtr> inputs;
        for (const auto& c : current) inputs.push_back(up.cell(c));
        run_batch(q2.arrows_from(current, max_leaves), inputs);
      }
      if (current.size() + 1 > max_leaves) return;
      for (std::size_t a = 0; used + a + 1 <= max_leaves; ++a)
        for (const auto& c : by_arity[a]) {
          current.push_back(c);
          extend(used + a);
          current.pop_back();
        }
    };
    extend(0);
  }
  tally.finish();
  return tally.report;
}

CorrespondenceReport check_correspondence(const Frame& frame, std::size_t max_leaves) {
  if (!frame.output) throw Error(ErrorCode::InvalidArgument, "frame has no output");
  const int k = frame.output->dim + 1;
  Tally tally;
  tally.report.dim = k;
  tally.report.max_leaves = max_leaves;

  std::vector<CellPtr> sources;
  for (const auto& in : frame.inputs) sources.push_back(to_oracle(in));
  CellPtr target = to_oracle(frame.output);
  SliceLevel q = terminal_multicat();
  for (int i = 1; i < k; ++i) q = slice(q);
  const auto cells = q.arrows(sources, target, max_leaves);

  LadderSet ladder;
  for (const auto& o : enumerate_opetopes(k, frame, Bounds{std::max(k, 4), max_leaves})) ladder.insert(o);

  Signature sig;
  for (const auto& in : frame.inputs) sig.push_back(in->arity());
  sig.push_back(frame.output->arity());
  auto& f = tally.frames[sig];
  f.frame = signature_text(k, sig);
  f.oracle_count = cells.size();
  f.ladder_count = ladder.size();
  Translator up;
  std::string why;
  if (!compare_batch(cells, ladder, up, why)) tally.fail(why);
  tally.finish();
  return tally.report;
}

}  // namespace ope::oracle
