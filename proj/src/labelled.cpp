#include "opetope/labelled.hpp"

#include <unordered_map>

#include "opetope/error.hpp"

namespace ope {

OpeMorphism identity_morphism(const OpetopePtr& a) {
  OpeMorphism id{a, a, {}, {}, {}};
  if (a->dim >= 2) {
    id.sigma.resize(a->arity());
    for (std::uint32_t i = 0; i < a->arity(); ++i) {
      id.sigma[i] = i;
      id.inputs.push_back(identity_morphism(a->inputs[i]));
    }
    id.output.push_back(identity_morphism(a->output));
  }
  return id;
}

OpeMorphism compose_morphisms(const OpeMorphism& first, const OpeMorphism& second) {
  if (!same_opetope(first.target, second.source))
    throw Error(ErrorCode::TypeMismatch, "morphisms are not composable");
  OpeMorphism out{first.source, second.target, {}, {}, {}};
  if (first.dim() >= 2) {
    const std::size_t m = second.sigma.size();
    out.sigma.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto j = second.sigma[i];
      out.sigma[i] = first.sigma[j];
      // C_i -> B_j -> A_{first.sigma[j]}
      out.inputs.push_back(compose_morphisms(second.inputs[i], first.inputs[j]));
    }
    out.output.push_back(compose_morphisms(first.output[0], second.output[0]));
  }
  return out;
}

OpeMorphism inverse_morphism(const OpeMorphism& f) {
  OpeMorphism out{f.target, f.source, {}, {}, {}};
  if (f.dim() >= 2) {
    const std::size_t m = f.sigma.size();
    out.sigma.resize(m);
    for (std::uint32_t j = 0; j < m; ++j) out.sigma[f.sigma[j]] = j;
    for (std::size_t i = 0; i < m; ++i) out.inputs.push_back(inverse_morphism(f.inputs[out.sigma[i]]));
    out.output.push_back(inverse_morphism(f.output[0]));
  }
  return out;
}

OpeMorphism OpeCategory::identity(const OpetopePtr& a) const { return identity_morphism(a); }

OpeMorphism OpeCategory::compose(const OpeMorphism& first, const OpeMorphism& second) const {
  return compose_morphisms(first, second);
}

LabelledShape label_shape(const Shape& shape, std::vector<OpetopePtr> labels, int base_dim) {
  if (labels.size() != shape.leaf_count())
    throw Error(ErrorCode::ArityMismatch, "shape " + print_shape(shape) + " has " +
                                              std::to_string(shape.leaf_count()) + " leaves but " +
                                              std::to_string(labels.size()) + " labels were given");
  for (const auto& l : labels)
    if (!l || l->dim != base_dim)
      throw Error(ErrorCode::TypeMismatch, "label is not an object of Ope_" + std::to_string(base_dim));
  return {shape, std::move(labels), base_dim};
}

LabelledGraph label_graph(const Graph& graph, const LabelledShape& dom, const LabelledShape& cod,
                          const std::map<std::size_t, OpeMorphism>& labels, const OpeCategory& cat) {
  if (!(graph.dom() == dom.shape) || !(graph.cod() == cod.shape))
    throw Error(ErrorCode::ShapeMismatch, "labelled shapes do not match the graph");
  if (dom.base_dim != cat.dim() || cod.base_dim != cat.dim())
    throw Error(ErrorCode::TypeMismatch, "labelled shapes live over a different base category");
  const auto pairs = graph.pairs();
  auto leaf = [&](std::size_t v) -> const OpetopePtr& {
    return v < graph.dom_size() ? dom.labels[v] : cod.labels[v - graph.dom_size()];
  };
  std::vector<OpeMorphism> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (graph.variance(a) == Variance::Plus) std::swap(a, b);
    auto it = labels.find(i);
    if (it == labels.end()) {
      if (!cat.terminal())
        throw Error(ErrorCode::Incomplete, "pair " + std::to_string(i) + " has no label");
      if (!cat.equal(leaf(a), leaf(b)))
        throw Error(ErrorCode::TypeMismatch, "pair " + std::to_string(i) + " joins different objects");
      continue;
    }
    if (!cat.equal(it->second.source, leaf(a)) || !cat.equal(it->second.target, leaf(b)))
      throw Error(ErrorCode::TypeMismatch, "label on pair " + std::to_string(i) +
                                               " disagrees with its endpoint labels");
    edges.push_back(it->second);
  }
  if (cat.terminal()) edges.clear();
  return LabelledGraph(graph, dom.labels, cod.labels, cat.dim(), std::move(edges));
}

namespace {

// Re-labels a graph built from `source` whose variables map into `result`
// via var_map (result index -> (which source, source index)).
std::vector<OpeMorphism> carry_labels(
    const Graph& result, const std::function<OpeMorphism(std::size_t)>& label_of_result_var) {
  std::vector<OpeMorphism> out;
  for (auto [a, b] : result.pairs()) {
    const std::size_t minus = result.variance(a) == Variance::Minus ? a : b;
    out.push_back(label_of_result_var(minus));
  }
  return out;
}

}  // namespace

LabelledGraph compose_labelled(const LabelledGraph& f, const LabelledGraph& g) {
  if (f.base_dim() != g.base_dim())
    throw Error(ErrorCode::TypeMismatch, "composing graphs over different base categories");
  if (!(f.cod() == g.dom()))
    throw Error(ErrorCode::ShapeMismatch, "codomain of the first graph is not the domain of the second");
  auto traced = compose_traced(f.graph(), g.graph());
  std::vector<OpeMorphism> edges;
  if (!f.terminal_base()) {
    edges = carry_labels(traced.graph, [&](std::size_t minus) {
      const auto& path = traced.paths[minus];
      auto label = [&](const Hop& hop) {
        return hop.in_first ? f.edge_label_at(hop.from) : g.edge_label_at(hop.from);
      };
      OpeMorphism acc = label(path.front());
      for (std::size_t i = 1; i < path.size(); ++i) acc = compose_morphisms(acc, label(path[i]));
      return acc;
    });
  }
  return LabelledGraph(std::move(traced.graph), f.dom_labels(), g.cod_labels(), f.base_dim(),
                       std::move(edges));
}

LabelledGraph tensor_labelled(const LabelledGraph& f, const LabelledGraph& g) {
  if (f.base_dim() != g.base_dim())
    throw Error(ErrorCode::TypeMismatch, "tensoring graphs over different base categories");
  Graph t = tensor(f.graph(), g.graph());
  const std::size_t a = f.graph().dom_size(), b = f.graph().size() - a;
  const std::size_t c = g.graph().dom_size();
  auto concat = [](const std::vector<OpetopePtr>& x, const std::vector<OpetopePtr>& y) {
    std::vector<OpetopePtr> out(x);
    out.insert(out.end(), y.begin(), y.end());
    return out;
  };
  std::vector<OpeMorphism> edges;
  if (!f.terminal_base()) {
    edges = carry_labels(t, [&](std::size_t v) {
      if (v < a) return f.edge_label_at(v);
      if (v < a + c) return g.edge_label_at(v - a);
      if (v < a + c + b) return f.edge_label_at(a + (v - a - c));
      return g.edge_label_at(c + (v - a - c - b));
    });
  }
  return LabelledGraph(std::move(t), concat(f.dom_labels(), g.dom_labels()),
                       concat(f.cod_labels(), g.cod_labels()), f.base_dim(), std::move(edges));
}

LabelledGraph tensor_all_labelled(std::span<const LabelledGraph> graphs, int base_dim) {
  std::vector<const LabelledGraph*> ptrs;
  for (const auto& g : graphs) ptrs.push_back(&g);
  return tensor_all_labelled(ptrs, base_dim);
}

LabelledGraph tensor_all_labelled(std::span<const LabelledGraph* const> graphs, int base_dim) {
  if (graphs.empty()) return LabelledGraph(Graph::empty(), {}, {}, base_dim);
  std::vector<const Graph*> plain;
  std::vector<OpetopePtr> dom, cod;
  for (const auto* g : graphs) {
    if (g->base_dim() != base_dim)
      throw Error(ErrorCode::TypeMismatch, "tensoring graphs over different base categories");
    plain.push_back(&g->graph());
    dom.insert(dom.end(), g->dom_labels().begin(), g->dom_labels().end());
    cod.insert(cod.end(), g->cod_labels().begin(), g->cod_labels().end());
  }
  Graph t = tensor_all(plain);
  std::vector<OpeMorphism> edges;
  if (base_dim > 1) {
    // Result variable -> (factor, variable in factor).
    std::vector<std::pair<std::size_t, std::size_t>> origin(t.size());
    std::size_t d = 0, c = t.dom_size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i]->graph();
      for (std::size_t v = 0; v < g.dom_size(); ++v) origin[d++] = {i, v};
      for (std::size_t v = g.dom_size(); v < g.size(); ++v) origin[c++] = {i, v};
    }
    edges = carry_labels(t, [&](std::size_t v) { return graphs[origin[v].first]->edge_label_at(origin[v].second); });
  }
  return LabelledGraph(std::move(t), std::move(dom), std::move(cod), base_dim, std::move(edges));
}

LabelledGraph uncurry_labelled(const LabelledGraph& f) {
  Graph u = uncurry(f.graph());
  const std::size_t split = u.dom_size();
  const auto& labels = f.cod_labels();
  std::vector<OpetopePtr> dom(labels.begin(), labels.begin() + static_cast<long>(split));
  std::vector<OpetopePtr> cod(labels.begin() + static_cast<long>(split), labels.end());
  return LabelledGraph(std::move(u), std::move(dom), std::move(cod), f.base_dim(), f.edge_labels());
}

LabelledGraph curry_labelled(const LabelledGraph& f) {
  Graph c = curry(f.graph());
  std::vector<OpetopePtr> cod(f.dom_labels());
  cod.insert(cod.end(), f.cod_labels().begin(), f.cod_labels().end());
  return LabelledGraph(std::move(c), {}, std::move(cod), f.base_dim(), f.edge_labels());
}

LabelledGraph with_unit_domain(const LabelledGraph& f) {
  return LabelledGraph(with_unit_domain(f.graph()), {}, f.cod_labels(), f.base_dim(), f.edge_labels());
}

LabelledGraph identity_labelled(const LabelledShape& shape) {
  Graph id = Graph::identity(shape.shape);
  std::vector<OpeMorphism> edges;
  if (shape.base_dim > 1)
    for (const auto& l : shape.labels) edges.push_back(identity_morphism(l));
  return LabelledGraph(std::move(id), shape.labels, shape.labels, shape.base_dim, std::move(edges));
}

LabelledShape apply_KF(const LabelFunctor& F, const LabelledShape& shape) {
  if (shape.base_dim != F.source_dim)
    throw Error(ErrorCode::TypeMismatch, "functor is defined on Ope_" + std::to_string(F.source_dim));
  std::vector<Shape> parts;
  std::vector<OpetopePtr> labels;
  for (const auto& l : shape.labels) {
    LabelledShape image = F.on_object(l);
    parts.push_back(image.shape);
    labels.insert(labels.end(), image.labels.begin(), image.labels.end());
  }
  return {substitute(shape.shape, parts), std::move(labels), F.source_dim - 1};
}

LabelledGraph apply_KF(const LabelFunctor& F, const LabelledGraph& f) {
  if (f.base_dim() != F.source_dim)
    throw Error(ErrorCode::TypeMismatch, "functor is defined on Ope_" + std::to_string(F.source_dim) +
                                             ", graph is labelled in Ope_" + std::to_string(f.base_dim()));
  const Graph& g = f.graph();
  std::unordered_map<const Opetope*, LabelledShape> images;
  auto image_of = [&](const OpetopePtr& l) -> const LabelledShape& {
    auto it = images.find(l.get());
    if (it != images.end()) return it->second;
    return images.emplace(l.get(), F.on_object(l)).first->second;
  };

  auto expand_side = [&](const Shape& shape, const std::vector<OpetopePtr>& labels,
                         std::vector<std::size_t>& offsets) {
    std::vector<Shape> parts;
    std::vector<OpetopePtr> out_labels;
    std::size_t offset = 0;
    for (const auto& l : labels) {
      const auto& image = image_of(l);
      offsets.push_back(offset);
      offset += image.shape.leaf_count();
      parts.push_back(image.shape);
      out_labels.insert(out_labels.end(), image.labels.begin(), image.labels.end());
    }
    return LabelledShape{substitute(shape, parts), std::move(out_labels), F.source_dim - 1};
  };
  std::vector<std::size_t> dom_off, cod_off;
  LabelledShape dom = expand_side(g.dom(), f.dom_labels(), dom_off);
  LabelledShape cod = expand_side(g.cod(), f.cod_labels(), cod_off);
  const std::size_t new_dom = dom.shape.leaf_count();
  auto base = [&](std::size_t v) { return v < g.dom_size() ? dom_off[v] : new_dom + cod_off[v - g.dom_size()]; };

  std::vector<VarIndex> mate(new_dom + cod.shape.leaf_count());
  std::unordered_map<std::size_t, OpeMorphism> minus_labels;
  const bool keep_labels = F.source_dim - 1 > 1;
  for (auto [a, b] : g.pairs()) {
    const std::size_t minus = g.variance(a) == Variance::Minus ? a : b;
    const std::size_t plus = g.mate(minus);
    LabelledGraph piece = F.on_morphism(f.edge_label_at(minus));
    if (!(piece.dom() == image_of(f.leaf_label(minus))) || !(piece.cod() == image_of(f.leaf_label(plus))))
      throw Error(ErrorCode::UndefinedLabel, "functor image of an edge label has the wrong type");
    const std::size_t split = piece.graph().dom_size();
    auto place = [&](std::size_t i) {
      return static_cast<VarIndex>(i < split ? base(minus) + i : base(plus) + (i - split));
    };
    for (std::size_t i = 0; i < piece.graph().size(); ++i) mate[place(i)] = place(piece.graph().mate(i));
    if (keep_labels)
      for (auto [p, q] : piece.graph().pairs()) {
        const std::size_t pm = piece.graph().variance(p) == Variance::Minus ? p : q;
        minus_labels.emplace(place(pm), piece.edge_label_at(pm));
      }
  }
  Graph expanded(dom.shape, cod.shape, std::move(mate));
  std::vector<OpeMorphism> edges;
  if (keep_labels) edges = carry_labels(expanded, [&](std::size_t v) { return minus_labels.at(v); });
  return LabelledGraph(std::move(expanded), std::move(dom.labels), std::move(cod.labels), F.source_dim - 1,
                       std::move(edges));
}

}  // namespace ope
