#include "opetope/ladder.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "opetope/error.hpp"

namespace ope {

namespace {

OpetopePtr assemble(int dim, std::vector<OpetopePtr> inputs, OpetopePtr output, std::optional<LabelledGraph> theta) {
  auto o = std::make_shared<Opetope>();
  o->dim = dim;
  o->inputs = std::move(inputs);
  o->output = std::move(output);
  o->theta = std::move(theta);
  std::size_t h = hash_mix(0x6f70657465ULL, static_cast<std::size_t>(dim));
  for (const auto& in : o->inputs) h = hash_mix(h, in->hash);
  if (o->output) h = hash_mix(h, o->output->hash);
  if (o->theta) h = hash_mix(h, o->theta->hash());
  o->hash = h;
  return o;
}

std::vector<OpetopePtr> frame_labels(const std::vector<OpetopePtr>& inputs, const OpetopePtr& output) {
  std::vector<OpetopePtr> labels(inputs);
  labels.push_back(output);
  return labels;
}

bool same_labels(std::span<const OpetopePtr> a, std::span<const OpetopePtr> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const OpetopePtr& x, const OpetopePtr& y) { return same_opetope(x, y); });
}

}  // namespace

OpetopePtr point() {
  static const OpetopePtr x = assemble(0, {}, nullptr, std::nullopt);
  return x;
}

OpetopePtr arrow() {
  static const OpetopePtr u = assemble(1, {point()}, point(), std::nullopt);
  return u;
}

LabelledShape frame_functor(const OpetopePtr& theta) {
  if (!theta || theta->dim < 1) throw Error(ErrorCode::InvalidArgument, "the frame functor needs dimension >= 1");
  return {Shape::frame(theta->arity()), frame_labels(theta->inputs, theta->output), theta->dim - 1};
}

LabelledGraph frame_functor_on_morphism(const OpeMorphism& f) {
  const int k = f.dim();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "the frame functor needs dimension >= 1");
  LabelledShape dom = frame_functor(f.source);
  LabelledShape cod = frame_functor(f.target);
  if (k == 1) return identity_labelled(dom);
  const std::size_t m = f.sigma.size();
  std::vector<VarIndex> mate(2 * (m + 1));
  auto link = [&](std::size_t a, std::size_t b) {
    mate[a] = static_cast<VarIndex>(b);
    mate[b] = static_cast<VarIndex>(a);
  };
  // pairs() orders by the dom-side index, so the ordinal of the pair at dom
  // variable d is d.
  std::vector<OpeMorphism> edges(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    link(f.sigma[i], m + 1 + i);
    edges[f.sigma[i]] = f.inputs[i];
  }
  link(m, 2 * m + 1);
  edges[m] = f.output[0];
  return LabelledGraph(Graph(dom.shape, cod.shape, std::move(mate)), std::move(dom.labels),
                       std::move(cod.labels), k - 1, std::move(edges));
}

LabelFunctor frame_functor_of(int k) {
  LabelFunctor F;
  F.source_dim = k;
  if (k == 1) {
    // Ope_1 has one object and one morphism.
    static const LabelledShape image = frame_functor(arrow());
    static const LabelledGraph id = identity_labelled(image);
    F.on_object = [](const OpetopePtr&) { return image; };
    F.on_morphism = [](const OpeMorphism&) { return id; };
    return F;
  }
  F.on_object = [](const OpetopePtr& a) { return frame_functor(a); };
  F.on_morphism = [](const OpeMorphism& f) { return frame_functor_on_morphism(f); };
  return F;
}

LabelledShape expected_theta_codomain(const std::vector<OpetopePtr>& inputs, const OpetopePtr& output) {
  const int k = output->dim + 1;
  LabelledShape frame{Shape::frame(inputs.size()), frame_labels(inputs, output), k - 1};
  return apply_KF(frame_functor_of(k - 1), frame);
}

LabelledGraph input_composite(const std::vector<OpetopePtr>& inputs, const LabelledGraph& theta_bar) {
  const int k = theta_bar.base_dim() + 2;
  std::vector<const LabelledGraph*> parts;
  parts.reserve(inputs.size());
  for (const auto& in : inputs) parts.push_back(&*in->theta);
  LabelledGraph lhs = tensor_all_labelled(parts, k - 3);
  LabelledGraph rhs = apply_KF(frame_functor_of(k - 2), theta_bar);
  return with_unit_domain(compose_labelled(lhs, rhs));
}

OpetopePtr make_opetope(std::vector<OpetopePtr> inputs, OpetopePtr output, const LabelledGraph& theta) {
  if (!output) throw Error(ErrorCode::InvalidArgument, "missing output");
  const int k = output->dim + 1;
  if (k < 2) throw Error(ErrorCode::TypeMismatch, "opetopes of dimension 0 and 1 are fixed");
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!inputs[i] || inputs[i]->dim != k - 1)
      throw Error(ErrorCode::TypeMismatch, "input " + std::to_string(i) + " is not a " +
                                               std::to_string(k - 1) + "-opetope");
  if (theta.base_dim() != k - 2)
    throw Error(ErrorCode::TypeMismatch, "theta must be labelled in Ope_" + std::to_string(k - 2));

  // Condition A: theta's type is fixed by the frame.
  const LabelledShape expected = expected_theta_codomain(inputs, output);
  const Shape& A = expected.shape.left();
  const Shape& B = expected.shape.right();
  const auto split = static_cast<long>(A.leaf_count());
  const std::span<const OpetopePtr> in_labels(expected.labels.data(), static_cast<std::size_t>(split));
  const std::span<const OpetopePtr> out_labels(expected.labels.data() + split, expected.labels.size() - split);

  std::optional<LabelledGraph> curried;
  if (theta.dom().shape.is_unit() && theta.cod() == expected) {
    curried = theta;
  } else if (theta.graph().dom() == A && theta.graph().cod() == B && same_labels(theta.dom_labels(), in_labels) &&
             same_labels(theta.cod_labels(), out_labels)) {
    curried = curry_labelled(theta);
  } else {
    // Distinguish a wrong input side from a wrong output.
    bool inputs_match = false;
    const auto& g = theta.graph();
    if (g.dom_size() == 0 && g.cod().is_hom()) {
      const auto n = g.cod().left().leaf_count();
      inputs_match = g.cod().left() == A && n == in_labels.size() &&
                     same_labels(std::span(theta.cod_labels()).first(n), in_labels);
    } else {
      inputs_match = g.dom() == A && same_labels(theta.dom_labels(), in_labels);
    }
    if (inputs_match && k >= 3)
      throw Error(ErrorCode::CompositeMismatch, "theta's codomain is not the frame of the output " +
                                                    std::to_string(output->arity()) + "-ary opetope");
    throw Error(ErrorCode::TypeMismatch, "theta does not have type I -> " + print_shape(expected.shape));
  }

  if (!is_tree_allowable(curried->graph()))
    throw Error(ErrorCode::NotTreeShaped, "theta does not wire its inputs into a single rooted tree");

  // Condition B.
  if (k >= 3) {
    LabelledGraph composite = input_composite(inputs, uncurry_labelled(*curried));
    if (!(composite == *output->theta))
      throw Error(ErrorCode::CompositeMismatch, "composing the inputs along theta does not give the output");
  }
  return assemble(k, std::move(inputs), std::move(output), std::move(curried));
}

OpetopePtr chain_opetope(const std::vector<std::size_t>& order) {
  const std::size_t m = order.size();
  std::vector<std::size_t> check(order);
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < m; ++i)
    if (check[i] != i) throw Error(ErrorCode::InvalidArgument, "chain order is not a permutation");
  TreeFrameShape ts{std::vector<std::size_t>(m, 1), 1};
  TreeLayout layout(ts);
  std::vector<VarPair> pairs;
  VarIndex below = layout.boundary_input(0);
  for (auto node : order) {
    pairs.emplace_back(below, layout.node_input(node, 0));
    below = layout.node_output(node);
  }
  pairs.emplace_back(below, layout.boundary_output());
  Graph g = make_graph(ts.dom(), ts.cod(), pairs);
  const std::vector<OpetopePtr> xs_dom(g.dom_size(), point());
  const std::vector<OpetopePtr> xs_cod(2, point());
  return make_opetope(std::vector<OpetopePtr>(m, arrow()), arrow(), LabelledGraph(g, xs_dom, xs_cod, 0));
}

bool commutes(const OpeMorphism& f) {
  const int k = f.dim();
  if (k <= 1) return true;
  try {
    LabelledGraph image = apply_KF(frame_functor_of(k - 1), frame_functor_on_morphism(f));
    return compose_labelled(*f.source->theta, image) == *f.target->theta;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ClosedLoop) return false;
    throw;
  }
}

namespace {

std::vector<OpeMorphism> compute_hom(const OpetopePtr& a, const OpetopePtr& b) {
  if (a->dim != b->dim) return {};
  if (a->dim <= 1) return {OpeMorphism{a, b, {}, {}, {}}};
  const std::size_t m = a->arity();
  if (b->arity() != m) return {};
  const auto outs = hom(a->output, b->output);
  if (outs.empty()) return {};
  // options[i][j] = hom(b.inputs[i], a.inputs[j])
  std::vector<std::vector<std::vector<OpeMorphism>>> options(m, std::vector<std::vector<OpeMorphism>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) options[i][j] = hom(b->inputs[i], a->inputs[j]);

  std::vector<OpeMorphism> out;
  std::vector<std::uint32_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0u);
  do {
    bool possible = true;
    for (std::size_t i = 0; i < m && possible; ++i) possible = !options[i][sigma[i]].empty();
    if (!possible) continue;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      for (const auto& g : outs) {
        OpeMorphism f{a, b, sigma, {}, {g}};
        for (std::size_t i = 0; i < m; ++i) f.inputs.push_back(options[i][sigma[i]][pick[i]]);
        if (commutes(f)) out.push_back(std::move(f));
      }
      bool done = true;
      for (std::size_t i = m; i-- > 0;) {
        if (++pick[i] < options[i][sigma[i]].size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
      if (done) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

struct HomEntry {
  OpetopePtr a, b;  // keep the keys alive
  std::vector<OpeMorphism> morphisms;
};

std::mutex hom_mutex;
std::map<std::pair<const Opetope*, const Opetope*>, HomEntry> hom_cache;

}  // namespace

std::vector<OpeMorphism> hom(const OpetopePtr& a, const OpetopePtr& b) {
  const auto key = std::make_pair(a.get(), b.get());
  {
    std::lock_guard lock(hom_mutex);
    auto it = hom_cache.find(key);
    if (it != hom_cache.end()) return it->second.morphisms;
  }
  auto result = compute_hom(a, b);
  std::lock_guard lock(hom_mutex);
  hom_cache.emplace(key, HomEntry{a, b, result});
  return result;
}

std::vector<OpeMorphism> OpeCategory::hom(const OpetopePtr& a, const OpetopePtr& b) const {
  return ope::hom(a, b);
}

std::optional<OpeMorphism> find_inverse(const OpeMorphism& f) {
  for (const auto& g : hom(f.target, f.source))
    if (compose_morphisms(f, g).is_identity() && compose_morphisms(g, f).is_identity()) return g;
  return std::nullopt;
}

namespace {

// Calls visit with every edge labelling of g over Ope_base whose endpoints
// match the given leaf labels.
void for_each_labelling(const Graph& g, const std::vector<OpetopePtr>& dom_labels,
                        const std::vector<OpetopePtr>& cod_labels, int base,
                        const std::function<void(const LabelledGraph&)>& visit) {
  if (base <= 1) {
    visit(LabelledGraph(g, dom_labels, cod_labels, base));
    return;
  }
  auto leaf = [&](std::size_t v) -> const OpetopePtr& {
    return v < g.dom_size() ? dom_labels[v] : cod_labels[v - g.dom_size()];
  };
  const auto pairs = g.pairs();
  std::vector<std::vector<OpeMorphism>> options;
  for (auto [a, b] : pairs) {
    if (g.variance(a) == Variance::Plus) std::swap(a, b);
    options.push_back(hom(leaf(a), leaf(b)));
    if (options.back().empty()) return;
  }
  std::vector<std::size_t> pick(pairs.size(), 0);
  while (true) {
    std::vector<OpeMorphism> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back(options[i][pick[i]]);
    visit(LabelledGraph(g, dom_labels, cod_labels, base, std::move(edges)));
    std::size_t i = pairs.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++pick[i] < options[i].size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) return;
  }
}

TreeFrameShape tree_of(const std::vector<OpetopePtr>& inputs, std::size_t out_arity) {
  TreeFrameShape ts;
  ts.out_arity = out_arity;
  for (const auto& in : inputs) ts.node_arities.push_back(in->arity());
  return ts;
}

void check_dim(int k, const Bounds& bounds) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
  if (k > bounds.max_dim)
    throw Error(ErrorCode::BoundExceeded, "dimension " + std::to_string(k) + " exceeds bound " +
                                              std::to_string(bounds.max_dim));
}

}  // namespace

std::vector<OpetopePtr> enumerate_opetopes(int k, const Frame& frame, const Bounds& bounds) {
  check_dim(k, bounds);
  if (k == 0) return {point()};
  if (k == 1) return {arrow()};
  if (!frame.output || frame.output->dim != k - 1)
    throw Error(ErrorCode::TypeMismatch, "frame output is not a " + std::to_string(k - 1) + "-opetope");
  for (const auto& in : frame.inputs)
    if (!in || in->dim != k - 1)
      throw Error(ErrorCode::TypeMismatch, "frame input is not a " + std::to_string(k - 1) + "-opetope");

  const TreeFrameShape ts = tree_of(frame.inputs, frame.output->arity());
  const auto graphs = enumerate_allowable(ts, bounds.max_leaves);
  const LabelledShape expected = expected_theta_codomain(frame.inputs, frame.output);
  // Uncurried leaf labels: the Hom's domain leaves, then its codomain leaves.
  const std::size_t split = expected.shape.left().leaf_count();
  const std::vector<OpetopePtr> dom_labels(expected.labels.begin(), expected.labels.begin() + static_cast<long>(split));
  const std::vector<OpetopePtr> cod_labels(expected.labels.begin() + static_cast<long>(split), expected.labels.end());

  std::vector<OpetopePtr> out;
  for (const auto& g : graphs) {
    for_each_labelling(g, dom_labels, cod_labels, k - 2, [&](const LabelledGraph& theta_bar) {
      try {
        out.push_back(make_opetope(frame.inputs, frame.output, theta_bar));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CompositeMismatch && e.code() != ErrorCode::ClosedLoop) throw;
      }
    });
  }
  return out;
}

void for_each_with_inputs(int k, const std::vector<OpetopePtr>& inputs, const Bounds& bounds,
                          const std::function<void(const OpetopePtr&)>& visit) {
  check_dim(k, bounds);
  if (k <= 1) {
    visit(k == 0 ? point() : arrow());
    return;
  }
  if (k == 2) {
    for (const auto& o : enumerate_opetopes(2, Frame{inputs, arrow()}, bounds)) visit(o);
    return;
  }
  if (k > 3)
    throw Error(ErrorCode::InvalidArgument, "outputs are derived from inputs only up to dimension 3; give a frame");
  for (const auto& in : inputs)
    if (!in || in->dim != 2) throw Error(ErrorCode::TypeMismatch, "inputs must be 2-opetopes");

  std::size_t total = 0;
  for (const auto& in : inputs) total += in->arity();
  if (inputs.size() > total + 1) return;
  const std::size_t n = total + 1 - inputs.size();
  const TreeFrameShape ts = tree_of(inputs, n);
  const auto graphs = enumerate_allowable(ts, bounds.max_leaves);

  std::vector<OpetopePtr> dom_labels;
  for (const auto& in : inputs) dom_labels.insert(dom_labels.end(), in->arity() + 1, arrow());
  const std::vector<OpetopePtr> cod_labels(n + 1, arrow());
  const std::vector<OpetopePtr> output_inputs(n, arrow());

  for (const auto& g : graphs) {
    LabelledGraph theta_bar(g, dom_labels, cod_labels, 1);
    std::optional<LabelledGraph> composite;
    try {
      composite = input_composite(inputs, theta_bar);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClosedLoop) throw;
      continue;
    }
    // Condition B holds by construction of the output.
    OpetopePtr output = make_opetope(output_inputs, arrow(), *composite);
    visit(assemble(3, inputs, std::move(output), curry_labelled(theta_bar)));
  }
}

void for_each_opetope(int k, const Bounds& bounds, const std::function<void(const OpetopePtr&)>& visit) {
  check_dim(k, bounds);
  if (k <= 1) {
    visit(k == 0 ? point() : arrow());
    return;
  }
  if (k > 3) throw Error(ErrorCode::InvalidArgument, "exhaustive enumeration is limited to dimension 3");
  const std::size_t L = bounds.max_leaves;
  if (k == 2) {
    for (std::size_t m = 0; m + 1 <= L; ++m) for_each_with_inputs(2, std::vector<OpetopePtr>(m, arrow()), bounds, visit);
    return;
  }
  // k == 3: sequences of 2-opetopes with total arity <= L - 1.
  std::vector<std::vector<OpetopePtr>> by_arity;
  for (std::size_t a = 0; a + 1 <= L; ++a)
    by_arity.push_back(enumerate_opetopes(2, Frame{std::vector<OpetopePtr>(a, arrow()), arrow()}, bounds));

  std::vector<OpetopePtr> current;
  std::function<void(std::size_t)> extend = [&](std::size_t used) {
    if (current.size() <= used + 1) for_each_with_inputs(3, current, bounds, visit);
    if (current.size() + 1 > L) return;
    for (std::size_t a = 0; used + a + 1 <= L; ++a)
      for (const auto& o : by_arity[a]) {
        current.push_back(o);
        extend(used + a);
        current.pop_back();
      }
  };
  extend(0);
}

}  // namespace ope
