#include "opetope/cells.hpp"

#include "opetope/error.hpp"

namespace ope {

std::size_t hash_mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int OpeMorphism::dim() const { return source ? source->dim : -1; }

std::size_t OpeMorphism::hash() const {
  std::size_t h = source ? source->hash : 0;
  h = hash_mix(h, target ? target->hash : 0);
  for (auto s : sigma) h = hash_mix(h, s);
  for (const auto& g : inputs) h = hash_mix(h, g.hash());
  for (const auto& g : output) h = hash_mix(h, g.hash());
  return h;
}

bool OpeMorphism::is_identity() const {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != i) return false;
  for (const auto& g : inputs)
    if (!g.is_identity()) return false;
  for (const auto& g : output)
    if (!g.is_identity()) return false;
  return same_opetope(source, target);
}

bool operator==(const OpeMorphism& a, const OpeMorphism& b) {
  return a.sigma == b.sigma && a.inputs == b.inputs && a.output == b.output &&
         same_opetope(a.source, b.source) && same_opetope(a.target, b.target);
}

namespace {

bool same_labels(const std::vector<OpetopePtr>& a, const std::vector<OpetopePtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_opetope(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool operator==(const LabelledShape& a, const LabelledShape& b) {
  return a.base_dim == b.base_dim && a.shape == b.shape && same_labels(a.labels, b.labels);
}

LabelledGraph::LabelledGraph(Graph graph, std::vector<OpetopePtr> dom_labels,
                             std::vector<OpetopePtr> cod_labels, int base_dim,
                             std::vector<OpeMorphism> edge_labels)
    : graph_(std::move(graph)),
      dom_labels_(std::move(dom_labels)),
      cod_labels_(std::move(cod_labels)),
      base_dim_(base_dim),
      edge_labels_(std::move(edge_labels)) {
  if (dom_labels_.size() != graph_.dom().leaf_count() || cod_labels_.size() != graph_.cod().leaf_count())
    throw Error(ErrorCode::ArityMismatch, "leaf labels do not match the shape's generator count");
  for (const auto* side : {&dom_labels_, &cod_labels_})
    for (const auto& l : *side)
      if (!l || l->dim != base_dim_)
        throw Error(ErrorCode::TypeMismatch, "leaf label is not an object of Ope_" + std::to_string(base_dim_));
  if (terminal_base()) {
    edge_labels_.clear();
    return;
  }
  const auto pairs = graph_.pairs();
  if (edge_labels_.size() != pairs.size())
    throw Error(ErrorCode::ArityMismatch, "expected one edge label per mate pair");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (graph_.variance(a) == Variance::Plus) std::swap(a, b);
    const auto& g = edge_labels_[i];
    if (!same_opetope(g.source, leaf_label(a)) || !same_opetope(g.target, leaf_label(b)))
      throw Error(ErrorCode::TypeMismatch, "edge label on pair " + std::to_string(i) +
                                               " does not run from its minus end to its plus end");
  }
}

const OpetopePtr& LabelledGraph::leaf_label(std::size_t v) const {
  const std::size_t d = graph_.dom_size();
  return v < d ? dom_labels_[v] : cod_labels_[v - d];
}

OpeMorphism LabelledGraph::edge_label_at(std::size_t v) const {
  if (!terminal_base()) return edge_labels_[graph_.pair_ordinal(v)];
  std::size_t minus = graph_.variance(v) == Variance::Minus ? v : graph_.mate(v);
  return OpeMorphism{leaf_label(minus), leaf_label(graph_.mate(minus)), {}, {}, {}};
}

std::size_t LabelledGraph::hash() const {
  std::size_t h = hash_mix(graph_.cod().hash(), graph_.dom().hash());
  for (auto m : graph_.mates()) h = hash_mix(h, m);
  for (const auto& l : dom_labels_) h = hash_mix(h, l->hash);
  for (const auto& l : cod_labels_) h = hash_mix(h, l->hash);
  for (const auto& g : edge_labels_) h = hash_mix(h, g.hash());
  return h;
}

bool operator==(const LabelledGraph& a, const LabelledGraph& b) {
  return a.base_dim() == b.base_dim() && a.graph() == b.graph() &&
         same_labels(a.dom_labels(), b.dom_labels()) && same_labels(a.cod_labels(), b.cod_labels()) &&
         a.edge_labels() == b.edge_labels();
}

bool same_opetope(const Opetope& a, const Opetope& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash || a.dim != b.dim || a.inputs.size() != b.inputs.size()) return false;
  for (std::size_t i = 0; i < a.inputs.size(); ++i)
    if (!same_opetope(a.inputs[i], b.inputs[i])) return false;
  if (a.dim >= 1 && !same_opetope(a.output, b.output)) return false;
  if (a.theta.has_value() != b.theta.has_value()) return false;
  return !a.theta || *a.theta == *b.theta;
}

bool same_opetope(const OpetopePtr& a, const OpetopePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_opetope(*a, *b);
}

}  // namespace ope
