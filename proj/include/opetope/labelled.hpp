#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "opetope/cells.hpp"

namespace ope {

// The category Ope_dim as seen by the labelled-graph layer: object equality,
// finite hom-sets, composition and identities. Ope_0 and Ope_1 are terminal.
class OpeCategory {
 public:
  explicit OpeCategory(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool terminal() const { return dim_ <= 1; }

  bool equal(const OpetopePtr& a, const OpetopePtr& b) const { return same_opetope(a, b); }
  std::vector<OpeMorphism> hom(const OpetopePtr& a, const OpetopePtr& b) const;
  OpeMorphism identity(const OpetopePtr& a) const;
  // Diagrammatic order: first, then second.
  OpeMorphism compose(const OpeMorphism& first, const OpeMorphism& second) const;

 private:
  int dim_;
};

OpeMorphism identity_morphism(const OpetopePtr& a);
// first : A -> B, second : B -> C; returns A -> C.
OpeMorphism compose_morphisms(const OpeMorphism& first, const OpeMorphism& second);
OpeMorphism inverse_morphism(const OpeMorphism& f);

LabelledShape label_shape(const Shape& shape, std::vector<OpetopePtr> labels, int base_dim);

// Attaches edge labels keyed by pair ordinal. Missing keys over a terminal base
// default to identities; over a non-terminal base every pair needs a label.
// Throws TypeMismatch when a label's endpoints disagree with the leaf labels.
LabelledGraph label_graph(const Graph& graph, const LabelledShape& dom, const LabelledShape& cod,
                          const std::map<std::size_t, OpeMorphism>& labels, const OpeCategory& cat);

// Labels are composed along each traced path in path order. Throws
// ShapeMismatch when the middle labelled shapes differ, ClosedLoop when the
// underlying composite does.
LabelledGraph compose_labelled(const LabelledGraph& f, const LabelledGraph& g);
LabelledGraph tensor_labelled(const LabelledGraph& f, const LabelledGraph& g);
LabelledGraph tensor_all_labelled(std::span<const LabelledGraph> graphs, int base_dim);
LabelledGraph tensor_all_labelled(std::span<const LabelledGraph* const> graphs, int base_dim);
LabelledGraph uncurry_labelled(const LabelledGraph& f);
LabelledGraph curry_labelled(const LabelledGraph& f);
LabelledGraph with_unit_domain(const LabelledGraph& f);
LabelledGraph identity_labelled(const LabelledShape& shape);

// A functor F : Ope_j -> A Ope_{j-1}, given on objects and morphisms.
struct LabelFunctor {
  int source_dim = 1;
  std::function<LabelledShape(const OpetopePtr&)> on_object;
  std::function<LabelledGraph(const OpeMorphism&)> on_morphism;
};

LabelledShape apply_KF(const LabelFunctor& F, const LabelledShape& shape);

// Each leaf labelled a is replaced by the shape F(a); each edge labelled g is
// replaced by the graph F(g) placed at the expanded leaves. Expanded leaves are
// addressed in leaf order: outer leaf i contributes F(label_i)'s leaves as a
// contiguous block. Throws UndefinedLabel when F rejects a label.
LabelledGraph apply_KF(const LabelFunctor& F, const LabelledGraph& f);

}  // namespace ope
