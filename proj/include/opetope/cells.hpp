#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "opetope/graph.hpp"

namespace ope {

struct Opetope;
using OpetopePtr = std::shared_ptr<const Opetope>;

// A morphism of k-opetopes source -> target. For k >= 2 it is a permutation
// sigma with components
//   inputs[i] : target.inputs[i] -> source.inputs[sigma[i]]
//   output[0] : source.output -> target.output
// For k <= 1 the categories are terminal and the morphism carries no data.
struct OpeMorphism {
  OpetopePtr source;
  OpetopePtr target;
  std::vector<std::uint32_t> sigma;
  std::vector<OpeMorphism> inputs;
  std::vector<OpeMorphism> output;

  int dim() const;
  std::size_t hash() const;
  bool is_identity() const;
};

bool operator==(const OpeMorphism& a, const OpeMorphism& b);

// A shape whose generator leaves are labelled, in leaf order, by opetopes of
// dimension base_dim.
struct LabelledShape {
  Shape shape;
  std::vector<OpetopePtr> labels;
  int base_dim = 0;
};

bool operator==(const LabelledShape& a, const LabelledShape& b);

// A graph whose mate pairs carry morphisms of Ope_{base_dim}, directed from
// the pair's minus end to its plus end (twisted variances). Over a terminal
// base (base_dim <= 1) the edge labels are omitted: every edge is an identity.
class LabelledGraph {
 public:
  LabelledGraph(Graph graph, std::vector<OpetopePtr> dom_labels, std::vector<OpetopePtr> cod_labels,
                int base_dim, std::vector<OpeMorphism> edge_labels = {});

  const Graph& graph() const { return graph_; }
  int base_dim() const { return base_dim_; }
  bool terminal_base() const { return base_dim_ <= 1; }

  const std::vector<OpetopePtr>& dom_labels() const { return dom_labels_; }
  const std::vector<OpetopePtr>& cod_labels() const { return cod_labels_; }
  LabelledShape dom() const { return {graph_.dom(), dom_labels_, base_dim_}; }
  LabelledShape cod() const { return {graph_.cod(), cod_labels_, base_dim_}; }

  // Label of twisted variable v.
  const OpetopePtr& leaf_label(std::size_t v) const;

  // Per pair ordinal (see Graph::pairs); empty over a terminal base.
  const std::vector<OpeMorphism>& edge_labels() const { return edge_labels_; }
  // The morphism on the pair containing v, from its minus end to its plus end.
  OpeMorphism edge_label_at(std::size_t v) const;

  std::size_t hash() const;

 private:
  Graph graph_;
  std::vector<OpetopePtr> dom_labels_;
  std::vector<OpetopePtr> cod_labels_;
  int base_dim_;
  std::vector<OpeMorphism> edge_labels_;
};

bool operator==(const LabelledGraph& a, const LabelledGraph& b);

// A k-opetope. Dimension 0 is the point x; dimension 1 is the arrow u with
// frame [x, x]. For k >= 2, theta is the configuration graph
//   I -> [phi(inputs[0]) (x) ... (x) phi(inputs[m-1]), phi(output)]
// labelled in Ope_{k-2}. Values are built by the ladder module, which checks
// the frame shape and the composite condition.
struct Opetope {
  int dim = 0;
  std::vector<OpetopePtr> inputs;
  OpetopePtr output;
  std::optional<LabelledGraph> theta;
  std::size_t hash = 0;

  std::size_t arity() const { return inputs.size(); }
};

bool same_opetope(const Opetope& a, const Opetope& b);
bool same_opetope(const OpetopePtr& a, const OpetopePtr& b);

struct OpetopeHash {
  std::size_t operator()(const OpetopePtr& p) const { return p->hash; }
};
struct OpetopeEq {
  bool operator()(const OpetopePtr& a, const OpetopePtr& b) const { return same_opetope(a, b); }
};

std::size_t hash_mix(std::size_t seed, std::size_t value);

}  // namespace ope
