#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opetope/shape.hpp"

namespace ope {

using VarIndex = std::uint32_t;
using VarPair = std::pair<VarIndex, VarIndex>;

// A Kelly-Mac Lane graph dom -> cod: a fixed-point-free involution ("mates")
// on the twisted variable set, pairing opposite twisted variances. Variables
// are indexed in twisted order: dom leaves first, then cod leaves.
class Graph {
 public:
  // Throws VarianceClash or Incomplete if mate is not a valid pairing.
  Graph(Shape dom, Shape cod, std::vector<VarIndex> mate);

  static Graph identity(const Shape& shape);
  // The graph Unit -> Unit with no variables.
  static Graph empty();

  const Shape& dom() const { return dom_; }
  const Shape& cod() const { return cod_; }

  std::size_t size() const { return mate_.size(); }
  std::size_t dom_size() const { return dom_.leaf_count(); }

  VarIndex mate(std::size_t v) const { return mate_[v]; }
  std::span<const VarIndex> mates() const { return mate_; }

  Variance variance(std::size_t v) const;
  Side side(std::size_t v) const { return v < dom_size() ? Side::Dom : Side::Cod; }

  // Each pair once as (smaller, larger), ordered by the smaller index.
  std::vector<VarPair> pairs() const;
  // Ordinal of v's pair within pairs().
  std::size_t pair_ordinal(std::size_t v) const;

  bool operator==(const Graph& other) const {
    return mate_ == other.mate_ && dom_ == other.dom_ && cod_ == other.cod_;
  }

 private:
  Shape dom_;
  Shape cod_;
  std::vector<VarIndex> mate_;
};

struct VarRef {
  Side side;
  VarPath path;
};

Graph make_graph(const Shape& dom, const Shape& cod, std::span<const VarPair> pairs);
Graph make_graph(const Shape& dom, const Shape& cod,
                 const std::vector<std::pair<VarRef, VarRef>>& pairs);

// dom = X_{m_1} (x) ... (x) X_{m_k}, cod = X_n.
struct TreeFrameShape {
  std::vector<std::size_t> node_arities;
  std::size_t out_arity = 1;

  Shape dom() const;
  Shape cod() const;
  // Input slots plus the root: sum of node arities + 1. This is the size
  // measure bounded by max-leaves throughout the kernel.
  std::size_t size() const;

  bool operator==(const TreeFrameShape&) const = default;
};

// Recognizes the tree family in g's uncurried form.
std::optional<TreeFrameShape> tree_frame_shape(const Graph& g);

// Index helpers for a graph in tree form (uncurried, twisted order).
struct TreeLayout {
  explicit TreeLayout(const TreeFrameShape& shape);

  std::size_t node_count() const { return node_offset.size(); }
  VarIndex node_input(std::size_t node, std::size_t slot) const;
  VarIndex node_output(std::size_t node) const;
  VarIndex boundary_input(std::size_t j) const;
  VarIndex boundary_output() const;

  struct Role {
    enum Kind { NodeInput, NodeOutput, BoundaryInput, BoundaryOutput } kind;
    std::size_t node = 0;  // NodeInput / NodeOutput
    std::size_t slot = 0;  // NodeInput slot or BoundaryInput index
  };
  Role role(VarIndex v) const;

  std::vector<std::size_t> node_offset;
  std::vector<std::size_t> node_arity;
  std::size_t dom_size = 0;
  std::size_t out_arity = 0;
};

// True iff the pairing wires the nodes into a single rooted tree whose leaves
// are the codomain inputs. Throws WrongShapeFamily outside the tree family.
bool is_tree_allowable(const Graph& g);

inline constexpr std::size_t kDefaultMaxLeaves = 8;

// All tree-allowable graphs of the given shape, ordered lexicographically by
// pairs(). Throws BoundExceeded if shape.size() > max_leaves.
std::vector<Graph> enumerate_allowable(const TreeFrameShape& shape,
                                       std::size_t max_leaves = kDefaultMaxLeaves);

// One hop of a composite's traced path: the edge of the first (g) or second (h)
// factor whose minus endpoint is `from`.
struct Hop {
  bool in_first;
  VarIndex from;
};

struct TracedComposite {
  Graph graph;
  // For each variable that is the minus end of its pair in `graph`, the hops
  // from it to its mate; empty for plus ends.
  std::vector<std::vector<Hop>> paths;
};

// g: T -> S then h: S -> U. Throws ShapeMismatch or ClosedLoop.
TracedComposite compose_traced(const Graph& g, const Graph& h);
Graph compose(const Graph& g, const Graph& h);

Graph tensor(const Graph& g, const Graph& h);
Graph tensor_all(std::span<const Graph> graphs);
Graph tensor_all(std::span<const Graph* const> graphs);

// Unit -> [A, B]  to  A -> B, and back. Throws ShapeMismatch.
Graph uncurry(const Graph& g);
Graph curry(const Graph& g);

// Replaces the domain by Unit; the domain must have no variables.
Graph with_unit_domain(const Graph& g);

std::string to_dot(const Graph& g, const std::string& name = "graph");

}  // namespace ope
