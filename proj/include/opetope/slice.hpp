#pragma once

#include <memory>
#include <string>
#include <vector>

#include "opetope/ladder.hpp"

// Brute-force slices of the terminal symmetric multicategory. Cells of level
// k are arrows of the (k-1)-fold slice: level 0 is the object *, level 1 its
// identity, and a level-k cell (k >= 2) is a labelled tree whose nodes are
// level-(k-1) cells composing, by node replacement, to its target. Nothing
// here shares code with the graph layer.
namespace ope::oracle {

struct Cell;
using CellPtr = std::shared_ptr<const Cell>;

// A reindexing a -> b of level-2 cells: b's node i is a's node sigma[i].
// Morphisms of level 0 and 1 carry no data.
struct Morph {
  CellPtr source, target;
  std::vector<std::uint32_t> sigma;
};

struct Feed {
  enum Kind { Leaf, Node } kind = Leaf;
  std::size_t index = 0;  // leaf number (a source of the target) or node
  Morph edge;             // from what arrives to the slot it enters
};

struct Cell {
  int level = 0;
  CellPtr target;                        // null at level 0
  std::vector<CellPtr> nodes;            // the sources, in node order
  std::vector<std::vector<Feed>> feeds;  // per node, per slot; level >= 2
  Feed root;                             // level >= 2
  std::size_t hash = 0;

  std::size_t arity() const { return nodes.size(); }
};

bool same_cell(const CellPtr& a, const CellPtr& b);

CellPtr star();
CellPtr identity_arrow();

// A symmetric multicategory of the slice tower: objects are level-`level`
// cells, arrows are level-(level+1) cells.
class SliceLevel {
 public:
  int level() const { return level_; }

  // Arrows with the given sources composing to target.
  std::vector<CellPtr> arrows(const std::vector<CellPtr>& sources, const CellPtr& target,
                              std::size_t max_leaves = kDefaultMaxLeaves) const;
  // Arrows with the given sources, targets derived (level <= 2).
  std::vector<CellPtr> arrows_from(const std::vector<CellPtr>& sources,
                                   std::size_t max_leaves = kDefaultMaxLeaves) const;

 private:
  friend SliceLevel terminal_multicat();
  friend SliceLevel slice(const SliceLevel& q);
  explicit SliceLevel(int level) : level_(level) {}
  int level_;
};

SliceLevel terminal_multicat();
SliceLevel slice(const SliceLevel& q);

// All level-2 reindexings a -> b.
std::vector<Morph> oracle_hom(const CellPtr& a, const CellPtr& b);

// A tree under evaluation: nodes may carry the number of the leaf they came
// from.
struct WorkTree {
  CellPtr target;
  std::vector<CellPtr> nodes;
  std::vector<long> tags;
  std::vector<std::vector<Feed>> feeds;
  Feed root;
};

WorkTree tree_of(const CellPtr& cell);
// Replaces node p of outer by inners[p], whose target must be outer.nodes[p].
// New node order: inners' nodes concatenated in outer node order. Throws
// ArityMismatch.
WorkTree node_replace_compose(const WorkTree& outer, const std::vector<WorkTree>& inners);

// The composite of a level-k cell's nodes along its tree, reordered by leaf
// number; k >= 3. Throws ArityMismatch if the leaves are not a permutation.
WorkTree evaluate(const CellPtr& cell);

// Translations along the tree/pairing correspondence.
OpetopePtr to_ladder(const CellPtr& cell);
CellPtr to_oracle(const OpetopePtr& opetope);

struct FrameReport {
  std::string frame;
  std::size_t oracle_count = 0;
  std::size_t ladder_count = 0;
  bool match = true;
};

struct CorrespondenceReport {
  int dim = 0;
  std::size_t max_leaves = 0;
  std::vector<FrameReport> frames;
  bool match = true;
  std::string witness;  // first mismatch

  std::string to_json() const;
};

// Both sides over all frames of dimension k <= 3 with tree size <= max_leaves,
// grouped by arity signature "(m_1,...,m_n)->n".
CorrespondenceReport check_correspondence(int k, std::size_t max_leaves);
// Both sides over a single frame.
CorrespondenceReport check_correspondence(const Frame& frame, std::size_t max_leaves);

}  // namespace ope::oracle
