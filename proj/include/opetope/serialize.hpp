#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "opetope/ladder.hpp"

namespace ope {

using Json = nlohmann::ordered_json;

// Graph: {"dom": shape, "cod": shape, "pairs": [["d0", "c1"], ...]}, pairs
// as in Graph::pairs(), endpoints written d<i> (i-th domain leaf) or c<j>
// (j-th codomain leaf). Plain integers are read as twisted indices.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Morphism: {} below dimension 2, else {"sigma": [...], "inputs": [...],
// "output": {...}}. Source and target are not written; the reader is given
// them.
Json morphism_to_json(const OpeMorphism& f);
OpeMorphism morphism_from_json(const Json& j, const OpetopePtr& source, const OpetopePtr& target);

// Graph JSON plus "labels": [{"pair": i, "morphism": {...}}] when the base
// is not terminal. Standalone graphs also carry "base_dim" and the leaf
// labels; inside an opetope the leaf labels are implied by the frame.
Json labelled_graph_to_json(const LabelledGraph& g, bool with_leaves = true);
LabelledGraph labelled_graph_from_json(const Json& j);

// {"dim", "inputs", "output", "theta"}, recursively. Reading rebuilds every
// level through make_opetope, so a returned value is valid; failures carry
// the JSON location. Missing edge labels default to identities.
Json opetope_to_json(const OpetopePtr& o);
OpetopePtr opetope_from_json(const Json& j);

// {"inputs": [...], "output": {...}}
Json frame_to_json(const Frame& f);
Frame frame_from_json(const Json& j);

// Text entry points. Malformed JSON and missing fields raise Syntax.
Json parse_json(std::string_view text);
OpetopePtr parse_opetope(std::string_view text);
Frame parse_frame(std::string_view text);

// One opetope per line inside a JSON array.
std::string opetope_list_text(const std::vector<OpetopePtr>& list);

// Frames of dimension k by arity signature. k = 3: "(3,2)->4" has the
// identity-order chain 2-opetopes of those arities as inputs and output.
// k = 2: "(1,1,1)->1", "(x,x,x)->x" or just "3" for three arrows.
Frame parse_frame_spec(std::string_view spec, int k);

// The theta of a k >= 2 opetope in uncurried form, domain leaves on top and
// codomain leaves below, edges annotated by their labels. Points and arrows
// give a single node or edge.
std::string opetope_to_dot(const OpetopePtr& o);
std::string morphism_text(const OpeMorphism& f);

}  // namespace ope
