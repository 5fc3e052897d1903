#pragma once

#include <functional>
#include <vector>

#include "opetope/labelled.hpp"

namespace ope {

// The unique 0-opetope x and 1-opetope u.
OpetopePtr point();
OpetopePtr arrow();

// phi_k on objects: [inputs (x) ... , output] labelled over Ope_{k-1}.
LabelledShape frame_functor(const OpetopePtr& theta);
// phi_k on morphisms. Dom input sigma[i] is wired to cod input i with label
// inputs[i]; the outputs are wired with label output[0].
LabelledGraph frame_functor_on_morphism(const OpeMorphism& f);
// phi_k packaged for apply_KF.
LabelFunctor frame_functor_of(int k);

// The labelled codomain Hom(phi(inputs...), phi(output)) that a k-opetope's
// theta must have, k = output dim + 1.
LabelledShape expected_theta_codomain(const std::vector<OpetopePtr>& inputs, const OpetopePtr& output);

// Composes the inputs along theta_bar (uncurried, over Ope_{k-2}) and returns
// the result as a curried graph I -> [...] over Ope_{k-3}. Throws ClosedLoop.
LabelledGraph input_composite(const std::vector<OpetopePtr>& inputs, const LabelledGraph& theta_bar);

// Builds and validates a k-opetope, k >= 2. theta may be given curried
// (I -> [A, B]) or uncurried (A -> B). Throws TypeMismatch for ill-typed
// data, NotTreeShaped when theta is not a tree, CompositeMismatch when the
// composite of the inputs along theta is not the output.
OpetopePtr make_opetope(std::vector<OpetopePtr> inputs, OpetopePtr output, const LabelledGraph& theta);

// A 2-opetope of arity order.size() whose nodes are chained in the given
// order: the boundary input feeds node order[0], ..., node order.back() feeds
// the boundary output.
OpetopePtr chain_opetope(const std::vector<std::size_t>& order);

// True iff the frame graph of f followed by phi composes a's theta into b's.
bool commutes(const OpeMorphism& f);

// All morphisms a -> b satisfying the commuting triangle. Memoized.
std::vector<OpeMorphism> hom(const OpetopePtr& a, const OpetopePtr& b);
// An inverse of f among hom(target, source), if one exists.
std::optional<OpeMorphism> find_inverse(const OpeMorphism& f);

struct Frame {
  std::vector<OpetopePtr> inputs;
  OpetopePtr output;
};

struct Bounds {
  int max_dim = 4;
  std::size_t max_leaves = kDefaultMaxLeaves;
};

// All k-opetopes with the given frame (inputs and output of dim k-1), in a
// deterministic order: tree pairings in enumerate_allowable order, then edge
// labels in hom order. k = 0, 1 ignore the frame.
std::vector<OpetopePtr> enumerate_opetopes(int k, const Frame& frame, const Bounds& bounds = {});

// All k-opetopes with the given inputs, k <= 3; the output is whatever the
// inputs compose to. Deterministic order.
void for_each_with_inputs(int k, const std::vector<OpetopePtr>& inputs, const Bounds& bounds,
                          const std::function<void(const OpetopePtr&)>& visit);

// Every k-opetope, k <= 3, whose tree size (sum of input arities + 1) is at
// most bounds.max_leaves. Input lists are visited in a fixed order.
void for_each_opetope(int k, const Bounds& bounds, const std::function<void(const OpetopePtr&)>& visit);

}  // namespace ope
