#pragma once

// Worked examples: the 3-opetope glueing a binary input into the first input
// of a ternary one, the face-relation example, and a 4-opetope built on them.

#include <vector>

#include "opetope/ladder.hpp"

namespace ope::examples {

// Uncurried theta over output->dim - 1, built from tree wiring. Leaf labels
// are read off the inputs' and output's frames.
LabelledGraph tree_theta(const std::vector<OpetopePtr>& inputs, const OpetopePtr& output,
                         const std::vector<VarPair>& pairs, std::vector<OpeMorphism> edges = {});

struct K3Example {
  OpetopePtr alpha1, alpha2;
  std::vector<VarPair> pairs;  // over TreeFrameShape{{3, 2}, 4}
};

// alpha1 ternary, alpha2 binary, alpha2's output feeding alpha1's first input.
K3Example k3_example_data();
// The 2-opetope those inputs compose to.
OpetopePtr k3_composite_output();
OpetopePtr k3_example();

// Inputs chain(1,2,3) and chain(2,1), output chain(4,1,2,3).
OpetopePtr faces_example();

// A ternary 3-opetope with two binary inputs whose output is not the
// identity-order chain, so morphisms into it permute.
OpetopePtr k4_second_input();

struct K4Example {
  OpetopePtr theta1, theta2, output, theta;
  OpeMorphism sigma;  // theta2's output -> theta1's first input
};

// theta2's output composed into theta1's first input, the connecting edge
// labelled by the morphism between them.
K4Example k4_example();

}  // namespace ope::examples
