#include "opetope/examples.hpp"

#include "opetope/error.hpp"

namespace ope::examples {

LabelledGraph tree_theta(const std::vector<OpetopePtr>& inputs, const OpetopePtr& output,
                         const std::vector<VarPair>& pairs, std::vector<OpeMorphism> edges) {
  TreeFrameShape ts;
  for (const auto& in : inputs) ts.node_arities.push_back(in->arity());
  ts.out_arity = output->arity();
  std::vector<OpetopePtr> dom, cod;
  for (const auto& in : inputs) {
    dom.insert(dom.end(), in->inputs.begin(), in->inputs.end());
    dom.push_back(in->output);
  }
  cod = output->inputs;
  cod.push_back(output->output);
  Graph g = make_graph(ts.dom(), ts.cod(), pairs);
  return LabelledGraph(g, dom, cod, output->dim - 1, std::move(edges));
}

K3Example k3_example_data() {
  K3Example ex;
  ex.alpha1 = chain_opetope({0, 1, 2});
  ex.alpha2 = chain_opetope({0, 1});
  TreeLayout L(TreeFrameShape{{3, 2}, 4});
  ex.pairs = {
      {L.node_output(1), L.node_input(0, 0)},
      {L.boundary_input(0), L.node_input(1, 0)},
      {L.boundary_input(1), L.node_input(1, 1)},
      {L.boundary_input(2), L.node_input(0, 1)},
      {L.boundary_input(3), L.node_input(0, 2)},
      {L.node_output(0), L.boundary_output()},
  };
  return ex;
}

OpetopePtr k3_composite_output() {
  auto ex = k3_example_data();
  std::vector<OpetopePtr> inputs{ex.alpha1, ex.alpha2};
  OpetopePtr four = chain_opetope({0, 1, 2, 3});
  LabelledGraph theta_bar = tree_theta(inputs, four, ex.pairs);
  LabelledGraph composite = input_composite(inputs, theta_bar);
  return make_opetope(std::vector<OpetopePtr>(4, arrow()), arrow(), composite);
}

OpetopePtr k3_example() {
  auto ex = k3_example_data();
  std::vector<OpetopePtr> inputs{ex.alpha1, ex.alpha2};
  OpetopePtr out = k3_composite_output();
  return make_opetope(inputs, out, tree_theta(inputs, out, ex.pairs));
}

OpetopePtr faces_example() {
  OpetopePtr a1 = chain_opetope({0, 1, 2});
  OpetopePtr a2 = chain_opetope({1, 0});
  OpetopePtr a = chain_opetope({3, 0, 1, 2});
  TreeLayout L(TreeFrameShape{{3, 2}, 4});
  std::vector<VarPair> pairs{
      {L.node_output(1), L.node_input(0, 0)},     // alpha_2 out -> alpha_1 in 1
      {L.boundary_input(1), L.node_input(0, 1)},  // alpha in 2 -> alpha_1 in 2
      {L.boundary_input(2), L.node_input(0, 2)},  // alpha in 3 -> alpha_1 in 3
      {L.boundary_input(0), L.node_input(1, 0)},  // alpha in 1 -> alpha_2 in 1
      {L.boundary_input(3), L.node_input(1, 1)},  // alpha in 4 -> alpha_2 in 2
      {L.node_output(0), L.boundary_output()},
  };
  std::vector<OpetopePtr> inputs{a1, a2};
  return make_opetope(inputs, a, tree_theta(inputs, a, pairs));
}

OpetopePtr k4_second_input() {
  OpetopePtr b1 = chain_opetope({0, 1});
  OpetopePtr b2 = chain_opetope({1, 0});
  std::vector<OpetopePtr> inputs{b1, b2};
  TreeLayout L(TreeFrameShape{{2, 2}, 3});
  std::vector<VarPair> pairs{
      {L.node_output(1), L.node_input(0, 1)},
      {L.boundary_input(0), L.node_input(0, 0)},
      {L.boundary_input(1), L.node_input(1, 0)},
      {L.boundary_input(2), L.node_input(1, 1)},
      {L.node_output(0), L.boundary_output()},
  };
  OpetopePtr probe = chain_opetope({0, 1, 2});
  LabelledGraph theta_bar = tree_theta(inputs, probe, pairs);
  OpetopePtr out = make_opetope(std::vector<OpetopePtr>(3, arrow()), arrow(), input_composite(inputs, theta_bar));
  return make_opetope(inputs, out, tree_theta(inputs, out, pairs));
}

K4Example k4_example() {
  K4Example ex;
  ex.theta1 = k3_example();
  ex.theta2 = k4_second_input();
  const auto homs = hom(ex.theta2->output, ex.theta1->inputs[0]);
  if (homs.empty()) throw Error(ErrorCode::InvalidArgument, "no morphism between the glued faces");
  ex.sigma = homs.front();

  const auto& t1 = ex.theta1;
  const auto& t2 = ex.theta2;
  TreeLayout L(TreeFrameShape{{2, 2}, 3});
  // node 0 = theta1 (inputs alpha_1, alpha_2), node 1 = theta2 (beta_1, beta_2).
  std::vector<VarPair> pairs{
      {L.node_input(0, 0), L.node_output(1)},
      {L.node_input(0, 1), L.boundary_input(2)},
      {L.node_output(0), L.boundary_output()},
      {L.node_input(1, 0), L.boundary_input(0)},
      {L.node_input(1, 1), L.boundary_input(1)},
  };
  std::vector<OpetopePtr> inputs{t1, t2};
  std::vector<OpetopePtr> dom{t1->inputs[0], t1->inputs[1], t1->output, t2->inputs[0], t2->inputs[1], t2->output};
  std::vector<OpetopePtr> out_inputs{t2->inputs[0], t2->inputs[1], t1->inputs[1]};
  std::vector<OpetopePtr> cod{out_inputs[0], out_inputs[1], out_inputs[2], t1->output};
  Graph g = make_graph(TreeFrameShape{{2, 2}, 3}.dom(), TreeFrameShape{{2, 2}, 3}.cod(), pairs);
  // Edge labels in pairs() order, from each pair's minus end to its plus end.
  std::vector<OpeMorphism> edges;
  for (auto [a, b] : g.pairs()) {
    if (g.variance(a) == Variance::Plus) std::swap(a, b);
    auto label = [&](std::size_t v) { return v < g.dom_size() ? dom[v] : cod[v - g.dom_size()]; };
    if (a == L.node_output(1))
      edges.push_back(ex.sigma);
    else
      edges.push_back(identity_morphism(label(a)));
  }
  LabelledGraph theta_bar(g, dom, cod, 2, edges);
  LabelledGraph composite = input_composite(inputs, theta_bar);
  ex.output = make_opetope(out_inputs, t1->output, composite);
  ex.theta = make_opetope(inputs, ex.output, theta_bar);
  return ex;
}

}  // namespace ope::examples
