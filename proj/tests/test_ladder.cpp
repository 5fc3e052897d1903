#include <doctest.h>

#include <set>

#include "opetope/error.hpp"
#include "opetope/examples.hpp"
#include "opetope/ladder.hpp"

using namespace ope;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("the point and the arrow") {
  CHECK(point()->dim == 0);
  CHECK(point()->inputs.empty());
  CHECK(arrow()->dim == 1);
  REQUIRE(arrow()->arity() == 1);
  CHECK(same_opetope(arrow()->inputs[0], point()));
  CHECK(same_opetope(arrow()->output, point()));
  CHECK(enumerate_opetopes(0, Frame{}).size() == 1);
  CHECK(enumerate_opetopes(1, Frame{}).size() == 1);
}

TEST_CASE("chains are 2-opetopes in a given order") {
  const OpetopePtr a = chain_opetope({1, 0, 2});
  CHECK(a->dim == 2);
  CHECK(a->arity() == 3);
  CHECK(same_opetope(a, chain_opetope({1, 0, 2})));
  CHECK_FALSE(same_opetope(a, chain_opetope({0, 1, 2})));
  CHECK_THROWS_AS(chain_opetope({0, 0}), Error);
  CHECK(chain_opetope({})->arity() == 0);
}

TEST_CASE("the frame functor sends an m-ary opetope to X_m") {
  const OpetopePtr a = chain_opetope({0, 1, 2});
  const LabelledShape f = frame_functor(a);
  CHECK(f.shape == Shape::frame(3));
  CHECK(f.labels.size() == 4);
  CHECK(f.base_dim == 1);
  CHECK_THROWS_AS(frame_functor(point()), Error);
  const LabelledShape e = expected_theta_codomain(a->inputs, a->output);
  CHECK(print_shape(e.shape) == "[(([1,1]*[1,1])*[1,1]),[1,1]]");
}

TEST_CASE("2-opetopes of each arity are the m! chain orders") {
  for (std::size_t m = 0; m <= 5; ++m) {
    const auto list = enumerate_opetopes(2, Frame{std::vector<OpetopePtr>(m, arrow()), arrow()});
    CHECK(list.size() == factorial(m));
    std::set<std::size_t> hashes;
    for (const auto& o : list) hashes.insert(o->hash);
    CHECK(hashes.size() == list.size());
  }
}

TEST_CASE("the worked 3-opetope satisfies condition B") {
  const OpetopePtr t = examples::k3_example();
  CHECK(t->dim == 3);
  CHECK(t->arity() == 2);
  CHECK(t->output->arity() == 4);
  CHECK(t->inputs[0]->arity() == 3);
  CHECK(t->inputs[1]->arity() == 2);
}

TEST_CASE("make_opetope reports the first broken condition") {
  const auto ex = examples::k3_example_data();
  const std::vector<OpetopePtr> inputs{ex.alpha1, ex.alpha2};
  const OpetopePtr out = examples::k3_composite_output();
  const LabelledGraph theta = examples::tree_theta(inputs, out, ex.pairs);

  // Curried and uncurried theta give the same opetope.
  CHECK(same_opetope(make_opetope(inputs, out, theta), make_opetope(inputs, out, curry_labelled(theta))));

  // Wrong input dimension.
  CHECK(code_of([&] { make_opetope({arrow(), ex.alpha2}, out, theta); }) == ErrorCode::TypeMismatch);
  // Right frame, another output order: the inputs compose to something else.
  OpetopePtr other = chain_opetope({3, 2, 1, 0});
  CHECK(code_of([&] { make_opetope(inputs, other, examples::tree_theta(inputs, other, ex.pairs)); }) ==
        ErrorCode::CompositeMismatch);
  // Theta labelled over the wrong base.
  const LabelledGraph wrong_base(Graph::identity(Shape::gen()), {point()}, {point()}, 0);
  CHECK(code_of([&] { make_opetope(inputs, out, wrong_base); }) == ErrorCode::TypeMismatch);
  // Right base, wrong type.
  const LabelledGraph wrong_type(Graph::identity(Shape::gen()), {arrow()}, {arrow()}, 1);
  CHECK(code_of([&] { make_opetope(inputs, out, wrong_type); }) == ErrorCode::TypeMismatch);

  // A loop between the two nodes instead of a tree.
  const TreeLayout L(TreeFrameShape{{3, 2}, 4});
  const std::vector<VarPair> loop{
      {L.node_output(1), L.node_input(0, 0)}, {L.node_output(0), L.node_input(1, 0)},
      {L.boundary_input(0), L.node_input(1, 1)}, {L.boundary_input(1), L.node_input(0, 1)},
      {L.boundary_input(2), L.node_input(0, 2)}, {L.boundary_input(3), L.boundary_output()},
  };
  CHECK(code_of([&] { make_opetope(inputs, out, examples::tree_theta(inputs, out, loop)); }) ==
        ErrorCode::NotTreeShaped);
}

TEST_CASE("input_composite of the worked example is a 4-ary tree") {
  const auto ex = examples::k3_example_data();
  const std::vector<OpetopePtr> inputs{ex.alpha1, ex.alpha2};
  const LabelledGraph composite =
      input_composite(inputs, examples::tree_theta(inputs, chain_opetope({0, 1, 2, 3}), ex.pairs));
  CHECK(composite.graph().dom().is_unit());
  CHECK(composite.graph().cod() == parse_shape("[((([1,1]*[1,1])*[1,1])*[1,1]),[1,1]]"));
  CHECK(is_tree_allowable(composite.graph()));
}

TEST_CASE("morphisms of 2-opetopes are isomorphisms between equal arities") {
  for (std::size_t m = 0; m <= 3; ++m) {
    const auto list = enumerate_opetopes(2, Frame{std::vector<OpetopePtr>(m, arrow()), arrow()});
    for (const auto& a : list)
      for (const auto& b : list) {
        const auto hs = hom(a, b);
        CHECK_FALSE(hs.empty());
        for (const auto& f : hs) {
          CHECK(commutes(f));
          CHECK(find_inverse(f).has_value());
        }
      }
  }
  CHECK(hom(chain_opetope({0, 1}), chain_opetope({0, 1, 2})).empty());
  const auto self = hom(chain_opetope({0, 1, 2}), chain_opetope({0, 1, 2}));
  REQUIRE_FALSE(self.empty());
  CHECK(self.front().is_identity());
}

TEST_CASE("the 4-opetope carries a permutation label") {
  const auto ex = examples::k4_example();
  CHECK(ex.theta->dim == 4);
  CHECK(ex.theta->output->arity() == 3);
  CHECK_FALSE(ex.sigma.is_identity());
  CHECK(ex.theta->inputs[0]->output->arity() == 4);
  CHECK(ex.theta->inputs[1]->output->arity() == 3);
  // The label survives currying into the stored theta.
  bool nontrivial = false;
  for (const auto& f : ex.theta->theta->edge_labels()) nontrivial = nontrivial || !f.is_identity();
  CHECK(nontrivial);
  // The same frame admits exactly this opetope.
  const auto list = enumerate_opetopes(4, Frame{ex.theta->inputs, ex.theta->output});
  REQUIRE(list.size() == 1);
  CHECK(same_opetope(list.front(), ex.theta));
}

TEST_CASE("for_each_opetope visits each opetope once within the bound") {
  std::size_t n2 = 0;
  for_each_opetope(2, Bounds{4, 4}, [&](const OpetopePtr& o) {
    CHECK(o->arity() + 1 <= 4);
    ++n2;
  });
  CHECK(n2 == 1 + 1 + 2 + 6);

  std::set<std::size_t> seen;
  std::size_t n3 = 0;
  for_each_opetope(3, Bounds{4, 4}, [&](const OpetopePtr& o) {
    std::size_t size = 1;
    for (const auto& in : o->inputs) size += in->arity();
    CHECK(size <= 4);
    seen.insert(o->hash);
    ++n3;
  });
  CHECK(n3 == seen.size());
  CHECK(n3 > 0);

  // Every opetope found by inputs also appears framed by its output.
  std::size_t checked = 0;
  for_each_with_inputs(3, {chain_opetope({1, 0}), chain_opetope({0, 1})}, Bounds{}, [&](const OpetopePtr& o) {
    const auto framed = enumerate_opetopes(3, Frame{o->inputs, o->output});
    bool found = false;
    for (const auto& p : framed) found = found || same_opetope(p, o);
    CHECK(found);
    ++checked;
  });
  CHECK(checked > 0);
}

TEST_CASE("bounds are enforced") {
  CHECK(code_of([] { enumerate_opetopes(5, Frame{}); }) == ErrorCode::BoundExceeded);
  CHECK(code_of([] {
          enumerate_opetopes(2, Frame{std::vector<OpetopePtr>(9, arrow()), arrow()}, Bounds{4, 8});
        }) == ErrorCode::BoundExceeded);
  CHECK(code_of([] { for_each_opetope(4, Bounds{}, [](const OpetopePtr&) {}); }) == ErrorCode::InvalidArgument);
}
