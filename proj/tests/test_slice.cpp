#include <doctest.h>

#include <json.hpp>

#include "opetope/error.hpp"
#include "opetope/examples.hpp"
#include "opetope/slice.hpp"

using namespace ope;
using namespace ope::oracle;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

const SliceLevel& level(int l) {
  static const SliceLevel q0 = terminal_multicat();
  static const SliceLevel q1 = slice(q0);
  static const SliceLevel q2 = slice(q1);
  static const SliceLevel q3 = slice(q2);
  static const SliceLevel* all[] = {&q0, &q1, &q2, &q3};
  return *all[l];
}

std::vector<CellPtr> identities(std::size_t m) { return std::vector<CellPtr>(m, identity_arrow()); }

}  // namespace

TEST_CASE("the bottom of the slice tower") {
  CHECK(star()->level == 0);
  CHECK(identity_arrow()->level == 1);
  CHECK(identity_arrow()->arity() == 1);
  CHECK(level(0).arrows({star()}, star()).size() == 1);
  CHECK(level(0).arrows({star(), star()}, star()).empty());
  CHECK(level(3).level() == 3);
}

TEST_CASE("configurations of m unary identities number m!") {
  for (std::size_t m = 0; m <= 5; ++m) {
    const auto cells = level(1).arrows(identities(m), identity_arrow());
    CHECK(cells.size() == factorial(m));
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) CHECK_FALSE(same_cell(cells[i], cells[j]));
  }
}

TEST_CASE("level-2 reindexings") {
  const auto cells = level(1).arrows(identities(3), identity_arrow());
  for (const auto& a : cells) {
    const auto self = oracle_hom(a, a);
    REQUIRE_FALSE(self.empty());
    for (const auto& b : cells) CHECK(oracle_hom(a, b).size() == self.size());
  }
  const auto two = level(1).arrows(identities(2), identity_arrow());
  CHECK(oracle_hom(cells.front(), two.front()).empty());
}

TEST_CASE("level-3 cells evaluate to their targets") {
  const auto t = to_oracle(examples::k3_example());
  REQUIRE(t->level == 3);
  const WorkTree w = evaluate(t);
  CHECK(w.nodes.size() == 4);
  const auto found = level(2).arrows(t->nodes, t->target);
  bool present = false;
  for (const auto& c : found) present = present || same_cell(c, t);
  CHECK(present);
  CHECK(level(2).arrows_from(t->nodes).size() >= found.size());
}

TEST_CASE("node replacement needs matching arities") {
  const auto cells = level(1).arrows(identities(2), identity_arrow());
  const WorkTree outer = tree_of(cells.front());
  const WorkTree unary = tree_of(level(1).arrows(identities(1), identity_arrow()).front());
  CHECK_NOTHROW(node_replace_compose(outer, {unary, unary}));
  CHECK_THROWS_AS(node_replace_compose(outer, {unary}), Error);
}

TEST_CASE("translation both ways is the identity on the examples") {
  for (const auto& o : {examples::k3_example(), examples::faces_example(), examples::k4_example().theta,
                        chain_opetope({2, 0, 1}), chain_opetope({}), arrow(), point()}) {
    CHECK(same_opetope(to_ladder(to_oracle(o)), o));
  }
  for (const auto& c : level(1).arrows(identities(3), identity_arrow())) CHECK(same_cell(to_oracle(to_ladder(c)), c));
}

TEST_CASE("small correspondence checks") {
  for (int k = 0; k <= 3; ++k) {
    const auto r = check_correspondence(k, 4);
    CAPTURE(k);
    CHECK(r.match);
    CHECK(r.witness.empty());
    for (const auto& f : r.frames) CHECK(f.oracle_count == f.ladder_count);
  }
  const auto r2 = check_correspondence(2, 5);
  REQUIRE(r2.frames.size() == 5);
  CHECK(r2.frames[3].frame == "(1,1,1)->1");
  CHECK(r2.frames[3].oracle_count == 6);

  const auto j = nlohmann::json::parse(r2.to_json());
  CHECK(j["status"] == "match");
  CHECK(j["frames"][3]["ladder_count"] == 6);
  CHECK(j["frames"][3]["match"] == true);
}

TEST_CASE("the 4-dimensional frame") {
  const auto ex = examples::k4_example();
  const auto r = check_correspondence(Frame{ex.theta->inputs, ex.theta->output}, 8);
  CHECK(r.match);
  REQUIRE(r.frames.size() == 1);
  CHECK(r.frames[0].oracle_count == 1);
}
