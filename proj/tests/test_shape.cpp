#include <doctest.h>

#include "opetope/error.hpp"
#include "opetope/shape.hpp"

using namespace ope;

TEST_CASE("shapes print and parse back") {
  for (const char* text : {"1", "I", "(1*1)", "[1,1]", "[((1*1)*1),1]", "[I,[1,1]]", "((1*I)*[1,(1*1)])"}) {
    const Shape s = parse_shape(text);
    CHECK(print_shape(s) == text);
    CHECK(parse_shape(print_shape(s)) == s);
  }
  CHECK(print_shape(parse_shape(" [ 1 * 1 * 1 , 1 ] ")) == "[((1*1)*1),1]");
}

TEST_CASE("malformed shapes raise syntax errors with a position") {
  for (const char* text : {"", "(1*1", "[1,1", "[1 1]", "2", "1*", "1)"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_shape(text), SyntaxError);
  }
  try {
    parse_shape("[1,x]");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 3);
    CHECK(e.code() == ErrorCode::Syntax);
  }
}

TEST_CASE("frames and leaf variances") {
  CHECK(print_shape(Shape::frame(0)) == "[I,1]");
  CHECK(print_shape(Shape::frame(1)) == "[1,1]");
  CHECK(print_shape(Shape::frame(3)) == "[((1*1)*1),1]");
  const Shape x3 = Shape::frame(3);
  CHECK(x3.leaf_count() == 4);
  const auto v = x3.leaf_variances();
  REQUIRE(v.size() == 4);
  CHECK(v[0] == Variance::Minus);
  CHECK(v[2] == Variance::Minus);
  CHECK(v[3] == Variance::Plus);
  // Two hom-domain steps restore the variance.
  const Shape nested = parse_shape("[[1,1],1]");
  const auto w = nested.leaf_variances();
  CHECK(w[0] == Variance::Plus);
  CHECK(w[1] == Variance::Minus);
  CHECK(w[2] == Variance::Plus);
}

TEST_CASE("twisted variances flip the domain") {
  const Shape a = parse_shape("(1*[1,1])");
  const Shape b = parse_shape("1");
  const auto tv = twisted_variances(a, b);
  REQUIRE(tv.size() == 4);
  CHECK(tv[0] == Variance::Minus);
  CHECK(tv[1] == Variance::Plus);
  CHECK(tv[2] == Variance::Minus);
  CHECK(tv[3] == Variance::Plus);
  const auto twisted = twisted_variables(a, b);
  CHECK(twisted[0].side == Side::Dom);
  CHECK(twisted[3].side == Side::Cod);
  CHECK(twisted[1].path == VarPath{Step::TensorRight, Step::HomDom});
}

TEST_CASE("variables are addressed by paths") {
  const Shape s = parse_shape("[(1*1),1]");
  const auto vars = variables(s);
  REQUIRE(vars.size() == 3);
  CHECK(vars[0].path == VarPath{Step::HomDom, Step::TensorLeft});
  CHECK(vars[2].path == VarPath{Step::HomCod});
  for (std::size_t i = 0; i < vars.size(); ++i) CHECK(leaf_index(s, vars[i].path) == i);
  CHECK_THROWS_AS(leaf_index(s, VarPath{Step::HomDom}), Error);
  CHECK(print_path(vars[0].path) == print_path(VarPath{Step::HomDom, Step::TensorLeft}));
}

TEST_CASE("tensor_all nests to the left") {
  CHECK(Shape::tensor_all({}).is_unit());
  const Shape one = Shape::gen();
  const Shape single[] = {one};
  CHECK(Shape::tensor_all(single) == one);
  const Shape three[] = {one, Shape::unit(), one};
  CHECK(print_shape(Shape::tensor_all(three)) == "((1*I)*1)");
  CHECK(tensor_factors(Shape::tensor_all(three)).size() == 2);
}

TEST_CASE("frame arity recognizes X_m up to association and units") {
  for (std::size_t m = 0; m < 6; ++m) CHECK(frame_arity(Shape::frame(m)) == static_cast<long>(m));
  CHECK(frame_arity(parse_shape("[(1*(1*1)),1]")) == 3);
  CHECK(frame_arity(parse_shape("[(I*1),1]")) == 1);
  CHECK(frame_arity(parse_shape("1")) == -1);
  CHECK(frame_arity(parse_shape("[1,(1*1)]")) == -1);
  CHECK(frame_arity(parse_shape("[[1,1],1]")) == -1);
}

TEST_CASE("substitution replaces leaves in order") {
  const Shape s = parse_shape("(1*[1,1])");
  const Shape reps[] = {parse_shape("I"), parse_shape("(1*1)"), parse_shape("[1,1]")};
  CHECK(print_shape(substitute(s, reps)) == "(I*[(1*1),[1,1]])");
  const Shape too_few[] = {Shape::gen()};
  CHECK_THROWS_AS(substitute(s, too_few), Error);
}

TEST_CASE("equal shapes hash alike") {
  CHECK(parse_shape("[(1*1),1]").hash() == Shape::frame(2).hash());
  CHECK(parse_shape("[(1*1),1]") == Shape::frame(2));
  CHECK_FALSE(parse_shape("(1*(1*1))") == parse_shape("((1*1)*1)"));
}
