#include <doctest.h>

#include "opetope/error.hpp"
#include "opetope/examples.hpp"
#include "opetope/serialize.hpp"

using namespace ope;

namespace {

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

TEST_CASE("graph JSON names endpoints by side") {
  const Graph g = Graph::identity(parse_shape("(1*1)"));
  const Json j = graph_to_json(g);
  CHECK(j.dump() == R"J({"dom":"(1*1)","cod":"(1*1)","pairs":[["d0","c0"],["d1","c1"]]})J");
  CHECK(graph_from_json(j) == g);
  // Twisted indices are accepted too.
  CHECK(graph_from_json(Json::parse(R"J({"dom":"(1*1)","cod":"(1*1)","pairs":[[0,2],[3,1]]})J")) == g);
  CHECK(code_of([] { graph_from_json(Json::parse(R"J({"dom":"(1*1)","cod":"(1*1)","pairs":[["d0","c0"]]})J")); }) ==
        ErrorCode::Incomplete);
  CHECK(code_of([] { graph_from_json(Json::parse(R"J({"dom":"(1*1)","cod":"(1*1)","pairs":[["d0","q1"]]})J")); }) ==
        ErrorCode::Syntax);
  CHECK(code_of([] { graph_from_json(Json::parse(R"J({"dom":"(1*","cod":"1","pairs":[]})J")); }) == ErrorCode::Syntax);
  CHECK(code_of([] { graph_from_json(Json::parse(R"J({"cod":"1","pairs":[]})J")); }) == ErrorCode::Syntax);
}

TEST_CASE("opetopes round-trip through JSON") {
  const auto k4 = examples::k4_example();
  for (const auto& o : {point(), arrow(), chain_opetope({}), chain_opetope({2, 0, 1}), examples::k3_example(),
                        examples::faces_example(), k4.theta}) {
    const Json j = opetope_to_json(o);
    CHECK(same_opetope(opetope_from_json(j), o));
    CHECK(opetope_to_json(opetope_from_json(j)).dump() == j.dump());
    CHECK(same_opetope(parse_opetope(j.dump(2)), o));
  }
  const Json j = opetope_to_json(k4.theta);
  REQUIRE(j["theta"].contains("labels"));
  CHECK(j["theta"]["labels"].size() == 5);
  CHECK_FALSE(opetope_to_json(examples::k3_example())["theta"].contains("labels"));
}

TEST_CASE("enumerated opetopes round-trip") {
  const auto list = enumerate_opetopes(3, parse_frame_spec("(2,2)->3", 3));
  REQUIRE_FALSE(list.empty());
  const Json arr = Json::parse(opetope_list_text(list));
  REQUIRE(arr.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(same_opetope(opetope_from_json(arr[i]), list[i]));
  CHECK(opetope_list_text({}) == "[]\n");
}

TEST_CASE("the reader validates and locates failures") {
  Json bad = opetope_to_json(examples::k3_example());
  bad["output"] = opetope_to_json(chain_opetope({0, 1, 2}));
  try {
    opetope_from_json(bad);
    FAIL("expected CompositeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CompositeMismatch);
  }

  Json inner = opetope_to_json(examples::k4_example().theta);
  inner["inputs"][1]["theta"]["pairs"][0][1] = "c9";
  try {
    opetope_from_json(inner);
    FAIL("expected a failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("inputs[1].theta") != std::string::npos);
  }

  Json swapped = opetope_to_json(examples::k3_example());
  swapped["output"] = opetope_to_json(chain_opetope({3, 2, 1, 0}));
  CHECK(code_of([&] { opetope_from_json(swapped); }) == ErrorCode::CompositeMismatch);

  CHECK(code_of([] { parse_opetope("{\"dim\": 2"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_opetope("{\"dim\": -1}"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_opetope("{\"dim\": 2, \"inputs\": []}"); }) == ErrorCode::Syntax);
}

TEST_CASE("missing edge labels default to identities when the ends agree") {
  const auto k4 = examples::k4_example();
  Json j = opetope_to_json(k4.theta);
  Json labels = j["theta"]["labels"];
  j["theta"].erase("labels");
  CHECK(code_of([&] { opetope_from_json(j); }) == ErrorCode::UndefinedLabel);
  // Keep only the non-identity label.
  Json kept = Json::array();
  for (const auto& l : labels)
    if (!l["morphism"]["sigma"].empty() && l["morphism"]["sigma"] != Json({0, 1, 2, 3}) &&
        l["morphism"]["sigma"] != Json({0, 1, 2}) && l["morphism"]["sigma"] != Json({0, 1}))
      kept.push_back(l);
  REQUIRE(kept.size() == 1);
  j["theta"]["labels"] = kept;
  CHECK(same_opetope(opetope_from_json(j), k4.theta));
  // A label that is not a morphism.
  j["theta"]["labels"][0]["morphism"]["sigma"] = Json({0, 0, 1, 2});
  CHECK(code_of([&] { opetope_from_json(j); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("morphisms and labelled graphs") {
  const OpetopePtr a = chain_opetope({0, 1, 2});
  const OpetopePtr b = chain_opetope({1, 2, 0});
  const auto hs = hom(a, b);
  REQUIRE(hs.size() == 1);
  const Json mj = morphism_to_json(hs.front());
  CHECK(mj["sigma"].size() == 3);
  CHECK(morphism_from_json(mj, a, b) == hs.front());
  CHECK(morphism_to_json(identity_morphism(arrow())).dump() == "{}");
  Json wrong = mj;
  wrong["sigma"] = Json({0, 1, 2});
  if (wrong != mj) CHECK(code_of([&] { morphism_from_json(wrong, a, b); }) == ErrorCode::TypeMismatch);

  const Shape one = Shape::gen();
  const LabelledGraph g(Graph(one, one, {1, 0}), {a}, {b}, 2, {hs.front()});
  const Json gj = labelled_graph_to_json(g);
  CHECK(gj["base_dim"] == 2);
  CHECK(gj["labels"][0]["pair"] == 0);
  CHECK(labelled_graph_from_json(gj) == g);
}

TEST_CASE("frames") {
  const Frame f = parse_frame_spec("(3,2)->4", 3);
  REQUIRE(f.inputs.size() == 2);
  CHECK(same_opetope(f.inputs[0], chain_opetope({0, 1, 2})));
  CHECK(same_opetope(f.output, chain_opetope({0, 1, 2, 3})));
  CHECK(parse_frame_spec(" ( 3 , 2 ) -> 4 ", 3).inputs.size() == 2);
  CHECK(parse_frame_spec("3", 2).inputs.size() == 3);
  CHECK(parse_frame_spec("(x,x)->x", 2).inputs.size() == 2);
  CHECK(parse_frame_spec("(1,1,1)->1", 2).inputs.size() == 3);
  CHECK(parse_frame_spec("()->1", 2).inputs.empty());
  CHECK(parse_frame_spec("()->1", 3).output->arity() == 1);
  for (auto [spec, k] : std::vector<std::pair<const char*, int>>{
           {"(3,2)", 3}, {"3,2->4", 3}, {"(a)->1", 3}, {"(2)->2", 2}, {"3", 3}, {"(1)->1", 4}}) {
    CAPTURE(spec);
    CHECK(code_of([&] { parse_frame_spec(spec, k); }) == ErrorCode::Syntax);
  }
  const Frame back = frame_from_json(frame_to_json(f));
  CHECK(same_opetope(back.output, f.output));
  CHECK(back.inputs.size() == 2);
  CHECK(parse_frame(frame_to_json(f).dump()).inputs.size() == 2);
}

TEST_CASE("dot export") {
  const std::string dot = opetope_to_dot(examples::k4_example().theta);
  CHECK(dot.find("graph \"2-ary 4-opetope\"") == 0);
  CHECK(dot.find("[label=\"sigma ") != std::string::npos);
  CHECK(dot.find("{ rank=same; d0") != std::string::npos);
  CHECK(dot.find("{ rank=same; c0") != std::string::npos);
  CHECK(opetope_to_dot(point()).find("x;") != std::string::npos);
  CHECK(opetope_to_dot(arrow()).find("x0 -- x1") != std::string::npos);
}
