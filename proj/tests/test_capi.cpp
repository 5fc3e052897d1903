#include <doctest.h>

#include <cstdlib>
#include <memory>
#include <string>

#include <json.hpp>

#include "opetope/opetope_c.h"

namespace {

struct Freer {
  void operator()(char* s) const { ope_string_free(s); }
  void operator()(ope_opetope* o) const { ope_opetope_free(o); }
};
using Text = std::unique_ptr<char, Freer>;
using Handle = std::unique_ptr<ope_opetope, Freer>;

Handle example(const char* name) {
  ope_opetope* o = nullptr;
  REQUIRE(ope_opetope_example(name, &o) == OPE_OK);
  return Handle(o);
}

std::string take(char* s) {
  Text t(s);
  return t ? std::string(t.get()) : std::string();
}

}  // namespace

TEST_CASE("status names and argument checks") {
  CHECK(std::string(ope_status_name(OPE_OK)) == "ok");
  CHECK(std::string(ope_status_name(OPE_BOUND_EXCEEDED)) == "bound exceeded");
  CHECK(ope_opetope_from_json(nullptr, nullptr) == OPE_INVALID_ARGUMENT);
  CHECK(std::string(ope_last_error()) == "null argument");
  ope_opetope* o = reinterpret_cast<ope_opetope*>(&o);
  CHECK(ope_opetope_example("nope", &o) == OPE_INVALID_ARGUMENT);
  CHECK(o == nullptr);
  CHECK(std::string(ope_last_error()).find("nope") != std::string::npos);
  CHECK(ope_opetope_dim(nullptr) == -1);
  ope_string_free(nullptr);
  ope_opetope_free(nullptr);
}

TEST_CASE("examples round-trip through JSON") {
  for (const char* name : {"k3", "faces", "k4"}) {
    CAPTURE(name);
    const Handle a = example(name);
    char* text = nullptr;
    REQUIRE(ope_opetope_to_json(a.get(), &text) == OPE_OK);
    const std::string json = take(text);
    ope_opetope* b = nullptr;
    REQUIRE(ope_opetope_from_json(json.c_str(), &b) == OPE_OK);
    const Handle hb(b);
    CHECK(ope_opetope_equal(a.get(), hb.get()) == 1);
    CHECK(ope_opetope_dim(a.get()) == nlohmann::json::parse(json)["dim"].get<int>());
  }
  CHECK(ope_opetope_dim(example("k3").get()) == 3);
  CHECK(ope_opetope_arity(example("k3").get()) == 2);
  CHECK(ope_opetope_dim(example("k4").get()) == 4);
  CHECK(ope_opetope_equal(example("k3").get(), example("faces").get()) == 0);
}

TEST_CASE("validate reports") {
  char* text = nullptr;
  REQUIRE(ope_opetope_to_json(example("k3").get(), &text) == OPE_OK);
  const std::string good = take(text);
  char* report = nullptr;
  CHECK(ope_validate(good.c_str(), &report) == OPE_OK);
  CHECK(take(report) == "valid: 2-ary 3-opetope\n");

  auto j = nlohmann::ordered_json::parse(good);
  j["theta"]["pairs"][0][1] = j["theta"]["pairs"][1][1];
  CHECK(ope_validate(j.dump().c_str(), &report) == OPE_VALIDATION_FAILED);
  CHECK(take(report).rfind("invalid: ", 0) == 0);
  CHECK(std::string(ope_last_error()).size() > 0);

  CHECK(ope_validate("{\"dim\": ", &report) == OPE_PARSE_ERROR);
  CHECK(report == nullptr);
}

TEST_CASE("enumerate and count") {
  std::size_t n = 0;
  CHECK(ope_count(2, "0", nullptr, 8, &n) == OPE_OK);
  CHECK(n == 1);
  CHECK(ope_count(2, "3", nullptr, 8, &n) == OPE_OK);
  CHECK(n == 6);
  CHECK(ope_count(3, "(3,2)->4", nullptr, 8, &n) == OPE_OK);
  CHECK(n == 5);
  CHECK(ope_count(3, "(3,2)->5", nullptr, 8, &n) == OPE_OK);
  CHECK(n == 0);
  CHECK(ope_count(0, nullptr, nullptr, 8, &n) == OPE_OK);
  CHECK(n == 1);
  CHECK(ope_count(2, "(1,1", nullptr, 8, &n) == OPE_PARSE_ERROR);
  CHECK(ope_count(4, nullptr, nullptr, 8, &n) == OPE_INVALID_ARGUMENT);
  CHECK(ope_count(1, "3", nullptr, 8, &n) == OPE_INVALID_ARGUMENT);
  CHECK(ope_count(2, "9", nullptr, 4, &n) == OPE_BOUND_EXCEEDED);

  char* out = nullptr;
  REQUIRE(ope_enumerate(2, "3", nullptr, 8, &out) == OPE_OK);
  const auto list = nlohmann::json::parse(take(out));
  REQUIRE(list.size() == 6);
  for (const auto& o : list) {
    ope_opetope* h = nullptr;
    CHECK(ope_opetope_from_json(o.dump().c_str(), &h) == OPE_OK);
    ope_opetope_free(h);
  }
}

TEST_CASE("homs, faces, tf and dot") {
  const Handle k3 = example("k3");
  char* out = nullptr;
  REQUIRE(ope_homs(k3.get(), k3.get(), &out) == OPE_OK);
  const auto homs = nlohmann::json::parse(take(out));
  REQUIRE_FALSE(homs.empty());
  for (const auto& f : homs) CHECK(f["inverse"] == true);
  CHECK(ope_homs(k3.get(), example("k4").get(), &out) == OPE_INVALID_ARGUMENT);

  REQUIRE(ope_faces(example("faces").get(), 2, 1, &out) == OPE_OK);
  CHECK_FALSE(nlohmann::json::parse(take(out)).empty());
  REQUIRE(ope_faces(k3.get(), 1, 0, &out) == OPE_OK);
  CHECK_FALSE(take(out).empty());
  CHECK(ope_faces(k3.get(), 3, 0, &out) == OPE_INVALID_ARGUMENT);

  int holds = 0;
  char* witness = nullptr;
  REQUIRE(ope_check_tf(example("k4").get(), &holds, &witness) == OPE_OK);
  CHECK(holds == 1);
  take(witness);

  REQUIRE(ope_export_dot(k3.get(), &out) == OPE_OK);
  CHECK(take(out).rfind("graph ", 0) == 0);
}

TEST_CASE("crosscheck") {
  char* out = nullptr;
  REQUIRE(ope_crosscheck(2, 4, nullptr, &out) == OPE_OK);
  CHECK(nlohmann::json::parse(take(out))["status"] == "match");
  REQUIRE(ope_crosscheck(4, 8, nullptr, &out) == OPE_OK);
  CHECK(nlohmann::json::parse(take(out))["frames"].size() == 1);
  CHECK(ope_crosscheck(2, 4, "{}", &out) == OPE_INVALID_ARGUMENT);
}
