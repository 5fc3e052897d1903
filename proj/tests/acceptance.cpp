// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "opetope/error.hpp"
#include "opetope/examples.hpp"
#include "opetope/faces.hpp"
#include "opetope/serialize.hpp"
#include "opetope/slice.hpp"
#include "properties.hpp"

using namespace ope;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Frame arrows_frame(std::size_t m) { return Frame{std::vector<OpetopePtr>(m, arrow()), arrow()}; }

std::vector<OpetopePtr> two_opetopes(std::size_t m) { return enumerate_opetopes(2, arrows_frame(m)); }

std::string arities(const OpetopePtr& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o->inputs.size(); ++i) s += (i ? "," : "") + std::to_string(o->inputs[i]->arity());
  return s + ")->" + std::to_string(o->output->arity());
}

Outcome nullary_uniqueness() {
  const auto graphs = enumerate_allowable(TreeFrameShape{{}, 1});
  if (graphs.size() != 1) return fail(std::to_string(graphs.size()) + " allowable graphs I -> [x,x]");
  if (print_shape(graphs[0].dom()) != "I") return fail("domain is " + print_shape(graphs[0].dom()));
  const auto list = two_opetopes(0);
  if (list.size() != 1) return fail(std::to_string(list.size()) + " nullary 2-opetopes");
  return {true, "1 graph, 1 nullary 2-opetope"};
}

Outcome two_opetope_counts() {
  const auto q1 = oracle::slice(oracle::terminal_multicat());
  std::string counts;
  for (std::size_t m = 0; m <= 5; ++m) {
    const std::size_t ladder = two_opetopes(m).size();
    const std::size_t slice =
        q1.arrows(std::vector<oracle::CellPtr>(m, oracle::identity_arrow()), oracle::identity_arrow()).size();
    counts += (m ? " " : "") + std::to_string(ladder);
    if (ladder != factorial(m) || slice != ladder)
      return fail("m=" + std::to_string(m) + ": ladder " + std::to_string(ladder) + ", slice " +
                  std::to_string(slice) + ", expected " + std::to_string(factorial(m)));
  }
  return {true, "counts " + counts};
}

Outcome dim2_homs() {
  std::vector<std::vector<OpetopePtr>> by_arity;
  for (std::size_t m = 0; m <= 4; ++m) by_arity.push_back(two_opetopes(m));
  std::string first_bad;
  std::set<std::size_t> seen_same_arity;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& a : by_arity[m])
        for (const auto& b : by_arity[n]) {
          const auto hs = hom(a, b);
          for (const auto& f : hs)
            if (!find_inverse(f)) return fail("a morphism without inverse at m=" + std::to_string(m));
          const std::size_t want = m == n ? factorial(m) : 0;
          if (m == n) seen_same_arity.insert(hs.size());
          if (hs.size() != want && first_bad.empty())
            first_bad = "m=" + std::to_string(m) + ", m'=" + std::to_string(n) + ": |hom| = " +
                        std::to_string(hs.size()) + ", expected " + std::to_string(want);
        }
  if (!first_bad.empty()) {
    std::string sizes;
    for (std::size_t s : seen_same_arity) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    return fail(first_bad + " (same-arity hom sizes seen: {" + sizes + "}; all morphisms invertible)");
  }
  return {true, "m! morphisms, all invertible"};
}

Outcome condition_b_example() {
  const OpetopePtr o = examples::k3_example();
  if (o->dim != 3 || arities(o) != "(3,2)->4") return fail("example has shape " + arities(o));
  const Json j = opetope_to_json(o);
  if (!same_opetope(opetope_from_json(j), o)) return fail("example does not read back");

  Json bad = j;
  bad["output"] = opetope_to_json(chain_opetope({0, 1, 2}));
  try {
    opetope_from_json(bad);
    return fail("output arity 3 accepted");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CompositeMismatch) return fail(std::string("output arity 3 gave ") + e.what());
  }
  return {true, "(3,2)->4 validates, output arity 3 gives CompositeMismatch"};
}

Outcome k4_frame_example() {
  const auto ex = examples::k4_example();
  const OpetopePtr& t = ex.theta;
  if (t->dim != 4 || t->inputs.size() != 2) return fail("wrong dimension or arity");
  if (arities(t->inputs[0]) != "(3,2)->4" || arities(t->inputs[1]) != "(2,2)->3" ||
      arities(t->output) != "(2,2,2)->4")
    return fail("frame " + arities(t->inputs[0]) + " " + arities(t->inputs[1]) + " -> " + arities(t->output));
  if (!same_opetope(opetope_from_json(opetope_to_json(t)), t)) return fail("does not read back");
  std::size_t permuting = 0;
  for (const auto& f : t->theta->edge_labels())
    if (!f.is_identity()) ++permuting;
  if (permuting == 0 || ex.sigma.is_identity()) return fail("no permutation label carried");
  return {true, std::to_string(permuting) + " permutation edge label(s)"};
}

Outcome face_tables() {
  const OpetopePtr o = examples::faces_example();
  std::set<std::string> one_step;
  for (const auto& [a, b] : relations_one_step(o)) one_step.insert(to_string(a) + " = " + to_string(b));
  const std::set<std::string> want_one = {"s_1s_1 = s_2t", "s_1s_2 = ts_2", "s_1s_3 = ts_3",
                                          "s_1t = tt",     "s_2s_1 = ts_1", "s_2s_2 = ts_4"};
  if (one_step != want_one) return fail(std::to_string(one_step.size()) + " one-step relations, not the table");

  std::set<std::set<std::string>> deep;
  for (const auto& cls : relations_deep(o)) {
    std::set<std::string> words;
    for (const auto& w : cls) words.insert(to_string(w));
    deep.insert(words);
  }
  const std::set<std::set<std::string>> want_deep = {
      {"s_1s_1s", "s_1ts", "s_2s_2s", "s_2ts", "ts_4s", "tts"},
      {"s_1s_1t", "s_1s_2s", "s_2s_1t", "s_2tt", "ts_1t", "ts_2s"},
      {"s_1s_2t", "s_1s_3s", "ts_2t", "ts_3s"},
      {"s_1s_3t", "s_1tt", "ts_3t", "ttt"},
      {"s_2s_1s", "s_2s_2t", "ts_1s", "ts_4t"},
  };
  if (deep != want_deep) return fail(std::to_string(deep.size()) + " 0-cell classes, not the table");
  return {true, "6 relations, 5 classes"};
}

Outcome tf_characterization() {
  std::size_t n = 0;
  std::string witness;
  for_each_opetope(3, Bounds{4, 6}, [&](const OpetopePtr& o) {
    ++n;
    if (!witness.empty()) return;
    const TfReport r = check_tf(o);
    if (!r.holds) witness = arities(o) + ": " + r.witness;
  });
  if (!witness.empty()) return fail(witness);
  if (n == 0) return fail("no 3-opetopes enumerated");
  return {true, std::to_string(n) + " 3-opetopes"};
}

Outcome correspondence() {
  std::string summary;
  for (int k = 0; k <= 3; ++k) {
    const auto r = oracle::check_correspondence(k, 6);
    if (!r.match) return fail("k=" + std::to_string(k) + ": " + r.witness);
    summary += "k=" + std::to_string(k) + " " + std::to_string(r.frames.size()) + " frames; ";
  }
  const auto ex = examples::k4_example();
  const auto r4 = oracle::check_correspondence(Frame{ex.theta->inputs, ex.theta->output}, 8);
  if (!r4.match) return fail("k=4: " + r4.witness);
  return {true, summary + "k=4 frame " + std::to_string(r4.frames.front().ladder_count) + " opetope(s)"};
}

Outcome property_suites() {
  std::size_t cases = 0;
  for (const auto& p : props::all()) {
    const props::Result r = p.check(20260415u);
    cases += r.cases;
    if (!r.ok()) return fail(r.name + ": " + r.failure);
  }
  return {true, std::to_string(props::all().size()) + " suites, " + std::to_string(cases) + " instances"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"nullary uniqueness", nullary_uniqueness},
      {"2-opetope counting", two_opetope_counts},
      {"hom-sets at dim 2", dim2_homs},
      {"condition B example (k=3)", condition_b_example},
      {"k=4 frame example", k4_frame_example},
      {"face relations", face_tables},
      {"tf-characterization", tf_characterization},
      {"ladder/slice correspondence", correspondence},
      {"algebraic property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
