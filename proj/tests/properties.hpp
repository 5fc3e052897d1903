#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Generated-instance checks shared by the property tests and the acceptance
// runner. Each returns how many instances it looked at and the first failure.
namespace ope::props {

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::string failure;

  bool ok() const { return failure.empty(); }
};

using Check = std::function<Result(std::uint32_t seed)>;

Result pairing_involution(std::uint32_t seed);       // 1000 graphs
Result compose_associative(std::uint32_t seed);      // plain triples
Result labelled_associative(std::uint32_t seed);     // triples over Ope_2
Result kf_functorial(std::uint32_t seed);            // identities and composites
Result curry_round_trip(std::uint32_t seed);         // plain and labelled
Result sign_reassociation(std::uint32_t seed);       // tensor bracketing
Result shape_text_round_trip(std::uint32_t seed);
Result morphism_category_laws(std::uint32_t seed);   // Ope_2 and Ope_3
Result multicat_laws(std::uint32_t seed);            // node replacement
Result leaf_count_obstruction(std::uint32_t seed);

struct Named {
  const char* name;
  Check check;
};
const std::vector<Named>& all();

}  // namespace ope::props
