#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opetope/cells.hpp"

namespace ope {

// s_index (1-based) or t.
struct FaceLetter {
  bool target = false;
  std::size_t index = 0;

  bool operator==(const FaceLetter&) const = default;
};

// A word of face maps read left to right: letters[0] is applied to the top
// cell, letters[1] to the resulting face, and so on. `cells[r]` is the cell
// letters[r] is applied to; `face` is where the word lands.
struct FaceWord {
  std::vector<FaceLetter> letters;
  std::vector<OpetopePtr> cells;
  OpetopePtr face;

  std::size_t source_dim() const { return face ? static_cast<std::size_t>(face->dim) : 0; }
};

// Letter order: s_1 < s_2 < ... < t, words compared letter by letter.
bool operator<(const FaceWord& a, const FaceWord& b);
bool operator==(const FaceWord& a, const FaceWord& b);

// Letters applied to a 1-cell print as a bare "s".
std::string to_string(const FaceWord& w);

// s_1 .. s_m, t as one-letter words.
std::vector<FaceWord> faces(const OpetopePtr& theta);

using Relation = std::pair<FaceWord, FaceWord>;  // first < second

// One equality per mate pair of theta's configuration graph, sorted.
std::vector<Relation> relations_one_step(const OpetopePtr& theta);

using FaceClass = std::vector<FaceWord>;  // sorted, nonempty

// Classes of three-letter words: theta's mate relations carried one step down
// along the edge labels, together with each face's own one-step relations
// under its letter. Classes sorted by their least word.
std::vector<FaceClass> relations_deep(const OpetopePtr& theta);

// Classes of two-letter words generated by theta's one-step relations.
std::vector<FaceClass> two_step_classes(const OpetopePtr& theta);

struct TfReport {
  bool holds = true;
  std::string witness;  // first failure, empty when holds
};

// Every class of relations_deep(theta) contains a word t f, and f -> t f
// induces a bijection from the output's two-step classes onto theta's.
TfReport check_tf(const OpetopePtr& theta);

std::string faces_report_text(const OpetopePtr& theta, int depth);
std::string faces_report_json(const OpetopePtr& theta, int depth);

}  // namespace ope
