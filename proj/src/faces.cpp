#include "opetope/faces.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "opetope/error.hpp"

namespace ope {

namespace {

using Key = std::vector<std::uint32_t>;
constexpr std::uint32_t kTarget = std::numeric_limits<std::uint32_t>::max();

std::uint32_t encode(const FaceLetter& l) { return l.target ? kTarget : static_cast<std::uint32_t>(l.index); }
FaceLetter decode(std::uint32_t c) { return c == kTarget ? FaceLetter{true, 0} : FaceLetter{false, c}; }

Key key_of(const FaceWord& w) {
  Key k;
  for (const auto& l : w.letters) k.push_back(encode(l));
  return k;
}

const OpetopePtr& apply_letter(const OpetopePtr& cell, const FaceLetter& l) {
  if (l.target) return cell->output;
  if (l.index < 1 || l.index > cell->inputs.size())
    throw Error(ErrorCode::InvalidArgument, "no source s_" + std::to_string(l.index));
  return cell->inputs[l.index - 1];
}

FaceWord make_word(const OpetopePtr& top, const Key& key) {
  FaceWord w;
  OpetopePtr cell = top;
  for (auto c : key) {
    if (cell->dim < 1) throw Error(ErrorCode::InvalidArgument, "a point has no faces");
    FaceLetter l = decode(c);
    w.cells.push_back(cell);
    w.letters.push_back(l);
    cell = apply_letter(cell, l);
  }
  w.face = cell;
  return w;
}

std::vector<FaceLetter> letters_of(const OpetopePtr& cell) {
  std::vector<FaceLetter> out;
  if (cell->dim < 1) return out;
  for (std::size_t i = 1; i <= cell->arity(); ++i) out.push_back({false, i});
  out.push_back({true, 0});
  return out;
}

// The two letters addressing twisted variable v of theta's configuration graph.
Key one_step_key(const TreeLayout& layout, VarIndex v) {
  const auto r = layout.role(v);
  const auto s = [](std::size_t i) { return static_cast<std::uint32_t>(i + 1); };
  switch (r.kind) {
    case TreeLayout::Role::NodeInput: return {s(r.node), s(r.slot)};
    case TreeLayout::Role::NodeOutput: return {s(r.node), kTarget};
    case TreeLayout::Role::BoundaryInput: return {kTarget, s(r.slot)};
    case TreeLayout::Role::BoundaryOutput: return {kTarget, kTarget};
  }
  return {};
}

TreeLayout layout_of(const Opetope& theta) {
  auto shape = tree_frame_shape(theta.theta->graph());
  if (!shape) throw Error(ErrorCode::WrongShapeFamily, "configuration graph is not tree-shaped");
  return TreeLayout(*shape);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Fixed-length words packed one byte per letter, first letter most
// significant; t is 0xff so integer order is word order.
using Packed = std::uint64_t;
constexpr Packed kPackedT = 0xff;

Packed pack_letter(std::uint32_t c) {
  if (c == kTarget) return kPackedT;
  if (c >= kPackedT) throw Error(ErrorCode::BoundExceeded, "arity too large for face words");
  return c;
}

Packed pack(const Key& k) {
  Packed p = 0;
  for (auto c : k) p = (p << 8) | pack_letter(c);
  return p;
}

Key unpack(Packed p, std::size_t length) {
  Key k(length);
  for (std::size_t r = length; r-- > 0; p >>= 8) k[r] = (p & 0xff) == kPackedT ? kTarget : static_cast<std::uint32_t>(p & 0xff);
  return k;
}

void all_packed(const OpetopePtr& cell, std::size_t length, Packed prefix, std::vector<Packed>& out) {
  if (length == 0) {
    out.push_back(prefix);
    return;
  }
  if (cell->dim < 1) return;
  for (std::size_t i = 1; i <= cell->arity(); ++i)
    all_packed(cell->inputs[i - 1], length - 1, (prefix << 8) | pack_letter(static_cast<std::uint32_t>(i)), out);
  all_packed(cell->output, length - 1, (prefix << 8) | kPackedT, out);
}

struct WordPartition {
  std::vector<Packed> keys;  // sorted
  std::size_t length;
  UnionFind uf{0};

  WordPartition(const OpetopePtr& top, std::size_t len) : length(len) {
    all_packed(top, len, 0, keys);
    std::sort(keys.begin(), keys.end());
    uf = UnionFind(keys.size());
  }
  std::size_t index(Packed k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) throw Error(ErrorCode::InvalidArgument, "face word out of range");
    return static_cast<std::size_t>(it - keys.begin());
  }
  void unite(Packed a, Packed b) { uf.unite(index(a), index(b)); }
  std::size_t class_of(Packed k) { return uf.find(index(k)); }

  // Class members as key indices, classes ordered by least member.
  std::vector<std::vector<std::size_t>> groups() {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(keys.size(), SIZE_MAX);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const std::size_t r = uf.find(i);
      if (slot[r] == SIZE_MAX) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(i);
    }
    return out;
  }

  std::vector<FaceClass> classes(const OpetopePtr& top) {
    std::vector<FaceClass> out;
    for (const auto& g : groups()) {
      FaceClass cls;
      for (auto i : g) cls.push_back(make_word(top, unpack(keys[i], length)));
      out.push_back(std::move(cls));
    }
    return out;
  }
};

void require_dim(const OpetopePtr& theta, int min_dim, const char* what) {
  if (!theta || theta->dim < min_dim)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs an opetope of dimension >= " +
                                                std::to_string(min_dim));
}

// Mate pairs of theta as packed two-letter words.
std::vector<std::pair<Packed, Packed>> packed_relations(const OpetopePtr& theta) {
  const TreeLayout layout = layout_of(*theta);
  std::vector<std::pair<Packed, Packed>> out;
  for (auto [a, b] : theta->theta->graph().pairs())
    out.emplace_back(pack(one_step_key(layout, a)), pack(one_step_key(layout, b)));
  return out;
}

WordPartition two_step_partition(const OpetopePtr& theta) {
  WordPartition part(theta, 2);
  for (auto [a, b] : packed_relations(theta)) part.unite(a, b);
  return part;
}

WordPartition deep_partition(const OpetopePtr& theta) {
  WordPartition part(theta, 3);

  // Mates of theta, carried to the faces of the shared cell along the edge label.
  const TreeLayout layout = layout_of(*theta);
  const LabelledGraph& lg = *theta->theta;
  const Graph& g = lg.graph();
  for (auto [a, b] : g.pairs()) {
    if (g.variance(a) == Variance::Plus) std::swap(a, b);
    const OpeMorphism label = lg.edge_label_at(a);  // A -> B
    const Packed wa = pack(one_step_key(layout, a)) << 8;
    const Packed wb = pack(one_step_key(layout, b)) << 8;
    const OpetopePtr& B = lg.leaf_label(b);
    for (std::size_t i = 0; i < B->arity(); ++i) {
      const std::size_t j = label.sigma.empty() ? i : label.sigma[i];
      part.unite(wb | pack_letter(static_cast<std::uint32_t>(i + 1)), wa | pack_letter(static_cast<std::uint32_t>(j + 1)));
    }
    part.unite(wb | kPackedT, wa | kPackedT);
  }
  // Each face's own relations.
  for (const auto& l : letters_of(theta)) {
    const Packed head = pack_letter(encode(l)) << 16;
    for (auto [u, v] : packed_relations(apply_letter(theta, l))) part.unite(head | u, head | v);
  }
  return part;
}

}  // namespace

bool operator<(const FaceWord& a, const FaceWord& b) { return key_of(a) < key_of(b); }
bool operator==(const FaceWord& a, const FaceWord& b) { return key_of(a) == key_of(b); }

std::string to_string(const FaceWord& w) {
  std::string out;
  for (std::size_t r = 0; r < w.letters.size(); ++r) {
    const auto& l = w.letters[r];
    if (l.target) {
      out += 't';
    } else if (w.cells[r]->dim == 1) {
      out += 's';
    } else {
      out += "s_" + std::to_string(l.index);
    }
  }
  return out;
}

std::vector<FaceWord> faces(const OpetopePtr& theta) {
  require_dim(theta, 1, "faces");
  std::vector<FaceWord> out;
  for (const auto& l : letters_of(theta)) out.push_back(make_word(theta, {encode(l)}));
  return out;
}

std::vector<Relation> relations_one_step(const OpetopePtr& theta) {
  require_dim(theta, 2, "relations_one_step");
  std::vector<Relation> out;
  for (auto [a, b] : packed_relations(theta)) {
    if (b < a) std::swap(a, b);
    out.emplace_back(make_word(theta, unpack(a, 2)), make_word(theta, unpack(b, 2)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FaceClass> two_step_classes(const OpetopePtr& theta) {
  require_dim(theta, 2, "two_step_classes");
  return two_step_partition(theta).classes(theta);
}

std::vector<FaceClass> relations_deep(const OpetopePtr& theta) {
  require_dim(theta, 3, "relations_deep");
  return deep_partition(theta).classes(theta);
}

TfReport check_tf(const OpetopePtr& theta) {
  require_dim(theta, 3, "check_tf");
  WordPartition deep = deep_partition(theta);
  const auto deep_groups = deep.groups();
  std::vector<std::size_t> group_of(deep.keys.size());
  for (std::size_t c = 0; c < deep_groups.size(); ++c)
    for (auto i : deep_groups[c]) group_of[i] = c;
  auto word = [&](std::size_t c) { return to_string(make_word(theta, unpack(deep.keys[deep_groups[c].front()], 3))); };

  TfReport report;
  auto fail = [&](std::string why) {
    report.holds = false;
    report.witness = std::move(why);
    return report;
  };
  for (std::size_t c = 0; c < deep_groups.size(); ++c) {
    const bool has_t = std::any_of(deep_groups[c].begin(), deep_groups[c].end(),
                                   [&](std::size_t i) { return (deep.keys[i] >> 16) == kPackedT; });
    if (!has_t) return fail("class of " + word(c) + " has no word of the form t f");
  }
  WordPartition out = two_step_partition(theta->output);
  auto out_word = [&](std::size_t i) { return "t" + to_string(make_word(theta->output, unpack(out.keys[i], 2))); };
  std::vector<bool> hit(deep_groups.size(), false);
  for (const auto& cls : out.groups()) {
    auto image_of = [&](std::size_t i) { return group_of[deep.index((kPackedT << 16) | out.keys[i])]; };
    const std::size_t image = image_of(cls.front());
    for (auto i : cls)
      if (image_of(i) != image)
        return fail(out_word(cls.front()) + " and " + out_word(i) + " fall in different classes");
    if (hit[image]) return fail("two output classes meet in the class of " + word(image));
    hit[image] = true;
  }
  for (std::size_t c = 0; c < deep_groups.size(); ++c)
    if (!hit[c]) return fail("class of " + word(c) + " is not reached from the output");
  return report;
}

namespace {

std::string describe(const OpetopePtr& cell) {
  if (cell->dim == 0) return "point";
  if (cell->dim == 1) return "arrow";
  return std::to_string(cell->arity()) + "-ary " + std::to_string(cell->dim) + "-opetope";
}

std::string join_class(const FaceClass& cls) {
  std::string out;
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? " = " : "") + to_string(cls[i]);
  return out;
}

}  // namespace

std::string faces_report_text(const OpetopePtr& theta, int depth) {
  std::ostringstream os;
  os << "faces of " << describe(theta) << ":\n";
  for (const auto& w : faces(theta)) {
    std::string name = w.letters[0].target ? "t" : "s_" + std::to_string(w.letters[0].index);
    os << "  " << name << " : " << describe(w.face) << "\n";
  }
  if (theta->dim >= 2 && depth >= 1) {
    os << "relations:\n";
    for (const auto& [a, b] : relations_one_step(theta)) os << "  " << to_string(a) << " = " << to_string(b) << "\n";
  }
  if (theta->dim >= 3 && depth >= 2) {
    os << "classes:\n";
    for (const auto& cls : relations_deep(theta)) os << "  " << join_class(cls) << "\n";
  }
  return os.str();
}

std::string faces_report_json(const OpetopePtr& theta, int depth) {
  nlohmann::ordered_json j;
  j["dim"] = theta->dim;
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& w : faces(theta)) {
    nlohmann::ordered_json f;
    f["map"] = w.letters[0].target ? "t" : "s_" + std::to_string(w.letters[0].index);
    f["dim"] = w.face->dim;
    f["arity"] = w.face->dim >= 1 ? static_cast<long>(w.face->arity()) : 0L;
    j["faces"].push_back(f);
  }
  if (theta->dim >= 2 && depth >= 1) {
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : relations_one_step(theta)) j["relations"].push_back({to_string(a), to_string(b)});
  }
  if (theta->dim >= 3 && depth >= 2) {
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : relations_deep(theta)) {
      nlohmann::ordered_json c = nlohmann::ordered_json::array();
      for (const auto& w : cls) c.push_back(to_string(w));
      j["classes"].push_back(c);
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace ope
