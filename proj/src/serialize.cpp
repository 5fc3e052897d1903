#include "opetope/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "opetope/error.hpp"

namespace ope {

namespace {

[[noreturn]] void syntax(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Syntax, (where.empty() ? "" : where + ": ") + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) syntax(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) syntax(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) syntax(where, std::string("\"") + key + "\" must be an array");
  return a;
}

bool is_index(const Json& j) { return j.is_number_integer() && j.get<long long>() >= 0; }

std::string child(const std::string& where, const std::string& step) {
  return where.empty() ? step : where + "." + step;
}

// Runs fn, prefixing kernel failures with the JSON location.
template <class Fn>
auto located(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (where.empty()) throw;
    throw Error(e.code(), where + ": " + e.detail());
  }
}

Shape shape_field(const Json& j, const char* key, const std::string& where) {
  const Json& s = field(j, key, where);
  if (!s.is_string()) syntax(where, std::string("\"") + key + "\" must be a shape string");
  return located(child(where, key), [&] { return parse_shape(s.get<std::string>()); });
}

std::string endpoint_name(const Graph& g, std::size_t v) {
  return v < g.dom_size() ? "d" + std::to_string(v) : "c" + std::to_string(v - g.dom_size());
}

VarIndex endpoint_index(const Json& e, std::size_t dom_size, std::size_t size, const std::string& where) {
  std::size_t v = 0;
  if (is_index(e)) {
    v = e.get<std::size_t>();
  } else if (e.is_string()) {
    const auto s = e.get<std::string>();
    if (s.size() < 2 || (s[0] != 'd' && s[0] != 'c') ||
        !std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); }))
      syntax(where, "bad endpoint \"" + s + "\"");
    v = std::stoul(s.substr(1)) + (s[0] == 'c' ? dom_size : 0);
    if (s[0] == 'd' && v >= dom_size) syntax(where, "no domain leaf " + s);
  } else {
    syntax(where, "an endpoint is \"d<i>\", \"c<j>\" or a twisted index");
  }
  if (v >= size) syntax(where, "endpoint out of range");
  return static_cast<VarIndex>(v);
}

Graph graph_at(const Json& j, const std::string& where) {
  const Shape dom = shape_field(j, "dom", where);
  const Shape cod = shape_field(j, "cod", where);
  const std::size_t n = dom.leaf_count() + cod.leaf_count();
  std::vector<VarPair> pairs;
  const std::string pw = child(where, "pairs");
  for (const auto& p : array_field(j, "pairs", where)) {
    if (!p.is_array() || p.size() != 2) syntax(pw, "each pair has two endpoints");
    pairs.emplace_back(endpoint_index(p[0], dom.leaf_count(), n, pw), endpoint_index(p[1], dom.leaf_count(), n, pw));
  }
  return located(where, [&] { return make_graph(dom, cod, pairs); });
}

OpeMorphism morphism_at(const Json& j, const OpetopePtr& source, const OpetopePtr& target, const std::string& where) {
  if (!j.is_object()) syntax(where, "a morphism is an object");
  if (source->dim != target->dim)
    throw Error(ErrorCode::TypeMismatch, where + ": morphism between opetopes of different dimension");
  OpeMorphism f{source, target, {}, {}, {}};
  if (source->dim < 2) return f;
  const Json& sigma = array_field(j, "sigma", where);
  const std::size_t m = target->arity();
  if (sigma.size() != m || source->arity() != m)
    throw Error(ErrorCode::ArityMismatch, where + ": sigma must be a permutation of " + std::to_string(m));
  std::vector<bool> seen(m, false);
  for (const auto& s : sigma) {
    if (!is_index(s)) syntax(child(where, "sigma"), "entries are indices");
    const auto i = s.get<std::size_t>();
    if (i >= m || seen[i]) throw Error(ErrorCode::ArityMismatch, where + ": sigma is not a permutation");
    seen[i] = true;
    f.sigma.push_back(static_cast<std::uint32_t>(i));
  }
  // Missing components default to identities where those exist.
  const auto in_it = j.find("inputs");
  if (in_it != j.end() && (!in_it->is_array() || in_it->size() != m)) syntax(where, "\"inputs\" needs one entry per input");
  for (std::size_t i = 0; i < m; ++i) {
    const OpetopePtr& a = target->inputs[i];
    const OpetopePtr& b = source->inputs[f.sigma[i]];
    const std::string w = child(where, "inputs[" + std::to_string(i) + "]");
    f.inputs.push_back(in_it != j.end() ? morphism_at((*in_it)[i], a, b, w) : morphism_at(Json::object(), a, b, w));
  }
  const auto out_it = j.find("output");
  f.output.push_back(morphism_at(out_it != j.end() ? *out_it : Json::object(), source->output, target->output,
                                 child(where, "output")));
  if (!commutes(f)) throw Error(ErrorCode::TypeMismatch, (where.empty() ? "" : where + ": ") + "the triangle does not commute");
  return f;
}

std::vector<OpeMorphism> edge_labels_at(const Json& j, const Graph& g, const std::vector<OpetopePtr>& dom,
                                        const std::vector<OpetopePtr>& cod, int base_dim, const std::string& where) {
  if (base_dim <= 1) return {};
  const auto pairs = g.pairs();
  std::vector<std::optional<Json>> given(pairs.size());
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) syntax(where, "\"labels\" must be an array");
    for (const auto& l : *it) {
      const std::string lw = child(where, "labels");
      const Json& p = field(l, "pair", lw);
      if (!is_index(p) || p.get<std::size_t>() >= pairs.size()) syntax(lw, "pair out of range");
      given[p.get<std::size_t>()] = field(l, "morphism", lw);
    }
  }
  auto label = [&](std::size_t v) { return v < g.dom_size() ? dom.at(v) : cod.at(v - g.dom_size()); };
  std::vector<OpeMorphism> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (g.variance(a) == Variance::Plus) std::swap(a, b);
    const std::string w = child(where, "labels[" + std::to_string(i) + "]");
    if (given[i]) {
      out.push_back(morphism_at(*given[i], label(a), label(b), w));
    } else if (same_opetope(label(a), label(b))) {
      out.push_back(identity_morphism(label(a)));
    } else {
      throw Error(ErrorCode::UndefinedLabel, w + ": pair " + endpoint_name(g, a) + "-" + endpoint_name(g, b) +
                                                 " joins different opetopes and has no label");
    }
  }
  return out;
}

OpetopePtr opetope_at(const Json& j, const std::string& where);

std::vector<OpetopePtr> opetope_list_at(const Json& j, const char* key, const std::string& where) {
  std::vector<OpetopePtr> out;
  const Json& a = array_field(j, key, where);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(opetope_at(a[i], child(where, std::string(key) + "[" + std::to_string(i) + "]")));
  return out;
}

OpetopePtr opetope_at(const Json& j, const std::string& where) {
  const Json& d = field(j, "dim", where);
  if (!d.is_number_integer() || d.get<long>() < 0) syntax(where, "\"dim\" must be a natural number");
  const long k = d.get<long>();
  if (k == 0) return point();
  if (k == 1) return arrow();

  std::vector<OpetopePtr> inputs = opetope_list_at(j, "inputs", where);
  OpetopePtr output = opetope_at(field(j, "output", where), child(where, "output"));
  const std::string tw = child(where, "theta");
  const Json& tj = field(j, "theta", where);
  const Graph g = graph_at(tj, tw);

  return located(where, [&] {
    for (const auto& in : inputs)
      if (in->dim != k - 1) throw Error(ErrorCode::TypeMismatch, "inputs must have dimension " + std::to_string(k - 1));
    if (output->dim != k - 1) throw Error(ErrorCode::TypeMismatch, "output must have dimension " + std::to_string(k - 1));
    const LabelledShape expected = expected_theta_codomain(inputs, output);
    std::vector<OpetopePtr> dom, cod;
    if (g.dom_size() == 0 && g.dom().is_unit()) {
      cod = expected.labels;
    } else {
      const std::size_t split = std::min(g.dom_size(), expected.labels.size());
      dom.assign(expected.labels.begin(), expected.labels.begin() + static_cast<long>(split));
      cod.assign(expected.labels.begin() + static_cast<long>(split), expected.labels.end());
    }
    if (dom.size() != g.dom_size() || cod.size() != g.size() - g.dom_size()) {
      // Right inputs, wrong output: the inputs compose to something else.
      const Shape& A = expected.shape.left();
      const bool curried = g.dom().is_unit() && g.cod().is_hom();
      if (k >= 3 && (curried ? g.cod().left() : g.dom()) == A)
        throw Error(ErrorCode::CompositeMismatch, "theta's codomain is not the frame of the output " +
                                                      std::to_string(output->arity()) + "-ary opetope");
      throw Error(ErrorCode::TypeMismatch, "theta does not have type I -> " + print_shape(expected.shape));
    }
    auto edges = edge_labels_at(tj, g, dom, cod, static_cast<int>(k) - 2, tw);
    LabelledGraph theta(g, std::move(dom), std::move(cod), static_cast<int>(k) - 2, std::move(edges));
    return make_opetope(std::move(inputs), std::move(output), theta);
  });
}

void write_sigma(std::ostringstream& os, const std::vector<std::uint32_t>& sigma) {
  for (auto s : sigma) os << s + 1;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["dom"] = print_shape(g.dom());
  j["cod"] = print_shape(g.cod());
  j["pairs"] = Json::array();
  for (auto [a, b] : g.pairs()) j["pairs"].push_back({endpoint_name(g, a), endpoint_name(g, b)});
  return j;
}

Graph graph_from_json(const Json& j) { return graph_at(j, ""); }

Json morphism_to_json(const OpeMorphism& f) {
  Json j = Json::object();
  if (f.dim() < 2) return j;
  j["sigma"] = f.sigma;
  j["inputs"] = Json::array();
  for (const auto& c : f.inputs) j["inputs"].push_back(morphism_to_json(c));
  j["output"] = morphism_to_json(f.output.at(0));
  return j;
}

OpeMorphism morphism_from_json(const Json& j, const OpetopePtr& source, const OpetopePtr& target) {
  return morphism_at(j, source, target, "");
}

Json labelled_graph_to_json(const LabelledGraph& g, bool with_leaves) {
  Json j = graph_to_json(g.graph());
  if (with_leaves) {
    j["base_dim"] = g.base_dim();
    j["dom_labels"] = Json::array();
    for (const auto& l : g.dom_labels()) j["dom_labels"].push_back(opetope_to_json(l));
    j["cod_labels"] = Json::array();
    for (const auto& l : g.cod_labels()) j["cod_labels"].push_back(opetope_to_json(l));
  }
  if (!g.terminal_base()) {
    j["labels"] = Json::array();
    for (std::size_t i = 0; i < g.edge_labels().size(); ++i)
      j["labels"].push_back({{"pair", i}, {"morphism", morphism_to_json(g.edge_labels()[i])}});
  }
  return j;
}

LabelledGraph labelled_graph_from_json(const Json& j) {
  const Graph g = graph_at(j, "");
  const Json& bd = field(j, "base_dim", "");
  if (!bd.is_number_integer() || bd.get<long>() < 0) syntax("", "\"base_dim\" must be a natural number");
  const int base = bd.get<int>();
  std::vector<OpetopePtr> dom = opetope_list_at(j, "dom_labels", "");
  std::vector<OpetopePtr> cod = opetope_list_at(j, "cod_labels", "");
  if (dom.size() != g.dom_size() || cod.size() != g.size() - g.dom_size())
    throw Error(ErrorCode::TypeMismatch, "one leaf label per leaf is needed");
  auto edges = edge_labels_at(j, g, dom, cod, base, "");
  return LabelledGraph(g, std::move(dom), std::move(cod), base, std::move(edges));
}

Json opetope_to_json(const OpetopePtr& o) {
  Json j;
  j["dim"] = o->dim;
  if (o->dim == 0) return j;
  j["inputs"] = Json::array();
  for (const auto& in : o->inputs) j["inputs"].push_back(opetope_to_json(in));
  j["output"] = opetope_to_json(o->output);
  if (o->theta) j["theta"] = labelled_graph_to_json(*o->theta, false);
  return j;
}

OpetopePtr opetope_from_json(const Json& j) { return opetope_at(j, ""); }

Json frame_to_json(const Frame& f) {
  Json j;
  j["inputs"] = Json::array();
  for (const auto& in : f.inputs) j["inputs"].push_back(opetope_to_json(in));
  j["output"] = opetope_to_json(f.output);
  return j;
}

Frame frame_from_json(const Json& j) {
  Frame f;
  f.inputs = opetope_list_at(j, "inputs", "");
  f.output = opetope_at(field(j, "output", ""), "output");
  return f;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string("malformed JSON: ") + e.what());
  }
}

OpetopePtr parse_opetope(std::string_view text) { return opetope_from_json(parse_json(text)); }
Frame parse_frame(std::string_view text) { return frame_from_json(parse_json(text)); }

std::string opetope_list_text(const std::vector<OpetopePtr>& list) {
  if (list.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < list.size(); ++i) {
    out += "  " + opetope_to_json(list[i]).dump();
    out += i + 1 < list.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

Frame parse_frame_spec(std::string_view spec, int k) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&](const std::string& why) -> Frame {
    throw Error(ErrorCode::Syntax, "frame \"" + std::string(spec) + "\": " + why);
  };
  auto number = [&](const std::string& t) -> std::size_t {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      bad("expected a number, got \"" + t + "\"");
    return std::stoul(t);
  };
  auto chain = [](std::size_t m) {
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    return chain_opetope(order);
  };
  if (k != 2 && k != 3) bad("frame specs describe dimensions 2 and 3");
  const auto arrow_pos = s.find("->");
  if (arrow_pos == std::string::npos) {
    if (k != 2) bad("expected (m_1,...,m_n)->n");
    return Frame{std::vector<OpetopePtr>(number(s), arrow()), arrow()};
  }
  const std::string lhs = s.substr(0, arrow_pos);
  const std::string rhs = s.substr(arrow_pos + 2);
  if (lhs.size() < 2 || lhs.front() != '(' || lhs.back() != ')') bad("inputs go in parentheses");
  std::vector<std::string> items;
  const std::string inner = lhs.substr(1, lhs.size() - 2);
  if (!inner.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = inner.find(',', start);
      items.push_back(inner.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (k == 2) {
    auto is_arrow = [](const std::string& t) { return t == "x" || t == "1"; };
    if (!is_arrow(rhs) || !std::all_of(items.begin(), items.end(), is_arrow))
      bad("every cell of a 2-dimensional frame is the arrow, written x or 1");
    return Frame{std::vector<OpetopePtr>(items.size(), arrow()), arrow()};
  }
  Frame f;
  for (const auto& it : items) f.inputs.push_back(chain(number(it)));
  f.output = chain(number(rhs));
  return f;
}

std::string morphism_text(const OpeMorphism& f) {
  if (f.dim() < 2) return "id";
  std::ostringstream os;
  os << "sigma ";
  write_sigma(os, f.sigma);
  return os.str();
}

std::string opetope_to_dot(const OpetopePtr& o) {
  std::ostringstream out;
  if (o->dim == 0) return "graph \"point\" {\n  x;\n}\n";
  if (o->dim == 1) return "graph \"arrow\" {\n  x0 -- x1;\n}\n";
  const LabelledGraph theta = uncurry_labelled(*o->theta);
  const Graph& g = theta.graph();
  const std::string name = std::to_string(o->arity()) + "-ary " + std::to_string(o->dim) + "-opetope";
  out << "graph \"" << name << "\" {\n";
  out << "  label=\"" << print_shape(g.dom()) << " -> " << print_shape(g.cod()) << "\";\n";
  out << "  node [shape=circle, fontsize=10];\n";
  auto id = [&](std::size_t v) { return endpoint_name(g, v); };
  auto leaf_text = [&](std::size_t v) {
    const OpetopePtr& l = theta.leaf_label(v);
    std::string t(1, variance_char(g.variance(v)));
    if (l->dim >= 1) t += " " + std::to_string(l->arity());
    return t;
  };
  auto row = [&](std::size_t from, std::size_t to) {
    out << "  { rank=same;";
    for (std::size_t v = from; v < to; ++v) out << " " << id(v);
    out << " }\n";
    for (std::size_t v = from; v < to; ++v) out << "  " << id(v) << " [label=\"" << leaf_text(v) << "\"];\n";
    for (std::size_t v = from; v + 1 < to; ++v) out << "  " << id(v) << " -- " << id(v + 1) << " [style=invis];\n";
  };
  row(0, g.dom_size());
  row(g.dom_size(), g.size());
  if (g.dom_size() > 0 && g.size() > g.dom_size()) out << "  " << id(0) << " -- " << id(g.dom_size()) << " [style=invis];\n";
  const auto pairs = g.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    out << "  " << id(a) << " -- " << id(b);
    if (!theta.terminal_base()) {
      const OpeMorphism& f = theta.edge_labels()[i];
      if (!f.is_identity()) out << " [label=\"" << morphism_text(f) << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ope
