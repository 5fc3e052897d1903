#include "opetope/shape.hpp"

#include <mutex>

#include <cctype>
#include <functional>

#include "opetope/error.hpp"

namespace ope {

struct Shape::Node {
  Kind kind;
  Shape left{nullptr};
  Shape right{nullptr};
  std::vector<Variance> variances;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Shape Shape::gen() {
  static const Shape g = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Gen;
    node->variances = {Variance::Plus};
    node->hash = 0x51;
    return Shape(std::move(node));
  }();
  return g;
}

Shape Shape::unit() {
  static const Shape u = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Unit;
    node->hash = 0x17;
    return Shape(std::move(node));
  }();
  return u;
}

Shape Shape::tensor(Shape left, Shape right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Tensor;
  node->variances.reserve(left.leaf_count() + right.leaf_count());
  for (auto v : left.leaf_variances()) node->variances.push_back(v);
  for (auto v : right.leaf_variances()) node->variances.push_back(v);
  node->hash = mix(mix(0x7e, left.hash()), right.hash());
  node->left = std::move(left);
  node->right = std::move(right);
  return Shape(std::move(node));
}

Shape Shape::hom(Shape dom, Shape cod) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Hom;
  node->variances.reserve(dom.leaf_count() + cod.leaf_count());
  for (auto v : dom.leaf_variances()) node->variances.push_back(flip(v));
  for (auto v : cod.leaf_variances()) node->variances.push_back(v);
  node->hash = mix(mix(0x40, dom.hash()), cod.hash());
  node->left = std::move(dom);
  node->right = std::move(cod);
  return Shape(std::move(node));
}

Shape Shape::tensor_all(std::span<const Shape> factors) {
  if (factors.empty()) return unit();
  Shape acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
  return acc;
}

Shape Shape::frame(std::size_t arity) {
  static std::mutex mutex;
  static std::vector<Shape> made;
  std::lock_guard lock(mutex);
  while (made.size() <= arity) {
    std::vector<Shape> gens(made.size(), gen());
    made.push_back(hom(tensor_all(gens), gen()));
  }
  return made[arity];
}

Shape::Kind Shape::kind() const { return node_->kind; }
const Shape& Shape::left() const { return node_->left; }
const Shape& Shape::right() const { return node_->right; }
std::size_t Shape::leaf_count() const { return node_->variances.size(); }
std::span<const Variance> Shape::leaf_variances() const { return node_->variances; }
std::size_t Shape::hash() const { return node_->hash; }

bool Shape::operator==(const Shape& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind ||
      leaf_count() != other.leaf_count())
    return false;
  if (node_->kind == Kind::Gen || node_->kind == Kind::Unit) return true;
  return node_->left == other.node_->left && node_->right == other.node_->right;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Shape parse() {
    Shape s = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return s;
  }

 private:
  // expr ::= atom ("*" atom)*      (left associative)
  Shape expr() {
    Shape acc = atom();
    while (peek() == '*') {
      ++pos_;
      acc = Shape::tensor(acc, atom());
    }
    return acc;
  }

  // atom ::= "1" | "I" | "(" expr ")" | "[" expr "," expr "]"
  Shape atom() {
    char c = peek();
    switch (c) {
      case '1':
        ++pos_;
        return Shape::gen();
      case 'I':
        ++pos_;
        return Shape::unit();
      case '(': {
        ++pos_;
        Shape inner = expr();
        expect(')');
        return inner;
      }
      case '[': {
        ++pos_;
        Shape dom = expr();
        expect(',');
        Shape cod = expr();
        expect(']');
        return Shape::hom(dom, cod);
      }
      case '\0':
        throw SyntaxError("unexpected end of input", pos_);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size())
        throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Shape& s, std::string& out) {
  switch (s.kind()) {
    case Shape::Kind::Gen:
      out += '1';
      return;
    case Shape::Kind::Unit:
      out += 'I';
      return;
    case Shape::Kind::Tensor:
      out += '(';
      print_into(s.left(), out);
      out += '*';
      print_into(s.right(), out);
      out += ')';
      return;
    case Shape::Kind::Hom:
      out += '[';
      print_into(s.left(), out);
      out += ',';
      print_into(s.right(), out);
      out += ']';
      return;
  }
}

void collect(const Shape& s, VarPath& path, std::vector<Variable>& out, bool flipped) {
  switch (s.kind()) {
    case Shape::Kind::Gen:
      out.push_back({path, flipped ? Variance::Minus : Variance::Plus});
      return;
    case Shape::Kind::Unit:
      return;
    case Shape::Kind::Tensor:
      path.push_back(Step::TensorLeft);
      collect(s.left(), path, out, flipped);
      path.back() = Step::TensorRight;
      collect(s.right(), path, out, flipped);
      path.pop_back();
      return;
    case Shape::Kind::Hom:
      path.push_back(Step::HomDom);
      collect(s.left(), path, out, !flipped);
      path.back() = Step::HomCod;
      collect(s.right(), path, out, flipped);
      path.pop_back();
      return;
  }
}

void flatten(const Shape& s, std::vector<Shape>& out) {
  if (s.is_tensor()) {
    flatten(s.left(), out);
    flatten(s.right(), out);
  } else if (!s.is_unit()) {
    out.push_back(s);
  }
}

Shape substitute_from(const Shape& s, std::span<const Shape> repl, std::size_t& next) {
  switch (s.kind()) {
    case Shape::Kind::Gen:
      return repl[next++];
    case Shape::Kind::Unit:
      return s;
    case Shape::Kind::Tensor: {
      Shape l = substitute_from(s.left(), repl, next);
      return Shape::tensor(std::move(l), substitute_from(s.right(), repl, next));
    }
    case Shape::Kind::Hom: {
      Shape l = substitute_from(s.left(), repl, next);
      return Shape::hom(std::move(l), substitute_from(s.right(), repl, next));
    }
  }
  return s;
}

}  // namespace

Shape parse_shape(std::string_view text) { return Parser(text).parse(); }

std::string print_shape(const Shape& shape) {
  std::string out;
  print_into(shape, out);
  return out;
}

std::vector<Variable> variables(const Shape& shape) {
  std::vector<Variable> out;
  VarPath path;
  collect(shape, path, out, false);
  return out;
}

std::vector<TwistedVariable> twisted_variables(const Shape& dom, const Shape& cod) {
  std::vector<TwistedVariable> out;
  for (auto& v : variables(dom)) out.push_back({Side::Dom, std::move(v.path), flip(v.variance)});
  for (auto& v : variables(cod)) out.push_back({Side::Cod, std::move(v.path), v.variance});
  return out;
}

std::vector<Variance> twisted_variances(const Shape& dom, const Shape& cod) {
  std::vector<Variance> out;
  out.reserve(dom.leaf_count() + cod.leaf_count());
  for (auto v : dom.leaf_variances()) out.push_back(flip(v));
  for (auto v : cod.leaf_variances()) out.push_back(v);
  return out;
}

std::size_t leaf_index(const Shape& shape, const VarPath& path) {
  const Shape* cur = &shape;
  std::size_t offset = 0;
  for (Step step : path) {
    bool ok = (step == Step::TensorLeft || step == Step::TensorRight) ? cur->is_tensor()
                                                                      : cur->is_hom();
    if (!ok) throw Error(ErrorCode::InvalidArgument, "path " + print_path(path) + " leaves the term");
    if (step == Step::TensorLeft || step == Step::HomDom) {
      cur = &cur->left();
    } else {
      offset += cur->left().leaf_count();
      cur = &cur->right();
    }
  }
  if (!cur->is_gen())
    throw Error(ErrorCode::InvalidArgument, "path " + print_path(path) + " does not end on 1");
  return offset;
}

std::vector<Shape> tensor_factors(const Shape& shape) {
  std::vector<Shape> out;
  flatten(shape, out);
  return out;
}

long frame_arity(const Shape& shape) {
  if (!shape.is_hom() || !shape.right().is_gen()) return -1;
  auto factors = tensor_factors(shape.left());
  for (const auto& f : factors)
    if (!f.is_gen()) return -1;
  return static_cast<long>(factors.size());
}

Shape substitute(const Shape& shape, std::span<const Shape> replacements) {
  if (replacements.size() != shape.leaf_count())
    throw Error(ErrorCode::ArityMismatch, "substitution needs one replacement per leaf");
  std::size_t next = 0;
  return substitute_from(shape, replacements, next);
}

std::string print_path(const VarPath& path) {
  std::string out = "/";
  for (Step s : path) {
    switch (s) {
      case Step::TensorLeft: out += "L"; break;
      case Step::TensorRight: out += "R"; break;
      case Step::HomDom: out += "D"; break;
      case Step::HomCod: out += "C"; break;
    }
  }
  return out;
}

}  // namespace ope
