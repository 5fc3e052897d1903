#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ope {

enum class Variance : std::int8_t { Minus = -1, Plus = 1 };

inline Variance flip(Variance v) { return v == Variance::Plus ? Variance::Minus : Variance::Plus; }
inline char variance_char(Variance v) { return v == Variance::Plus ? '+' : '-'; }

enum class Step : std::uint8_t { TensorLeft, TensorRight, HomDom, HomCod };

// Address of a generator leaf, as the sequence of steps taken from the root.
using VarPath = std::vector<Step>;

struct Variable {
  VarPath path;
  Variance variance;

  bool operator==(const Variable&) const = default;
};

enum class Side : std::uint8_t { Dom, Cod };

struct TwistedVariable {
  Side side;
  VarPath path;
  Variance variance;

  bool operator==(const TwistedVariable&) const = default;
};

// A term over the generator 1, the unit I, binary tensor and internal hom.
// Terms are immutable and share structure; copying a Shape is a pointer copy.
class Shape {
 public:
  enum class Kind : std::uint8_t { Gen, Unit, Tensor, Hom };

  static Shape gen();
  static Shape unit();
  static Shape tensor(Shape left, Shape right);
  static Shape hom(Shape dom, Shape cod);

  // Left-nested tensor of the factors; Unit for none, the factor itself for one.
  static Shape tensor_all(std::span<const Shape> factors);
  // X_m = [1^{(x)m}, 1].
  static Shape frame(std::size_t arity);

  Kind kind() const;
  const Shape& left() const;   // Tensor left or Hom domain
  const Shape& right() const;  // Tensor right or Hom codomain

  bool is_gen() const { return kind() == Kind::Gen; }
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_tensor() const { return kind() == Kind::Tensor; }
  bool is_hom() const { return kind() == Kind::Hom; }

  // Number of generator leaves.
  std::size_t leaf_count() const;
  // Variance of each leaf in left-to-right order (+ iff an even number of
  // hom-domain steps lead to it).
  std::span<const Variance> leaf_variances() const;

  std::size_t hash() const;

  bool operator==(const Shape& other) const;

 private:
  struct Node;
  explicit Shape(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Shape parse_shape(std::string_view text);
std::string print_shape(const Shape& shape);

std::vector<Variable> variables(const Shape& shape);
std::vector<TwistedVariable> twisted_variables(const Shape& dom, const Shape& cod);
// Leaf variances of dom flipped, followed by those of cod.
std::vector<Variance> twisted_variances(const Shape& dom, const Shape& cod);

// Follows path from the root; throws InvalidArgument unless it ends on a Gen.
std::size_t leaf_index(const Shape& shape, const VarPath& path);

// Normalized n-ary view of a tensor: associativity flattened, Unit factors dropped.
std::vector<Shape> tensor_factors(const Shape& shape);

// If shape is X_m (up to tensor re-association and units in the domain),
// returns m; otherwise -1.
long frame_arity(const Shape& shape);

// Replaces the i-th generator leaf by replacements[i].
Shape substitute(const Shape& shape, std::span<const Shape> replacements);

std::string print_path(const VarPath& path);

}  // namespace ope
