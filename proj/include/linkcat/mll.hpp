#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkcat/linking.hpp"

namespace linkcat::mll {

/// An occurrence of an atom, positive (a) or negated (a^).
struct Literal {
  std::string name;
  bool positive = true;

  Literal dual() const { return Literal{name, !positive}; }
  bool complements(const Literal& other) const {
    return name == other.name && positive != other.positive;
  }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A unit-free multiplicative formula in negation normal form. Immutable;
/// copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Tensor, Par };

  static Formula atom(std::string name, bool positive = true);
  static Formula tensor(Formula left, Formula right);
  static Formula par(Formula left, Formula right);

  Kind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  /// Only meaningful for atoms.
  const Literal& literal() const noexcept { return node_->literal; }
  /// Only meaningful for tensor and par.
  const Formula& left() const noexcept { return *node_->left; }
  const Formula& right() const noexcept { return *node_->right; }

  std::size_t leaf_count() const noexcept { return node_->leaves; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind = Kind::Atom;
    Literal literal;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    std::size_t leaves = 1;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar (whitespace ignored, binary operators fully parenthesised):
///
///   atom := identifier | identifier "^"
///   expr := atom | "(" expr ("*" | "@") expr ")"
///
/// with "*" for tensor, "@" for par and "^" for negation of an atom.
/// Throws ParseError with the byte offset of the problem.
Formula parse_formula(std::string_view text);

/// Prints in the syntax accepted by parse_formula.
std::string to_string(const Formula& f);

/// Leaves from left to right.
std::vector<Literal> leaves(const Formula& f);

/// De Morgan dual: atoms flip polarity, tensor and par swap. Leaf order is
/// preserved and dual(dual(f)) == f.
Formula dual(const Formula& f);

/// X -o Y, encoded as dual(X) @ Y; the leaves of X come first.
Formula lollipop(const Formula& source, const Formula& target);

/// An axiom link between two leaves, by left-to-right leaf index.
using Axiom = std::pair<std::size_t, std::size_t>;

/// Throws InvalidArgument unless the axioms pair up all leaves of
/// `conclusion`, each axiom joining complementary literals.
void check_axioms(const Formula& conclusion, std::span<const Axiom> axioms);

/// Most par nodes the switching check will enumerate over.
inline constexpr std::size_t kMaxSwitchedPars = 20;

/// Danos-Regnier criterion: every switching graph (one premise edge kept
/// per par node, plus all tensor and axiom edges) is a tree. Throws
/// InvalidArgument on a malformed axiom set and PreconditionFailed beyond
/// kMaxSwitchedPars par nodes.
bool dr_correct(const Formula& conclusion, std::span<const Axiom> axioms);

/// How much a ProofNet factory verifies.
enum class NetCheck {
  Structure,    // axioms form a complementary perfect matching
  Correctness,  // Structure, plus the Danos-Regnier criterion
};

/// A cut-free proof structure on source -o target. The axioms are kept as
/// a linking from the leaves of `source` to the leaves of `target`.
class ProofNet {
 public:
  /// Throws InvalidArgument if the requested checks fail, InterfaceMismatch
  /// if the linking does not sit on the leaves of source and target.
  static ProofNet make(Formula source, Formula target, Linking axioms,
                       NetCheck check = NetCheck::Correctness);
  /// Axioms given as leaf index pairs on lollipop(source, target).
  static ProofNet from_axioms(Formula source, Formula target,
                              std::span<const Axiom> axioms,
                              NetCheck check = NetCheck::Correctness);

  const Formula& source() const noexcept { return source_; }
  const Formula& target() const noexcept { return target_; }
  const Linking& axioms() const noexcept { return axioms_; }

  Formula conclusion() const { return lollipop(source_, target_); }
  /// Axioms as sorted leaf index pairs on the conclusion.
  std::vector<Axiom> axiom_pairs() const;

  friend bool operator==(const ProofNet&, const ProofNet&) = default;

 private:
  ProofNet(Formula source, Formula target, Linking axioms)
      : source_(std::move(source)),
        target_(std::move(target)),
        axioms_(std::move(axioms)) {}

  Formula source_;
  Formula target_;
  Linking axioms_;
};

bool dr_correct(const ProofNet& net);

/// The identity net on f -o f: leaf i of dual(f) linked to leaf i of f.
ProofNet identity_net(const Formula& f);

/// Cut elimination: `second` after `first`, computed by composing the
/// axiom linkings through the leaves of the shared formula. Throws
/// InterfaceMismatch if first.target() != second.source(), and
/// InvariantViolation if a loop forms or a path is not an axiom link,
/// which cannot happen for correct nets.
ProofNet compose_nets(const ProofNet& second, const ProofNet& first);

/// The underlying Brauer linking: leaves as vertices, axioms as links.
Linking forget_brauer(const ProofNet& net);

}  // namespace linkcat::mll
