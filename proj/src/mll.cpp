#include "linkcat/mll.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "linkcat/compose.hpp"
#include "linkcat/detail/union_find.hpp"
#include "linkcat/error.hpp"
#include "linkcat/families.hpp"

namespace linkcat::mll {

Formula Formula::atom(std::string name, bool positive) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->literal = Literal{std::move(name), positive};
  return Formula(std::move(node));
}

Formula Formula::tensor(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Tensor;
  node->leaves = left.leaf_count() + right.leaf_count();
  node->left = std::make_shared<const Formula>(std::move(left));
  node->right = std::make_shared<const Formula>(std::move(right));
  return Formula(std::move(node));
}

Formula Formula::par(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Par;
  node->leaves = left.leaf_count() + right.leaf_count();
  node->left = std::make_shared<const Formula>(std::move(left));
  node->right = std::make_shared<const Formula>(std::move(right));
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_atom()) return a.literal() == b.literal();
  return a.leaf_count() == b.leaf_count() && a.left() == b.left() &&
         a.right() == b.right();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Formula expr() {
    skip_space();
    if (pos_ == text_.size()) fail("expected a formula");
    if (text_[pos_] == '(') {
      ++pos_;
      Formula left = expr();
      skip_space();
      if (pos_ == text_.size()) fail("expected '*' or '@'");
      const char op = text_[pos_];
      if (op != '*' && op != '@') fail("expected '*' or '@'");
      ++pos_;
      Formula right = expr();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        fail("negation applies to atoms only");
      }
      return op == '*' ? Formula::tensor(std::move(left), std::move(right))
                       : Formula::par(std::move(left), std::move(right));
    }
    if (!ident_start(text_[pos_])) fail("expected an atom or '('");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip_space();
    bool positive = true;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      positive = false;
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        fail("double negation; write the atom itself");
      }
    }
    return Formula::atom(std::move(name), positive);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_leaves(const Formula& f, std::vector<Literal>& out) {
  if (f.is_atom()) {
    out.push_back(f.literal());
    return;
  }
  collect_leaves(f.left(), out);
  collect_leaves(f.right(), out);
}

// The formula tree flattened for switching: node ids, with leaves numbered
// in left-to-right order.
struct Tree {
  std::size_t nodes = 0;
  std::vector<std::size_t> leaf_node;
  std::vector<std::pair<std::size_t, std::size_t>> tensor_edges;
  // Each par node with its two premise nodes.
  std::vector<std::array<std::size_t, 3>> pars;
};

std::size_t flatten_tree(const Formula& f, Tree& tree) {
  const std::size_t id = tree.nodes++;
  if (f.is_atom()) {
    tree.leaf_node.push_back(id);
    return id;
  }
  const std::size_t l = flatten_tree(f.left(), tree);
  const std::size_t r = flatten_tree(f.right(), tree);
  if (f.kind() == Formula::Kind::Tensor) {
    tree.tensor_edges.emplace_back(id, l);
    tree.tensor_edges.emplace_back(id, r);
  } else {
    tree.pars.push_back({id, l, r});
  }
  return id;
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  if (f.is_atom()) {
    return f.literal().name + (f.literal().positive ? "" : "^");
  }
  const char* op = f.kind() == Formula::Kind::Tensor ? " * " : " @ ";
  return "(" + to_string(f.left()) + op + to_string(f.right()) + ")";
}

std::vector<Literal> leaves(const Formula& f) {
  std::vector<Literal> out;
  out.reserve(f.leaf_count());
  collect_leaves(f, out);
  return out;
}

Formula dual(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Formula::atom(f.literal().name, !f.literal().positive);
    case Formula::Kind::Tensor:
      return Formula::par(dual(f.left()), dual(f.right()));
    case Formula::Kind::Par:
      return Formula::tensor(dual(f.left()), dual(f.right()));
  }
  return f;
}

Formula lollipop(const Formula& source, const Formula& target) {
  return Formula::par(dual(source), target);
}

void check_axioms(const Formula& conclusion, std::span<const Axiom> axioms) {
  const std::vector<Literal> lits = leaves(conclusion);
  std::vector<bool> used(lits.size(), false);
  for (const auto& [u, v] : axioms) {
    for (std::size_t leaf : {u, v}) {
      if (leaf >= lits.size()) {
        throw InvalidArgument("axiom leaf " + std::to_string(leaf) +
                              " out of range (" + std::to_string(lits.size()) +
                              " leaves)");
      }
      if (used[leaf]) {
        throw InvalidArgument("leaf " + std::to_string(leaf) +
                              " is in two axioms");
      }
      used[leaf] = true;
    }
    if (u == v) {
      throw InvalidArgument("axiom links leaf " + std::to_string(u) +
                            " to itself");
    }
    if (!lits[u].complements(lits[v])) {
      throw InvalidArgument("axiom " + std::to_string(u) + "-" +
                            std::to_string(v) +
                            " does not join complementary literals");
    }
  }
  const auto missing = std::find(used.begin(), used.end(), false);
  if (missing != used.end()) {
    throw InvalidArgument("leaf " + std::to_string(missing - used.begin()) +
                          " is in no axiom");
  }
}

bool dr_correct(const Formula& conclusion, std::span<const Axiom> axioms) {
  check_axioms(conclusion, axioms);
  Tree tree;
  flatten_tree(conclusion, tree);
  if (tree.pars.size() > kMaxSwitchedPars) {
    throw PreconditionFailed(
        "switching check over " + std::to_string(tree.pars.size()) +
        " par nodes exceeds the cap of " + std::to_string(kMaxSwitchedPars) +
        "; try a smaller net");
  }
  // A switching graph has nodes-1 edges exactly when there is one par per
  // axiom; with that edge count, acyclic and connected coincide.
  if (tree.pars.size() != axioms.size()) return false;

  const std::uint64_t switchings = std::uint64_t{1} << tree.pars.size();
  for (std::uint64_t s = 0; s < switchings; ++s) {
    detail::UnionFind graph(tree.nodes);
    bool acyclic = true;
    auto join = [&](std::size_t a, std::size_t b) {
      if (!graph.unite(a, b)) acyclic = false;
    };
    for (const auto& [a, b] : tree.tensor_edges) join(a, b);
    for (std::size_t i = 0; i < tree.pars.size() && acyclic; ++i) {
      const auto& par = tree.pars[i];
      join(par[0], (s >> i) & 1 ? par[2] : par[1]);
    }
    for (const auto& [u, v] : axioms) {
      if (!acyclic) break;
      join(tree.leaf_node[u], tree.leaf_node[v]);
    }
    if (!acyclic) return false;
  }
  return true;
}

ProofNet ProofNet::make(Formula source, Formula target, Linking axioms,
                        NetCheck check) {
  const std::size_t nx = source.leaf_count();
  const std::size_t ny = target.leaf_count();
  if (axioms.left().size() != nx || axioms.right().size() != ny) {
    throw InterfaceMismatch(
        "axiom linking spans " + describe(axioms.left()) + " -> " +
        describe(axioms.right()) + " but the formulas have " +
        std::to_string(nx) + " and " + std::to_string(ny) + " leaves");
  }
  if (axioms.loops() != 0) {
    throw InvalidArgument("a cut-free net has no loops");
  }
  ProofNet net(std::move(source), std::move(target), std::move(axioms));
  const std::vector<Axiom> pairs = net.axiom_pairs();
  const Formula conclusion = net.conclusion();
  if (check == NetCheck::Correctness) {
    if (!dr_correct(conclusion, pairs)) {
      throw InvalidArgument("proof structure on " + to_string(conclusion) +
                            " fails the Danos-Regnier criterion");
    }
  } else {
    check_axioms(conclusion, pairs);
  }
  return net;
}

ProofNet ProofNet::from_axioms(Formula source, Formula target,
                               std::span<const Axiom> axioms, NetCheck check) {
  const std::size_t nx = source.leaf_count();
  const std::size_t total = nx + target.leaf_count();
  std::vector<Link> links;
  links.reserve(axioms.size());
  for (const auto& [u, v] : axioms) {
    if (u >= total || v >= total) {
      throw InvalidArgument("axiom " + std::to_string(u) + "-" +
                            std::to_string(v) + " out of range (" +
                            std::to_string(total) + " leaves)");
    }
    Link link;
    for (std::size_t leaf : {u, v}) {
      if (leaf < nx) {
        link.left.push_back(leaf);
      } else {
        link.right.push_back(leaf - nx);
      }
    }
    links.push_back(std::move(link));
  }
  Linking linking(VertexSet(nx), VertexSet(target.leaf_count()),
                  std::move(links));
  return make(std::move(source), std::move(target), std::move(linking), check);
}

std::vector<Axiom> ProofNet::axiom_pairs() const {
  const std::size_t nx = source_.leaf_count();
  std::vector<Axiom> out;
  for (const Link& link : axioms_.links()) {
    std::vector<std::size_t> ends(link.left.begin(), link.left.end());
    for (std::size_t y : link.right) ends.push_back(nx + y);
    if (ends.size() != 2) {
      throw InvalidArgument("axiom link with " + std::to_string(ends.size()) +
                            " leaves");
    }
    out.emplace_back(ends[0], ends[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool dr_correct(const ProofNet& net) {
  return dr_correct(net.conclusion(), net.axiom_pairs());
}

ProofNet identity_net(const Formula& f) {
  return ProofNet::make(f, f, identity_linking(VertexSet(f.leaf_count())),
                        NetCheck::Structure);
}

ProofNet compose_nets(const ProofNet& second, const ProofNet& first) {
  if (!(first.target() == second.source())) {
    throw InterfaceMismatch("cannot compose nets: " + to_string(first.target()) +
                            " is not " + to_string(second.source()));
  }
  Composite c = compose_with_loops(second.axioms(), first.axioms());
  if (c.new_loops != 0) {
    throw InvariantViolation(std::to_string(c.new_loops) +
                             " loop(s) formed while composing proof nets");
  }
  if (!is_binary(c.linking) || !is_total_linking(c.linking)) {
    throw InvariantViolation(
        "composite of proof nets is not a perfect matching of leaves");
  }
  try {
    return ProofNet::make(first.source(), second.target(), std::move(c.linking),
                          NetCheck::Structure);
  } catch (const InvalidArgument& e) {
    throw InvariantViolation(std::string("composite is malformed: ") + e.what());
  }
}

Linking forget_brauer(const ProofNet& net) { return net.axioms(); }

}  // namespace linkcat::mll
