#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "linkcat/irel.hpp"
#include "linkcat/subset.hpp"

namespace linkcat {

/// A link and its footprint: the vertices it touches on each side.
struct Link {
  Subset left;
  Subset right;

  std::size_t arity() const noexcept { return left.size() + right.size(); }

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// A span X <- A -> Y of injective relations, A indexing the links.
struct Span {
  InjRel left_leg;   // A -> X
  InjRel right_leg;  // A -> Y

  const VertexSet& apex() const noexcept { return left_leg.dom(); }
};

/// A linking X -> Y, identified up to renaming of links.
///
/// Stored canonically: non-loop links ordered by their least foot, with X
/// vertices preceding Y vertices, and loops kept only as a count. Two
/// linkings compare equal exactly when they are isomorphic (labels aside,
/// see is_isomorphic).
class Linking {
 public:
  Linking() = default;
  /// Validates and canonicalises. Throws InvalidArgument when a foot is out
  /// of range, a vertex sits in two links, or a link has no feet.
  Linking(VertexSet left, VertexSet right, std::vector<Link> links,
          std::uint64_t loops = 0);

  const VertexSet& left() const noexcept { return left_; }
  const VertexSet& right() const noexcept { return right_; }
  const std::vector<Link>& links() const noexcept { return links_; }
  std::uint64_t loops() const noexcept { return loops_; }

  /// Index of the link owning left vertex x, if any.
  std::optional<std::size_t> left_owner(std::size_t x) const;
  /// Index of the link owning right vertex y, if any.
  std::optional<std::size_t> right_owner(std::size_t y) const;

  friend bool operator==(const Linking&, const Linking&) = default;
  friend auto operator<=>(const Linking&, const Linking&) = default;

 private:
  VertexSet left_;
  VertexSet right_;
  std::vector<Link> links_;
  std::uint64_t loops_ = 0;
};

/// Builds the linking of a span. Elements of A with an empty footprint
/// become loops. Throws InterfaceMismatch if the legs have different
/// domains.
Linking from_span(const InjRel& f, const InjRel& g);

/// The span presentation: A enumerates the links in canonical order
/// followed by one element per loop.
Span to_span(const Linking& l);

Linking identity_linking(const VertexSet& x);

/// Same object sizes, same footprints, same number of loops. Labels are
/// not compared.
bool is_isomorphic(const Linking& a, const Linking& b);

/// Deletes all loops.
Linking flatten(const Linking& l);

Linking add_loops(const Linking& l, std::uint64_t k);

}  // namespace linkcat
