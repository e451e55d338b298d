#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkcat/subset.hpp"

namespace linkcat {

/// A finite set of vertices, canonically indexed 0..size-1. Labels are for
/// display only and never take part in composition or isomorphism checks.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size) {}
  /// Throws InvalidArgument if labels repeat.
  explicit VertexSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display name of vertex i: its label, or the decimal index.
  std::string label(std::size_t i) const;

  /// Same carrier, i.e. same size. Labels are ignored.
  bool same_carrier(const VertexSet& other) const noexcept {
    return size_ == other.size_;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::string> labels_;
};

/// Short human description used in error messages, e.g. "{3 vertices}".
std::string describe(const VertexSet& v);

/// Tagged disjoint union M+N: left element i is i, right element j is
/// |M|+j.
struct DisjointUnion {
  std::size_t left_size = 0;
  std::size_t right_size = 0;

  std::size_t inl(std::size_t i) const noexcept { return i; }
  std::size_t inr(std::size_t j) const noexcept { return left_size + j; }
  bool is_left(std::size_t k) const noexcept { return k < left_size; }
  std::size_t size() const noexcept { return left_size + right_size; }
  VertexSet carrier() const { return VertexSet(size()); }
};

/// An injective binary relation dom -> cod: every codomain element has at
/// most one preimage. Pairs are stored sorted.
class InjRel {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  InjRel() = default;
  /// Throws InvalidArgument on out-of-range indices or an injectivity
  /// violation. Duplicate pairs are merged.
  InjRel(VertexSet dom, VertexSet cod, std::vector<Pair> pairs);

  const VertexSet& dom() const noexcept { return dom_; }
  const VertexSet& cod() const noexcept { return cod_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }

  bool related(std::size_t a, std::size_t z) const;
  /// R(a).
  Subset image(std::size_t a) const;
  /// The unique a with a R z, if any.
  std::optional<std::size_t> preimage(std::size_t z) const;

  friend bool operator==(const InjRel&, const InjRel&) = default;

 private:
  VertexSet dom_;
  VertexSet cod_;
  std::vector<Pair> pairs_;
  std::vector<std::optional<std::size_t>> preimage_;
};

/// The diagonal relation on x.
InjRel identity(const VertexSet& x);

/// Relational composite S after R. Throws InterfaceMismatch unless
/// cod(R) and dom(S) have the same carrier.
InjRel compose(const InjRel& s, const InjRel& r);

/// R(alpha), the union of the images of the elements of alpha. Throws
/// InvalidArgument on an index outside dom(R).
Subset image(const InjRel& r, const Subset& alpha);

/// Every domain element is related to something.
bool is_total(const InjRel& r);

/// Monicity in the category of injective relations. Monic coincides with
/// total there, so this is answered by is_total without quantifying over
/// parallel pairs.
bool is_monic(const InjRel& m);

/// [r, s] : A -> M+N. Throws InterfaceMismatch unless r and s share a
/// domain carrier.
InjRel copair(const InjRel& r, const InjRel& s);

}  // namespace linkcat
