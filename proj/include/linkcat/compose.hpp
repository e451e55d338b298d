#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linkcat/irel.hpp"
#include "linkcat/linking.hpp"

namespace linkcat {

/// A pair of link sets, one from each factor, written as a subset of A+B.
///
/// `upper` indexes the apex A of to_span(first) and `lower` the apex B of
/// to_span(second); loop slots are valid members. It is a synchronisation
/// when the two sides cover the same interface vertices.
struct Sync {
  Subset upper;
  Subset lower;

  bool empty() const noexcept { return upper.empty() && lower.empty(); }
  std::size_t size() const noexcept { return upper.size() + lower.size(); }

  friend bool operator==(const Sync&, const Sync&) = default;
  friend auto operator<=>(const Sync&, const Sync&) = default;
};

/// A minimal non-empty synchronisation.
using Path = Sync;

/// The pullback of the cospan A -> Y <- B underlying the composite of
/// `first` : X -> Y and `second` : Y -> Z.
struct Pullback {
  Span first;   // X <-f- A -g-> Y
  Span second;  // Y <-h- B -k-> Z
  std::vector<Path> paths;  // the apex P, in canonical order
  InjRel p;                 // P -> A, projection to the upper links
  InjRel q;                 // P -> B, projection to the lower links
};

/// A composite together with the number of loops formed while composing.
struct Composite {
  Linking linking;
  std::uint64_t new_loops = 0;
};

/// A cone over the cospan: P' -> A and P' -> B.
struct Cone {
  InjRel to_upper;
  InjRel to_lower;

  const VertexSet& apex() const noexcept { return to_upper.dom(); }
};

bool is_synchronisation(const Linking& first, const Linking& second,
                        const Sync& s);

/// All paths of the composite `second` after `first`.
///
/// Links are glued along shared interface vertices. Each connected group
/// is a path iff every interface vertex it touches is covered from both
/// sides; a group with a vertex covered from one side only yields nothing.
/// Every loop is a path on its own.
std::vector<Path> paths(const Linking& first, const Linking& second);

Pullback pullback(const Linking& first, const Linking& second);

Composite compose_with_loops(const Linking& second, const Linking& first);

/// `second` after `first`, collecting loops.
Linking compose_link(const Linking& second, const Linking& first);

/// Loops formed during compose_link(second, first), not counting inherited
/// ones.
std::uint64_t new_loop_count(const Linking& second, const Linking& first);

/// Composition of loopless linkings, discarding any loops formed. Throws
/// PreconditionFailed if either input carries loops.
Linking compose_flat(const Linking& second, const Linking& first);

/// The unique u : P' -> P with p.u = cone.to_upper and q.u = cone.to_lower.
/// Throws InvalidArgument if the cone does not commute over the interface.
InjRel mediating(const Pullback& pb, const Cone& cone);
InjRel mediating(const Linking& first, const Linking& second,
                 const Cone& cone);

/// Largest |A| + |B| accepted by brute_force_syncs.
inline constexpr std::size_t kBruteForceCap = 20;

/// Every synchronisation, by enumerating all subsets of A+B. Test oracle.
/// Throws PreconditionFailed above kBruteForceCap elements.
std::vector<Sync> brute_force_syncs(const Linking& first,
                                    const Linking& second);

/// The inclusion-minimal non-empty members of `syncs`, sorted.
std::vector<Sync> minimal_nonempty(const std::vector<Sync>& syncs);

}  // namespace linkcat
