#include "linkcat/compose.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "linkcat/detail/union_find.hpp"
#include "linkcat/error.hpp"

namespace linkcat {

namespace {

void check_interface(const Linking& first, const Linking& second) {
  if (!first.right().same_carrier(second.left())) {
    throw InterfaceMismatch("interface mismatch: first linking ends at " +
                            describe(first.right()) +
                            " but second starts at " +
                            describe(second.left()));
  }
}

std::size_t apex_size(const Linking& l) {
  return l.links().size() + static_cast<std::size_t>(l.loops());
}

// Interface feet of apex element a: empty for loop slots.
const Subset& interface_feet(const Linking& l, std::size_t a, bool upper) {
  static const Subset kNone;
  if (a >= l.links().size()) return kNone;
  return upper ? l.links()[a].right : l.links()[a].left;
}

void check_sync_indices(const Linking& l, const Subset& s, const char* side) {
  const std::size_t n = apex_size(l);
  for (std::size_t a : s) {
    if (a >= n) {
      throw InvalidArgument(std::string(side) + " link index " +
                            std::to_string(a) + " out of range (" +
                            std::to_string(n) + " links and loops)");
    }
  }
}

}  // namespace

bool is_synchronisation(const Linking& first, const Linking& second,
                        const Sync& s) {
  check_interface(first, second);
  check_sync_indices(first, s.upper, "upper");
  check_sync_indices(second, s.lower, "lower");
  std::vector<std::size_t> up;
  std::vector<std::size_t> down;
  for (std::size_t a : s.upper) {
    const Subset& feet = interface_feet(first, a, true);
    up.insert(up.end(), feet.begin(), feet.end());
  }
  for (std::size_t b : s.lower) {
    const Subset& feet = interface_feet(second, b, false);
    down.insert(down.end(), feet.begin(), feet.end());
  }
  return make_subset(std::move(up)) == make_subset(std::move(down));
}

std::vector<Path> paths(const Linking& first, const Linking& second) {
  check_interface(first, second);
  const std::size_t n_upper = apex_size(first);
  const std::size_t n_lower = apex_size(second);
  const std::size_t interface = first.right().size();

  std::vector<std::optional<std::size_t>> above(interface);
  std::vector<std::optional<std::size_t>> below(interface);
  for (std::size_t a = 0; a < first.links().size(); ++a) {
    for (std::size_t y : first.links()[a].right) above[y] = a;
  }
  for (std::size_t b = 0; b < second.links().size(); ++b) {
    for (std::size_t y : second.links()[b].left) below[y] = n_upper + b;
  }

  detail::UnionFind groups(n_upper + n_lower);
  std::vector<bool> dangling(n_upper + n_lower, false);
  for (std::size_t y = 0; y < interface; ++y) {
    if (above[y] && below[y]) {
      groups.unite(*above[y], *below[y]);
    } else if (above[y]) {
      dangling[*above[y]] = true;
    } else if (below[y]) {
      dangling[*below[y]] = true;
    }
  }

  std::vector<bool> dead(n_upper + n_lower, false);
  for (std::size_t e = 0; e < dangling.size(); ++e) {
    if (dangling[e]) dead[groups.find(e)] = true;
  }

  std::vector<Path> out;
  std::vector<std::optional<std::size_t>> slot(n_upper + n_lower);
  for (std::size_t e = 0; e < n_upper + n_lower; ++e) {
    const std::size_t root = groups.find(e);
    if (dead[root]) continue;
    if (!slot[root]) {
      slot[root] = out.size();
      out.emplace_back();
    }
    Path& path = out[*slot[root]];
    if (e < n_upper) {
      path.upper.push_back(e);
    } else {
      path.lower.push_back(e - n_upper);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pullback pullback(const Linking& first, const Linking& second) {
  Pullback pb{to_span(first), to_span(second), paths(first, second), {}, {}};
  const VertexSet apex(pb.paths.size());
  std::vector<InjRel::Pair> to_upper;
  std::vector<InjRel::Pair> to_lower;
  for (std::size_t i = 0; i < pb.paths.size(); ++i) {
    for (std::size_t a : pb.paths[i].upper) to_upper.emplace_back(i, a);
    for (std::size_t b : pb.paths[i].lower) to_lower.emplace_back(i, b);
  }
  pb.p = InjRel(apex, pb.first.apex(), std::move(to_upper));
  pb.q = InjRel(apex, pb.second.apex(), std::move(to_lower));
  return pb;
}

Composite compose_with_loops(const Linking& second, const Linking& first) {
  const Pullback pb = pullback(first, second);
  Linking composite = from_span(compose(pb.first.left_leg, pb.p),
                                compose(pb.second.right_leg, pb.q));
  const std::uint64_t inherited = first.loops() + second.loops();
  if (composite.loops() < inherited) {
    throw InvariantViolation("composite lost inherited loops");
  }
  const std::uint64_t formed = composite.loops() - inherited;
  return Composite{std::move(composite), formed};
}

Linking compose_link(const Linking& second, const Linking& first) {
  return compose_with_loops(second, first).linking;
}

std::uint64_t new_loop_count(const Linking& second, const Linking& first) {
  return compose_with_loops(second, first).new_loops;
}

Linking compose_flat(const Linking& second, const Linking& first) {
  if (first.loops() != 0 || second.loops() != 0) {
    throw PreconditionFailed(
        "loopless composition requires loop-free inputs (got " +
        std::to_string(first.loops()) + " and " +
        std::to_string(second.loops()) + " loops)");
  }
  return flatten(compose_link(second, first));
}

InjRel mediating(const Pullback& pb, const Cone& cone) {
  if (!cone.to_upper.dom().same_carrier(cone.to_lower.dom())) {
    throw InvalidArgument("cone legs have different apexes");
  }
  if (!cone.to_upper.cod().same_carrier(pb.first.apex()) ||
      !cone.to_lower.cod().same_carrier(pb.second.apex())) {
    throw InvalidArgument("cone legs do not land in the link sets");
  }
  const InjRel via_upper = compose(pb.first.right_leg, cone.to_upper);
  const InjRel via_lower = compose(pb.second.left_leg, cone.to_lower);
  if (via_upper.pairs() != via_lower.pairs()) {
    throw InvalidArgument("cone does not commute over the interface");
  }

  std::vector<InjRel::Pair> pairs;
  for (std::size_t d = 0; d < cone.apex().size(); ++d) {
    const Subset upper = cone.to_upper.image(d);
    const Subset lower = cone.to_lower.image(d);
    for (std::size_t i = 0; i < pb.paths.size(); ++i) {
      if (is_subset_of(pb.paths[i].upper, upper) &&
          is_subset_of(pb.paths[i].lower, lower)) {
        pairs.emplace_back(d, i);
      }
    }
  }
  return InjRel(cone.apex(), VertexSet(pb.paths.size()), std::move(pairs));
}

InjRel mediating(const Linking& first, const Linking& second,
                 const Cone& cone) {
  return mediating(pullback(first, second), cone);
}

std::vector<Sync> brute_force_syncs(const Linking& first,
                                    const Linking& second) {
  check_interface(first, second);
  const std::size_t n_upper = apex_size(first);
  const std::size_t n_lower = apex_size(second);
  const std::size_t n = n_upper + n_lower;
  if (n > kBruteForceCap) {
    throw PreconditionFailed("brute-force enumeration over " +
                             std::to_string(n) + " links exceeds the cap of " +
                             std::to_string(kBruteForceCap));
  }

  // Walk all subsets in Gray-code order, tracking how many interface
  // vertices are covered on one side only.
  std::vector<int> balance(first.right().size(), 0);
  std::size_t unbalanced = 0;
  auto toggle = [&](std::size_t e, bool adding) {
    const bool upper = e < n_upper;
    const Subset& feet = upper ? interface_feet(first, e, true)
                               : interface_feet(second, e - n_upper, false);
    const int delta = (upper ? 1 : -1) * (adding ? 1 : -1);
    for (std::size_t y : feet) {
      if (balance[y] != 0) --unbalanced;
      balance[y] += delta;
      if (balance[y] != 0) ++unbalanced;
    }
  };

  auto to_sync = [&](std::uint32_t mask) {
    Sync s;
    for (std::size_t e = 0; e < n; ++e) {
      if (mask & (std::uint32_t{1} << e)) {
        if (e < n_upper) {
          s.upper.push_back(e);
        } else {
          s.lower.push_back(e - n_upper);
        }
      }
    }
    return s;
  };

  std::vector<Sync> out{Sync{}};
  std::uint32_t mask = 0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t i = 1; i < limit; ++i) {
    const auto e = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint32_t bit = std::uint32_t{1} << e;
    const bool adding = (mask & bit) == 0;
    mask ^= bit;
    toggle(e, adding);
    if (unbalanced == 0) out.push_back(to_sync(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sync> minimal_nonempty(const std::vector<Sync>& syncs) {
  auto inside = [](const Sync& a, const Sync& b) {
    return is_subset_of(a.upper, b.upper) && is_subset_of(a.lower, b.lower);
  };
  std::vector<Sync> out;
  for (const Sync& s : syncs) {
    if (s.empty()) continue;
    const bool minimal = std::none_of(
        syncs.begin(), syncs.end(), [&](const Sync& t) {
          return !t.empty() && t != s && inside(t, s);
        });
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace linkcat
