#include "linkcat/families.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "linkcat/compose.hpp"
#include "linkcat/error.hpp"

namespace linkcat {

namespace {

struct FamilyName {
  std::string_view name;
  Family family;
};

constexpr FamilyName kFamilyNames[] = {
    {"link", Family::Link},   {"part", Family::Part},
    {"brau", Family::Brau},   {"tlieb", Family::TLieb},
    {"natplus", Family::NatPlus},
};

// Boundary position of every foot of a link: X left to right, then Y right
// to left.
std::vector<std::size_t> boundary_positions(const Linking& l, const Link& link) {
  const std::size_t nx = l.left().size();
  const std::size_t ny = l.right().size();
  std::vector<std::size_t> pos(link.left.begin(), link.left.end());
  for (std::size_t y : link.right) pos.push_back(nx + (ny - 1 - y));
  std::sort(pos.begin(), pos.end());
  return pos;
}

// Two disjoint sets of points on a circle cross iff, walking once around,
// membership alternates at least four times.
bool cross(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  int runs = 0;
  int current = -1;
  int first = -1;
  while (i < a.size() || j < b.size()) {
    int side;
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      side = 0;
      ++i;
    } else {
      side = 1;
      ++j;
    }
    if (first < 0) first = side;
    if (side != current) {
      ++runs;
      current = side;
    }
  }
  if (runs > 1 && current == first) --runs;
  return runs >= 4;
}

Linking from_points(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<Link> links;
  links.reserve(blocks.size());
  for (const auto& block : blocks) {
    Link link;
    for (std::size_t p : block) {
      if (p < n) {
        link.left.push_back(p);
      } else {
        link.right.push_back(p - n);
      }
    }
    links.push_back(std::move(link));
  }
  return Linking(VertexSet(n), VertexSet(n), std::move(links));
}

void perfect_matchings(std::size_t n, std::vector<bool>& used,
                       std::vector<std::vector<std::size_t>>& blocks,
                       std::vector<Linking>& out) {
  const std::size_t points = 2 * n;
  std::size_t lowest = 0;
  while (lowest < points && used[lowest]) ++lowest;
  if (lowest == points) {
    out.push_back(from_points(n, blocks));
    return;
  }
  used[lowest] = true;
  for (std::size_t partner = lowest + 1; partner < points; ++partner) {
    if (used[partner]) continue;
    used[partner] = true;
    blocks.push_back({lowest, partner});
    perfect_matchings(n, used, blocks, out);
    blocks.pop_back();
    used[partner] = false;
  }
  used[lowest] = false;
}

// Restricted growth strings: point p joins one of the existing blocks or
// opens a new one.
void set_partitions(std::size_t n, std::size_t p,
                    std::vector<std::vector<std::size_t>>& blocks,
                    std::vector<Linking>& out) {
  if (p == 2 * n) {
    out.push_back(from_points(n, blocks));
    return;
  }
  // By index: the recursion may grow `blocks` and move its storage.
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(p);
    set_partitions(n, p + 1, blocks, out);
    blocks[b].pop_back();
  }
  blocks.push_back({p});
  set_partitions(n, p + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

FamilyTag parse_family(std::string_view name) {
  FamilyTag tag;
  constexpr std::string_view kFlat = "-flat";
  if (name.size() > kFlat.size() &&
      name.substr(name.size() - kFlat.size()) == kFlat) {
    tag.loopless = true;
    name.remove_suffix(kFlat.size());
  }
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) {
      tag.family = entry.family;
      return tag;
    }
  }
  throw InvalidArgument("unknown family '" + std::string(name) +
                        "' (expected link, part, brau, tlieb or natplus, "
                        "optionally suffixed with -flat)");
}

std::string to_string(FamilyTag tag) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == tag.family) {
      return std::string(entry.name) + (tag.loopless ? "-flat" : "");
    }
  }
  return "?";
}

bool is_total_linking(const Linking& l) {
  std::size_t covered_left = 0;
  std::size_t covered_right = 0;
  for (const Link& link : l.links()) {
    covered_left += link.left.size();
    covered_right += link.right.size();
  }
  return covered_left == l.left().size() && covered_right == l.right().size();
}

bool is_binary(const Linking& l) {
  return std::all_of(l.links().begin(), l.links().end(),
                     [](const Link& link) { return link.arity() == 2; });
}

bool is_planar(const Linking& l) {
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(l.links().size());
  for (const Link& link : l.links()) blocks.push_back(boundary_positions(l, link));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (cross(blocks[i], blocks[j])) return false;
    }
  }
  return true;
}

std::vector<std::string> membership_failures(const Linking& l, FamilyTag tag) {
  std::vector<std::string> failed;
  if (tag.loopless && l.loops() != 0) failed.emplace_back("loopless");
  const bool wants_total = tag.family == Family::Part ||
                           tag.family == Family::Brau ||
                           tag.family == Family::TLieb;
  const bool wants_binary =
      tag.family == Family::Brau || tag.family == Family::TLieb;
  if (wants_total && !is_total_linking(l)) failed.emplace_back("total");
  if (wants_binary && !is_binary(l)) failed.emplace_back("binary");
  if (tag.family == Family::TLieb && !is_planar(l)) failed.emplace_back("planar");
  if (tag.family == Family::NatPlus &&
      (!l.left().empty() || !l.right().empty())) {
    failed.emplace_back("empty objects");
  }
  return failed;
}

bool member_of(const Linking& l, FamilyTag tag) {
  return membership_failures(l, tag).empty();
}

NaiveComposite naive_compose(const Linking& second, const Linking& first) {
  if (!first.right().same_carrier(second.left())) {
    throw InterfaceMismatch("interface mismatch: " + describe(first.right()) +
                            " vs " + describe(second.left()));
  }
  for (const Linking* l : {&first, &second}) {
    if (!is_total_linking(*l) || l->loops() != 0) {
      throw PreconditionFailed(
          "naive composition takes loop-free total linkings (partitions)");
    }
  }

  const std::size_t nx = first.left().size();
  const std::size_t ny = first.right().size();
  const std::size_t nz = second.right().size();
  const std::size_t n = nx + ny + nz;

  // The relation R+S on X+Y+Z, as an adjacency list; each block is chained.
  std::vector<std::vector<std::size_t>> adjacent(n);
  auto add_block = [&](const Link& link, std::size_t left_offset,
                       std::size_t right_offset) {
    std::vector<std::size_t> members;
    for (std::size_t v : link.left) members.push_back(left_offset + v);
    for (std::size_t v : link.right) members.push_back(right_offset + v);
    for (std::size_t i = 1; i < members.size(); ++i) {
      adjacent[members[i - 1]].push_back(members[i]);
      adjacent[members[i]].push_back(members[i - 1]);
    }
  };
  for (const Link& link : first.links()) add_block(link, 0, nx);
  for (const Link& link : second.links()) add_block(link, nx, nx + ny);

  // Classes of the transitive closure, found by breadth-first search.
  std::vector<bool> seen(n, false);
  std::vector<Link> links;
  std::uint64_t loops = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Link outer;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      if (v < nx) {
        outer.left.push_back(v);
      } else if (v >= nx + ny) {
        outer.right.push_back(v - nx - ny);
      }
      for (std::size_t w : adjacent[v]) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    if (outer.left.empty() && outer.right.empty()) {
      ++loops;
    } else {
      links.push_back(std::move(outer));
    }
  }
  return NaiveComposite{
      Linking(first.left(), second.right(), std::move(links)), loops};
}

std::size_t default_enumeration_cap(Family family) {
  switch (family) {
    case Family::Brau:
      return 5;
    case Family::TLieb:
      return 7;
    case Family::Part:
      return 3;
    default:
      return 0;
  }
}

std::vector<Linking> enumerate(FamilyTag tag, std::size_t n,
                               std::optional<std::size_t> cap) {
  if (!tag.loopless) {
    throw PreconditionFailed("only loopless homsets are finite; use " +
                             to_string(FamilyTag{tag.family, true}));
  }
  if (tag.family != Family::Brau && tag.family != Family::TLieb &&
      tag.family != Family::Part) {
    throw PreconditionFailed("enumeration supports part, brau and tlieb only");
  }
  const std::size_t limit = cap.value_or(default_enumeration_cap(tag.family));
  if (n > limit) {
    throw PreconditionFailed("n = " + std::to_string(n) + " exceeds the " +
                             to_string(tag) + " enumeration cap of " +
                             std::to_string(limit));
  }

  std::vector<Linking> out;
  std::vector<std::vector<std::size_t>> blocks;
  if (tag.family == Family::Part) {
    set_partitions(n, 0, blocks, out);
  } else {
    std::vector<bool> used(2 * n, false);
    perfect_matchings(n, used, blocks, out);
    if (tag.family == Family::TLieb) {
      std::erase_if(out, [](const Linking& l) { return !is_planar(l); });
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TableEntry> multiplication_table(const std::vector<Linking>& elems) {
  if (elems.empty()) return {};
  std::map<std::vector<Link>, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Linking& e = elems[i];
    if (!e.left().same_carrier(e.right()) ||
        !e.left().same_carrier(elems.front().left())) {
      throw InterfaceMismatch("element " + std::to_string(i) +
                              " is not an endo-linking on " +
                              describe(elems.front().left()));
    }
    if (e.loops() != 0) {
      throw PreconditionFailed("element " + std::to_string(i) + " has loops");
    }
    index.emplace(e.links(), i);
  }

  std::vector<TableEntry> table;
  table.reserve(elems.size() * elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Composite c = compose_with_loops(elems[j], elems[i]);
      const auto it = index.find(c.linking.links());
      if (it == index.end()) {
        throw PreconditionFailed("product of elements " + std::to_string(i) +
                                 " and " + std::to_string(j) +
                                 " is not in the set");
      }
      table.push_back(TableEntry{i, j, it->second, c.new_loops});
    }
  }
  return table;
}

}  // namespace linkcat
