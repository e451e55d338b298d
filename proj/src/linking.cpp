#include "linkcat/linking.hpp"

#include <algorithm>
#include <string>

#include "linkcat/error.hpp"

namespace linkcat {

namespace {

void check_feet(Subset& feet, const VertexSet& side, const char* side_name,
                std::vector<bool>& used) {
  feet = make_subset(std::move(feet));
  for (std::size_t v : feet) {
    if (v >= side.size()) {
      throw InvalidArgument(std::string(side_name) + " vertex " +
                            std::to_string(v) + " out of range " +
                            describe(side));
    }
    if (used[v]) {
      throw InvalidArgument(std::string(side_name) + " vertex " +
                            std::to_string(v) + " belongs to two links");
    }
    used[v] = true;
  }
}

std::optional<std::size_t> find_owner(const std::vector<Link>& links,
                                      std::size_t v, bool left_side) {
  for (std::size_t i = 0; i < links.size(); ++i) {
    const Subset& feet = left_side ? links[i].left : links[i].right;
    if (contains(feet, v)) return i;
  }
  return std::nullopt;
}

}  // namespace

Linking::Linking(VertexSet left, VertexSet right, std::vector<Link> links,
                 std::uint64_t loops)
    : left_(std::move(left)),
      right_(std::move(right)),
      links_(std::move(links)),
      loops_(loops) {
  std::vector<bool> used_left(left_.size(), false);
  std::vector<bool> used_right(right_.size(), false);
  for (Link& link : links_) {
    check_feet(link.left, left_, "left", used_left);
    check_feet(link.right, right_, "right", used_right);
    if (link.left.empty() && link.right.empty()) {
      throw InvalidArgument("link with empty footprint; count it as a loop");
    }
  }
  const std::size_t offset = left_.size();
  auto least_foot = [offset](const Link& l) {
    return l.left.empty() ? offset + l.right.front() : l.left.front();
  };
  std::sort(links_.begin(), links_.end(), [&](const Link& a, const Link& b) {
    return least_foot(a) < least_foot(b);
  });
}

std::optional<std::size_t> Linking::left_owner(std::size_t x) const {
  return find_owner(links_, x, true);
}

std::optional<std::size_t> Linking::right_owner(std::size_t y) const {
  return find_owner(links_, y, false);
}

Linking from_span(const InjRel& f, const InjRel& g) {
  if (!f.dom().same_carrier(g.dom())) {
    throw InterfaceMismatch("span legs have different apexes " +
                            describe(f.dom()) + " and " + describe(g.dom()));
  }
  std::vector<Link> links;
  std::uint64_t loops = 0;
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    Link link{f.image(a), g.image(a)};
    if (link.left.empty() && link.right.empty()) {
      ++loops;
    } else {
      links.push_back(std::move(link));
    }
  }
  return Linking(f.cod(), g.cod(), std::move(links), loops);
}

Span to_span(const Linking& l) {
  const VertexSet apex(l.links().size() + l.loops());
  std::vector<InjRel::Pair> f;
  std::vector<InjRel::Pair> g;
  for (std::size_t a = 0; a < l.links().size(); ++a) {
    for (std::size_t x : l.links()[a].left) f.emplace_back(a, x);
    for (std::size_t y : l.links()[a].right) g.emplace_back(a, y);
  }
  return Span{InjRel(apex, l.left(), std::move(f)),
              InjRel(apex, l.right(), std::move(g))};
}

Linking identity_linking(const VertexSet& x) {
  std::vector<Link> links;
  links.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) links.push_back(Link{{i}, {i}});
  return Linking(x, x, std::move(links));
}

bool is_isomorphic(const Linking& a, const Linking& b) {
  return a.left().same_carrier(b.left()) &&
         a.right().same_carrier(b.right()) && a.loops() == b.loops() &&
         a.links() == b.links();
}

Linking flatten(const Linking& l) {
  return Linking(l.left(), l.right(), l.links(), 0);
}

Linking add_loops(const Linking& l, std::uint64_t k) {
  return Linking(l.left(), l.right(), l.links(), l.loops() + k);
}

}  // namespace linkcat
