#include "linkcat/irel.hpp"

#include <algorithm>
#include <set>

#include "linkcat/error.hpp"

namespace linkcat {

VertexSet::VertexSet(std::vector<std::string> labels)
    : size_(labels.size()), labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw InvalidArgument("duplicate vertex label '" + l + "'");
    }
  }
}

std::string VertexSet::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return std::to_string(i);
}

std::string describe(const VertexSet& v) {
  return "{" + std::to_string(v.size()) + " vertices}";
}

InjRel::InjRel(VertexSet dom, VertexSet cod, std::vector<Pair> pairs)
    : dom_(std::move(dom)), cod_(std::move(cod)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  preimage_.assign(cod_.size(), std::nullopt);
  for (const auto& [a, z] : pairs_) {
    if (a >= dom_.size()) {
      throw InvalidArgument("relation pair (" + std::to_string(a) + ", " +
                            std::to_string(z) + "): domain index out of range " +
                            describe(dom_));
    }
    if (z >= cod_.size()) {
      throw InvalidArgument("relation pair (" + std::to_string(a) + ", " +
                            std::to_string(z) +
                            "): codomain index out of range " + describe(cod_));
    }
    if (preimage_[z]) {
      throw InvalidArgument("relation is not injective: codomain element " +
                            std::to_string(z) + " has preimages " +
                            std::to_string(*preimage_[z]) + " and " +
                            std::to_string(a));
    }
    preimage_[z] = a;
  }
}

bool InjRel::related(std::size_t a, std::size_t z) const {
  return z < preimage_.size() && preimage_[z] == a;
}

Subset InjRel::image(std::size_t a) const {
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{a, 0});
  Subset out;
  for (auto it = lo; it != pairs_.end() && it->first == a; ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::optional<std::size_t> InjRel::preimage(std::size_t z) const {
  if (z >= preimage_.size()) return std::nullopt;
  return preimage_[z];
}

InjRel identity(const VertexSet& x) {
  std::vector<InjRel::Pair> pairs;
  pairs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) pairs.emplace_back(i, i);
  return InjRel(x, x, std::move(pairs));
}

InjRel compose(const InjRel& s, const InjRel& r) {
  if (!r.cod().same_carrier(s.dom())) {
    throw InterfaceMismatch("cannot compose: codomain " + describe(r.cod()) +
                            " does not match domain " + describe(s.dom()));
  }
  std::vector<InjRel::Pair> pairs;
  for (const auto& [x, y] : r.pairs()) {
    for (std::size_t z : s.image(y)) pairs.emplace_back(x, z);
  }
  return InjRel(r.dom(), s.cod(), std::move(pairs));
}

Subset image(const InjRel& r, const Subset& alpha) {
  std::vector<std::size_t> out;
  for (std::size_t a : alpha) {
    if (a >= r.dom().size()) {
      throw InvalidArgument("subset element " + std::to_string(a) +
                            " outside domain " + describe(r.dom()));
    }
    for (std::size_t z : r.image(a)) out.push_back(z);
  }
  return make_subset(std::move(out));
}

bool is_total(const InjRel& r) {
  std::vector<bool> hit(r.dom().size(), false);
  for (const auto& p : r.pairs()) hit[p.first] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_monic(const InjRel& m) { return is_total(m); }

InjRel copair(const InjRel& r, const InjRel& s) {
  if (!r.dom().same_carrier(s.dom())) {
    throw InterfaceMismatch("cannot copair: domains " + describe(r.dom()) +
                            " and " + describe(s.dom()) + " differ");
  }
  const DisjointUnion sum{r.cod().size(), s.cod().size()};
  std::vector<InjRel::Pair> pairs;
  pairs.reserve(r.pairs().size() + s.pairs().size());
  for (const auto& [a, m] : r.pairs()) pairs.emplace_back(a, sum.inl(m));
  for (const auto& [a, n] : s.pairs()) pairs.emplace_back(a, sum.inr(n));
  return InjRel(r.dom(), sum.carrier(), std::move(pairs));
}

}  // namespace linkcat
