#include "linkcat/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace linkcat::io {

using nlohmann::json;

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  return pointer + "/" + key;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

std::size_t as_index(const json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw FormatError(pointer, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

VertexSet vertex_set_from_json(const json& j, const std::string& pointer) {
  if (j.is_number()) return VertexSet(as_index(j, pointer));
  if (!j.is_array()) {
    throw FormatError(pointer, "expected a vertex count or a list of labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw FormatError(child(pointer, i), "expected a label string");
    }
    labels.push_back(j[i].get<std::string>());
  }
  try {
    return VertexSet(std::move(labels));
  } catch (const InvalidArgument& e) {
    throw FormatError(pointer, e.what());
  }
}

json vertex_set_to_json(const VertexSet& v) {
  if (v.has_labels()) return v.labels();
  return v.size();
}

Subset feet_from_json(const json& j, const std::string& pointer,
                      const VertexSet& side, std::vector<bool>& used) {
  if (!j.is_array()) throw FormatError(pointer, "expected a list of vertices");
  Subset feet;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(pointer, i);
    const std::size_t v = as_index(j[i], at);
    if (v >= side.size()) {
      throw FormatError(at, "vertex " + std::to_string(v) + " out of range " +
                                describe(side));
    }
    if (used[v]) {
      throw FormatError(at, "vertex " + std::to_string(v) +
                                " already belongs to a link");
    }
    used[v] = true;
    feet.push_back(v);
  }
  return feet;
}

void reject_unknown(const json& j, const std::string& pointer,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return key == k; });
    if (!known) throw FormatError(child(pointer, key), "unknown member");
  }
}

const json& member(const json& j, const std::string& pointer,
                   const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(child(pointer, key), "missing member");
  return *it;
}

}  // namespace

json to_json(const Linking& l) {
  json links = json::array();
  for (const Link& link : l.links()) {
    links.push_back(json{{"left", link.left}, {"right", link.right}});
  }
  return json{{"left", vertex_set_to_json(l.left())},
              {"right", vertex_set_to_json(l.right())},
              {"links", std::move(links)},
              {"loops", l.loops()}};
}

Linking linking_from_json(const json& j) {
  const std::string root;
  if (!j.is_object()) throw FormatError("/", "expected a linking object");
  reject_unknown(j, root, {"left", "right", "links", "loops", "newLoops"});
  VertexSet left = vertex_set_from_json(member(j, root, "left"), "/left");
  VertexSet right = vertex_set_from_json(member(j, root, "right"), "/right");

  std::vector<Link> links;
  const auto links_it = j.find("links");
  if (links_it != j.end()) {
    if (!links_it->is_array()) throw FormatError("/links", "expected a list");
    std::vector<bool> used_left(left.size(), false);
    std::vector<bool> used_right(right.size(), false);
    for (std::size_t i = 0; i < links_it->size(); ++i) {
      const json& lj = (*links_it)[i];
      const std::string at = child("/links", i);
      if (!lj.is_object()) throw FormatError(at, "expected a link object");
      reject_unknown(lj, at, {"left", "right"});
      Link link;
      if (lj.contains("left")) {
        link.left = feet_from_json(lj["left"], child(at, "left"), left, used_left);
      }
      if (lj.contains("right")) {
        link.right =
            feet_from_json(lj["right"], child(at, "right"), right, used_right);
      }
      if (link.left.empty() && link.right.empty()) {
        throw FormatError(at, "link has no vertices; count it under \"loops\"");
      }
      links.push_back(std::move(link));
    }
  }

  std::uint64_t loops = 0;
  if (const auto it = j.find("loops"); it != j.end()) {
    loops = as_index(*it, "/loops");
  }
  return Linking(std::move(left), std::move(right), std::move(links), loops);
}

json to_json(const mll::ProofNet& net) {
  json axioms = json::array();
  for (const auto& [u, v] : net.axiom_pairs()) axioms.push_back({u, v});
  return json{{"source", mll::to_string(net.source())},
              {"target", mll::to_string(net.target())},
              {"axioms", std::move(axioms)}};
}

mll::ProofNet net_from_json(const json& j, mll::NetCheck check) {
  const std::string root;
  if (!j.is_object()) throw FormatError("/", "expected a proof net object");
  reject_unknown(j, root, {"source", "target", "axioms"});
  auto formula = [&](const char* key) {
    const json& f = member(j, root, key);
    if (!f.is_string()) throw FormatError(child(root, key), "expected a formula");
    try {
      return mll::parse_formula(f.get<std::string>());
    } catch (const ParseError& e) {
      throw FormatError(child(root, key), e.what());
    }
  };
  mll::Formula source = formula("source");
  mll::Formula target = formula("target");

  const json& aj = member(j, root, "axioms");
  if (!aj.is_array()) throw FormatError("/axioms", "expected a list of pairs");
  std::vector<mll::Axiom> axioms;
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const std::string at = child("/axioms", i);
    if (!aj[i].is_array() || aj[i].size() != 2) {
      throw FormatError(at, "expected a pair of leaf indices");
    }
    axioms.emplace_back(as_index(aj[i][0], child(at, 0)),
                        as_index(aj[i][1], child(at, 1)));
  }
  try {
    return mll::ProofNet::from_axioms(std::move(source), std::move(target),
                                      axioms, check);
  } catch (const InvalidArgument& e) {
    throw FormatError("/axioms", e.what());
  }
}

json enumeration_to_json(const std::vector<Linking>& elements,
                         const std::vector<TableEntry>* table) {
  json out;
  json elems = json::array();
  for (const Linking& l : elements) elems.push_back(to_json(l));
  out["elements"] = std::move(elems);
  if (table != nullptr) {
    json rows = json::array();
    for (const TableEntry& e : *table) {
      rows.push_back({e.left, e.right, e.product, e.loops});
    }
    out["table"] = std::move(rows);
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError(at, e.what());
  }
}

std::vector<mll::Axiom> parse_axiom_list(std::string_view text) {
  std::vector<mll::Axiom> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto number = [&]() -> std::size_t {
    skip_space();
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos, "expected a leaf index");
    }
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t digit = static_cast<std::size_t>(text[pos] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) {
        throw ParseError(pos, "leaf index too large");
      }
      value = value * 10 + digit;
      ++pos;
    }
    skip_space();
    return value;
  };
  skip_space();
  if (pos == text.size()) return out;
  while (true) {
    const std::size_t u = number();
    if (pos == text.size() || text[pos] != '-') throw ParseError(pos, "expected '-'");
    ++pos;
    const std::size_t v = number();
    out.emplace_back(u, v);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace linkcat::io
