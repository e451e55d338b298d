#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkcat/linking.hpp"

namespace linkcat {

enum class Family { Link, Part, Brau, TLieb, NatPlus };

/// A subcategory of linkings: a family, optionally restricted to its
/// loopless variant.
struct FamilyTag {
  Family family = Family::Link;
  bool loopless = false;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Parses "link", "part", "brau", "tlieb", "natplus", each optionally with a
/// "-flat" suffix for the loopless variant. Throws InvalidArgument.
FamilyTag parse_family(std::string_view name);
std::string to_string(FamilyTag tag);

/// Every vertex of both objects lies in some link.
bool is_total_linking(const Linking& l);

/// Every link has exactly two feet. Loops are not links, so loops-only
/// linkings qualify.
bool is_binary(const Linking& l);

/// No two links cross when X is laid out left to right along the top and Y
/// right to left along the bottom of a rectangle, i.e. the links form a
/// non-crossing partition of the boundary circle.
bool is_planar(const Linking& l);

/// Names of the restrictions of `tag` that `l` violates, in the order
/// loopless, total, binary, planar, objects. Empty iff l is a member.
std::vector<std::string> membership_failures(const Linking& l, FamilyTag tag);

bool member_of(const Linking& l, FamilyTag tag);

/// Result of the classical composite of total linkings.
struct NaiveComposite {
  Linking linking;
  std::uint64_t loops_formed = 0;
};

/// The textbook composite of partition diagrams: take the equivalence
/// closure of both partitions on X+Y+Z, restrict to X+Z, and count the
/// classes lying wholly inside Y. Inputs must be total and loopless;
/// throws PreconditionFailed otherwise, InterfaceMismatch if Y differs.
///
/// Shares no code with compose_link and serves as its oracle.
NaiveComposite naive_compose(const Linking& second, const Linking& first);

/// Default enumeration cap for a family.
std::size_t default_enumeration_cap(Family family);

/// All loopless endo-linkings on n vertices of the family (Part, Brau or
/// TLieb), sorted and duplicate-free. Throws PreconditionFailed if n
/// exceeds the cap (default_enumeration_cap unless overridden), or for
/// other families.
std::vector<Linking> enumerate(FamilyTag tag, std::size_t n,
                               std::optional<std::size_t> cap = std::nullopt);

struct TableEntry {
  std::size_t left = 0;   // i
  std::size_t right = 0;  // j
  std::size_t product = 0;
  std::uint64_t loops = 0;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Multiplication table of a family of loopless endo-linkings. The product
/// i.j stacks element i on top of element j, i.e. compose_link(e[j], e[i]);
/// `product` indexes its loopless part and `loops` counts the loops
/// formed. Entries are ordered by (i, j). Throws InterfaceMismatch for
/// mixed objects, PreconditionFailed for looped elements or when a product
/// falls outside the set.
std::vector<TableEntry> multiplication_table(const std::vector<Linking>& elems);

}  // namespace linkcat
