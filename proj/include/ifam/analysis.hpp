#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "ifam/constraint.hpp"
#include "ifam/family.hpp"

namespace ifam {

enum class ViolationKind { IntersectionSize, MemberSize, Duplicate };

std::string_view violation_kind_name(ViolationKind kind);

// index_i == index_j flags a member-size violation of that single member;
// otherwise index_i < index_j and the pair violates.
struct Violation {
  std::size_t index_i;
  std::size_t index_j;
  ViolationKind kind;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool valid;
  std::optional<Violation> first_violation;
};

// Scans members in index order, checking each member's size before any pair
// it leads, so the reported violation is the lexicographically first (i, j)
// with i <= j. For a violating pair that is also a duplicate, Duplicate wins.
ValidationReport validate_family(const SetFamily& family,
                                 const IntersectionConstraint& constraint);

struct SpectrumReport {
  // intersection size -> number of unordered member pairs realizing it
  std::map<int, std::uint64_t> intersection_counts;
  // member size -> number of members
  std::map<int, std::uint64_t> size_histogram;
};

SpectrumReport intersection_spectrum(const SetFamily& family);

// Smallest element contained in every member; empty family throws
// std::invalid_argument.
std::optional<int> find_common_element(const SetFamily& family);

// Lexicographically smallest pair (u, v) with u < v such that every member
// contains u or v. Pairs induced by a common element count. Empty family
// throws std::invalid_argument.
std::optional<std::pair<int, int>> find_hitting_pair(const SetFamily& family);

}  // namespace ifam
