#include "ifam/analysis.hpp"

#include <stdexcept>

namespace ifam {

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IntersectionSize: return "intersection-size";
    case ViolationKind::MemberSize: return "member-size";
    case ViolationKind::Duplicate: return "duplicate";
  }
  return "unknown";
}

ValidationReport validate_family(const SetFamily& family,
                                 const IntersectionConstraint& constraint) {
  const auto& members = family.members();
  const std::size_t m = members.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!constraint.size_ok(members[i].size()))
      return {false, Violation{i, i, ViolationKind::MemberSize}};
    for (std::size_t j = i + 1; j < m; ++j) {
      if (members[i] == members[j])
        return {false, Violation{i, j, ViolationKind::Duplicate}};
      if (!constraint.admits(SubsetBits::intersection_size(members[i], members[j])))
        return {false, Violation{i, j, ViolationKind::IntersectionSize}};
    }
  }
  return {true, std::nullopt};
}

SpectrumReport intersection_spectrum(const SetFamily& family) {
  SpectrumReport report;
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    ++report.size_histogram[members[i].size()];
    for (std::size_t j = i + 1; j < members.size(); ++j)
      ++report.intersection_counts[SubsetBits::intersection_size(members[i], members[j])];
  }
  return report;
}

std::optional<int> find_common_element(const SetFamily& family) {
  if (family.empty())
    throw std::invalid_argument("find_common_element: empty family");
  SubsetBits common = family.member(0);
  for (std::size_t i = 1; i < family.size(); ++i) common &= family.member(i);
  const int pos = common.lowest_pos();
  if (pos < 0) return std::nullopt;
  return pos + 1;
}

std::optional<std::pair<int, int>> find_hitting_pair(const SetFamily& family) {
  if (family.empty())
    throw std::invalid_argument("find_hitting_pair: empty family");
  const int n = family.ground_size();
  // {u, v} hits every member iff v lies in the intersection of the members
  // missing u (vacuously all of [n] when nothing misses u). Scanning u
  // ascending and taking the least valid v > u yields the lexicographic
  // minimum: any pair with a smaller first coordinate would have been found
  // at that earlier u.
  for (int u = 1; u <= n; ++u) {
    SubsetBits rest = SubsetBits::full(n);
    for (const auto& m : family.members())
      if (!m.test(u)) rest &= m;
    if (const int p = rest.next_pos(u); p >= 0) return std::make_pair(u, p + 1);
  }
  return std::nullopt;
}

}  // namespace ifam
