#include "ifam/cover.hpp"

#include <optional>
#include <set>
#include <string>

#include "ifam/analysis.hpp"
#include "ifam/errors.hpp"

namespace ifam {

namespace {

std::optional<std::size_t> first_member_missing(const SetFamily& family, int a) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!family.member(i).test(a)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_member_missing_both(const SetFamily& family, int a, int b) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const SubsetBits& m = family.member(i);
    if (!m.test(a) && !m.test(b)) return i;
  }
  return std::nullopt;
}

}  // namespace

TripleCoverResult triple_cover(const SetFamily& family) {
  if (family.empty()) throw HypothesisError("triple_cover: empty family");
  const int n = family.ground_size();

  for (std::size_t i = 0; i < family.size(); ++i)
    if (family.member(i).size() < 3)
      throw HypothesisError("triple_cover: member " + std::to_string(i) +
                            " has fewer than 3 elements");

  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!family.member(i).intersects(family.member(j)))
        throw HypothesisError("triple_cover: members " + std::to_string(i) + " and " +
                              std::to_string(j) + " are disjoint");

  if (auto e = find_common_element(family))
    throw HypothesisError("triple_cover: common element " + std::to_string(*e) +
                          " lies in every member");

  if (auto pair = find_hitting_pair(family))
    throw HypothesisError("triple_cover: hitting pair {" + std::to_string(pair->first) + ", " +
                          std::to_string(pair->second) + "} meets every member");

  TripleCoverResult result{SetFamily{GroundSet(n)}, {}};
  std::set<SubsetBits> emitted;
  const SubsetBits& base = family.member(0);
  for (int a : base.elements()) {
    const std::size_t bi = *first_member_missing(family, a);
    for (int b : family.member(bi).elements()) {
      const std::size_t ci = *first_member_missing_both(family, a, b);
      for (int c : family.member(ci).elements()) {
        SubsetBits triple = SubsetBits::from_elements(n, {a, b, c});
        if (!emitted.insert(triple).second) continue;
        result.triples.add(std::move(triple));
        result.trace.push_back(TripleTrace{a, bi, b, ci, c});
      }
    }
  }
  return result;
}

}  // namespace ifam
