#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifam/subset_bits.hpp"

namespace ifam {

// Verification workloads run on multi-word masks up to this universe size.
inline constexpr int kMaxGroundSize = 4096;
// Exhaustive search keeps every candidate in one word.
inline constexpr int kMaxSearchGroundSize = 64;

// The ground set [n] = {1, ..., n}.
struct GroundSet {
  int n;

  explicit GroundSet(int n_in) : n(n_in) {
    if (n < 1 || n > kMaxGroundSize)
      throw std::invalid_argument("GroundSet: n must be in [1, " +
                                  std::to_string(kMaxGroundSize) + "]");
  }
};

// A ground-set size plus an ordered list of members.
//
// The member list is a list, not a set: repeated members are representable
// and it is validate_family's job to report them. Every member must live on
// this family's ground set; mixing universes is a structural error and throws
// immediately.
class SetFamily {
 public:
  explicit SetFamily(GroundSet ground) : n_(ground.n) {}

  SetFamily(GroundSet ground, std::vector<SubsetBits> members) : n_(ground.n) {
    for (auto& m : members) check_universe(m);
    members_ = std::move(members);
  }

  int ground_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const SubsetBits& member(std::size_t i) const { return members_.at(i); }
  const std::vector<SubsetBits>& members() const { return members_; }

  void add(SubsetBits m) {
    check_universe(m);
    members_.push_back(std::move(m));
  }

  void add_elements(std::span<const int> elements) {
    members_.push_back(SubsetBits::from_elements(n_, elements));
  }

  void add_elements(std::initializer_list<int> elements) {
    members_.push_back(SubsetBits::from_elements(n_, elements));
  }

  bool operator==(const SetFamily&) const = default;

 private:
  void check_universe(const SubsetBits& m) const {
    if (m.universe() != n_)
      throw std::invalid_argument("SetFamily: member ground set mismatch (got " +
                                  std::to_string(m.universe()) + ", family has " +
                                  std::to_string(n_) + ")");
  }

  int n_;
  std::vector<SubsetBits> members_;
};

// permutation[i] is the image of element i+1; must be a bijection on [n].
// Member order is preserved.
SetFamily relabel(const SetFamily& family, std::span<const int> permutation);

// Text format:
//   - '#' starts a comment line; blank lines are ignored
//   - first content line: n=<ground size>
//   - each further content line: one member as strictly increasing 1-based
//     elements separated by whitespace
// Serialization emits exactly this shape with single spaces, so
// parse(serialize(f)) == f bit for bit. An empty member has no text form
// (blank lines are skips), so serializing one throws.
SetFamily parse_family(std::string_view text);
std::string serialize_family(const SetFamily& family);

SetFamily load_family(const std::string& path);
void save_family(const SetFamily& family, const std::string& path);

}  // namespace ifam
