#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifam {

// Admissible pairwise-intersection sizes plus the member-size window.
//
// Two forms: a contiguous interval [lmin, lmax], or an explicit list of
// allowed sizes. Values above size_max can never occur as intersection
// sizes, so the constructor normalizes them away (clamps lmax, drops list
// entries) rather than rejecting; after normalization an empty allowed set
// simply means no two members may coexist. Genuinely malformed input
// (negative sizes, lmin > lmax, size_min < 1 or > size_max) throws.
class IntersectionConstraint {
 public:
  static IntersectionConstraint interval(int lmin, int lmax, int size_min, int size_max) {
    check_window(size_min, size_max);
    if (lmin < 0) throw std::invalid_argument("IntersectionConstraint: lmin < 0");
    if (lmin > lmax) throw std::invalid_argument("IntersectionConstraint: lmin > lmax");
    IntersectionConstraint c;
    c.size_min_ = size_min;
    c.size_max_ = size_max;
    c.is_interval_ = true;
    c.lmin_ = lmin;
    c.lmax_ = std::min(lmax, size_max);
    for (int v = c.lmin_; v <= c.lmax_; ++v) c.allowed_.push_back(v);
    return c;
  }

  static IntersectionConstraint explicit_set(std::vector<int> sizes, int size_min,
                                             int size_max) {
    check_window(size_min, size_max);
    for (int v : sizes)
      if (v < 0) throw std::invalid_argument("IntersectionConstraint: negative size in list");
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::erase_if(sizes, [size_max](int v) { return v > size_max; });
    IntersectionConstraint c;
    c.size_min_ = size_min;
    c.size_max_ = size_max;
    c.is_interval_ = false;
    c.allowed_ = std::move(sizes);
    return c;
  }

  bool admits(int intersection_size) const {
    if (is_interval_) return intersection_size >= lmin_ && intersection_size <= lmax_;
    return std::binary_search(allowed_.begin(), allowed_.end(), intersection_size);
  }

  bool size_ok(int member_size) const {
    return member_size >= size_min_ && member_size <= size_max_;
  }

  int size_min() const { return size_min_; }
  int size_max() const { return size_max_; }
  bool is_interval() const { return is_interval_; }

  // Interval bounds after normalization; meaningful only when is_interval().
  int lmin() const { return lmin_; }
  int lmax() const { return lmax_; }

  // Sorted, deduplicated, all <= size_max. For intervals this is the
  // materialized range.
  const std::vector<int>& allowed() const { return allowed_; }

  std::string describe() const {
    std::string s;
    if (is_interval_) {
      s = "interval [" + std::to_string(lmin_) + ", " + std::to_string(lmax_) + "]";
    } else {
      s = "set {";
      for (std::size_t i = 0; i < allowed_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(allowed_[i]);
      }
      s += "}";
    }
    s += ", sizes [" + std::to_string(size_min_) + ", " + std::to_string(size_max_) + "]";
    return s;
  }

  bool operator==(const IntersectionConstraint&) const = default;

 private:
  IntersectionConstraint() = default;

  static void check_window(int size_min, int size_max) {
    if (size_min < 1) throw std::invalid_argument("IntersectionConstraint: size_min < 1");
    if (size_min > size_max)
      throw std::invalid_argument("IntersectionConstraint: size_min > size_max");
  }

  int size_min_ = 1;
  int size_max_ = 1;
  bool is_interval_ = true;
  int lmin_ = 0;
  int lmax_ = 0;
  std::vector<int> allowed_;
};

}  // namespace ifam
