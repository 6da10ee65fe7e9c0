#include "ifam/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "ifam/errors.hpp"

namespace ifam {

void DesignParams::validate() const {
  if (t < 1 || t > s || s > v) throw std::invalid_argument("DesignParams: need 1 <= t <= s <= v");
  if (lambda < 1) throw std::invalid_argument("DesignParams: lambda must be >= 1");
}

int DesignParams::symmetric_point_count(int s, int lambda) {
  if (s < 1 || lambda < 1)
    throw std::invalid_argument("symmetric_point_count: s and lambda must be >= 1");
  if ((s * (s - 1)) % lambda != 0)
    throw std::invalid_argument("symmetric_point_count: lambda does not divide s(s-1)");
  return s * (s - 1) / lambda + 1;
}

namespace {

// Lexicographic enumeration of k-subsets of {lo, .., hi} as ascending
// element vectors. fn(elements) returns false to stop early.
template <typename Fn>
void for_each_combination(int lo, int hi, int k, Fn&& fn) {
  if (k == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  if (hi - lo + 1 < k) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = lo + i;
  while (true) {
    if (!fn(c)) return;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == hi - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

SetFamily projective_plane(int q) {
  constexpr std::array<int, 5> supported{2, 3, 5, 7, 11};
  if (std::find(supported.begin(), supported.end(), q) == supported.end())
    throw UnsupportedParameter("projective_plane: order must be one of 2, 3, 5, 7, 11 (got " +
                               std::to_string(q) + ")");
  const int n = q * q + q + 1;

  // Normalized homogeneous coordinates, fixed enumeration order:
  // (1, a, b) for a, b in [0, q), then (0, 1, b), then (0, 0, 1).
  struct Triple {
    int x, y, z;
  };
  std::vector<Triple> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) points.push_back({1, a, b});
  for (int b = 0; b < q; ++b) points.push_back({0, 1, b});
  points.push_back({0, 0, 1});

  SetFamily lines{GroundSet(n)};
  for (const Triple& line : points) {
    SubsetBits member(n);
    for (int i = 0; i < n; ++i) {
      const Triple& p = points[static_cast<std::size_t>(i)];
      if ((line.x * p.x + line.y * p.y + line.z * p.z) % q == 0) member.set(i + 1);
    }
    lines.add(std::move(member));
  }
  return lines;
}

SetFamily fano_complement() {
  const SetFamily fano = projective_plane(2);
  SetFamily out{GroundSet(fano.ground_size())};
  for (const auto& line : fano.members()) out.add(line.complement());
  return out;
}

SetFamily paley_biplane() {
  constexpr int kModulus = 11;
  constexpr std::array<int, 5> base{1, 3, 4, 5, 9};  // quadratic residues mod 11
  SetFamily out{GroundSet(kModulus)};
  for (int shift = 0; shift < kModulus; ++shift) {
    SubsetBits block(kModulus);
    for (int r : base) block.set((r + shift) % kModulus + 1);
    out.add(std::move(block));
  }
  return out;
}

SetFamily residual(const SetFamily& family, std::size_t block_index) {
  if (block_index >= family.size())
    throw std::invalid_argument("residual: block index out of range");
  const int n = family.ground_size();
  const SubsetBits& dropped = family.member(block_index);
  const int remaining = n - dropped.size();
  if (remaining < 1)
    throw std::invalid_argument("residual: dropped block covers every point");

  // old label -> new label over the surviving points, order preserved
  std::vector<int> new_label(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (int e = 1; e <= n; ++e)
    if (!dropped.test(e)) new_label[static_cast<std::size_t>(e - 1)] = ++next;

  SetFamily out{GroundSet(remaining)};
  std::set<SubsetBits> seen;
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (j == block_index) continue;
    SubsetBits cut(remaining);
    const SubsetBits& b = family.member(j);
    for (int p = b.lowest_pos(); p >= 0; p = b.next_pos(p + 1)) {
      if (!dropped.test_pos(p)) cut.set(new_label[static_cast<std::size_t>(p)]);
    }
    if (!seen.insert(cut).second)
      throw HypothesisError(
          "residual: two blocks coincide after restriction (block " + std::to_string(j) +
          " duplicates an earlier one); the input is not a suitable symmetric design");
    out.add(std::move(cut));
  }
  return out;
}

SetFamily steiner_augment(const SetFamily& family, int t) {
  const DesignCheckResult check = verify_design(family, t, 1);
  if (!check.ok) {
    std::string subset;
    for (std::size_t i = 0; i < check.witness_subset.size(); ++i) {
      if (i) subset += " ";
      subset += std::to_string(check.witness_subset[i]);
    }
    throw HypothesisError("steiner_augment: input does not cover every " + std::to_string(t) +
                          "-subset exactly once ({" + subset + "} is covered " +
                          std::to_string(check.witness_count) + " times)");
  }
  const int n = family.ground_size();
  SetFamily out{GroundSet(n + 1)};
  for (const auto& b : family.members()) {
    SubsetBits grown = SubsetBits::from_elements(n + 1, b.elements());
    grown.set(n + 1);
    out.add(std::move(grown));
  }
  return out;
}

SetFamily d_construction(int k, int d) {
  if (k < 3) throw std::invalid_argument("d_construction: k must be >= 3");
  if (d < 2) throw std::invalid_argument("d_construction: d must be >= 2");
  if ((k - 2) % (d - 1) != 0)
    throw std::invalid_argument("d_construction: (d-1) must divide (k-2)");
  const int n = 2 * k - 2 + (k - 2) / (d - 1);
  const int run = (n - k) / d;

  SetFamily out{GroundSet(n)};
  for_each_combination(2, n, k - 1, [&](const std::vector<int>& tail) {
    SubsetBits m(n);
    m.set(1);
    for (int e : tail) m.set(e);
    out.add(std::move(m));
    return true;
  });
  for (int i = 0; i < d; ++i) {
    SubsetBits block(n);
    for (int e = 2; e <= k; ++e) block.set(e);
    for (int e = k + 1 + i * run; e <= k + (i + 1) * run; ++e) block.set(e);
    out.add(std::move(block));
  }
  return out;
}

SetFamily all_k_subsets(int n, int k) {
  GroundSet g(n);
  if (k < 1 || k > n) throw std::invalid_argument("all_k_subsets: k must be in [1, n]");
  SetFamily out{g};
  for_each_combination(1, n, k, [&](const std::vector<int>& c) {
    out.add(SubsetBits::from_elements(n, c));
    return true;
  });
  return out;
}

SetFamily star_family(int n, int s) {
  GroundSet g(n);
  if (s < 1 || s > n) throw std::invalid_argument("star_family: s must be in [1, n]");
  SetFamily out{g};
  for_each_combination(2, n, s - 1, [&](const std::vector<int>& tail) {
    SubsetBits m(n);
    m.set(1);
    for (int e : tail) m.set(e);
    out.add(std::move(m));
    return true;
  });
  return out;
}

DesignCheckResult verify_design(const SetFamily& family, int t, std::uint64_t lambda) {
  const int n = family.ground_size();
  if (t < 1 || t > n) throw std::invalid_argument("verify_design: t must be in [1, n]");
  if (lambda < 1) throw std::invalid_argument("verify_design: lambda must be >= 1");
  if (family.empty()) throw std::invalid_argument("verify_design: empty family");
  const int s = family.member(0).size();
  for (const auto& b : family.members())
    if (b.size() != s)
      throw std::invalid_argument("verify_design: family is not uniform");

  DesignCheckResult result{true, {}, 0};
  for_each_combination(1, n, t, [&](const std::vector<int>& subset) {
    const SubsetBits probe = SubsetBits::from_elements(n, subset);
    std::uint64_t count = 0;
    for (const auto& b : family.members())
      if (probe.is_subset_of(b)) ++count;
    if (count != lambda) {
      result = DesignCheckResult{false, subset, count};
      return false;
    }
    return true;
  });
  return result;
}

QuasiSymmetricReport verify_quasi_symmetric(const SetFamily& family) {
  if (family.size() < 2)
    throw std::invalid_argument("verify_quasi_symmetric: need at least two members");
  std::set<int> sizes;
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      sizes.insert(SubsetBits::intersection_size(members[i], members[j]));
  QuasiSymmetricReport report;
  report.intersection_sizes.assign(sizes.begin(), sizes.end());
  report.quasi_symmetric = sizes.size() <= 2;
  return report;
}

}  // namespace ifam
