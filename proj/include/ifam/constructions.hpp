#pragma once

#include <cstdint>
#include <vector>

#include "ifam/family.hpp"

namespace ifam {

// Parameters of a t-(v, s, lambda) design: v points, blocks of size s, every
// t-subset of points in exactly lambda blocks.
struct DesignParams {
  int t;
  int v;
  int s;
  int lambda;

  // 1 <= t <= s <= v and lambda >= 1.
  void validate() const;

  // Point count of a symmetric 2-design with block size s and index lambda:
  // s(s-1)/lambda + 1. Requires the division to be exact.
  static int symmetric_point_count(int s, int lambda);
};

struct DesignCheckResult {
  bool ok;
  // When !ok: the first t-subset (lexicographically, as ascending elements)
  // whose cover count differs from lambda, and that count.
  std::vector<int> witness_subset;
  std::uint64_t witness_count = 0;
};

struct QuasiSymmetricReport {
  bool quasi_symmetric;
  // Distinct pairwise intersection sizes, ascending.
  std::vector<int> intersection_sizes;
};

// Lines of the projective plane of prime order q as a block family on
// q^2 + q + 1 points. Supported q: 2, 3, 5, 7, 11; anything else throws
// UnsupportedParameter.
SetFamily projective_plane(int q);

// Complements of the lines of projective_plane(2): seven 4-subsets of [7],
// any two meeting in exactly 2 points.
SetFamily fano_complement();

// The 2-(11, 5, 2) design generated by translating the difference set
// {1, 3, 4, 5, 9} mod 11.
SetFamily paley_biplane();

// Drop the chosen block, restrict every other block to the surviving
// points, and relabel those points 1..N preserving order. Duplicate
// surviving blocks mean the input was not a suitable symmetric design and
// raise HypothesisError.
SetFamily residual(const SetFamily& family, std::size_t block_index);

// Adjoin one new point (n+1) to every block. The input must be a Steiner
// system for the given t (uniform, every t-subset covered exactly once);
// a failed check raises HypothesisError.
SetFamily steiner_augment(const SetFamily& family, int t);

// Mixed-size intersecting family on n = 2k-2 + (k-2)/(d-1) points: every
// k-subset of [n] containing element 1, followed by the d blocks
// {2..k} + (i-th interval of {k+1..n} split into d equal runs).
// Requires k >= 3, d >= 2, and (d-1) | (k-2).
SetFamily d_construction(int k, int d);

// All k-subsets of [n], ordered lexicographically by element list.
SetFamily all_k_subsets(int n, int k);

// All s-subsets of [n] containing element 1, lexicographic.
SetFamily star_family(int n, int s);

// Exhaustive check that every t-subset of points lies in exactly lambda
// blocks. Requires a uniform family, 1 <= t <= n, lambda >= 1. Stops at the
// first violating t-subset.
DesignCheckResult verify_design(const SetFamily& family, int t, std::uint64_t lambda);

// A uniform family is quasi-symmetric when its distinct pairwise
// intersection sizes number at most two. Requires at least two members.
QuasiSymmetricReport verify_quasi_symmetric(const SetFamily& family);

}  // namespace ifam
