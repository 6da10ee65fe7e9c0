#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ifam/constraint.hpp"
#include "ifam/family.hpp"

namespace ifam {

inline constexpr std::uint64_t kDefaultCandidateCap = std::uint64_t{1} << 22;

// The bitset adjacency matrix is m^2 bits; this keeps it under ~512 MiB.
inline constexpr std::uint64_t kMaxAdjacencyCandidates = 65536;

// The reference oracle keeps its vertex sets in one machine word.
inline constexpr std::uint64_t kOracleCandidateCap = 64;

struct SearchOptions {
  bool symmetry_breaking = false;
  bool parallel = false;
  // 0 = one worker per hardware thread (when parallel is set).
  int threads = 0;
  std::optional<std::chrono::milliseconds> time_budget;
  std::optional<std::uint64_t> node_budget;
  // Known valid family used as the starting incumbent; must satisfy the
  // instance's constraint on the same ground set.
  std::optional<SetFamily> lower_bound_seed;
  std::uint64_t candidate_cap = kDefaultCandidateCap;
};

enum class SearchStatus { Exact, BudgetExhausted };

struct SearchResult {
  std::uint64_t max_size = 0;
  SetFamily witness{GroundSet(1)};
  std::uint64_t nodes_explored = 0;
  SearchStatus status = SearchStatus::Exact;
  std::chrono::milliseconds elapsed{0};
};

// Every subset of [n] admitted by the constraint's size window, ordered by
// ascending mask value (bit i = element i+1). Throws InstanceTooLarge when
// the exact count exceeds cap. n must be in [1, 64].
std::vector<SubsetBits> build_candidates(int n, const IntersectionConstraint& constraint,
                                         std::uint64_t cap = kDefaultCandidateCap);

// Maximum-size family among the candidates whose pairwise intersections the
// constraint admits, via branch and bound on the compatibility graph
// (greedy-coloring upper bounds, highest-color-first branching). The
// returned witness is one maximum family, members ascending by mask. With a
// budget the result may be Exact only if the search space was fully
// explored; otherwise status is BudgetExhausted and the incumbent is a
// valid lower-bound witness.
SearchResult max_family(int n, const IntersectionConstraint& constraint,
                        const SearchOptions& options = {});

// Independent reference: Bron-Kerbosch maximal-clique enumeration with
// pivoting, no incumbent pruning, single word per vertex set. Hard cap of
// kOracleCandidateCap candidates, no budgets.
SearchResult brute_force_oracle(int n, const IntersectionConstraint& constraint);

enum class BoundVerdict { Holds, Fails, Unknown };

std::string_view bound_verdict_name(BoundVerdict v);

struct ScanRow {
  int n;
  std::uint64_t max_size;
  mpz_class bound_floor;
  BoundVerdict bound_holds;  // Unknown when the search was not exact
  SearchStatus status;
  std::uint64_t nodes;
  std::uint64_t elapsed_ms;
};

// For each n in [n_from, n_to]: exact (budget permitting) maximum size of an
// s-uniform family with pairwise intersections in [1, k], next to the
// floor of the ratio bound C(n-1, k)/C(s-1, k). Requires 2 <= k, k+2 <= s,
// 1 <= n_from <= n_to <= 64. A seed family in options applies only to rows
// whose ground size matches it.
std::vector<ScanRow> threshold_scan(int s, int k, int n_from, int n_to,
                                    const SearchOptions& options = {});

}  // namespace ifam
