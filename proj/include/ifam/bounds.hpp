#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ifam {

// C(n, k) exactly; 0 when k < 0 or k > n. n must be >= 0.
mpz_class binomial(long long n, long long k);

mpz_class factorial(long long n);

enum class TheoremId { Ekr, Rcw, FranklWilson, Snevily, Thm15, Thm16 };

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct BoundParams {
  std::optional<long long> n;
  std::optional<long long> s;
  std::optional<long long> k;
};

// A named hypothesis together with whether it holds for the given
// parameters. Evaluation is exact integer arithmetic throughout; no
// floating point is involved anywhere in this module.
struct Condition {
  std::string name;
  bool holds;

  bool operator==(const Condition&) const = default;
};

// value is canonical (lowest terms, positive denominator); floor is
// floor(value). applicable is the conjunction of the condition flags: the
// numeric value is always computed, but it only bounds anything when the
// hypotheses hold.
struct BoundReport {
  TheoremId theorem;
  BoundParams params;
  mpq_class value;
  mpz_class floor;
  std::vector<Condition> conditions;
  bool applicable;
};

// C(n-1, s-1); hypothesis n >= 2s. n, s >= 1.
BoundReport ekr_bound(long long n, long long s);

// C(n, k) for k distinct allowed intersection sizes. n >= 1, 0 <= k <= n.
BoundReport rcw_bound(long long n, long long k);

// Sum of C(n, i) for i = 0..k. n >= 1, 0 <= k <= n.
BoundReport frankl_wilson_bound(long long n, long long k);

// Sum of C(n-1, i) for i = 0..k. n >= 1, 0 <= k <= n-1.
BoundReport snevily_bound(long long n, long long k);

// C(n-1, k) / C(s-1, k); hypotheses 2 <= k, k+2 <= s, s < n, and
// n >= s^(5/2), the last tested exactly as n^2 >= s^5. Requires k <= s-1 so
// the denominator is nonzero, and n, s, k >= 1.
BoundReport thm15_bound(long long n, long long s, long long k);

// C(n-1, k-1); requires 3 <= k <= s and n >= 1. For k == s the hypothesis
// is n >= 2s; for k < s it is the sufficient condition
// s^3 (k-1)! / ((s-3)(s-4)...(s-k)) < n, tested exactly by
// cross-multiplication.
BoundReport thm16_bound(long long n, long long s, long long k);

// The two case-split inequalities behind the ratio bound, each alongside
// its simpler sufficient form. All four are exact integer comparisons:
//   2s <= (n-1)/(s-1)                  2s <= n/s
//   s^3 <= (n-1)(n-2)/((s-1)(s-2))     s^3 <= n^2/s^2
// Requires n >= 1, s >= 3.
std::vector<Condition> check_proof_inequalities(long long n, long long s);

// Least n with n^(k-1) >= s^(2k-1). Requires s >= 2, k >= 2.
mpz_class op1_conjectured_threshold(long long s, long long k);

// Exact form of n >= s^(5/2), i.e. n^2 >= s^5. Requires n, s >= 0.
bool meets_five_halves_threshold(long long n, long long s);

}  // namespace ifam
