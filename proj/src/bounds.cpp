#include "ifam/bounds.hpp"

#include <stdexcept>

namespace ifam {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

mpz_class pow_ll(long long base, unsigned long exp) {
  mpz_class r;
  mpz_class b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

bool all_hold(const std::vector<Condition>& conditions) {
  for (const auto& c : conditions)
    if (!c.holds) return false;
  return true;
}

BoundReport make_report(TheoremId id, BoundParams params, mpq_class value,
                        std::vector<Condition> conditions) {
  value.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  const bool applicable = all_hold(conditions);
  return BoundReport{id, params, std::move(value), std::move(fl), std::move(conditions),
                     applicable};
}

}  // namespace

mpz_class binomial(long long n, long long k) {
  require(n >= 0, "binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long long n) {
  require(n >= 0, "factorial: n must be >= 0");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Ekr: return "ekr";
    case TheoremId::Rcw: return "rcw";
    case TheoremId::FranklWilson: return "frankl-wilson";
    case TheoremId::Snevily: return "snevily";
    case TheoremId::Thm15: return "thm15";
    case TheoremId::Thm16: return "thm16";
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (TheoremId id : {TheoremId::Ekr, TheoremId::Rcw, TheoremId::FranklWilson,
                       TheoremId::Snevily, TheoremId::Thm15, TheoremId::Thm16})
    if (name == theorem_name(id)) return id;
  return std::nullopt;
}

BoundReport ekr_bound(long long n, long long s) {
  require(n >= 1, "ekr_bound: n must be >= 1");
  require(s >= 1, "ekr_bound: s must be >= 1");
  std::vector<Condition> conds{{"n >= 2s", n >= 2 * s}};
  return make_report(TheoremId::Ekr, {n, s, std::nullopt}, mpq_class(binomial(n - 1, s - 1)),
                     std::move(conds));
}

BoundReport rcw_bound(long long n, long long k) {
  require(n >= 1, "rcw_bound: n must be >= 1");
  require(k >= 0 && k <= n, "rcw_bound: k must be in [0, n]");
  return make_report(TheoremId::Rcw, {n, std::nullopt, k}, mpq_class(binomial(n, k)), {});
}

BoundReport frankl_wilson_bound(long long n, long long k) {
  require(n >= 1, "frankl_wilson_bound: n must be >= 1");
  require(k >= 0 && k <= n, "frankl_wilson_bound: k must be in [0, n]");
  mpz_class sum = 0;
  for (long long i = 0; i <= k; ++i) sum += binomial(n, i);
  return make_report(TheoremId::FranklWilson, {n, std::nullopt, k}, mpq_class(sum), {});
}

BoundReport snevily_bound(long long n, long long k) {
  require(n >= 1, "snevily_bound: n must be >= 1");
  require(k >= 0 && k <= n - 1, "snevily_bound: k must be in [0, n-1]");
  mpz_class sum = 0;
  for (long long i = 0; i <= k; ++i) sum += binomial(n - 1, i);
  return make_report(TheoremId::Snevily, {n, std::nullopt, k}, mpq_class(sum), {});
}

bool meets_five_halves_threshold(long long n, long long s) {
  require(n >= 0 && s >= 0, "meets_five_halves_threshold: arguments must be >= 0");
  return pow_ll(n, 2) >= pow_ll(s, 5);
}

BoundReport thm15_bound(long long n, long long s, long long k) {
  require(n >= 1, "thm15_bound: n must be >= 1");
  require(s >= 1, "thm15_bound: s must be >= 1");
  require(k >= 1, "thm15_bound: k must be >= 1");
  require(k <= s - 1, "thm15_bound: k must be <= s-1");
  std::vector<Condition> conds{
      {"2 <= k", 2 <= k},
      {"k + 2 <= s", k + 2 <= s},
      {"s < n", s < n},
      {"n >= s^(5/2)", meets_five_halves_threshold(n, s)},
  };
  mpq_class value(binomial(n - 1, k), binomial(s - 1, k));
  return make_report(TheoremId::Thm15, {n, s, k}, std::move(value), std::move(conds));
}

BoundReport thm16_bound(long long n, long long s, long long k) {
  require(n >= 1, "thm16_bound: n must be >= 1");
  require(k >= 3, "thm16_bound: k must be >= 3");
  require(k <= s, "thm16_bound: k must be <= s");
  std::vector<Condition> conds;
  if (k == s) {
    conds.push_back({"n >= 2s", n >= 2 * s});
  } else {
    // s^3 (k-1)! / ((s-3)(s-4)...(s-k)) < n, cross-multiplied; every factor
    // s-j for j in [3, k] is positive since s > k here.
    mpz_class lhs = pow_ll(s, 3) * factorial(k - 1);
    mpz_class rhs(static_cast<long>(n));
    for (long long j = 3; j <= k; ++j) rhs *= static_cast<long>(s - j);
    conds.push_back({"s^3 (k-1)! / ((s-3)...(s-k)) < n", lhs < rhs});
  }
  return make_report(TheoremId::Thm16, {n, s, k}, mpq_class(binomial(n - 1, k - 1)),
                     std::move(conds));
}

std::vector<Condition> check_proof_inequalities(long long n, long long s) {
  require(n >= 1, "check_proof_inequalities: n must be >= 1");
  require(s >= 3, "check_proof_inequalities: s must be >= 3");
  const mpz_class nz(static_cast<long>(n)), sz(static_cast<long>(s));
  return {
      {"2s <= (n-1)/(s-1)", 2 * sz * (sz - 1) <= nz - 1},
      {"2s <= n/s", 2 * sz * sz <= nz},
      {"s^3 <= (n-1)(n-2)/((s-1)(s-2))",
       pow_ll(s, 3) * (sz - 1) * (sz - 2) <= (nz - 1) * (nz - 2)},
      {"s^3 <= n^2/s^2", pow_ll(s, 5) <= pow_ll(n, 2)},
  };
}

mpz_class op1_conjectured_threshold(long long s, long long k) {
  require(s >= 2, "op1_conjectured_threshold: s must be >= 2");
  require(k >= 2, "op1_conjectured_threshold: k must be >= 2");
  const mpz_class target = pow_ll(s, static_cast<unsigned long>(2 * k - 1));
  mpz_class root;
  const int exact =
      mpz_root(root.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(k - 1));
  return exact ? root : root + 1;
}

}  // namespace ifam
