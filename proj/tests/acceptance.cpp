// Acceptance gate: every release-blocking behavior asserted in one binary,
// one PASS/FAIL line per criterion, nonzero exit when anything fails. Each
// criterion also carries a wall-clock ceiling; blowing it is a failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ifam/analysis.hpp"
#include "ifam/bounds.hpp"
#include "ifam/constraint.hpp"
#include "ifam/constructions.hpp"
#include "ifam/cover.hpp"
#include "ifam/errors.hpp"
#include "ifam/family.hpp"
#include "ifam/search.hpp"

using namespace ifam;

namespace {

int failures = 0;

// fn throws std::runtime_error (via bail) to report a reason; returning
// normally means the criterion held.
void criterion(int id, const std::string& label, double limit_s,
               const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string reason;
  try {
    fn();
  } catch (const std::exception& e) {
    reason = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (reason.empty() && elapsed > limit_s) {
    std::ostringstream os;
    os << "took " << elapsed << "s, limit " << limit_s << "s";
    reason = os.str();
  }
  if (reason.empty()) {
    std::printf("PASS criterion %2d (%.3fs): %s\n", id, elapsed, label.c_str());
  } else {
    std::printf("FAIL criterion %2d (%.3fs): %s: %s\n", id, elapsed, label.c_str(),
                reason.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

[[noreturn]] void bail(const std::string& why) { throw std::runtime_error(why); }

void expect(bool ok, const std::string& why) {
  if (!ok) bail(why);
}

void expect_covers(const SetFamily& family, const SetFamily& triples) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool covered = false;
    for (const auto& t : triples.members())
      if (t.is_subset_of(family.member(i))) {
        covered = true;
        break;
      }
    if (!covered) expect(false, "member " + std::to_string(i) + " contains no emitted triple");
  }
}

}  // namespace

int main() {
  criterion(1, "4-uniform complement family beats the ratio floor", 1.0, [] {
    const SetFamily f = fano_complement();
    expect(f.ground_size() == 7, "ground size != 7");
    expect(f.size() == 7, "member count != 7");
    for (const auto& m : f.members()) expect(m.size() == 4, "member size != 4");
    const auto spectrum = intersection_spectrum(f);
    expect(spectrum.intersection_counts == std::map<int, std::uint64_t>{{2, 21}},
           "intersection spectrum is not exactly {2: 21}");
    const BoundReport bound = thm15_bound(7, 4, 2);
    expect(bound.floor == 5, "thm15(7,4,2) floor != 5");
    expect(mpz_class(static_cast<unsigned long>(f.size())) > bound.floor,
           "7 > 5 comparison failed");
  });

  criterion(2, "projective planes for q in {2,3,5,7}", 5.0, [] {
    for (int q : {2, 3, 5, 7}) {
      const SetFamily f = projective_plane(q);
      const int n = q * q + q + 1;
      expect(f.size() == static_cast<std::size_t>(n),
             "q=" + std::to_string(q) + ": member count != q^2+q+1");
      for (const auto& line : f.members())
        expect(line.size() == q + 1, "q=" + std::to_string(q) + ": line size != q+1");
      const auto spectrum = intersection_spectrum(f);
      expect(spectrum.intersection_counts ==
                 std::map<int, std::uint64_t>{
                     {1, static_cast<std::uint64_t>(n) * (n - 1) / 2}},
             "q=" + std::to_string(q) + ": some line pair does not meet in exactly 1");
      expect(verify_design(f, 2, 1).ok,
             "q=" + std::to_string(q) + ": some point pair is not on exactly one line");
    }
  });

  criterion(3, "biplane, parameter identity, and residual chain", 1.0, [] {
    const SetFamily biplane = paley_biplane();
    expect(verify_design(biplane, 2, 2).ok, "pair coverage is not uniformly 2");
    const auto spectrum = intersection_spectrum(biplane);
    expect(spectrum.intersection_counts == std::map<int, std::uint64_t>{{2, 55}},
           "intersection spectrum is not exactly {2: 55}");
    expect(DesignParams::symmetric_point_count(5, 2) == 11, "5*4/2 + 1 != 11");
    expect(biplane.ground_size() == 11, "biplane is not on 11 points");

    const SetFamily res = residual(biplane, 0);
    expect(res.ground_size() == 6, "residual does not have 6 points");
    const int kSideParam = 3;  // block size of the residual
    expect(res.size() == static_cast<std::size_t>((kSideParam + 2) * (kSideParam + 1) / 2),
           "residual does not have (S+2)(S+1)/2 = 10 blocks");
    for (const auto& b : res.members()) expect(b.size() == 3, "residual block size != 3");
    for (const auto& [size, count] : intersection_spectrum(res).intersection_counts)
      expect(size == 1 || size == 2, "residual intersection size outside {1, 2}");
  });

  criterion(4, "augmented once-covering family attains the exact ratio value", 1.0, [] {
    const SetFamily grown = steiner_augment(projective_plane(2), 2);
    expect(grown.ground_size() == 8, "ground size != 8");
    expect(grown.size() == 7, "member count != 7");
    for (const auto& b : grown.members()) expect(b.size() == 4, "member size != 4");
    expect(validate_family(grown, IntersectionConstraint::interval(1, 2, 4, 4)).valid,
           "family does not validate under intersections in [1, 2]");
    const BoundReport bound = thm15_bound(8, 4, 2);
    expect(bound.value == mpq_class(21) / 3, "thm15(8,4,2) value != 21/3");
    expect(bound.value == mpq_class(static_cast<long>(grown.size())),
           "family size != exact bound value 7");
  });

  criterion(5, "mixed-size construction shape and hypotheses", 1.0, [] {
    const SetFamily f = d_construction(4, 2);
    expect(binomial(7, 3) + 2 == 37, "C(7,3)+2 != 37");
    expect(f.size() == 37, "member count != 37");
    expect(validate_family(f, IntersectionConstraint::interval(1, 3, 4, 5)).valid,
           "family does not validate under intersections in [1, 3], sizes in [4, 5]");
    expect(!find_common_element(f).has_value(), "family unexpectedly has a common element");
  });

  criterion(6, "3-uniform nonempty-intersection maximum on 6 points", 10.0, [] {
    const SearchResult r = max_family(6, IntersectionConstraint::interval(1, 3, 3, 3));
    expect(r.status == SearchStatus::Exact, "search was not exact");
    expect(r.max_size == 10, "max size != 10");
    expect(binomial(5, 2) == 10, "C(5,2) != 10");
  });

  criterion(7, "small ground set beats the star count", 5.0, [] {
    const SearchResult r = max_family(5, IntersectionConstraint::interval(1, 2, 3, 3));
    expect(r.status == SearchStatus::Exact, "search was not exact");
    expect(r.max_size == 10, "max size != 10");
    expect(binomial(4, 2) == 6 && r.max_size > 6, "10 > C(4,2) comparison failed");
  });

  criterion(8, "pairwise-one 3-uniform maximum on 7 points", 30.0, [] {
    const SearchResult r = max_family(7, IntersectionConstraint::explicit_set({1}, 3, 3));
    expect(r.status == SearchStatus::Exact, "search was not exact");
    expect(r.max_size == 7, "max size != 7");
  });

  criterion(9, "mixed-size pairwise-one maximum matches the layered sum", 10.0, [] {
    const SearchResult r = max_family(5, IntersectionConstraint::explicit_set({1}, 1, 5));
    expect(r.status == SearchStatus::Exact, "search was not exact");
    expect(r.max_size == 5, "max size != 5");
    expect(snevily_bound(5, 1).floor == 5, "layered bound at (5,1) != 5");
  });

  criterion(10, "triple covers exist, stay small, and gate on eligibility", 1.0, [] {
    const SetFamily fano = projective_plane(2);
    const TripleCoverResult ft = triple_cover(fano);
    expect(ft.triples.size() <= 27, "more than 27 triples for the 7-point plane");
    expect_covers(fano, ft.triples);

    const SetFamily biplane = paley_biplane();
    const TripleCoverResult bt = triple_cover(biplane);
    expect(bt.triples.size() <= 125, "more than 125 triples for the biplane");
    expect_covers(biplane, bt.triples);

    bool threw = false;
    try {
      triple_cover(star_family(6, 3));
    } catch (const HypothesisError& e) {
      threw = std::string(e.what()).find("common element") != std::string::npos;
    }
    expect(threw, "star family did not raise the common-element error");
  });

  criterion(11, "search equals the reference oracle on every small instance", 300.0, [] {
    std::uint64_t instances = 0;
    for (int n = 1; n <= 6; ++n)
      for (int smin = 1; smin <= n; ++smin)
        for (int smax = smin; smax <= n; ++smax)
          for (int lmin = 0; lmin <= 6; ++lmin)
            for (int lmax = lmin; lmax <= 6; ++lmax) {
              const auto c = IntersectionConstraint::interval(lmin, lmax, smin, smax);
              mpz_class count = 0;
              for (int m = smin; m <= smax; ++m) count += binomial(n, m);
              if (count > kOracleCandidateCap) continue;
              ++instances;

              const auto describe = [&] {
                return "n=" + std::to_string(n) + " sizes [" + std::to_string(smin) + ", " +
                       std::to_string(smax) + "] intersections [" + std::to_string(lmin) +
                       ", " + std::to_string(lmax) + "]";
              };
              const SearchResult want = brute_force_oracle(n, c);
              for (bool sym : {false, true})
                for (bool par : {false, true}) {
                  SearchOptions o;
                  o.symmetry_breaking = sym;
                  o.parallel = par;
                  o.threads = par ? 2 : 0;
                  const SearchResult got = max_family(n, c, o);
                  expect(got.status == SearchStatus::Exact, describe() + ": not exact");
                  expect(got.max_size == want.max_size,
                         describe() + ": got " + std::to_string(got.max_size) +
                             ", oracle says " + std::to_string(want.max_size) +
                             (sym ? " [sym]" : "") + (par ? " [par]" : ""));
                  expect(got.witness.size() == got.max_size,
                         describe() + ": witness size mismatch");
                  expect(validate_family(got.witness, c).valid,
                         describe() + ": witness fails validation");
                }
            }
    expect(instances > 1500, "sweep unexpectedly small: " + std::to_string(instances));
  });

  criterion(12, "ratio-bound arithmetic holds on 10^4 random parameter triples", 10.0, [] {
    std::mt19937_64 rng(0xacce97a0u);
    auto check_triple = [](long long n, long long s, long long k) {
      const BoundReport r = thm15_bound(n, s, k);

      // Exact cross-multiplied identity against independent binomials.
      const mpq_class lhs = r.value * mpq_class(binomial(s - 1, k));
      expect(lhs == mpq_class(binomial(n - 1, k)),
             "value * C(s-1,k) != C(n-1,k) at n=" + std::to_string(n) +
                 " s=" + std::to_string(s) + " k=" + std::to_string(k));

      // floor is the unique integer with floor <= value < floor + 1.
      const mpz_class floor_next = r.floor + 1;
      expect(mpq_class(r.floor) <= r.value && r.value < mpq_class(floor_next),
             "floor bracket failed at n=" + std::to_string(n) + " s=" + std::to_string(s) +
                 " k=" + std::to_string(k));

      // The 5/2-power hypothesis is exactly the square-vs-fifth-power test.
      mpz_class n2, s5;
      mpz_pow_ui(n2.get_mpz_t(), mpz_class(static_cast<long>(n)).get_mpz_t(), 2);
      mpz_pow_ui(s5.get_mpz_t(), mpz_class(static_cast<long>(s)).get_mpz_t(), 5);
      bool reported = false;
      for (const auto& cond : r.conditions)
        if (cond.name == "n >= s^(5/2)") reported = cond.holds;
      expect(reported == (n2 >= s5),
             "threshold condition mismatch at n=" + std::to_string(n) +
                 " s=" + std::to_string(s) + " k=" + std::to_string(k));
    };

    // Boundary pins first, then the random bulk.
    check_triple(1024, 16, 2);
    check_triple(1023, 16, 2);
    check_triple(32, 4, 2);
    check_triple(31, 4, 2);
    for (int iter = 0; iter < 10'000; ++iter) {
      const long long s = 2 + static_cast<long long>(rng() % 39);    // 2..40
      const long long k = 1 + static_cast<long long>(rng() % (s - 1));  // 1..s-1
      const long long n = 1 + static_cast<long long>(rng() % 1'000'000);
      check_triple(n, s, k);
    }
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
