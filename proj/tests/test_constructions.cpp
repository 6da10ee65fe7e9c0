#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ifam/analysis.hpp"
#include "ifam/bounds.hpp"
#include "ifam/constraint.hpp"
#include "ifam/constructions.hpp"
#include "ifam/errors.hpp"
#include "ifam/family.hpp"

using namespace ifam;

namespace {

std::vector<std::vector<int>> as_lists(const SetFamily& f) {
  std::vector<std::vector<int>> out;
  for (const auto& m : f.members()) out.push_back(m.elements());
  return out;
}

}  // namespace

TEST_CASE("smallest projective plane, frozen block lists") {
  const SetFamily f = projective_plane(2);
  CHECK(f.ground_size() == 7);
  const std::vector<std::vector<int>> want{
      {5, 6, 7}, {2, 4, 5}, {3, 4, 7}, {2, 3, 6}, {1, 2, 7}, {1, 4, 6}, {1, 3, 5},
  };
  CHECK(as_lists(f) == want);

  const SetFamily comp = fano_complement();
  CHECK(comp.ground_size() == 7);
  const std::vector<std::vector<int>> want_comp{
      {1, 2, 3, 4}, {1, 3, 6, 7}, {1, 2, 5, 6}, {1, 4, 5, 7},
      {3, 4, 5, 6}, {2, 3, 5, 7}, {2, 4, 6, 7},
  };
  CHECK(as_lists(comp) == want_comp);

  // Complements of q+1-subsets on 7 points: 4-uniform, any two meet in 2.
  const auto spectrum = intersection_spectrum(comp);
  CHECK(spectrum.size_histogram == std::map<int, std::uint64_t>{{4, 7}});
  CHECK(spectrum.intersection_counts == std::map<int, std::uint64_t>{{2, 21}});
}

TEST_CASE("projective planes of every supported order are linear spaces") {
  for (int q : {2, 3, 5, 7, 11}) {
    CAPTURE(q);
    const SetFamily f = projective_plane(q);
    const int n = q * q + q + 1;
    CHECK(f.ground_size() == n);
    CHECK(f.size() == static_cast<std::size_t>(n));
    for (const auto& line : f.members()) CHECK(line.size() == q + 1);

    // Any two lines meet in exactly one point.
    const auto spectrum = intersection_spectrum(f);
    CHECK(spectrum.intersection_counts ==
          std::map<int, std::uint64_t>{
              {1, static_cast<std::uint64_t>(n) * (n - 1) / 2}});

    // Every point pair lies on exactly one line.
    CHECK(verify_design(f, 2, 1).ok);
  }
}

TEST_CASE("unsupported plane orders are rejected by name") {
  for (int q : {0, 1, 4, 6, 9, 13}) {
    CAPTURE(q);
    CHECK_THROWS_AS(projective_plane(q), UnsupportedParameter);
  }
  try {
    projective_plane(4);
    FAIL("expected UnsupportedParameter");
  } catch (const UnsupportedParameter& e) {
    CHECK(std::string(e.what()).find("2, 3, 5, 7, 11") != std::string::npos);
  }
}

TEST_CASE("the 11-point biplane") {
  const SetFamily f = paley_biplane();
  CHECK(f.ground_size() == 11);
  CHECK(f.size() == 11);
  CHECK(f.member(0).elements() == std::vector<int>{2, 4, 5, 6, 10});

  CHECK(verify_design(f, 2, 2).ok);
  const auto spectrum = intersection_spectrum(f);
  CHECK(spectrum.size_histogram == std::map<int, std::uint64_t>{{5, 11}});
  CHECK(spectrum.intersection_counts == std::map<int, std::uint64_t>{{2, 55}});

  // Symmetric parameter arithmetic pins the same point count.
  CHECK(DesignParams::symmetric_point_count(5, 2) == 11);
}

TEST_CASE("symmetric_point_count wants an exact division") {
  CHECK(DesignParams::symmetric_point_count(3, 1) == 7);
  CHECK(DesignParams::symmetric_point_count(4, 1) == 13);
  CHECK(DesignParams::symmetric_point_count(5, 1) == 21);
  CHECK_THROWS_AS(DesignParams::symmetric_point_count(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(DesignParams::symmetric_point_count(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(DesignParams::symmetric_point_count(5, 0), std::invalid_argument);
}

TEST_CASE("DesignParams::validate") {
  CHECK_NOTHROW(DesignParams{2, 11, 5, 2}.validate());
  CHECK_THROWS_AS((DesignParams{0, 11, 5, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((DesignParams{6, 11, 5, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((DesignParams{2, 4, 5, 2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((DesignParams{2, 11, 5, 0}.validate()), std::invalid_argument);
}

TEST_CASE("residual of the biplane") {
  const SetFamily res = residual(paley_biplane(), 0);
  CHECK(res.ground_size() == 6);
  CHECK(res.size() == 10);
  for (const auto& b : res.members()) CHECK(b.size() == 3);

  // Distinct pairwise intersection sizes stay within {1, 2}.
  const auto report = verify_quasi_symmetric(res);
  CHECK(report.quasi_symmetric);
  CHECK(report.intersection_sizes == std::vector<int>{1, 2});

  // Every point of the residual lies on 5 blocks (replication preserved).
  CHECK(verify_design(res, 1, 5).ok);
}

TEST_CASE("residual rejects inputs whose restriction collapses blocks") {
  CHECK_THROWS_AS(residual(fano_complement(), 0), HypothesisError);

  CHECK_THROWS_AS(residual(paley_biplane(), 11), std::invalid_argument);

  SetFamily full_cover{GroundSet(3)};
  full_cover.add_elements({1, 2, 3});
  full_cover.add_elements({1, 2});
  CHECK_THROWS_AS(residual(full_cover, 0), std::invalid_argument);
}

TEST_CASE("residual relabels surviving points in order") {
  SetFamily f{GroundSet(5)};
  f.add_elements({2, 4});     // dropped: survivors 1, 3, 5 -> 1, 2, 3
  f.add_elements({1, 2, 5});  // -> {1, 3}
  f.add_elements({3, 4});     // -> {2}
  const SetFamily res = residual(f, 0);
  CHECK(res.ground_size() == 3);
  CHECK(as_lists(res) == std::vector<std::vector<int>>{{1, 3}, {2}});
}

TEST_CASE("augmenting a once-covering family with a shared point") {
  const SetFamily grown = steiner_augment(projective_plane(2), 2);
  CHECK(grown.ground_size() == 8);
  CHECK(grown.size() == 7);
  for (const auto& b : grown.members()) {
    CHECK(b.size() == 4);
    CHECK(b.test(8));
  }
  // Old blocks met in one point; all now share the new point too.
  const auto spectrum = intersection_spectrum(grown);
  CHECK(spectrum.intersection_counts == std::map<int, std::uint64_t>{{2, 21}});
  CHECK(validate_family(grown, IntersectionConstraint::interval(1, 2, 4, 4)).valid);

  // The result is as large as the ratio bound's exact value for these
  // parameters: 7 members, C(7,2)/C(3,2) = 7.
  const auto bound = thm15_bound(8, 4, 2);
  CHECK(bound.value == mpq_class(static_cast<long>(grown.size())));
}

TEST_CASE("steiner_augment rejects families that are not once-covering") {
  // Remove a line: the pair it alone covered is now covered zero times.
  const SetFamily fano = projective_plane(2);
  SetFamily holed{GroundSet(7)};
  for (std::size_t i = 1; i < fano.size(); ++i) holed.add(fano.member(i));
  try {
    steiner_augment(holed, 2);
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("{5 6}") != std::string::npos);
    CHECK(msg.find("0 times") != std::string::npos);
  }

  // A biplane covers each pair twice, not once.
  CHECK_THROWS_AS(steiner_augment(paley_biplane(), 2), HypothesisError);
}

TEST_CASE("mixed-size construction, frozen shape") {
  const SetFamily f = d_construction(4, 2);
  CHECK(f.ground_size() == 8);
  CHECK(f.size() == 37);  // C(7,3) star members + 2 blocks
  CHECK(f.member(0).elements() == std::vector<int>{1, 2, 3, 4});
  CHECK(f.member(35).elements() == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(f.member(36).elements() == std::vector<int>{2, 3, 4, 7, 8});

  CHECK(validate_family(f, IntersectionConstraint::interval(1, 3, 4, 5)).valid);
  CHECK_FALSE(find_common_element(f).has_value());
  CHECK(find_hitting_pair(f) == std::make_pair(1, 2));

  const SetFamily g = d_construction(3, 2);
  CHECK(g.ground_size() == 5);
  CHECK(g.size() == 8);  // C(4,2) + 2
  CHECK(g.member(6).elements() == std::vector<int>{2, 3, 4});
  CHECK(g.member(7).elements() == std::vector<int>{2, 3, 5});
  CHECK(validate_family(g, IntersectionConstraint::interval(1, 2, 3, 3)).valid);
  CHECK_FALSE(find_common_element(g).has_value());

  CHECK_THROWS_AS(d_construction(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(d_construction(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(d_construction(5, 3), std::invalid_argument);  // 2 does not divide 3
  CHECK_NOTHROW(d_construction(4, 3));                           // 2 divides 2
}

TEST_CASE("mixed-size construction intersects for a larger parameter pair") {
  const SetFamily f = d_construction(6, 3);  // n = 10 + 2 = 12, run = (12-6)/3 = 2
  CHECK(f.ground_size() == 12);
  CHECK(f.size() == binomial(11, 5).get_ui() + 3);
  CHECK(validate_family(f, IntersectionConstraint::interval(1, 5, 6, 8)).valid);
  CHECK_FALSE(find_common_element(f).has_value());
}

TEST_CASE("all_k_subsets and star_family enumerate lexicographically") {
  CHECK(as_lists(all_k_subsets(4, 2)) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(all_k_subsets(10, 3).size() == 120);
  CHECK_THROWS_AS(all_k_subsets(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(all_k_subsets(4, 5), std::invalid_argument);

  const SetFamily star = star_family(6, 3);
  CHECK(star.size() == 10);  // C(5, 2)
  CHECK(star.member(0).elements() == std::vector<int>{1, 2, 3});
  CHECK(star.member(9).elements() == std::vector<int>{1, 5, 6});
  CHECK(find_common_element(star) == 1);

  CHECK(as_lists(star_family(4, 1)) == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(star_family(4, 5), std::invalid_argument);
}

TEST_CASE("verify_design finds the first uncovered subset") {
  const SetFamily fano = projective_plane(2);
  SetFamily holed{GroundSet(7)};
  for (std::size_t i = 1; i < fano.size(); ++i) holed.add(fano.member(i));
  const auto r = verify_design(holed, 2, 1);
  REQUIRE_FALSE(r.ok);
  CHECK(r.witness_subset == std::vector<int>{5, 6});
  CHECK(r.witness_count == 0);

  // Doubling a block overshoots lambda on its internal pairs.
  SetFamily doubled{GroundSet(7)};
  for (const auto& b : fano.members()) doubled.add(b);
  doubled.add(fano.member(6));  // {1, 3, 5} twice
  const auto r2 = verify_design(doubled, 2, 1);
  REQUIRE_FALSE(r2.ok);
  CHECK(r2.witness_subset == std::vector<int>{1, 3});
  CHECK(r2.witness_count == 2);

  CHECK_THROWS_AS(verify_design(fano, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_design(fano, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_design(fano, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_design(SetFamily{GroundSet(7)}, 2, 1), std::invalid_argument);

  SetFamily ragged{GroundSet(7)};
  ragged.add_elements({1, 2, 3});
  ragged.add_elements({4, 5});
  CHECK_THROWS_AS(verify_design(ragged, 2, 1), std::invalid_argument);
}

TEST_CASE("verify_quasi_symmetric counts distinct intersection sizes") {
  const auto biplane = verify_quasi_symmetric(paley_biplane());
  CHECK(biplane.quasi_symmetric);
  CHECK(biplane.intersection_sizes == std::vector<int>{2});

  // All 3-subsets of [6] realize intersection sizes 0, 1, 2.
  const auto wide = verify_quasi_symmetric(all_k_subsets(6, 3));
  CHECK_FALSE(wide.quasi_symmetric);
  CHECK(wide.intersection_sizes == std::vector<int>{0, 1, 2});

  SetFamily tiny{GroundSet(4)};
  tiny.add_elements({1, 2});
  CHECK_THROWS_AS(verify_quasi_symmetric(tiny), std::invalid_argument);
}
