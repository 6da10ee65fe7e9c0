#pragma once

#include <cstddef>
#include <vector>

#include "ifam/family.hpp"

namespace ifam {

// How one cover triple was produced: a came from the base member, b from
// member b_member (the first member missing a), c from member c_member (the
// first member missing both a and b).
struct TripleTrace {
  int a;
  std::size_t b_member;
  int b;
  std::size_t c_member;
  int c;
};

struct TripleCoverResult {
  SetFamily triples;
  std::vector<TripleTrace> trace;  // one entry per emitted triple
};

// Builds at most s^3 three-element sets (s = largest member size) such that
// every member of the family contains at least one of them.
//
// Eligibility, checked in this order with HypothesisError on failure: the
// family is nonempty, every member has at least 3 elements, members pairwise
// intersect, no single element lies in every member, and no two elements u, v
// exist with every member meeting {u, v}.
//
// Construction: fix the first member A. For each a in A, pick the first
// member B(a) missing a (exists: a is not common). For each b in B(a), pick
// the first member C(a, b) missing both a and b (exists: {a, b} is not a
// hitting pair). Every c in C(a, b) completes a triple {a, b, c}; duplicates
// are emitted once, at their first appearance. Coverage: any member M meets
// A at some a, meets B(a) at some b (necessarily != a), and meets C(a, b) at
// some c outside {a, b}, so M contains the emitted triple {a, b, c}.
TripleCoverResult triple_cover(const SetFamily& family);

}  // namespace ifam
