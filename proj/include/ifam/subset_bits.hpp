#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ifam {

// Membership bitmask over a fixed universe [n] = {1,...,n} with cached
// cardinality.
//
// Elements are 1-based at the interface; internally element e occupies bit
// position e-1, so elements 1..64 live in word 0. Bits at positions >= n are
// always zero, which lets masks over the same universe compare and combine
// word by word. Every mutator keeps the cached cardinality in sync.
class SubsetBits {
 public:
  SubsetBits() = default;

  explicit SubsetBits(int universe) : n_(checked_universe(universe)) {
    words_.assign(word_count(n_), 0);
  }

  // elements are 1-based and may arrive in any order; repeats are idempotent.
  static SubsetBits from_elements(int universe, std::span<const int> elements) {
    SubsetBits s(universe);
    for (int e : elements) s.set(e);
    return s;
  }

  static SubsetBits from_elements(int universe, std::initializer_list<int> elements) {
    return from_elements(universe, std::span<const int>(elements.begin(), elements.size()));
  }

  // universe <= 64; bit i of mask holds element i+1.
  static SubsetBits from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask: universe exceeds one word");
    SubsetBits s(universe);
    if (universe < 64 && (mask >> universe) != 0)
      throw std::invalid_argument("from_mask: mask has bits outside the universe");
    if (!s.words_.empty()) s.words_[0] = mask;
    s.size_ = std::popcount(mask);
    return s;
  }

  static SubsetBits full(int universe) {
    SubsetBits s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.clear_tail();
    s.size_ = universe;
    return s;
  }

  int universe() const { return n_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(int element) const { return test_pos(element - 1); }
  void set(int element) { set_pos(element - 1); }
  void reset(int element) { reset_pos(element - 1); }

  bool test_pos(int pos) const {
    check_pos(pos);
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }

  void set_pos(int pos) {
    check_pos(pos);
    std::uint64_t& w = words_[pos >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
    size_ += (w & bit) == 0;
    w |= bit;
  }

  void reset_pos(int pos) {
    check_pos(pos);
    std::uint64_t& w = words_[pos >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
    size_ -= (w & bit) != 0;
    w &= ~bit;
  }

  // Smallest set position >= from, or -1 when none.
  int next_pos(int from = 0) const {
    if (from < 0) from = 0;
    int w = from >> 6;
    const int nwords = static_cast<int>(words_.size());
    if (w >= nwords) return -1;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0) return (w << 6) + std::countr_zero(cur);
      if (++w >= nwords) return -1;
      cur = words_[w];
    }
  }

  int lowest_pos() const { return next_pos(0); }

  // Ascending, 1-based.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int p = lowest_pos(); p >= 0; p = next_pos(p + 1)) out.push_back(p + 1);
    return out;
  }

  static int intersection_size(const SubsetBits& a, const SubsetBits& b) {
    check_same(a, b);
    int c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }

  bool intersects(const SubsetBits& o) const {
    check_same(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const SubsetBits& o) const {
    check_same(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  SubsetBits& operator&=(const SubsetBits& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    recount();
    return *this;
  }

  SubsetBits& operator|=(const SubsetBits& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    recount();
    return *this;
  }

  // *this &= ~o
  SubsetBits& subtract(const SubsetBits& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    recount();
    return *this;
  }

  SubsetBits complement() const {
    SubsetBits s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.clear_tail();
    s.recount();
    return s;
  }

  friend SubsetBits operator&(SubsetBits a, const SubsetBits& b) {
    a &= b;
    return a;
  }

  friend SubsetBits operator|(SubsetBits a, const SubsetBits& b) {
    a |= b;
    return a;
  }

  bool operator==(const SubsetBits& o) const { return n_ == o.n_ && words_ == o.words_; }

  // Numeric order of the mask value; universes must match.
  std::strong_ordering operator<=>(const SubsetBits& o) const {
    check_same(*this, o);
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != o.words_[i]) return words_[i] <=> o.words_[i];
    }
    return std::strong_ordering::equal;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  // Single-word view; universe must be <= 64.
  std::uint64_t mask64() const {
    if (n_ > 64) throw std::logic_error("mask64: universe exceeds one word");
    return words_.empty() ? 0 : words_[0];
  }

 private:
  static int checked_universe(int n) {
    if (n < 0) throw std::invalid_argument("SubsetBits: negative universe");
    return n;
  }

  static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  void check_pos(int pos) const {
    if (pos < 0 || pos >= n_) throw std::out_of_range("SubsetBits: element outside universe");
  }

  static void check_same(const SubsetBits& a, const SubsetBits& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("SubsetBits: universe mismatch");
  }

  void clear_tail() {
    const int tail = n_ & 63;
    if (tail != 0 && !words_.empty()) words_.back() &= ~std::uint64_t{0} >> (64 - tail);
  }

  void recount() {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    size_ = c;
  }

  int n_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ifam
