#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace xosim {

/// Dense bit-vector over items 0..m-1. Doubles as a bundle and as the
/// support of a binary clause. Word-level ops keep the large adversarial
/// instances (m ~ 1e5, thousands of clauses) fast.
class ItemSet {
 public:
  ItemSet() : m_(0) {}
  explicit ItemSet(int m) : m_(m), words_((m + 63) / 64, 0) {}
  ItemSet(int m, std::initializer_list<int> items) : ItemSet(m) {
    for (int i : items) set(i);
  }

  static ItemSet full(int m) {
    ItemSet s(m);
    for (auto& w : s.words_) w = ~0ULL;
    s.trim();
    return s;
  }
  static ItemSet from_indices(int m, const std::vector<int>& items) {
    ItemSet s(m);
    for (int i : items) s.set(i);
    return s;
  }

  int m() const { return m_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

  int count() const {
    long long c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return static_cast<int>(c);
  }
  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  ItemSet operator&(const ItemSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  ItemSet operator|(const ItemSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  ItemSet operator-(const ItemSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
  ItemSet operator~() const {
    ItemSet r(m_);
    for (size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
    r.trim();
    return r;
  }

  bool operator==(const ItemSet& o) const { return m_ == o.m_ && words_ == o.words_; }
  bool operator!=(const ItemSet& o) const { return !(*this == o); }
  bool operator<(const ItemSet& o) const { return words_ < o.words_; }  // arbitrary total order

  bool is_subset_of(const ItemSet& o) const {
    for (size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  // Allocation-free popcounts of pairwise combinations.
  static int and_count(const ItemSet& a, const ItemSet& b) {
    long long c = 0;
    for (size_t w = 0; w < a.words_.size(); ++w) c += __builtin_popcountll(a.words_[w] & b.words_[w]);
    return static_cast<int>(c);
  }
  static int or_count(const ItemSet& a, const ItemSet& b) {
    long long c = 0;
    for (size_t w = 0; w < a.words_.size(); ++w) c += __builtin_popcountll(a.words_[w] | b.words_[w]);
    return static_cast<int>(c);
  }
  static int diff_count(const ItemSet& a, const ItemSet& b) {  // |a \ b|
    long long c = 0;
    for (size_t w = 0; w < a.words_.size(); ++w) c += __builtin_popcountll(a.words_[w] & ~b.words_[w]);
    return static_cast<int>(c);
  }

  template <typename Fn>
  void for_each(Fn fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        fn(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    });
    return s + "}";
  }

 private:
  template <typename Op>
  ItemSet apply(const ItemSet& o, Op op) const {
    ItemSet r(m_);
    for (size_t w = 0; w < words_.size(); ++w) r.words_[w] = op(words_[w], o.words_[w]);
    return r;
  }

  void trim() {
    if (m_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (m_ % 64)) - 1;
  }

  int m_;
  std::vector<uint64_t> words_;
};

}  // namespace xosim
