#pragma once

#include <cstdint>
#include <vector>

namespace stc {

// Fixed-size bitset over dense vertex ids. Cluster membership and cut
// sides are bitsets; intersection counting dominates the certifiers.
class VertexSet {
public:
  VertexSet() : size_(0) {}
  explicit VertexSet(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(std::size_t n) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  std::size_t size() const { return size_; }

  void insert(std::size_t v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
  void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(std::size_t v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void toggle(std::size_t v) { words_[v >> 6] ^= (std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any_common(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::size_t count_common(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(words_[i] & o.words_[i]));
    return c;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  VertexSet operator|(const VertexSet& o) const {
    VertexSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }
  VertexSet complement() const {
    VertexSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const VertexSet& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace stc
