#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace beckring {

/// Fixed-width dynamic bitset packed into 64-bit words.
class Bitset {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= bit(i); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~bit(i); }
  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] & bit(i)) != 0;
  }

  void set_all() noexcept {
    for (auto &w : words_)
      w = ~std::uint64_t{0};
    trim();
  }
  void clear() noexcept {
    for (auto &w : words_)
      w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w != 0)
        return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  /// Lowest set index, or npos.
  std::size_t first() const noexcept { return next_from(0); }

  /// Lowest set index >= i, or npos.
  std::size_t next_from(std::size_t i) const noexcept {
    if (i >= n_)
      return npos;
    std::size_t w = i >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
    for (;;) {
      if (word != 0)
        return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == words_.size())
        return npos;
      word = words_[w];
    }
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  Bitset &operator&=(const Bitset &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset &subtract(const Bitset &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }

  std::size_t intersection_count(const Bitset &o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const Bitset &, const Bitset &) = default;

private:
  static constexpr std::uint64_t bit(std::size_t i) noexcept {
    return std::uint64_t{1} << (i & 63);
  }
  void trim() noexcept {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace beckring
