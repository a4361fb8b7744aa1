#ifndef DDF_BITSET_HPP
#define DDF_BITSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace ddf {

/// Fixed-width bitset sized at runtime; used for blocks over a point set.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t n = 0;
    for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::size_t intersection_count(const PointSet& other) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend auto operator<=>(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace ddf

#endif  // DDF_BITSET_HPP
