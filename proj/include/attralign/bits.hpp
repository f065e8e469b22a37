#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace attralign {

// Fixed-width bit row used for seed-membership masks.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  friend std::size_t count_common(const BitRow& a, const BitRow& b) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
    return c;
  }

  friend auto operator<=>(const BitRow&, const BitRow&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace attralign
