#ifndef BSIMPLEX_SUMMATION_HPP_
#define BSIMPLEX_SUMMATION_HPP_

#include <array>
#include <cstdint>
#include <span>

namespace bsimplex {

// Streaming pairwise summation.
//
// Values are summed naively in blocks of kBlock; completed blocks are merged
// like a binary counter, so the result is the same tree sum as a recursive
// pairwise reduction over blocks. The accumulation order depends only on the
// order of add() calls, which keeps lattice sums reproducible bit-for-bit.
class PairwiseSum {
 public:
  static constexpr int kBlock = 32;

  void add(double value) {
    block_ += value;
    if (++block_count_ == kBlock) flush_block();
  }

  double result() const {
    double total = block_;
    for (int level = 0; level < kLevels; ++level) {
      if (occupied_ & (std::uint64_t{1} << level)) total += levels_[level];
    }
    return total;
  }

 private:
  static constexpr int kLevels = 64;

  void flush_block() {
    double carry = block_;
    block_ = 0.0;
    block_count_ = 0;
    for (int level = 0; level < kLevels; ++level) {
      const std::uint64_t bit = std::uint64_t{1} << level;
      if (!(occupied_ & bit)) {
        levels_[level] = carry;
        occupied_ |= bit;
        return;
      }
      carry += levels_[level];
      occupied_ &= ~bit;
    }
  }

  std::array<double, kLevels> levels_{};
  std::uint64_t occupied_ = 0;
  double block_ = 0.0;
  int block_count_ = 0;
};

inline double pairwise_sum(std::span<const double> values) {
  PairwiseSum acc;
  for (double v : values) acc.add(v);
  return acc.result();
}

}  // namespace bsimplex

#endif  // BSIMPLEX_SUMMATION_HPP_
