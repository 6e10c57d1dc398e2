#include "sumprod/kernels.hpp"

namespace sumprod::kernels {

void or_shifted_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                       std::size_t shift) {
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  if (word_shift >= dst.size()) return;
  const std::size_t n = src.size();
  // Output word word_shift + i takes src[i] << bit_shift and the carry from
  // src[i - 1]; i == n carries only.
  for (std::size_t i = 0; i <= n && word_shift + i < dst.size(); ++i) {
    std::uint64_t v = i < n ? src[i] << bit_shift : 0;
    if (bit_shift != 0 && i >= 1) v |= src[i - 1] >> (64 - bit_shift);
    dst[word_shift + i] |= v;
  }
}

}  // namespace sumprod::kernels
