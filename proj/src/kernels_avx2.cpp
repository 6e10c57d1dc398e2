#include "sumprod/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace sumprod::kernels {

void or_shifted_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::size_t shift) {
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  if (word_shift >= dst.size()) return;
  const std::size_t n = src.size();
  const std::size_t limit = std::min(n + 1, dst.size() - word_shift);
  std::uint64_t* out = dst.data() + word_shift;
  const std::uint64_t* in = src.data();

  auto scalar_word = [&](std::size_t i) {
    std::uint64_t v = i < n ? in[i] << bit_shift : 0;
    if (bit_shift != 0 && i >= 1) v |= in[i - 1] >> (64 - bit_shift);
    out[i] |= v;
  };

  if (limit == 0) return;
  scalar_word(0);

  // Shift counts >= 64 produce zero lanes, so bit_shift == 0 needs no branch.
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(bit_shift));
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - bit_shift));
  std::size_t i = 1;
  for (; i + 4 <= limit && i + 3 < n; i += 4) {
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i - 1));
    const __m256i bits = _mm256_or_si256(_mm256_sll_epi64(cur, left),
                                         _mm256_srl_epi64(prev, right));
    __m256i* slot = reinterpret_cast<__m256i*>(out + i);
    _mm256_storeu_si256(slot, _mm256_or_si256(_mm256_loadu_si256(slot), bits));
  }
  for (; i < limit; ++i) scalar_word(i);
}

}  // namespace sumprod::kernels
