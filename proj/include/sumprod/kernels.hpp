#pragma once

// Bitset kernels behind the exhaustive progression sieve. The sumset of two
// bitsets X + Y is the OR of Y shifted by every set position of X, so the
// inner loop is a word-parallel shift-and-OR. A scalar reference kernel and
// an AVX2 kernel are provided; the dispatcher picks one at runtime.

#include <cstddef>
#include <cstdint>
#include <span>

namespace sumprod::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

/// dst |= src << shift, where bit i of src lands on bit i + shift of dst.
/// Bits shifted past the end of dst are dropped.
void or_shifted_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                       std::size_t shift);

#if defined(SUMPROD_HAVE_AVX2)
void or_shifted_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::size_t shift);
#endif

/// Whether the kernel for isa was compiled in and the CPU supports it.
bool isa_available(Isa isa);

/// Best available ISA, unless the environment variable SUMPROD_KERNEL=scalar
/// forces the reference kernel.
Isa active_isa();

void or_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                std::size_t shift, Isa isa);

inline void or_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                       std::size_t shift) {
  or_shifted(dst, src, shift, active_isa());
}

}  // namespace sumprod::kernels
