#include "sumprod/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace sumprod::kernels {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(SUMPROD_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    const char* forced = std::getenv("SUMPROD_KERNEL");
    if (forced && std::string_view(forced) == "scalar") return Isa::scalar;
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

void or_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                std::size_t shift, Isa isa) {
#if defined(SUMPROD_HAVE_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    or_shifted_avx2(dst, src, shift);
    return;
  }
#endif
  (void)isa;
  or_shifted_scalar(dst, src, shift);
}

}  // namespace sumprod::kernels
