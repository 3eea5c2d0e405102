// Internal declarations shared between the dispatcher and the per-ISA
// translation units. Not installed.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "wimax/params.hpp"

namespace wimax::kernels::detail {

#ifdef WIMAX_HAVE_AVX2
void fill_interleave_avx2(const InterleaverParams& p, std::span<uint32_t> out);
void fill_deinterleave_avx2(const InterleaverParams& p, std::span<uint32_t> out);
void gather_bytes_avx2(const uint8_t* in, const uint32_t* idx, uint8_t* out, size_t n);
#endif

// Vector address paths keep all intermediates exact in 32-bit lanes only up
// to this block size; above it the dispatcher stays scalar.
inline constexpr uint32_t kSimdMaxNcpbs = 1u << 27;

}  // namespace wimax::kernels::detail
