// Batch kernels behind the address and block paths: a scalar reference
// plus SIMD variants selected at runtime. Every variant must produce
// bit-identical output to the scalar kernel (enforced by tests over the
// full parameter grid).
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wimax/params.hpp"

namespace wimax::kernels {

enum class Level {
    Auto,    // pick the best supported at runtime
    Scalar,
    Avx2,
};

const char* to_string(Level level);

// True if the host CPU can execute the given level (Scalar always can).
bool level_available(Level level);

// Best concrete level for this host; never returns Auto.
Level preferred_level();

// Resolves Auto to a concrete level; throws std::invalid_argument if the
// requested level is unavailable on this host.
Level resolve_level(Level level);

// Readable slack the gather kernels require past the last input byte.
inline constexpr size_t kGatherPad = 8;

// out[i] = interleaver address of bit i (Eqs (1)-(2)); out.size() == ncpbs.
void fill_interleave_addresses(const InterleaverParams& p,
                               std::span<uint32_t> out,
                               Level level = Level::Auto);

// out[i] = deinterleaver address of bit i (Eqs (3)-(4)); out.size() == ncpbs.
void fill_deinterleave_addresses(const InterleaverParams& p,
                                 std::span<uint32_t> out,
                                 Level level = Level::Auto);

// Byte gather: out[i] = in[idx[i]] for i in [0, n).
// `in` must stay readable for kGatherPad bytes past the largest index.
void gather_bytes(const uint8_t* in, const uint32_t* idx, uint8_t* out,
                  size_t n, Level level = Level::Auto);

// Exact unsigned division by a runtime-invariant divisor via multiply+shift.
// Valid for dividends up to the max_dividend it was built for.
struct MagicDiv {
    uint32_t multiplier = 0;
    uint32_t shift = 0;

    static MagicDiv make(uint32_t divisor, uint32_t max_dividend);

    uint32_t divide(uint32_t x) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(x) * multiplier) >> shift);
    }
};

}  // namespace wimax::kernels
