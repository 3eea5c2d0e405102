#include "wimax/kernels.hpp"

#include <stdexcept>

#include "kernels_impl.hpp"
#include "wimax/oracle.hpp"

namespace wimax::kernels {

const char* to_string(Level level) {
    switch (level) {
        case Level::Auto: return "auto";
        case Level::Scalar: return "scalar";
        case Level::Avx2: return "avx2";
    }
    return "?";
}

bool level_available(Level level) {
    switch (level) {
        case Level::Auto:
        case Level::Scalar:
            return true;
        case Level::Avx2:
#ifdef WIMAX_HAVE_AVX2
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
    }
    return false;
}

Level preferred_level() {
    if (level_available(Level::Avx2)) return Level::Avx2;
    return Level::Scalar;
}

Level resolve_level(Level level) {
    if (level == Level::Auto) return preferred_level();
    if (!level_available(level)) {
        throw std::invalid_argument(std::string("kernel level ") + to_string(level) +
                                    " is not supported on this host");
    }
    return level;
}

MagicDiv MagicDiv::make(uint32_t divisor, uint32_t max_dividend) {
    if (divisor == 0) throw std::invalid_argument("MagicDiv: zero divisor");
    if (max_dividend == 0) max_dividend = 1;
    // Smallest shift whose round-up multiplier is exact over [0, max_dividend]:
    // with m = ceil(2^sh / divisor) and e = m*divisor - 2^sh, the quotient
    // floor(x*m / 2^sh) equals floor(x/divisor) whenever x*e < 2^sh.
    for (uint32_t sh = 1; sh < 63; ++sh) {
        const uint64_t pow2 = uint64_t(1) << sh;
        const uint64_t mul = (pow2 + divisor - 1) / divisor;
        if (mul > 0xFFFFFFFFull) break;  // m only grows with sh
        const uint64_t err = mul * divisor - pow2;
        if (err <= (pow2 - 1) / max_dividend) {
            return MagicDiv{static_cast<uint32_t>(mul), sh};
        }
    }
    throw std::invalid_argument("MagicDiv: no 32-bit multiplier for divisor=" +
                                std::to_string(divisor));
}

namespace {

void check_out_size(const InterleaverParams& p, std::span<uint32_t> out) {
    if (out.size() != p.ncpbs()) {
        throw InterleaverError(Errc::LengthMismatch,
                               "address buffer holds " + std::to_string(out.size()) +
                                   " entries, expected " + std::to_string(p.ncpbs()));
    }
}

void fill_interleave_scalar(const InterleaverParams& p, std::span<uint32_t> out) {
    for (uint32_t k = 0; k < p.ncpbs(); ++k) out[k] = interleaver_address(p, k);
}

void fill_deinterleave_scalar(const InterleaverParams& p, std::span<uint32_t> out) {
    for (uint32_t n = 0; n < p.ncpbs(); ++n) out[n] = deinterleaver_address(p, n);
}

void gather_bytes_scalar(const uint8_t* in, const uint32_t* idx, uint8_t* out, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = in[idx[i]];
}

bool use_simd(const InterleaverParams& p, Level resolved) {
    return resolved != Level::Scalar && p.ncpbs() <= detail::kSimdMaxNcpbs;
}

}  // namespace

void fill_interleave_addresses(const InterleaverParams& p, std::span<uint32_t> out,
                               Level level) {
    check_out_size(p, out);
    const Level resolved = resolve_level(level);
#ifdef WIMAX_HAVE_AVX2
    if (resolved == Level::Avx2 && use_simd(p, resolved)) {
        detail::fill_interleave_avx2(p, out);
        return;
    }
#endif
    fill_interleave_scalar(p, out);
}

void fill_deinterleave_addresses(const InterleaverParams& p, std::span<uint32_t> out,
                                 Level level) {
    check_out_size(p, out);
    const Level resolved = resolve_level(level);
#ifdef WIMAX_HAVE_AVX2
    if (resolved == Level::Avx2 && use_simd(p, resolved)) {
        detail::fill_deinterleave_avx2(p, out);
        return;
    }
#endif
    fill_deinterleave_scalar(p, out);
}

void gather_bytes(const uint8_t* in, const uint32_t* idx, uint8_t* out, size_t n,
                  Level level) {
    const Level resolved = resolve_level(level);
#ifdef WIMAX_HAVE_AVX2
    if (resolved == Level::Avx2) {
        detail::gather_bytes_avx2(in, idx, out, n);
        return;
    }
#endif
    (void)resolved;
    gather_bytes_scalar(in, idx, out, n);
}

}  // namespace wimax::kernels
