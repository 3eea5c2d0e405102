// AVX2 variants of the batch kernels. Eight addresses per iteration; the
// floor divisions of Eqs (1)-(4) become exact multiply-high sequences
// (MagicDiv), so results are bit-identical to the scalar reference.
// Compiled with -mavx2 in its own translation unit; only reached after a
// runtime CPU check.
#include "kernels_impl.hpp"

#ifdef WIMAX_HAVE_AVX2

#include <immintrin.h>

#include <cstring>

#include "wimax/kernels.hpp"
#include "wimax/oracle.hpp"

namespace wimax::kernels::detail {

namespace {

// floor(x * mul >> shift) per u32 lane, 64-bit intermediates.
inline __m256i magic_div(__m256i x, __m256i mul, __m128i shift) {
    __m256i even = _mm256_srl_epi64(_mm256_mul_epu32(x, mul), shift);
    __m256i odd =
        _mm256_srl_epi64(_mm256_mul_epu32(_mm256_srli_epi64(x, 32), mul), shift);
    return _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
}

struct VecDiv {
    __m256i mul;
    __m128i shift;

    explicit VecDiv(MagicDiv m)
        : mul(_mm256_set1_epi32(static_cast<int>(m.multiplier))),
          shift(_mm_cvtsi32_si128(static_cast<int>(m.shift))) {}

    __m256i operator()(__m256i x) const { return magic_div(x, mul, shift); }
};

}  // namespace

void fill_deinterleave_avx2(const InterleaverParams& p, std::span<uint32_t> out) {
    const uint32_t n_total = p.ncpbs();
    const uint32_t d = p.rows();
    const uint32_t s = p.step();

    const VecDiv div_n(MagicDiv::make(n_total, d * (n_total - 1)));
    const VecDiv div_s(MagicDiv::make(s, 2 * n_total + 16));
    const __m256i vd = _mm256_set1_epi32(static_cast<int>(d));
    const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
    const __m256i vn1 = _mm256_set1_epi32(static_cast<int>(n_total - 1));

    __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i eight = _mm256_set1_epi32(8);

    uint32_t i = 0;
    for (; i + 8 <= n_total; i += 8) {
        // m = s*floor(n/s) + (n + floor(d*n/N)) mod s
        __m256i t = div_n(_mm256_mullo_epi32(idx, vd));
        __m256i a = _mm256_add_epi32(idx, t);
        __m256i rn = _mm256_sub_epi32(idx, _mm256_mullo_epi32(div_s(idx), vs));
        __m256i ra = _mm256_sub_epi32(a, _mm256_mullo_epi32(div_s(a), vs));
        __m256i m = _mm256_add_epi32(_mm256_sub_epi32(idx, rn), ra);
        // k = d*m - (N-1)*floor(d*m/N)
        __m256i dm = _mm256_mullo_epi32(m, vd);
        __m256i u = div_n(dm);
        __m256i k = _mm256_sub_epi32(dm, _mm256_mullo_epi32(u, vn1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(&out[i]), k);
        idx = _mm256_add_epi32(idx, eight);
    }
    for (; i < n_total; ++i) out[i] = deinterleaver_address(p, i);
}

void fill_interleave_avx2(const InterleaverParams& p, std::span<uint32_t> out) {
    const uint32_t n_total = p.ncpbs();
    const uint32_t d = p.rows();
    const uint32_t s = p.step();
    const uint32_t cols = p.columns();

    const VecDiv div_n(MagicDiv::make(n_total, d * (n_total - 1)));
    const VecDiv div_s(MagicDiv::make(s, 2 * n_total + 16));
    const VecDiv div_d(MagicDiv::make(d, n_total - 1));
    const __m256i vd = _mm256_set1_epi32(static_cast<int>(d));
    const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
    const __m256i vn = _mm256_set1_epi32(static_cast<int>(n_total));
    const __m256i vcols = _mm256_set1_epi32(static_cast<int>(cols));

    __m256i idx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i eight = _mm256_set1_epi32(8);

    uint32_t i = 0;
    for (; i + 8 <= n_total; i += 8) {
        // m = (N/d)*(k mod d) + floor(k/d)
        __m256i qd = div_d(idx);
        __m256i rd = _mm256_sub_epi32(idx, _mm256_mullo_epi32(qd, vd));
        __m256i m = _mm256_add_epi32(_mm256_mullo_epi32(rd, vcols), qd);
        // j = s*floor(m/s) + (m + N - floor(d*m/N)) mod s
        __m256i t = div_n(_mm256_mullo_epi32(m, vd));
        __m256i a = _mm256_add_epi32(_mm256_sub_epi32(m, t), vn);
        __m256i rm = _mm256_sub_epi32(m, _mm256_mullo_epi32(div_s(m), vs));
        __m256i ra = _mm256_sub_epi32(a, _mm256_mullo_epi32(div_s(a), vs));
        __m256i j = _mm256_add_epi32(_mm256_sub_epi32(m, rm), ra);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(&out[i]), j);
        idx = _mm256_add_epi32(idx, eight);
    }
    for (; i < n_total; ++i) out[i] = interleaver_address(p, i);
}

void gather_bytes_avx2(const uint8_t* in, const uint32_t* idx, uint8_t* out, size_t n) {
    const __m256i byte_mask = _mm256_set1_epi32(0xFF);
    size_t i = 0;
    // Each gather lane loads 4 bytes starting at in+idx[.], hence the
    // kGatherPad slack the caller guarantees past the last index.
    for (; i + 8 <= n; i += 8) {
        __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
        __m256i g = _mm256_i32gather_epi32(reinterpret_cast<const int*>(in), vi, 1);
        g = _mm256_and_si256(g, byte_mask);
        __m256i w = _mm256_packus_epi16(_mm256_packus_epi32(g, g), _mm256_setzero_si256());
        uint32_t lo = static_cast<uint32_t>(_mm256_extract_epi32(w, 0));
        uint32_t hi = static_cast<uint32_t>(_mm256_extract_epi32(w, 4));
        std::memcpy(out + i, &lo, 4);
        std::memcpy(out + i + 4, &hi, 4);
    }
    for (; i < n; ++i) out[i] = in[idx[i]];
}

}  // namespace wimax::kernels::detail

#endif  // WIMAX_HAVE_AVX2
