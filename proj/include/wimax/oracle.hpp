// Reference implementation of the IEEE 802.16 two-step interleaver
// permutations, computed index by index with exact integer floor division.
// This is the ground truth every other address path is checked against.
#pragma once

#include <cstdint>

#include "wimax/params.hpp"

namespace wimax {

// First interleaver permutation:
//   m_k = (Ncpbs/d) * (k mod d) + floor(k/d)
uint32_t interleave_first_perm(const InterleaverParams& p, uint32_t k);

// Full interleaver address (write position of source bit k):
//   j_k = s * floor(m_k/s) + (m_k + Ncpbs - floor(d*m_k/Ncpbs)) mod s
// Throws IndexOutOfRange for k >= ncpbs.
uint32_t interleaver_address(const InterleaverParams& p, uint32_t k);

// First deinterleaver permutation:
//   m_n = s * floor(n/s) + (n + floor(d*n/Ncpbs)) mod s
uint32_t deinterleave_first_perm(const InterleaverParams& p, uint32_t n);

// Full deinterleaver address (original position of received bit n):
//   k_n = d * m_n - (Ncpbs - 1) * floor(d*m_n/Ncpbs)
// Throws IndexOutOfRange for n >= ncpbs.
uint32_t deinterleaver_address(const InterleaverParams& p, uint32_t n);

}  // namespace wimax
