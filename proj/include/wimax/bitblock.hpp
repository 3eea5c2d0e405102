// Applies address sequences to bit blocks (one byte per bit, values 0/1).
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wimax/address_sequence.hpp"
#include "wimax/kernels.hpp"
#include "wimax/params.hpp"

namespace wimax {

// out[interleaver_address(k)] = block[k]. Throws LengthMismatch.
std::vector<uint8_t> interleave_block(const InterleaverParams& p,
                                      std::span<const uint8_t> block);

// out[deinterleaver_address(n)] = block[n]. Throws LengthMismatch.
std::vector<uint8_t> deinterleave_block(const InterleaverParams& p,
                                        std::span<const uint8_t> block);

/// Precomputed permutation for repeated application to same-size blocks
/// (the per-frame fast path of process_stream). Internally stores the
/// inverse sequence so application is a gather, which vectorizes.
class BlockPermuter {
public:
    BlockPermuter(const InterleaverParams& p, Direction direction,
                  kernels::Level level = kernels::Level::Auto);

    // in.size() >= ncpbs + kernels::kGatherPad (slack for the SIMD gather),
    // out.size() == ncpbs. Only the first ncpbs input bytes are payload.
    // Throws LengthMismatch.
    void apply(std::span<const uint8_t> in, std::span<uint8_t> out) const;

    const InterleaverParams& params() const { return params_; }
    Direction direction() const { return direction_; }
    kernels::Level level() const { return level_; }

private:
    InterleaverParams params_;
    Direction direction_;
    kernels::Level level_;
    std::vector<uint32_t> gather_;
};

}  // namespace wimax
