// Frame-by-frame (de)interleaving of bit streams.
#pragma once

#include <cstdint>

#include "wimax/bitblock.hpp"
#include "wimax/bitio.hpp"
#include "wimax/params.hpp"

namespace wimax {

enum class PartialPolicy {
    Strict,  // a trailing partial frame is an error
    Pad,     // zero-fill, process, report the pad length
};

struct StreamResult {
    uint64_t frames = 0;
    uint32_t pad_bits = 0;
};

// Consumes the source in ncpbs-bit frames, applies the direction per frame,
// writes results in order. Throws PartialBlock (Strict) or IoError, both
// naming the frame index.
StreamResult process_stream(const InterleaverParams& p, Direction direction,
                            BitSource& source, BitSink& sink,
                            PartialPolicy policy = PartialPolicy::Strict,
                            kernels::Level level = kernels::Level::Auto);

}  // namespace wimax
