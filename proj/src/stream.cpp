#include "wimax/stream.hpp"

#include <algorithm>

namespace wimax {

StreamResult process_stream(const InterleaverParams& p, Direction direction,
                            BitSource& source, BitSink& sink, PartialPolicy policy,
                            kernels::Level level) {
    const uint32_t n = p.ncpbs();
    BlockPermuter permuter(p, direction, level);
    std::vector<uint8_t> in(n + kernels::kGatherPad, 0);
    std::vector<uint8_t> out(n);

    StreamResult result;
    for (;;) {
        size_t got;
        try {
            got = source.read(std::span<uint8_t>(in.data(), n));
        } catch (const InterleaverError& e) {
            throw InterleaverError(e.code(), std::string(e.what()) + " (frame " +
                                                 std::to_string(result.frames) + ")");
        }
        if (got == 0) break;
        if (got < n) {
            if (policy == PartialPolicy::Strict) {
                throw InterleaverError(Errc::PartialBlock,
                                       "partial frame " + std::to_string(result.frames) +
                                           ": got " + std::to_string(got) + " of " +
                                           std::to_string(n) + " bits");
            }
            std::fill(in.begin() + static_cast<ptrdiff_t>(got),
                      in.begin() + static_cast<ptrdiff_t>(n), uint8_t{0});
            result.pad_bits = n - static_cast<uint32_t>(got);
        }
        permuter.apply(in, out);
        sink.write(out);
        ++result.frames;
        if (got < n) break;  // padded frame is the last one
    }
    sink.finish();
    return result;
}

}  // namespace wimax
