#include "wimax/bitblock.hpp"

#include "wimax/oracle.hpp"

namespace wimax {

namespace {

void check_block_size(const InterleaverParams& p, size_t got) {
    if (got != p.ncpbs()) {
        throw InterleaverError(Errc::LengthMismatch,
                               "block holds " + std::to_string(got) + " bits, expected " +
                                   std::to_string(p.ncpbs()));
    }
}

}  // namespace

std::vector<uint8_t> interleave_block(const InterleaverParams& p,
                                      std::span<const uint8_t> block) {
    check_block_size(p, block.size());
    std::vector<uint8_t> out(p.ncpbs());
    for (uint32_t k = 0; k < p.ncpbs(); ++k) out[interleaver_address(p, k)] = block[k];
    return out;
}

std::vector<uint8_t> deinterleave_block(const InterleaverParams& p,
                                        std::span<const uint8_t> block) {
    check_block_size(p, block.size());
    std::vector<uint8_t> out(p.ncpbs());
    for (uint32_t n = 0; n < p.ncpbs(); ++n) out[deinterleaver_address(p, n)] = block[n];
    return out;
}

BlockPermuter::BlockPermuter(const InterleaverParams& p, Direction direction,
                             kernels::Level level)
    : params_(p),
      direction_(direction),
      level_(kernels::resolve_level(level)),
      // Scatter via sequence S is gather via its inverse: out[m] = in[S^-1[m]].
      gather_(invert(build_sequence(p, direction, level_)).addresses()) {}

void BlockPermuter::apply(std::span<const uint8_t> in, std::span<uint8_t> out) const {
    if (in.size() < params_.ncpbs() + kernels::kGatherPad) {
        throw InterleaverError(Errc::LengthMismatch,
                               "input span must cover ncpbs + gather pad (" +
                                   std::to_string(params_.ncpbs() + kernels::kGatherPad) +
                                   " bytes), got " + std::to_string(in.size()));
    }
    check_block_size(params_, out.size());
    kernels::gather_bytes(in.data(), gather_.data(), out.data(), params_.ncpbs(), level_);
}

}  // namespace wimax
