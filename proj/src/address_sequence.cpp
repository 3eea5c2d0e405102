#include "wimax/address_sequence.hpp"

namespace wimax {

AddressSequence::AddressSequence(InterleaverParams params, Direction direction,
                                 std::vector<uint32_t> addresses)
    : params_(params), direction_(direction), addresses_(std::move(addresses)) {
    if (addresses_.size() != params_.ncpbs()) {
        throw InterleaverError(Errc::LengthMismatch,
                               "sequence holds " + std::to_string(addresses_.size()) +
                                   " addresses, expected " + std::to_string(params_.ncpbs()));
    }
}

bool AddressSequence::is_permutation() const {
    std::vector<uint8_t> seen(addresses_.size(), 0);
    for (uint32_t v : addresses_) {
        if (v >= addresses_.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

AddressSequence build_sequence(const InterleaverParams& p, Direction direction,
                               kernels::Level level) {
    std::vector<uint32_t> addrs(p.ncpbs());
    if (direction == Direction::Interleave) {
        kernels::fill_interleave_addresses(p, addrs, level);
    } else {
        kernels::fill_deinterleave_addresses(p, addrs, level);
    }
    return AddressSequence(p, direction, std::move(addrs));
}

AddressSequence invert(const AddressSequence& seq) {
    if (!seq.is_permutation()) {
        throw InterleaverError(Errc::NotAPermutation,
                               "sequence is not a bijection on [0, " +
                                   std::to_string(seq.size()) + ")");
    }
    std::vector<uint32_t> inv(seq.size());
    for (uint32_t n = 0; n < seq.size(); ++n) inv[seq[n]] = n;
    const Direction flipped = seq.direction() == Direction::Interleave
                                  ? Direction::Deinterleave
                                  : Direction::Interleave;
    return AddressSequence(seq.params(), flipped, std::move(inv));
}

}  // namespace wimax
