// Whole-block address permutations with scatter (write-address) semantics:
// addresses[n] is where source bit n lands in the output block.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wimax/kernels.hpp"
#include "wimax/params.hpp"

namespace wimax {

class AddressSequence {
public:
    // Length must equal ncpbs (LengthMismatch otherwise). Bijectivity is not
    // enforced here so that invert() can diagnose corrupt sequences.
    AddressSequence(InterleaverParams params, Direction direction,
                    std::vector<uint32_t> addresses);

    const InterleaverParams& params() const { return params_; }
    Direction direction() const { return direction_; }
    const std::vector<uint32_t>& addresses() const { return addresses_; }

    uint32_t operator[](size_t n) const { return addresses_[n]; }
    size_t size() const { return addresses_.size(); }

    // True when every value in [0, ncpbs) appears exactly once.
    bool is_permutation() const;

    friend bool operator==(const AddressSequence&, const AddressSequence&) = default;

private:
    InterleaverParams params_;
    Direction direction_;
    std::vector<uint32_t> addresses_;
};

// Batch form of the per-index oracle; result[n] = address of bit n.
AddressSequence build_sequence(const InterleaverParams& p, Direction direction,
                               kernels::Level level = kernels::Level::Auto);

// result[seq[n]] = n, direction flipped. Throws NotAPermutation.
AddressSequence invert(const AddressSequence& seq);

}  // namespace wimax
