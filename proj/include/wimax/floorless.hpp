// Streaming deinterleaver address generator with no division, multiplication
// or modulo in the per-address step. Replaces the floor-heavy Eqs (3)-(4)
// with a row/column scan and small counters:
//
//   - the block is a d x (ncpbs/d) matrix scanned row-major (row j outer,
//     column i inner), one address per received bit index n = j*columns + i;
//   - `base` accumulates d*i by adding d per column step, reset on row wrap;
//   - j mod s and i mod s are kept as increment-compare-reset phase counters;
//   - the emitted address is base + j offset by 0 or +-d (16-QAM pair swap)
//     or +-d/+-2d (64-QAM triplet rotation) chosen from the phases:
//
//       QPSK    k = d*i + j
//       16-QAM  k = d*i + j          j%2 == 0
//               k = d*(i+1) + j      j%2 == 1, i%2 == 0
//               k = d*(i-1) + j      j%2 == 1, i%2 == 1
//       64-QAM  k = d*i + j          j%3 == 0
//               k = d*(i-2) + j      j%3 == 1, i%3 == 2
//               k = d*(i+1) + j      j%3 == 1, i%3 != 2
//               k = d*(i+2) + j      j%3 == 2, i%3 == 0
//               k = d*(i-1) + j      j%3 == 2, i%3 != 0
//
// The divide-by-d and minus-one needed to size the scan (columns, columns-1)
// happen once in make_params, not per address. Output equals the oracle
// deinterleave sequence entry for entry (tested over the full grid).
#pragma once

#include <cstdint>

#include "wimax/address_sequence.hpp"
#include "wimax/params.hpp"

namespace wimax {

class FloorlessGenerator {
public:
    explicit FloorlessGenerator(const InterleaverParams& params);

    // Emits the deinterleaver address for the next received bit index.
    // Throws Exhausted after ncpbs addresses.
    uint32_t next();

    // Back to a freshly constructed generator.
    void reset();

    uint32_t emitted() const { return emitted_; }
    bool done() const { return emitted_ == params_.ncpbs(); }
    const InterleaverParams& params() const { return params_; }

    // Step-machine registers, exposed for verification.
    uint32_t row() const { return row_; }
    uint32_t column() const { return col_; }
    uint32_t base() const { return base_; }
    uint32_t row_phase() const { return row_phase_; }
    uint32_t column_phase() const { return col_phase_; }

private:
    InterleaverParams params_;
    uint32_t d_;
    uint32_t two_d_;
    uint32_t cols_max_;
    uint32_t step_;

    uint32_t row_ = 0;        // j
    uint32_t col_ = 0;        // i
    uint32_t base_ = 0;       // d * i
    uint32_t row_phase_ = 0;  // j mod s
    uint32_t col_phase_ = 0;  // i mod s
    uint32_t emitted_ = 0;
};

// Drains a fresh generator into a full sequence (deinterleave direction).
AddressSequence generate_all(const InterleaverParams& params);

}  // namespace wimax
