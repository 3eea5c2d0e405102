// Verification and reporting: golden address tables, floorless-vs-oracle
// equivalence, valid-depth sweeps, burst-error dispersion.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wimax/address_sequence.hpp"
#include "wimax/params.hpp"

namespace wimax {

struct EquivalenceMismatch {
    uint32_t index;
    uint32_t oracle_address;
    uint32_t floorless_address;

    friend bool operator==(const EquivalenceMismatch&, const EquivalenceMismatch&) = default;
};

struct EquivalenceReport {
    InterleaverParams params;
    uint32_t total_indices;
    std::vector<EquivalenceMismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
};

// Compares the floorless generator's full output against the scalar
// Eq (3)/(4) oracle, index by index. Mismatches are data, not errors.
EquivalenceReport verify_equivalence(const InterleaverParams& p);

// Index-by-index comparison of two same-size sequences (the verification
// core, exposed so doctored sequences can exercise the mismatch path).
EquivalenceReport compare_sequences(const AddressSequence& oracle,
                                    const AddressSequence& candidate);

std::string to_json(const EquivalenceReport& report);

struct DispersionReport {
    InterleaverParams params;
    uint32_t burst_start;
    uint32_t burst_len;
    std::vector<uint32_t> positions;  // sorted original-domain error positions
    uint32_t max_run;                 // longest run of consecutive positions
    uint32_t min_gap;                 // smallest difference between neighbors
                                      // in sorted order; 0 when burst_len == 1
};

// Deinterleaves a contiguous received-domain burst (wrapping inside the
// block) and reports how far apart the errors land. burst_start is taken
// modulo ncpbs. Throws BadBurst (len == 0) or BurstTooLong (len > ncpbs).
DispersionReport burst_dispersion(const InterleaverParams& p,
                                  uint32_t burst_start, uint32_t burst_len);

std::string to_json(const DispersionReport& report);

using AddressTable = std::vector<std::vector<uint32_t>>;

// cell (j, i) = deinterleaver_address(j*columns + i) from the oracle.
// Throws DimensionTooLarge when num_rows > d or num_cols > columns.
AddressTable emit_address_table(const InterleaverParams& p,
                                uint32_t num_rows, uint32_t num_cols);

enum class TableFormat { Text, Csv };

// First line is a header naming modulation, ncpbs and d; then one line per
// table row (aligned columns for Text, bare commas for Csv).
std::string format_address_table(const InterleaverParams& p,
                                 const AddressTable& table, TableFormat format);

struct DepthSweepEntry {
    Modulation modulation;
    std::vector<uint32_t> valid_ncpbs;  // ascending
};

// Every ncpbs <= max_ncpbs valid for each modulation at row count d
// (i.e. the multiples of d*s). Modulation order: QPSK, 16-QAM, 64-QAM.
std::vector<DepthSweepEntry> sweep_depths(uint32_t max_ncpbs, uint32_t d);

}  // namespace wimax
