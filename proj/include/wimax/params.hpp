// Modulation schemes and validated interleaver parameters for the
// IEEE 802.16 channel interleaver/deinterleaver.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wimax {

enum class Modulation { Qpsk, Qam16, Qam64 };

// Ncpc: coded bits per subcarrier (2, 4, 6).
constexpr uint32_t coded_bits_per_subcarrier(Modulation m) {
    switch (m) {
        case Modulation::Qpsk: return 2;
        case Modulation::Qam16: return 4;
        case Modulation::Qam64: return 6;
    }
    return 0;
}

// s: step of the second permutation, Ncpc / 2 (1, 2, 3).
constexpr uint32_t permutation_step(Modulation m) {
    return coded_bits_per_subcarrier(m) / 2;
}

const char* to_string(Modulation m);

// Accepts qpsk, 16qam, 64qam (case-insensitive).
std::optional<Modulation> parse_modulation(std::string_view name);

enum class Direction { Interleave, Deinterleave };

const char* to_string(Direction d);

enum class Errc {
    NotDivisibleByD,
    ColumnsNotMultipleOfS,
    BadRowCount,
    BadBlockSize,
    IndexOutOfRange,
    NotAPermutation,
    LengthMismatch,
    PartialBlock,
    Exhausted,
    DimensionTooLarge,
    BurstTooLong,
    BadBurst,
    IoError,
};

class InterleaverError : public std::runtime_error {
public:
    InterleaverError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Validated parameter bundle for one block size. Construct via make_params;
/// immutable afterwards and safe to share across threads.
class InterleaverParams {
public:
    Modulation modulation() const { return modulation_; }
    uint32_t ncpbs() const { return ncpbs_; }          // block size in bits
    uint32_t rows() const { return rows_; }            // d: 12 or 16
    uint32_t columns() const { return columns_; }      // ncpbs / d
    uint32_t columns_max() const { return columns_max_; }  // columns - 1
    uint32_t step() const { return permutation_step(modulation_); }

    friend bool operator==(const InterleaverParams&, const InterleaverParams&) = default;

private:
    InterleaverParams(Modulation m, uint32_t ncpbs, uint32_t d)
        : modulation_(m), ncpbs_(ncpbs), rows_(d),
          columns_(ncpbs / d), columns_max_(ncpbs / d - 1) {}

    friend InterleaverParams make_params(Modulation, uint32_t, uint32_t);

    Modulation modulation_;
    uint32_t ncpbs_;
    uint32_t rows_;
    uint32_t columns_;
    uint32_t columns_max_;
};

/// Validates (modulation, ncpbs, d) and derives the column counts.
///
/// Requirements: d in {12, 16}; ncpbs > 0 and divisible by d; the column
/// count ncpbs/d divisible by the modulation step s, so the second
/// permutation's swap/rotation groups complete inside every row.
/// Throws InterleaverError with codes BadRowCount, BadBlockSize,
/// NotDivisibleByD or ColumnsNotMultipleOfS.
InterleaverParams make_params(Modulation m, uint32_t ncpbs, uint32_t d = 16);

}  // namespace wimax
