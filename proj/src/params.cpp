#include "wimax/params.hpp"

#include <algorithm>
#include <cctype>

namespace wimax {

const char* to_string(Modulation m) {
    switch (m) {
        case Modulation::Qpsk: return "qpsk";
        case Modulation::Qam16: return "16qam";
        case Modulation::Qam64: return "64qam";
    }
    return "?";
}

const char* to_string(Direction d) {
    return d == Direction::Interleave ? "interleave" : "deinterleave";
}

std::optional<Modulation> parse_modulation(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "qpsk") return Modulation::Qpsk;
    if (lower == "16qam") return Modulation::Qam16;
    if (lower == "64qam") return Modulation::Qam64;
    return std::nullopt;
}

InterleaverParams make_params(Modulation m, uint32_t ncpbs, uint32_t d) {
    if (d != 12 && d != 16) {
        throw InterleaverError(Errc::BadRowCount,
                               "row count d must be 12 or 16, got " + std::to_string(d));
    }
    if (ncpbs == 0) {
        throw InterleaverError(Errc::BadBlockSize, "ncpbs must be positive");
    }
    if (ncpbs % d != 0) {
        throw InterleaverError(
            Errc::NotDivisibleByD,
            "ncpbs=" + std::to_string(ncpbs) + " is not divisible by d=" + std::to_string(d));
    }
    const uint32_t columns = ncpbs / d;
    const uint32_t s = permutation_step(m);
    if (columns % s != 0) {
        throw InterleaverError(
            Errc::ColumnsNotMultipleOfS,
            "column count " + std::to_string(columns) + " (ncpbs=" + std::to_string(ncpbs) +
                ", d=" + std::to_string(d) + ") is not a multiple of s=" + std::to_string(s) +
                " for " + to_string(m));
    }
    return InterleaverParams(m, ncpbs, d);
}

}  // namespace wimax
