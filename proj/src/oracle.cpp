#include "wimax/oracle.hpp"

namespace wimax {

namespace {

void check_index(const InterleaverParams& p, uint32_t idx, const char* what) {
    if (idx >= p.ncpbs()) {
        throw InterleaverError(Errc::IndexOutOfRange,
                               std::string(what) + " index " + std::to_string(idx) +
                                   " out of range for ncpbs=" + std::to_string(p.ncpbs()));
    }
}

}  // namespace

uint32_t interleave_first_perm(const InterleaverParams& p, uint32_t k) {
    const uint64_t d = p.rows();
    return static_cast<uint32_t>(uint64_t(p.columns()) * (k % d) + k / d);
}

uint32_t interleaver_address(const InterleaverParams& p, uint32_t k) {
    check_index(p, k, "interleave");
    const uint64_t n = p.ncpbs();
    const uint64_t d = p.rows();
    const uint64_t s = p.step();
    const uint64_t m = interleave_first_perm(p, k);
    return static_cast<uint32_t>(s * (m / s) + (m + n - (d * m) / n) % s);
}

uint32_t deinterleave_first_perm(const InterleaverParams& p, uint32_t n) {
    const uint64_t ncpbs = p.ncpbs();
    const uint64_t d = p.rows();
    const uint64_t s = p.step();
    return static_cast<uint32_t>(s * (n / s) + (n + (d * n) / ncpbs) % s);
}

uint32_t deinterleaver_address(const InterleaverParams& p, uint32_t n) {
    check_index(p, n, "deinterleave");
    const uint64_t ncpbs = p.ncpbs();
    const uint64_t d = p.rows();
    const uint64_t m = deinterleave_first_perm(p, n);
    return static_cast<uint32_t>(d * m - (ncpbs - 1) * ((d * m) / ncpbs));
}

}  // namespace wimax
