#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "wimax/kernels.hpp"
#include "wimax/oracle.hpp"

using namespace wimax;
using kernels::Level;
using kernels::MagicDiv;

namespace {

std::vector<InterleaverParams> full_grid(uint32_t max_ncpbs) {
    std::vector<InterleaverParams> grid;
    for (uint32_t d : {12u, 16u}) {
        for (Modulation m : {Modulation::Qpsk, Modulation::Qam16, Modulation::Qam64}) {
            const uint32_t stride = d * permutation_step(m);
            for (uint32_t n = stride; n <= max_ncpbs; n += stride) {
                grid.push_back(make_params(m, n, d));
            }
        }
    }
    return grid;
}

}  // namespace

TEST_CASE("MagicDiv matches plain division") {
    std::mt19937 rng(99);
    for (uint32_t divisor : {1u, 2u, 3u, 12u, 16u, 96u, 576u, 4607u, 4608u}) {
        for (uint32_t max : {1u, 255u, 4608u, 16u * 4608u, 1u << 27}) {
            const MagicDiv magic = MagicDiv::make(divisor, max);
            CAPTURE(divisor);
            CAPTURE(max);
            for (uint32_t x = 0; x <= std::min(max, 3000u); ++x) {
                REQUIRE(magic.divide(x) == x / divisor);
            }
            std::uniform_int_distribution<uint32_t> dist(0, max);
            for (int i = 0; i < 3000; ++i) {
                const uint32_t x = dist(rng);
                REQUIRE(magic.divide(x) == x / divisor);
            }
            REQUIRE(magic.divide(max) == max / divisor);
        }
    }
}

TEST_CASE("scalar batch kernels equal the per-index oracle") {
    for (const auto& p : full_grid(768)) {
        std::vector<uint32_t> fwd(p.ncpbs());
        std::vector<uint32_t> rev(p.ncpbs());
        kernels::fill_interleave_addresses(p, fwd, Level::Scalar);
        kernels::fill_deinterleave_addresses(p, rev, Level::Scalar);
        for (uint32_t i = 0; i < p.ncpbs(); ++i) {
            REQUIRE(fwd[i] == interleaver_address(p, i));
            REQUIRE(rev[i] == deinterleaver_address(p, i));
        }
    }
}

TEST_CASE("vector kernels are bit-identical to scalar over the full grid") {
    if (!kernels::level_available(Level::Avx2)) {
        MESSAGE("AVX2 not available on this host; vector lane not exercised");
        return;
    }
    for (const auto& p : full_grid(4608)) {
        CAPTURE(to_string(p.modulation()));
        CAPTURE(p.ncpbs());
        CAPTURE(p.rows());
        std::vector<uint32_t> scalar(p.ncpbs());
        std::vector<uint32_t> simd(p.ncpbs());

        kernels::fill_interleave_addresses(p, scalar, Level::Scalar);
        kernels::fill_interleave_addresses(p, simd, Level::Avx2);
        REQUIRE(scalar == simd);

        kernels::fill_deinterleave_addresses(p, scalar, Level::Scalar);
        kernels::fill_deinterleave_addresses(p, simd, Level::Avx2);
        REQUIRE(scalar == simd);
    }
}

TEST_CASE("auto level resolves to something available") {
    const Level best = kernels::preferred_level();
    CHECK(best != Level::Auto);
    CHECK(kernels::level_available(best));
    CHECK(kernels::resolve_level(Level::Auto) == best);
    CHECK(kernels::resolve_level(Level::Scalar) == Level::Scalar);
}

TEST_CASE("gather_bytes agrees between levels, including ragged tails") {
    std::mt19937 rng(1234);
    for (size_t n : {1u, 7u, 8u, 9u, 95u, 96u, 576u, 4608u}) {
        std::vector<uint8_t> in(n + kernels::kGatherPad, 0);
        std::vector<uint32_t> idx(n);
        for (size_t i = 0; i < n; ++i) {
            in[i] = static_cast<uint8_t>(rng());
            idx[i] = static_cast<uint32_t>(rng() % n);
        }
        idx[0] = static_cast<uint32_t>(n - 1);  // force a read at the far edge

        std::vector<uint8_t> scalar_out(n, 0xEE);
        kernels::gather_bytes(in.data(), idx.data(), scalar_out.data(), n, Level::Scalar);
        for (size_t i = 0; i < n; ++i) REQUIRE(scalar_out[i] == in[idx[i]]);

        if (kernels::level_available(Level::Avx2)) {
            std::vector<uint8_t> simd_out(n, 0x11);
            kernels::gather_bytes(in.data(), idx.data(), simd_out.data(), n, Level::Avx2);
            REQUIRE(simd_out == scalar_out);
        }
    }
}

TEST_CASE("batch kernels validate the output span size") {
    const auto p = make_params(Modulation::Qpsk, 96, 16);
    std::vector<uint32_t> wrong(95);
    CHECK_THROWS_AS(kernels::fill_interleave_addresses(p, wrong), InterleaverError);
    CHECK_THROWS_AS(kernels::fill_deinterleave_addresses(p, wrong), InterleaverError);
}
