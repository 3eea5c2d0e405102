#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>

#include "wimax/address_sequence.hpp"
#include "wimax/oracle.hpp"

using namespace wimax;

namespace {

// First 5x5 of the published address tables (d=16).
constexpr std::array<std::array<uint32_t, 5>, 5> kQpsk96 = {{{0, 16, 32, 48, 64},
                                                             {1, 17, 33, 49, 65},
                                                             {2, 18, 34, 50, 66},
                                                             {3, 19, 35, 51, 67},
                                                             {4, 20, 36, 52, 68}}};
constexpr std::array<std::array<uint32_t, 5>, 5> kQam16_192 = {{{0, 16, 32, 48, 64},
                                                                {17, 1, 49, 33, 81},
                                                                {2, 18, 34, 50, 66},
                                                                {19, 3, 51, 35, 83},
                                                                {4, 20, 36, 52, 68}}};
constexpr std::array<std::array<uint32_t, 5>, 5> kQam64_576 = {{{0, 16, 32, 48, 64},
                                                                {17, 33, 1, 65, 81},
                                                                {34, 2, 18, 82, 50},
                                                                {3, 19, 35, 51, 67},
                                                                {20, 36, 4, 68, 84}}};

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

void check_table(const InterleaverParams& p,
                 const std::array<std::array<uint32_t, 5>, 5>& expected) {
    for (uint32_t j = 0; j < 5; ++j) {
        for (uint32_t i = 0; i < 5; ++i) {
            CAPTURE(j);
            CAPTURE(i);
            CHECK(deinterleaver_address(p, j * p.columns() + i) == expected[j][i]);
        }
    }
}

}  // namespace

TEST_CASE("deinterleaver addresses reproduce the published tables") {
    check_table(make_params(Modulation::Qpsk, 96, 16), kQpsk96);
    check_table(make_params(Modulation::Qam16, 192, 16), kQam16_192);
    check_table(make_params(Modulation::Qam64, 576, 16), kQam64_576);
}

TEST_CASE("interleaver address spot values") {
    const auto qpsk = make_params(Modulation::Qpsk, 96, 16);
    CHECK(interleaver_address(qpsk, 0) == 0);
    // k=16: first permutation lands on m=1, s=1 keeps it.
    CHECK(interleave_first_perm(qpsk, 16) == 1);
    CHECK(interleaver_address(qpsk, 16) == 1);

    const auto qam16 = make_params(Modulation::Qam16, 192, 16);
    // k=17: m = 12*1 + 1 = 13; second permutation pairs it down to 12.
    CHECK(interleave_first_perm(qam16, 17) == 13);
    CHECK(interleaver_address(qam16, 17) == 12);
}

TEST_CASE("deinterleaver address spot values") {
    const auto qpsk = make_params(Modulation::Qpsk, 96, 16);
    CHECK(deinterleaver_address(qpsk, 0) == 0);
    CHECK(deinterleaver_address(qpsk, 6) == 1);
    CHECK(deinterleave_first_perm(qpsk, 6) == 6);

    const auto qam16 = make_params(Modulation::Qam16, 192, 16);
    CHECK(deinterleaver_address(qam16, 0) == 0);
    CHECK(deinterleaver_address(qam16, 12) == 17);
    CHECK(deinterleave_first_perm(qam16, 12) == 13);

    const auto qam64 = make_params(Modulation::Qam64, 576, 16);
    CHECK(deinterleaver_address(qam64, 36) == 17);
    CHECK(deinterleaver_address(qam64, 37) == 33);
    CHECK(deinterleaver_address(qam64, 38) == 1);
}

TEST_CASE("index bounds are enforced") {
    const auto p = make_params(Modulation::Qpsk, 96, 16);
    CHECK_THROWS_AS((void)interleaver_address(p, 96), InterleaverError);
    CHECK_THROWS_AS((void)deinterleaver_address(p, 1000), InterleaverError);
    CHECK_NOTHROW((void)interleaver_address(p, 95));
}

TEST_CASE("both directions are bijections and mutual inverses") {
    for (const auto& p : full_grid(1152)) {
        CAPTURE(to_string(p.modulation()));
        CAPTURE(p.ncpbs());
        CAPTURE(p.rows());
        const auto fwd = build_sequence(p, Direction::Interleave, kernels::Level::Scalar);
        const auto rev = build_sequence(p, Direction::Deinterleave, kernels::Level::Scalar);
        REQUIRE(fwd.is_permutation());
        REQUIRE(rev.is_permutation());
        for (uint32_t k = 0; k < p.ncpbs(); ++k) {
            if (rev[fwd[k]] != k) {
                CAPTURE(k);
                REQUIRE(rev[fwd[k]] == k);
            }
        }
    }
}

TEST_CASE("QPSK deinterleaver reduces to the plain row/column transpose") {
    for (uint32_t d : {12u, 16u}) {
        for (uint32_t n : {d * 3, d * 6, d * 17}) {
            const auto p = make_params(Modulation::Qpsk, n, d);
            for (uint32_t i = 0; i < n; ++i) {
                REQUIRE(deinterleaver_address(p, i) ==
                        d * (i % p.columns()) + i / p.columns());
            }
        }
    }
}

TEST_CASE("build_sequence matches the per-index oracle") {
    const auto p = make_params(Modulation::Qam64, 576, 16);
    const auto seq = build_sequence(p, Direction::Deinterleave, kernels::Level::Scalar);
    REQUIRE(seq.size() == 576);
    CHECK(seq.params() == p);
    CHECK(seq.direction() == Direction::Deinterleave);
    for (uint32_t n = 0; n < p.ncpbs(); ++n) REQUIRE(seq[n] == deinterleaver_address(p, n));

    // First six entries of the QPSK/96 deinterleave sequence.
    const auto qpsk = build_sequence(make_params(Modulation::Qpsk, 96, 16),
                                     Direction::Deinterleave, kernels::Level::Scalar);
    const std::vector<uint32_t> head(qpsk.addresses().begin(), qpsk.addresses().begin() + 6);
    CHECK(head == std::vector<uint32_t>{0, 16, 32, 48, 64, 80});
}

TEST_CASE("invert flips direction and composes to identity") {
    const auto p = make_params(Modulation::Qam16, 192, 16);
    const auto fwd = build_sequence(p, Direction::Interleave);
    const auto rev = build_sequence(p, Direction::Deinterleave);

    const auto inv = invert(fwd);
    CHECK(inv.direction() == Direction::Deinterleave);
    CHECK(inv.addresses() == rev.addresses());

    CHECK(invert(invert(rev)) == rev);
}

TEST_CASE("invert on random permutations is an involution") {
    std::mt19937 rng(7);
    const auto p = make_params(Modulation::Qpsk, 192, 16);
    std::vector<uint32_t> perm(p.ncpbs());
    for (uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (int round = 0; round < 20; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const AddressSequence seq(p, Direction::Interleave, perm);
        const auto twice = invert(invert(seq));
        REQUIRE(twice.addresses() == perm);
    }
}

TEST_CASE("invert rejects non-permutations") {
    const auto p = make_params(Modulation::Qpsk, 96, 16);
    std::vector<uint32_t> bad(96, 0);  // constant map
    const AddressSequence seq(p, Direction::Deinterleave, bad);
    CHECK(!seq.is_permutation());
    CHECK_THROWS_AS((void)invert(seq), InterleaverError);

    std::vector<uint32_t> out_of_range(96);
    for (uint32_t i = 0; i < 96; ++i) out_of_range[i] = i;
    out_of_range[5] = 96;
    CHECK_THROWS_AS((void)invert(AddressSequence(p, Direction::Deinterleave, out_of_range)),
                    InterleaverError);
}

TEST_CASE("sequence length is validated") {
    const auto p = make_params(Modulation::Qpsk, 96, 16);
    CHECK_THROWS_AS(AddressSequence(p, Direction::Interleave, std::vector<uint32_t>(95)),
                    InterleaverError);
}

TEST_CASE("sequences are deterministic across runs") {
    const auto p = make_params(Modulation::Qam64, 576, 16);
    CHECK(build_sequence(p, Direction::Deinterleave) ==
          build_sequence(p, Direction::Deinterleave));
}
