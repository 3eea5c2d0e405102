#include "wimax/floorless.hpp"

#include <cassert>

namespace wimax {

FloorlessGenerator::FloorlessGenerator(const InterleaverParams& params)
    : params_(params),
      d_(params.rows()),
      two_d_(params.rows() + params.rows()),
      cols_max_(params.columns_max()),
      step_(params.step()) {}

uint32_t FloorlessGenerator::next() {
    if (emitted_ == params_.ncpbs()) {
        throw InterleaverError(Errc::Exhausted,
                               "all " + std::to_string(params_.ncpbs()) +
                                   " addresses already emitted");
    }

    uint32_t addr = 0;
    switch (params_.modulation()) {
        case Modulation::Qpsk:
            addr = base_ + row_;
            break;
        case Modulation::Qam16:
            if (row_phase_ == 0) {
                addr = base_ + row_;
            } else if (col_phase_ == 0) {
                addr = base_ + d_ + row_;
            } else {
                addr = base_ - d_ + row_;  // i odd, so base >= d
            }
            break;
        case Modulation::Qam64:
            if (row_phase_ == 0) {
                addr = base_ + row_;
            } else if (row_phase_ == 1) {
                addr = col_phase_ == 2 ? base_ - two_d_ + row_ : base_ + d_ + row_;
            } else {
                addr = col_phase_ == 0 ? base_ + two_d_ + row_ : base_ - d_ + row_;
            }
            break;
    }

    // Scan advance: column inner, row outer; addition/compare only.
    if (col_ == cols_max_) {
        col_ = 0;
        col_phase_ = 0;
        base_ = 0;
        ++row_;
        if (++row_phase_ == step_) row_phase_ = 0;
    } else {
        ++col_;
        base_ += d_;
        if (++col_phase_ == step_) col_phase_ = 0;
    }
    ++emitted_;

    assert(row_ >= params_.rows() || row_phase_ == row_ % step_);
    assert(col_phase_ == col_ % step_);
    assert(base_ == d_ * col_);
    return addr;
}

void FloorlessGenerator::reset() {
    row_ = col_ = base_ = row_phase_ = col_phase_ = emitted_ = 0;
}

AddressSequence generate_all(const InterleaverParams& params) {
    FloorlessGenerator gen(params);
    std::vector<uint32_t> addrs;
    addrs.reserve(params.ncpbs());
    while (!gen.done()) addrs.push_back(gen.next());
    return AddressSequence(params, Direction::Deinterleave, std::move(addrs));
}

}  // namespace wimax
