#include "wimax/bitio.hpp"

#include <cctype>

namespace wimax {

namespace {

[[noreturn]] void io_fail(const std::string& msg) {
    throw InterleaverError(Errc::IoError, msg);
}

}  // namespace

size_t AsciiBitSource::read(std::span<uint8_t> dest) {
    size_t count = 0;
    while (count < dest.size()) {
        const int c = in_.get();
        if (c == std::istream::traits_type::eof()) {
            if (in_.bad()) io_fail("read failure on ascii bit stream");
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '0' || c == '1') {
            dest[count++] = static_cast<uint8_t>(c - '0');
            continue;
        }
        io_fail(std::string("invalid character '") + static_cast<char>(c) +
                "' in ascii bit stream (expected 0, 1 or whitespace)");
    }
    return count;
}

void AsciiBitSink::write(std::span<const uint8_t> bits) {
    for (uint8_t b : bits) out_.put(b ? '1' : '0');
    out_.put('\n');
    if (!out_) io_fail("write failure on ascii bit stream");
}

void AsciiBitSink::finish() {
    out_.flush();
    if (!out_) io_fail("flush failure on ascii bit stream");
}

RawBitSource::RawBitSource(std::istream& in, uint64_t total_bits)
    : in_(in), remaining_(total_bits), bounded_(total_bits != 0) {}

size_t RawBitSource::read(std::span<uint8_t> dest) {
    size_t count = 0;
    while (count < dest.size()) {
        if (bounded_ && remaining_ == 0) break;
        if (bits_left_ == 0) {
            const int c = in_.get();
            if (c == std::istream::traits_type::eof()) {
                if (in_.bad()) io_fail("read failure on raw bit stream");
                if (bounded_ && remaining_ > 0) {
                    io_fail("raw stream ended with " + std::to_string(remaining_) +
                            " declared payload bits missing");
                }
                break;
            }
            byte_ = static_cast<uint8_t>(c);
            bits_left_ = 8;
        }
        dest[count++] = (byte_ >> (bits_left_ - 1)) & 1u;  // MSB first
        --bits_left_;
        if (bounded_) --remaining_;
    }
    return count;
}

void RawBitSink::write(std::span<const uint8_t> bits) {
    for (uint8_t b : bits) {
        byte_ = static_cast<uint8_t>((byte_ << 1) | (b & 1u));
        if (++filled_ == 8) {
            out_.put(static_cast<char>(byte_));
            byte_ = 0;
            filled_ = 0;
        }
    }
    if (!out_) io_fail("write failure on raw bit stream");
}

void RawBitSink::finish() {
    if (filled_ > 0) {
        byte_ = static_cast<uint8_t>(byte_ << (8 - filled_));  // zero-pad tail
        out_.put(static_cast<char>(byte_));
        byte_ = 0;
        filled_ = 0;
    }
    out_.flush();
    if (!out_) io_fail("flush failure on raw bit stream");
}

}  // namespace wimax
