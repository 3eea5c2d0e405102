// Bit stream I/O in the two wire formats:
//   ascii - characters '0'/'1', whitespace ignored on input; output is one
//           line per write() call;
//   raw   - packed bytes, MSB first; the payload bit count of the final
//           byte is declared out of band (total_bits), writer zero-pads.
#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>

#include "wimax/params.hpp"

namespace wimax {

class BitSource {
public:
    virtual ~BitSource() = default;

    // Fills dest with 0/1 bytes; returns the count delivered, short only at
    // end of stream. Throws InterleaverError(IoError) on malformed input.
    virtual size_t read(std::span<uint8_t> dest) = 0;
};

class BitSink {
public:
    virtual ~BitSink() = default;

    virtual void write(std::span<const uint8_t> bits) = 0;

    // Flushes any buffered partial byte (raw) and the underlying stream.
    virtual void finish() = 0;
};

class AsciiBitSource final : public BitSource {
public:
    explicit AsciiBitSource(std::istream& in) : in_(in) {}
    size_t read(std::span<uint8_t> dest) override;

private:
    std::istream& in_;
};

class AsciiBitSink final : public BitSink {
public:
    explicit AsciiBitSink(std::ostream& out) : out_(out) {}
    void write(std::span<const uint8_t> bits) override;
    void finish() override;

private:
    std::ostream& out_;
};

class RawBitSource final : public BitSource {
public:
    // total_bits == 0 means the whole stream is payload. A nonzero value
    // declares the payload length; a stream shorter than that is an error.
    explicit RawBitSource(std::istream& in, uint64_t total_bits = 0);
    size_t read(std::span<uint8_t> dest) override;

private:
    std::istream& in_;
    uint64_t remaining_;
    bool bounded_;
    uint8_t byte_ = 0;
    uint32_t bits_left_ = 0;
};

class RawBitSink final : public BitSink {
public:
    explicit RawBitSink(std::ostream& out) : out_(out) {}
    void write(std::span<const uint8_t> bits) override;
    void finish() override;

private:
    std::ostream& out_;
    uint8_t byte_ = 0;
    uint32_t filled_ = 0;
};

}  // namespace wimax
