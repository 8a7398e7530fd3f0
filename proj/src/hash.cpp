#include "disord/hash.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cstring>

#include "disord/error.hpp"

namespace disord {

namespace {

// Nonzero XOR mask realizing the reversal involution on tokens.
constexpr std::array<std::uint8_t, Hash::kBytes> kReverseMask = {
    0x9d, 0x2c, 0x81, 0x59, 0xe6, 0x4b, 0x17, 0xa8, 0x3f, 0xd0,
    0x65, 0xbe, 0x0a, 0xc7, 0x52, 0x98, 0x21, 0xf4, 0x8b, 0x36};

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

Hash Hash::of_bytes(std::span<const std::uint8_t> data) {
    Hash h;
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), h.bytes_.data(), &len, EVP_sha1(), nullptr);
    return h;
}

Hash Hash::parse_hex(std::string_view hex) {
    if (hex.size() != 2 * kBytes)
        throw Error(Errc::ParseError, "hash hex form must have 40 characters");
    Hash h;
    for (std::size_t i = 0; i < kBytes; ++i) {
        int hi = hex_digit(hex[2 * i]);
        int lo = hex_digit(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw Error(Errc::ParseError, "hash hex form must be lowercase hex");
        h.bytes_[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return h;
}

std::string Hash::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * kBytes);
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::string Hash::hex12() const { return hex().substr(0, 12) + "..."; }

Hash fresh_from_sequence(std::span<const std::uint8_t> canonical_bytes) {
    return Hash::of_bytes(canonical_bytes);
}

Hash derive_subset(const Hash& parent, const std::vector<bool>& mask) {
    bool all_true = true;
    for (bool b : mask)
        if (!b) { all_true = false; break; }
    if (all_true) return parent;  // identity view
    ByteSink sink;
    sink.raw(parent.bytes());
    sink.u8('S');
    sink.u64(mask.size());
    for (bool b : mask) sink.u8(b ? 1 : 0);
    return Hash::of_bytes(sink.bytes());
}

Hash derive_permutation(const Hash& parent, std::span<const std::size_t> perm) {
    bool identity = true;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) { identity = false; break; }
    if (identity) return parent;
    ByteSink sink;
    sink.raw(parent.bytes());
    sink.u8('P');
    sink.u64(perm.size());
    for (std::size_t i : perm) sink.u64(i);
    return Hash::of_bytes(sink.bytes());
}

Hash involute_reverse(const Hash& h) {
    Hash out = h;
    for (std::size_t i = 0; i < Hash::kBytes; ++i) out.bytes_[i] ^= kReverseMask[i];
    return out;
}

void ByteSink::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteSink::f64(double v) {
    if (v == 0.0) v = 0.0;  // fold -0.0 onto +0.0, matching value equality
    u64(std::bit_cast<std::uint64_t>(v));
}

void ByteSink::str(std::string_view s) {
    u64(s.size());
    for (char c : s) buf_.push_back(static_cast<std::uint8_t>(c));
}

void ByteSink::raw(std::span<const std::uint8_t> bytes) {
    buf_.insert(buf_.end(), bytes.begin(), bytes.end());
}

}  // namespace disord
