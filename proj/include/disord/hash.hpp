#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace disord {

// 160-bit opaque provenance token. Two disordered vectors may be combined
// elementwise only when their tokens match; the token identifies the
// (unknown) storage order an object was born with.
class Hash {
public:
    static constexpr std::size_t kBytes = 20;

    Hash() : bytes_{} {}

    // Digest of an arbitrary byte string.
    static Hash of_bytes(std::span<const std::uint8_t> data);

    // Parses the 40-char lowercase hex form. Throws Error(ParseError) on
    // malformed input.
    static Hash parse_hex(std::string_view hex);

    // 40 lowercase hex characters.
    std::string hex() const;

    // Truncated form used in error messages: first 12 hex chars + "...".
    std::string hex12() const;

    std::span<const std::uint8_t, kBytes> bytes() const { return bytes_; }

    friend bool operator==(const Hash& a, const Hash& b) { return a.bytes_ == b.bytes_; }
    friend bool operator!=(const Hash& a, const Hash& b) { return !(a == b); }
    friend bool operator<(const Hash& a, const Hash& b) { return a.bytes_ < b.bytes_; }

private:
    friend Hash involute_reverse(const Hash&);
    std::array<std::uint8_t, kBytes> bytes_;
};

// Creation token: digest of the order-sensitive canonical encoding of a
// stored sequence. Same bytes, same token.
Hash fresh_from_sequence(std::span<const std::uint8_t> canonical_bytes);

// Token of a Boolean-mask extraction. The all-true mask is the identity
// view and returns the parent unchanged.
Hash derive_subset(const Hash& parent, const std::vector<bool>& mask);

// Token of a full-permutation extraction (0-based indices). The identity
// permutation returns the parent unchanged. The caller validates that
// `perm` really is a permutation.
Hash derive_permutation(const Hash& parent, std::span<const std::size_t> perm);

// Token of the reversed sequence. Involution: applying it twice restores
// the original, and the image always differs from the input.
Hash involute_reverse(const Hash& h);

// Order-sensitive byte encoder feeding the digests above.
class ByteSink {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u64(std::uint64_t v);
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void f64(double v);
    void str(std::string_view s);
    void raw(std::span<const std::uint8_t> bytes);

    std::span<const std::uint8_t> bytes() const { return buf_; }

private:
    std::vector<std::uint8_t> buf_;
};

}  // namespace disord
