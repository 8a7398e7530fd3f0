#pragma once

#include <stdexcept>
#include <string>

namespace disord {

class Hash;

enum class Errc {
    HashMismatch,
    TypeMismatch,
    PlainVectorOperand,
    PlainVectorReplacement,
    BadIndex,
    LengthMismatch,
    MixedKinds,
    NegativePower,
    ParseError,
    UnknownName,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

    // "hash codes <12hex>... and <12hex>... do not match"
    static Error hash_mismatch(const Hash& a, const Hash& b);
    static Error bad_extract_index();
    static Error bad_replace_index();

private:
    Errc code_;
};

}  // namespace disord
