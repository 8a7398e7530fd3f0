#include "disord/error.hpp"

#include "disord/hash.hpp"

namespace disord {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::HashMismatch: return "HashMismatch";
        case Errc::TypeMismatch: return "TypeMismatch";
        case Errc::PlainVectorOperand: return "PlainVectorOperand";
        case Errc::PlainVectorReplacement: return "PlainVectorReplacement";
        case Errc::BadIndex: return "BadIndex";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::MixedKinds: return "MixedKinds";
        case Errc::NegativePower: return "NegativePower";
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownName: return "UnknownName";
    }
    return "UnknownError";
}

Error Error::hash_mismatch(const Hash& a, const Hash& b) {
    return Error(Errc::HashMismatch,
                 "hash codes " + a.hex12() + " and " + b.hex12() + " do not match");
}

Error Error::bad_extract_index() {
    return Error(Errc::BadIndex,
                 "if using a regular index to extract, must extract each element once "
                 "and once only (or none of them)");
}

Error Error::bad_replace_index() {
    return Error(Errc::BadIndex,
                 "if using a regular index to replace, must specify each element once "
                 "and once only");
}

}  // namespace disord
