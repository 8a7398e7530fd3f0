#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "disord/error.hpp"
#include "disord/hash.hpp"
#include "disord/value.hpp"

namespace disord {

// Immutable homogeneous sequence tagged with a provenance token. Elements
// are stored in an implementation-specific order; only order-insensitive
// operations are offered, and every operation returns a new object.
class Disord {
public:
    Disord() : kind_(Value::Kind::Number), hash_(sequence_hash({})) {}

    // Creation: token is the digest of the order-sensitive encoding of the
    // stored sequence. Throws Error(MixedKinds) on heterogeneous input.
    // `empty_kind` fixes the element kind when `values` is empty.
    static Disord from_values(std::vector<Value> values,
                              Value::Kind empty_kind = Value::Kind::Number);

    // Lawful derivation: installs an already-derived token. The caller is
    // responsible for the provenance algebra; element kinds are still checked.
    static Disord with_hash(std::vector<Value> values, Hash hash,
                            Value::Kind empty_kind = Value::Kind::Number);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    Value::Kind kind() const { return kind_; }
    const Hash& hash() const { return hash_; }
    const std::vector<Value>& elements() const { return elems_; }
    const Value& at(std::size_t i) const { return elems_[i]; }

    // Equal tokens, or either side of length zero.
    bool compatible_with(const Disord& other) const {
        return empty() || other.empty() || hash_ == other.hash_;
    }

    // Same token and same element sequence.
    friend bool operator==(const Disord& a, const Disord& b) {
        return a.hash_ == b.hash_ && a.elems_ == b.elems_;
    }

private:
    Disord(std::vector<Value> elems, Value::Kind kind, Hash hash)
        : elems_(std::move(elems)), kind_(kind), hash_(hash) {}

    std::vector<Value> elems_;
    Value::Kind kind_;
    Hash hash_;
};

enum class BinOp { Add, Sub, Mul, Div, Pow, Mod, Pmax, Pmin, Lt, Le, Gt, Ge, Eq, Ne };

bool is_comparison(BinOp op);
const char* binop_name(BinOp op);

// Scalar semantics shared by the container and the interpreter. Throws
// Error(TypeMismatch) when the kinds do not fit the operator.
Value apply_binop(BinOp op, const Value& a, const Value& b);

// Operand of an elementwise operation: a broadcast scalar, a disordered
// vector, or a plain sequence (only length 1 is admissible; anything longer
// raises PlainVectorOperand since its order cannot be matched).
using Operand = std::variant<Value, Disord, std::vector<Value>>;

// Elementwise binary operation. Both-Disord operands must be compatible;
// the result carries the Disord operand's token (comparisons yield a
// Boolean disord under the same token).
Disord elementwise(BinOp op, const Operand& lhs, const Operand& rhs);

// Elementwise map; length and token are preserved.
template <typename F>
Disord map_elements(const Disord& d, F&& f) {
    std::vector<Value> out;
    out.reserve(d.size());
    for (const Value& v : d.elements()) out.push_back(f(v));
    return Disord::with_hash(std::move(out), d.hash(), d.kind());
}

enum class Reduction { Max, Min, Sum, Prod, Any, All, Length };

// Order-insensitive reduction to a plain scalar (provenance discarded).
// Sum/Prod accumulate in value-sorted order so the result is bit-identical
// under any storage order.
Value reduce(Reduction r, const Disord& d);

// Plain ordered copy; provenance deliberately discarded.
std::vector<Value> sort_plain(const Disord& d, bool ascending = true);

// Reversed elements under the involuted token.
Disord reverse(const Disord& d);

// Boolean-mask extraction; mask must be a compatible Boolean disord of the
// same length. Result token is derive_subset(d.hash, mask).
Disord extract_bool(const Disord& d, const Disord& mask);

// Positional extraction (0-based): legal only for the empty index list or a
// permutation of all positions.
Disord extract_int(const Disord& d, std::span<const std::size_t> indices);

using ReplaceValue = std::variant<Value, Disord, std::vector<Value>>;

// Masked replacement; a Disord replacement value must carry the extracted
// subset's token and length. The result keeps d's token.
Disord replace_bool(const Disord& d, const Disord& mask, const ReplaceValue& value);

// Positional replacement; indices must cover every position exactly once.
// A scalar keeps the token; a full-length plain sequence installs values
// under a fresh creation token (the old correspondence is severed).
Disord replace_int(const Disord& d, std::span<const std::size_t> indices,
                   const ReplaceValue& value);

// Whole-object replacement: scalar broadcast (token kept), compatible
// Disord (token kept), or a plain sequence, which is admissible only at
// length 1.
Disord replace_all(const Disord& d, const ReplaceValue& value);

}  // namespace disord
