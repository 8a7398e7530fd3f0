#pragma once

#include <string>
#include <variant>
#include <vector>

#include "disord/hash.hpp"

namespace disord {

// One element of a disordered vector: a number, a Boolean, a symbol, or a
// flat list of numbers/symbols (the shape the polynomial accessors produce).
class Value {
public:
    enum class Kind : std::uint8_t { Number, Boolean, Symbol, List };

    // Display hint for empty lists ("integer(0)" vs "character(0)"); not
    // part of value equality.
    enum class ListKind : std::uint8_t { Number, Symbol };

    Value() : data_(0.0) {}

    static Value number(double v) { return Value(v); }
    static Value boolean(bool v) { return Value(v); }
    static Value symbol(std::string s) { return Value(std::move(s)); }
    static Value list(std::vector<Value> items, ListKind hint);

    Kind kind() const { return static_cast<Kind>(data_.index()); }
    bool is_number() const { return kind() == Kind::Number; }
    bool is_boolean() const { return kind() == Kind::Boolean; }
    bool is_symbol() const { return kind() == Kind::Symbol; }
    bool is_list() const { return kind() == Kind::List; }

    double num() const { return std::get<double>(data_); }
    bool flag() const { return std::get<bool>(data_); }
    const std::string& sym() const { return std::get<std::string>(data_); }
    const std::vector<Value>& items() const { return std::get<ListBox>(data_).items; }
    ListKind list_kind() const;

    // Contents-only equality; the empty-list display hint is ignored.
    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

    // Order-sensitive canonical encoding (type tag + payload).
    void encode(ByteSink& sink) const;

private:
    struct ListBox {
        std::vector<Value> items;
        ListKind hint;
        friend bool operator==(const ListBox& a, const ListBox& b) {
            return a.items == b.items;
        }
    };

    explicit Value(double v) : data_(v) {}
    explicit Value(bool v) : data_(v) {}
    explicit Value(std::string v) : data_(std::move(v)) {}
    explicit Value(ListBox v) : data_(std::move(v)) {}

    std::variant<double, bool, std::string, ListBox> data_;
};

const char* kind_name(Value::Kind k);

// Stable single-token rendering used for multiset payloads and internal
// ordering (not the user-facing display).
std::string canon_string(const Value& v);

// Strict weak order within one kind: numbers by value, FALSE before TRUE,
// symbols byte-wise, lists by canonical string.
bool value_less(const Value& a, const Value& b);

// Creation encoding of a whole sequence (element count + each element).
Hash sequence_hash(const std::vector<Value>& values);

}  // namespace disord
