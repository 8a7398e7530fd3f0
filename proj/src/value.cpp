#include "disord/value.hpp"

#include <charconv>
#include <cmath>

namespace disord {

Value Value::list(std::vector<Value> items, ListKind hint) {
    return Value(ListBox{std::move(items), hint});
}

Value::ListKind Value::list_kind() const {
    const auto& box = std::get<ListBox>(data_);
    if (!box.items.empty())
        return box.items.front().is_symbol() ? ListKind::Symbol : ListKind::Number;
    return box.hint;
}

bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

void Value::encode(ByteSink& sink) const {
    switch (kind()) {
        case Kind::Number:
            sink.u8('n');
            sink.f64(num());
            break;
        case Kind::Boolean:
            sink.u8('b');
            sink.u8(flag() ? 1 : 0);
            break;
        case Kind::Symbol:
            sink.u8('s');
            sink.str(sym());
            break;
        case Kind::List: {
            sink.u8('l');
            const auto& xs = items();
            sink.u64(xs.size());
            for (const Value& x : xs) x.encode(sink);
            break;
        }
    }
}

const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::Kind::Number: return "number";
        case Value::Kind::Boolean: return "boolean";
        case Value::Kind::Symbol: return "symbol";
        case Value::Kind::List: return "list";
    }
    return "?";
}

namespace {

std::string number_token(double v) {
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    if (v == 0.0) v = 0.0;
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace

std::string canon_string(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Number: return number_token(v.num());
        case Value::Kind::Boolean: return v.flag() ? "TRUE" : "FALSE";
        case Value::Kind::Symbol: return "\"" + v.sym() + "\"";
        case Value::Kind::List: {
            std::string out = "[";
            bool first = true;
            for (const Value& x : v.items()) {
                if (!first) out += " ";
                out += canon_string(x);
                first = false;
            }
            return out + "]";
        }
    }
    return "";
}

bool value_less(const Value& a, const Value& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    switch (a.kind()) {
        case Value::Kind::Number: return a.num() < b.num();
        case Value::Kind::Boolean: return !a.flag() && b.flag();
        case Value::Kind::Symbol: return a.sym() < b.sym();
        case Value::Kind::List: return canon_string(a) < canon_string(b);
    }
    return false;
}

Hash sequence_hash(const std::vector<Value>& values) {
    ByteSink sink;
    sink.u8('D');
    sink.u64(values.size());
    for (const Value& v : values) v.encode(sink);
    return fresh_from_sequence(sink.bytes());
}

}  // namespace disord
