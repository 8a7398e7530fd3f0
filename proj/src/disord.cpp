#include "disord/disord.hpp"

#include <algorithm>
#include <cmath>

namespace disord {

namespace {

Value::Kind check_homogeneous(const std::vector<Value>& values, Value::Kind empty_kind) {
    if (values.empty()) return empty_kind;
    Value::Kind k = values.front().kind();
    for (const Value& v : values)
        if (v.kind() != k)
            throw Error(Errc::MixedKinds, "disord elements must all have the same kind");
    return k;
}

double num_or_throw(const Value& v, const char* what) {
    if (!v.is_number())
        throw Error(Errc::TypeMismatch,
                    std::string("non-numeric argument to ") + what);
    return v.num();
}

// R's %% convention: result takes the sign of the divisor.
double r_mod(double a, double b) {
    double r = std::fmod(a, b);
    if (r != 0.0 && ((r < 0.0) != (b < 0.0))) r += b;
    return r;
}

}  // namespace

Disord Disord::from_values(std::vector<Value> values, Value::Kind empty_kind) {
    Value::Kind k = check_homogeneous(values, empty_kind);
    Hash h = sequence_hash(values);
    return Disord(std::move(values), k, h);
}

Disord Disord::with_hash(std::vector<Value> values, Hash hash, Value::Kind empty_kind) {
    Value::Kind k = check_homogeneous(values, empty_kind);
    return Disord(std::move(values), k, hash);
}

bool is_comparison(BinOp op) {
    switch (op) {
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge:
        case BinOp::Eq:
        case BinOp::Ne:
            return true;
        default:
            return false;
    }
}

const char* binop_name(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Pow: return "^";
        case BinOp::Mod: return "%%";
        case BinOp::Pmax: return "pmax";
        case BinOp::Pmin: return "pmin";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
    }
    return "?";
}

Value apply_binop(BinOp op, const Value& a, const Value& b) {
    if (op == BinOp::Eq || op == BinOp::Ne) {
        if (a.kind() != b.kind())
            throw Error(Errc::TypeMismatch, "comparison of values of different kinds");
        bool eq = (a == b);
        return Value::boolean(op == BinOp::Eq ? eq : !eq);
    }
    if (is_comparison(op)) {
        double x = num_or_throw(a, "comparison operator");
        double y = num_or_throw(b, "comparison operator");
        bool r = false;
        switch (op) {
            case BinOp::Lt: r = x < y; break;
            case BinOp::Le: r = x <= y; break;
            case BinOp::Gt: r = x > y; break;
            case BinOp::Ge: r = x >= y; break;
            default: break;
        }
        return Value::boolean(r);
    }
    double x = num_or_throw(a, "binary operator");
    double y = num_or_throw(b, "binary operator");
    switch (op) {
        case BinOp::Add: return Value::number(x + y);
        case BinOp::Sub: return Value::number(x - y);
        case BinOp::Mul: return Value::number(x * y);
        case BinOp::Div: return Value::number(x / y);
        case BinOp::Pow: return Value::number(std::pow(x, y));
        case BinOp::Mod: return Value::number(r_mod(x, y));
        case BinOp::Pmax: return Value::number(std::max(x, y));
        case BinOp::Pmin: return Value::number(std::min(x, y));
        default: break;
    }
    throw Error(Errc::TypeMismatch, "unsupported binary operator");
}

namespace {

// Normalized operand view: a scalar or a disord.
struct Side {
    const Disord* dis = nullptr;
    const Value* scalar = nullptr;
};

Side view_operand(const Operand& o) {
    Side s;
    if (const Value* v = std::get_if<Value>(&o)) {
        s.scalar = v;
    } else if (const Disord* d = std::get_if<Disord>(&o)) {
        s.dis = d;
    } else {
        const auto& plain = std::get<std::vector<Value>>(o);
        if (plain.size() != 1)
            throw Error(Errc::PlainVectorOperand,
                        "binary operation between a disord object and a plain vector "
                        "is not defined");
        s.scalar = &plain.front();
    }
    return s;
}

}  // namespace

Disord elementwise(BinOp op, const Operand& lhs, const Operand& rhs) {
    Side l = view_operand(lhs);
    Side r = view_operand(rhs);
    if (!l.dis && !r.dis)
        throw Error(Errc::TypeMismatch, "elementwise operation needs a disord operand");

    if (l.dis && r.dis) {
        const Disord& a = *l.dis;
        const Disord& b = *r.dis;
        if (!a.compatible_with(b)) throw Error::hash_mismatch(a.hash(), b.hash());
        if (a.empty() || b.empty()) {
            const Disord& e = a.empty() ? a : b;
            Value::Kind k = is_comparison(op) ? Value::Kind::Boolean : Value::Kind::Number;
            return Disord::with_hash({}, e.hash(), k);
        }
        if (a.size() != b.size())
            throw Error(Errc::LengthMismatch, "disord operands have different lengths");
        std::vector<Value> out;
        out.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out.push_back(apply_binop(op, a.at(i), b.at(i)));
        return Disord::with_hash(std::move(out), a.hash());
    }

    const Disord& d = l.dis ? *l.dis : *r.dis;
    const Value& s = l.dis ? *r.scalar : *l.scalar;
    std::vector<Value> out;
    out.reserve(d.size());
    for (const Value& v : d.elements())
        out.push_back(l.dis ? apply_binop(op, v, s) : apply_binop(op, s, v));
    Value::Kind k = is_comparison(op) ? Value::Kind::Boolean : Value::Kind::Number;
    return Disord::with_hash(std::move(out), d.hash(), k);
}

Value reduce(Reduction r, const Disord& d) {
    if (r == Reduction::Length) return Value::number(static_cast<double>(d.size()));

    if (r == Reduction::Any || r == Reduction::All) {
        if (d.kind() != Value::Kind::Boolean && !d.empty())
            throw Error(Errc::TypeMismatch, "any/all need a Boolean disord");
        bool any = false, all = true;
        for (const Value& v : d.elements()) {
            if (v.flag()) any = true;
            else all = false;
        }
        return Value::boolean(r == Reduction::Any ? any : all);
    }

    if (d.kind() != Value::Kind::Number && !d.empty())
        throw Error(Errc::TypeMismatch, "numeric reduction of a non-numeric disord");
    std::vector<double> xs;
    xs.reserve(d.size());
    for (const Value& v : d.elements()) xs.push_back(v.num());

    switch (r) {
        case Reduction::Max: {
            double m = -INFINITY;
            for (double x : xs) m = std::max(m, x);
            return Value::number(m);
        }
        case Reduction::Min: {
            double m = INFINITY;
            for (double x : xs) m = std::min(m, x);
            return Value::number(m);
        }
        case Reduction::Sum: {
            std::sort(xs.begin(), xs.end());
            double acc = 0.0;
            for (double x : xs) acc += x;
            return Value::number(acc);
        }
        case Reduction::Prod: {
            std::sort(xs.begin(), xs.end());
            double acc = 1.0;
            for (double x : xs) acc *= x;
            return Value::number(acc);
        }
        default:
            break;
    }
    throw Error(Errc::TypeMismatch, "unsupported reduction");
}

std::vector<Value> sort_plain(const Disord& d, bool ascending) {
    if (d.kind() == Value::Kind::List)
        throw Error(Errc::TypeMismatch, "cannot sort a disord of lists");
    std::vector<Value> out = d.elements();
    std::sort(out.begin(), out.end(), value_less);
    if (!ascending) std::reverse(out.begin(), out.end());
    return out;
}

Disord reverse(const Disord& d) {
    std::vector<Value> out(d.elements().rbegin(), d.elements().rend());
    return Disord::with_hash(std::move(out), involute_reverse(d.hash()), d.kind());
}

namespace {

std::vector<bool> mask_bits(const Disord& d, const Disord& mask) {
    if (mask.kind() != Value::Kind::Boolean && !mask.empty())
        throw Error(Errc::TypeMismatch, "extraction mask must be a Boolean disord");
    if (!d.compatible_with(mask)) throw Error::hash_mismatch(d.hash(), mask.hash());
    if (d.size() != mask.size())
        throw Error(Errc::LengthMismatch, "mask length does not match the disord");
    std::vector<bool> bits;
    bits.reserve(mask.size());
    for (const Value& v : mask.elements()) bits.push_back(v.flag());
    return bits;
}

bool is_permutation_of_all(std::span<const std::size_t> indices, std::size_t n) {
    if (indices.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t i : indices) {
        if (i >= n || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}

}  // namespace

Disord extract_bool(const Disord& d, const Disord& mask) {
    std::vector<bool> bits = mask_bits(d, mask);
    std::vector<Value> out;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out.push_back(d.at(i));
    return Disord::with_hash(std::move(out), derive_subset(d.hash(), bits), d.kind());
}

Disord extract_int(const Disord& d, std::span<const std::size_t> indices) {
    if (indices.empty()) return Disord::from_values({}, d.kind());
    if (!is_permutation_of_all(indices, d.size())) throw Error::bad_extract_index();
    std::vector<Value> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(d.at(i));
    return Disord::with_hash(std::move(out), derive_permutation(d.hash(), indices), d.kind());
}

Disord replace_bool(const Disord& d, const Disord& mask, const ReplaceValue& value) {
    std::vector<bool> bits = mask_bits(d, mask);
    std::size_t true_count = 0;
    for (bool b : bits)
        if (b) ++true_count;

    std::vector<Value> out = d.elements();

    if (const Disord* v = std::get_if<Disord>(&value)) {
        Hash required = derive_subset(d.hash(), bits);
        if (!(true_count == 0 && v->empty()) && v->hash() != required)
            throw Error::hash_mismatch(required, v->hash());
        if (v->size() != true_count)
            throw Error(Errc::LengthMismatch,
                        "replacement length does not match the number of selected elements");
        std::size_t j = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) out[i] = v->at(j++);
        return Disord::with_hash(std::move(out), d.hash(), d.kind());
    }

    const Value* scalar = std::get_if<Value>(&value);
    if (!scalar) {
        const auto& plain = std::get<std::vector<Value>>(value);
        if (plain.size() != 1)
            throw Error(Errc::PlainVectorReplacement,
                        "replacement value not length 1");
        scalar = &plain.front();
    }
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out[i] = *scalar;
    return Disord::with_hash(std::move(out), d.hash(), d.kind());
}

Disord replace_int(const Disord& d, std::span<const std::size_t> indices,
                   const ReplaceValue& value) {
    if (!is_permutation_of_all(indices, d.size())) throw Error::bad_replace_index();

    const Value* scalar = std::get_if<Value>(&value);
    const std::vector<Value>* plain = std::get_if<std::vector<Value>>(&value);
    if (plain && plain->size() == 1) scalar = &plain->front();

    if (scalar) {
        std::vector<Value> out(d.size(), *scalar);
        return Disord::with_hash(std::move(out), d.hash());
    }
    if (!plain)
        throw Error(Errc::TypeMismatch,
                    "positional replacement takes a scalar or a plain sequence");
    if (plain->size() != d.size())
        throw Error(Errc::LengthMismatch, "replacement length does not match");
    std::vector<Value> out = d.elements();
    for (std::size_t i = 0; i < indices.size(); ++i) out[indices[i]] = (*plain)[i];
    // Correspondence with the old storage order is severed: fresh creation token.
    return Disord::from_values(std::move(out));
}

Disord replace_all(const Disord& d, const ReplaceValue& value) {
    if (const Disord* v = std::get_if<Disord>(&value)) {
        if (!d.compatible_with(*v)) throw Error::hash_mismatch(d.hash(), v->hash());
        if (v->size() != d.size())
            throw Error(Errc::LengthMismatch, "replacement length does not match");
        return Disord::with_hash(v->elements(), d.hash(), v->kind());
    }
    const Value* scalar = std::get_if<Value>(&value);
    if (!scalar) {
        const auto& plain = std::get<std::vector<Value>>(value);
        if (plain.size() != 1)
            throw Error(Errc::PlainVectorReplacement, "replacement value not length 1");
        scalar = &plain.front();
    }
    std::vector<Value> out(d.size(), *scalar);
    return Disord::with_hash(std::move(out), d.hash(), scalar->kind());
}

}  // namespace disord
