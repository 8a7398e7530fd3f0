#include "disord/interp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>

#include "disord/format.hpp"
#include "disord/mvp_text.hpp"
#include "disord/random.hpp"

namespace disord {

namespace {

BinOp to_binop(const std::string& op) {
    if (op == "+") return BinOp::Add;
    if (op == "-") return BinOp::Sub;
    if (op == "*") return BinOp::Mul;
    if (op == "/") return BinOp::Div;
    if (op == "^") return BinOp::Pow;
    if (op == "%%") return BinOp::Mod;
    if (op == "<") return BinOp::Lt;
    if (op == "<=") return BinOp::Le;
    if (op == ">") return BinOp::Gt;
    if (op == ">=") return BinOp::Ge;
    if (op == "==") return BinOp::Eq;
    return BinOp::Ne;
}

const Value* scalar_of(const RtValue& v) {
    if (const Value* s = std::get_if<Value>(&v)) return s;
    if (const PlainVec* p = std::get_if<PlainVec>(&v))
        if (p->items.size() == 1) return &p->items[0];
    return nullptr;
}

std::optional<double> scalar_number(const RtValue& v) {
    const Value* s = scalar_of(v);
    if (s && s->kind() == Value::Kind::Number) return s->num();
    return std::nullopt;
}

long integral_scalar(double x, const char* what) {
    if (!std::isfinite(x) || x != std::floor(x))
        throw Error(Errc::TypeMismatch, std::string(what) + " must be an integer");
    return static_cast<long>(x);
}

Operand as_operand(const RtValue& v) {
    if (const Value* s = std::get_if<Value>(&v)) return *s;
    if (const Disord* d = std::get_if<Disord>(&v)) return *d;
    if (const PlainVec* p = std::get_if<PlainVec>(&v)) return p->items;
    throw Error(Errc::TypeMismatch, "operation not defined for mvp objects");
}

ReplaceValue as_replace_value(const RtValue& v) {
    if (const Value* s = std::get_if<Value>(&v)) return *s;
    if (const Disord* d = std::get_if<Disord>(&v)) return *d;
    if (const PlainVec* p = std::get_if<PlainVec>(&v)) {
        if (p->items.size() == 1) return p->items[0];
        return p->items;
    }
    throw Error(Errc::TypeMismatch, "replacement value must be a vector");
}

// 1-based numeric positions, or nullopt when the index is not numeric.
std::optional<std::vector<std::size_t>> numeric_positions(const RtValue& idx, bool replacing) {
    const std::vector<Value>* vals = nullptr;
    std::vector<Value> one;
    if (const Value* s = std::get_if<Value>(&idx)) {
        if (s->kind() != Value::Kind::Number) return std::nullopt;
        one.push_back(*s);
        vals = &one;
    } else if (const PlainVec* p = std::get_if<PlainVec>(&idx)) {
        if (!p->items.empty() && p->items[0].kind() != Value::Kind::Number) return std::nullopt;
        vals = &p->items;
    } else {
        return std::nullopt;
    }
    std::vector<std::size_t> out;
    out.reserve(vals->size());
    for (const Value& v : *vals) {
        double x = v.num();
        if (!std::isfinite(x) || x != std::floor(x) || x < 1)
            throw replacing ? Error::bad_replace_index() : Error::bad_extract_index();
        out.push_back(static_cast<std::size_t>(x) - 1);
    }
    return out;
}

RtValue plain_binary(BinOp op, const RtValue& a, const RtValue& b) {
    auto view = [](const RtValue& v) -> const std::vector<Value>* {
        if (const PlainVec* p = std::get_if<PlainVec>(&v)) return &p->items;
        return nullptr;
    };
    std::vector<Value> va, vb;
    if (const Value* s = std::get_if<Value>(&a)) va.push_back(*s);
    else va = *view(a);
    if (const Value* s = std::get_if<Value>(&b)) vb.push_back(*s);
    else vb = *view(b);

    std::size_t n = std::max(va.size(), vb.size());
    if (!va.empty() && !vb.empty() && va.size() != vb.size() &&
        va.size() != 1 && vb.size() != 1)
        throw Error(Errc::LengthMismatch, "non-conformable vector lengths");
    if (va.empty() || vb.empty()) n = 0;

    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(apply_binop(op, va[va.size() == 1 ? 0 : i], vb[vb.size() == 1 ? 0 : i]));

    if (std::holds_alternative<Value>(a) && std::holds_alternative<Value>(b))
        return out[0];
    Value::Kind kind = is_comparison(op) ? Value::Kind::Boolean
                       : !out.empty()    ? out[0].kind()
                                         : Value::Kind::Number;
    return PlainVec{std::move(out), kind};
}

Value map_double(const Value& v) {
    if (v.kind() == Value::Kind::Number) return Value::number(v.num() * 2);
    if (v.kind() == Value::Kind::List) {
        std::vector<Value> out;
        out.reserve(v.items().size());
        for (const Value& x : v.items()) {
            if (x.kind() != Value::Kind::Number)
                throw Error(Errc::TypeMismatch, "double is only defined for numbers");
            out.push_back(Value::number(x.num() * 2));
        }
        return Value::list(std::move(out), Value::ListKind::Number);
    }
    throw Error(Errc::TypeMismatch, "double is only defined for numbers");
}

Value map_upper(const Value& v) {
    auto up = [](const std::string& s) {
        std::string t = s;
        std::transform(t.begin(), t.end(), t.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        return t;
    };
    if (v.kind() == Value::Kind::Symbol) return Value::symbol(up(v.sym()));
    if (v.kind() == Value::Kind::List) {
        std::vector<Value> out;
        out.reserve(v.items().size());
        for (const Value& x : v.items()) {
            if (x.kind() != Value::Kind::Symbol)
                throw Error(Errc::TypeMismatch, "upper is only defined for symbols");
            out.push_back(Value::symbol(up(x.sym())));
        }
        return Value::list(std::move(out), Value::ListKind::Symbol);
    }
    throw Error(Errc::TypeMismatch, "upper is only defined for symbols");
}

Value map_lengths(const Value& v) {
    if (v.kind() == Value::Kind::List)
        return Value::number(static_cast<double>(v.items().size()));
    return Value::number(1.0);
}

}  // namespace

std::string render(const RtValue& v) {
    if (const Value* s = std::get_if<Value>(&v)) return render_value_line(*s);
    if (const PlainVec* p = std::get_if<PlainVec>(&v))
        return render_vector(p->items, empty_name_for(p->kind, Value::ListKind::Number, false));
    if (const Disord* d = std::get_if<Disord>(&v)) return render_disord(*d);
    return print_mvp(std::get<Mvp>(v));
}

Disord Interpreter::fresh_disord(std::vector<Value> values, Value::Kind empty_kind) {
    ++disord_counter_;
    if (opt_.order == Options::Order::Shuffle && values.size() > 1) {
        std::vector<std::size_t> perm =
            random_perm(values.size(), mix64(opt_.shuffle_seed) ^ mix64(0xD150ULL + disord_counter_));
        std::vector<Value> shuffled(values.size());
        for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = std::move(values[perm[i]]);
        values = std::move(shuffled);
    }
    return Disord::from_values(std::move(values), empty_kind);
}

Mvp Interpreter::enumerate(const Mvp& p) const {
    Mvp canon = Mvp::from_terms(p.terms());
    if (opt_.order == Options::Order::Insertion || canon.size() < 2) return canon;
    // Keyed by content so equal polynomials enumerate identically and their
    // accessor disords stay aligned.
    std::uint64_t key = 0;
    for (int i = 0; i < 8; ++i) key = key << 8 | canon.digest().bytes()[i];
    std::vector<std::size_t> perm = random_perm(canon.size(), mix64(opt_.shuffle_seed) ^ key);
    return reordered(canon, perm);
}

RtValue Interpreter::eval(const script::Expr& e) {
    RtValue v = eval_impl(e);
    if (Mvp* p = std::get_if<Mvp>(&v)) *p = enumerate(*p);
    return v;
}

RtValue Interpreter::eval_impl(const script::Expr& e) {
    using K = script::Expr::Kind;
    switch (e.kind) {
    case K::Number: return Value::number(e.num);
    case K::Bool: return Value::boolean(e.flag);
    case K::String: return Value::symbol(e.text);
    case K::Name: {
        auto it = env_.find(e.text);
        if (it == env_.end())
            throw Error(Errc::UnknownName, "object '" + e.text + "' not found");
        return it->second;
    }
    case K::Unary: {
        RtValue v = eval(e.args[0]);
        if (const Value* s = std::get_if<Value>(&v)) {
            if (s->kind() != Value::Kind::Number)
                throw Error(Errc::TypeMismatch, "invalid argument to unary operator");
            return Value::number(-s->num());
        }
        if (std::get_if<Mvp>(&v)) return -std::get<Mvp>(v);
        return eval_binary("*", Value::number(-1.0), std::move(v));
    }
    case K::Range: {
        std::optional<double> lo = scalar_number(eval(e.args[0]));
        std::optional<double> hi = scalar_number(eval(e.args[1]));
        if (!lo || !hi) throw Error(Errc::TypeMismatch, "range endpoints must be numbers");
        long a = integral_scalar(*lo, "range endpoint");
        long b = integral_scalar(*hi, "range endpoint");
        std::vector<Value> out;
        out.reserve(static_cast<std::size_t>(std::labs(b - a)) + 1);
        long step = a <= b ? 1 : -1;
        for (long x = a;; x += step) {
            out.push_back(Value::number(static_cast<double>(x)));
            if (x == b) break;
        }
        return PlainVec{std::move(out), Value::Kind::Number};
    }
    case K::Binary: return eval_binary(e.text, eval(e.args[0]), eval(e.args[1]));
    case K::Index: return do_extract(eval(e.args[0]), eval(e.args[1]));
    case K::Call: return eval_call(e);
    }
    throw Error(Errc::ParseError, "unreachable expression kind");
}

RtValue Interpreter::eval_binary(const std::string& op, RtValue a, RtValue b) {
    const Mvp* pa = std::get_if<Mvp>(&a);
    const Mvp* pb = std::get_if<Mvp>(&b);
    if (pa || pb) {
        if (pa && pb) {
            if (op == "+") return *pa + *pb;
            if (op == "-") return *pa - *pb;
            if (op == "*") return *pa * *pb;
            if (op == "==") return Value::boolean(*pa == *pb);
            if (op == "!=") return Value::boolean(*pa != *pb);
            throw Error(Errc::TypeMismatch, "'" + op + "' is not defined for mvp objects");
        }
        std::optional<double> c = scalar_number(pa ? b : a);
        if (!c) throw Error(Errc::TypeMismatch, "'" + op + "' is not defined for mvp objects");
        const Mvp& p = pa ? *pa : *pb;
        if (op == "+") return scalar_add(p, *c);
        if (op == "*") return scalar_mul(p, *c);
        if (op == "-") return pa ? scalar_add(p, -*c) : scalar_add(-p, *c);
        if (op == "==") return Value::boolean(p == constant_mvp(*c));
        if (op == "!=") return Value::boolean(p != constant_mvp(*c));
        if (op == "/" && pa) return scalar_mul(p, 1.0 / *c);
        if (op == "^" && pa) return int_pow(p, integral_scalar(*c, "power"));
        throw Error(Errc::TypeMismatch, "'" + op + "' is not defined for mvp objects");
    }
    if (std::holds_alternative<Disord>(a) || std::holds_alternative<Disord>(b))
        return elementwise(to_binop(op), as_operand(a), as_operand(b));
    return plain_binary(to_binop(op), a, b);
}

RtValue Interpreter::do_extract(RtValue target, RtValue index) {
    if (const Disord* d = std::get_if<Disord>(&target)) {
        if (const Disord* m = std::get_if<Disord>(&index)) {
            if (m->kind() != Value::Kind::Boolean && !m->empty())
                throw Error(Errc::TypeMismatch, "disord indices must be Boolean");
            return extract_bool(*d, *m);
        }
        std::optional<std::vector<std::size_t>> pos = numeric_positions(index, false);
        if (!pos)
            throw Error(Errc::TypeMismatch, "index must be a Boolean disord or a regular index");
        if (opt_.permit_positional_extract) {
            // Deliberately unsound: exposes storage positions.
            std::vector<Value> out;
            for (std::size_t i : *pos) {
                if (i >= d->size()) throw Error::bad_extract_index();
                out.push_back(d->at(i));
            }
            if (out.size() == 1) return out[0];
            return PlainVec{std::move(out), d->kind()};
        }
        return extract_int(*d, *pos);
    }
    if (std::holds_alternative<Mvp>(target))
        throw Error(Errc::TypeMismatch, "cannot index an mvp object");

    // Plain target: ordinary positional or logical selection.
    const std::vector<Value>* items = nullptr;
    Value::Kind kind = Value::Kind::Number;
    std::vector<Value> one;
    if (const Value* s = std::get_if<Value>(&target)) {
        one.push_back(*s);
        items = &one;
        kind = s->kind();
    } else {
        const PlainVec& p = std::get<PlainVec>(target);
        items = &p.items;
        kind = p.kind;
    }
    if (const PlainVec* mask = std::get_if<PlainVec>(&index);
        mask && !mask->items.empty() && mask->items[0].kind() == Value::Kind::Boolean) {
        if (mask->items.size() != items->size())
            throw Error(Errc::LengthMismatch, "logical index length must match");
        std::vector<Value> out;
        for (std::size_t i = 0; i < items->size(); ++i)
            if (mask->items[i].flag()) out.push_back((*items)[i]);
        return PlainVec{std::move(out), kind};
    }
    std::optional<std::vector<std::size_t>> pos = numeric_positions(index, false);
    if (!pos) throw Error(Errc::TypeMismatch, "invalid plain-vector index");
    std::vector<Value> out;
    out.reserve(pos->size());
    for (std::size_t i : *pos) {
        if (i >= items->size()) throw Error(Errc::BadIndex, "subscript out of bounds");
        out.push_back((*items)[i]);
    }
    if (out.size() == 1) return out[0];
    return PlainVec{std::move(out), kind};
}

Disord Interpreter::do_replace(const Disord& d, const RtValue& index, const RtValue& value) {
    if (const Disord* m = std::get_if<Disord>(&index)) {
        if (m->kind() != Value::Kind::Boolean && !m->empty())
            throw Error(Errc::TypeMismatch, "disord indices must be Boolean");
        return replace_bool(d, *m, as_replace_value(value));
    }
    std::optional<std::vector<std::size_t>> pos = numeric_positions(index, true);
    if (!pos)
        throw Error(Errc::TypeMismatch, "index must be a Boolean disord or a regular index");
    return replace_int(d, *pos, as_replace_value(value));
}

RtValue Interpreter::eval_call(const script::Expr& e) {
    const std::string& fn = e.text;
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (e.args.size() < lo || e.args.size() > hi)
            throw Error(Errc::ParseError, fn + "() called with wrong number of arguments");
    };

    if (fn == "disord") {
        std::vector<Value> vals;
        for (const script::Expr& arg : e.args) {
            RtValue v = eval(arg);
            if (const Value* s = std::get_if<Value>(&v)) {
                vals.push_back(*s);
            } else if (const PlainVec* p = std::get_if<PlainVec>(&v)) {
                vals.insert(vals.end(), p->items.begin(), p->items.end());
            } else {
                throw Error(Errc::TypeMismatch, "disord() takes plain values");
            }
        }
        return fresh_disord(std::move(vals), Value::Kind::Number);
    }
    if (fn == "rdis") {
        arity(0, 2);
        std::size_t n = 9;
        if (!e.args.empty()) {
            std::optional<double> v = scalar_number(eval(e.args[0]));
            if (!v) throw Error(Errc::TypeMismatch, "rdis(n) takes a number");
            n = static_cast<std::size_t>(integral_scalar(*v, "rdis length"));
        }
        std::uint64_t seed = mix64(0xA11CEULL + ++rng_counter_);
        if (e.args.size() == 2) {
            std::optional<double> v = scalar_number(eval(e.args[1]));
            if (!v) throw Error(Errc::TypeMismatch, "rdis seed must be a number");
            seed = static_cast<std::uint64_t>(integral_scalar(*v, "rdis seed"));
        }
        std::vector<double> xs = rdis_values(n, seed);
        std::vector<Value> vals;
        vals.reserve(xs.size());
        for (double x : xs) vals.push_back(Value::number(x));
        return fresh_disord(std::move(vals), Value::Kind::Number);
    }
    if (fn == "rmvp") {
        arity(0, 1);
        std::uint64_t seed = mix64(0xB0BAULL + ++rng_counter_);
        if (!e.args.empty()) {
            std::optional<double> v = scalar_number(eval(e.args[0]));
            if (!v) throw Error(Errc::TypeMismatch, "rmvp seed must be a number");
            seed = static_cast<std::uint64_t>(integral_scalar(*v, "rmvp seed"));
        }
        return rmvp_poly(seed);
    }
    if (fn == "mvp") {
        if (e.args.size() == 1) {
            RtValue v = eval(e.args[0]);
            const Value* s = std::get_if<Value>(&v);
            if (!s || s->kind() != Value::Kind::Symbol)
                throw Error(Errc::TypeMismatch, "mvp() takes a polynomial string");
            return parse_mvp(s->sym());
        }
        arity(3, 3);
        RtValue va = eval(e.args[0]), pa = eval(e.args[1]), ca = eval(e.args[2]);
        const Disord* dv = std::get_if<Disord>(&va);
        const Disord* dp = std::get_if<Disord>(&pa);
        const Disord* dc = std::get_if<Disord>(&ca);
        if (dv && dp && dc) return mvp_from_triples(*dv, *dp, *dc);
        const PlainVec* qv = std::get_if<PlainVec>(&va);
        const PlainVec* qp = std::get_if<PlainVec>(&pa);
        const PlainVec* qc = std::get_if<PlainVec>(&ca);
        if (qv && qp && qc) return mvp_from_triples(qv->items, qp->items, qc->items);
        throw Error(Errc::TypeMismatch, "mvp(vars, powers, coeffs) takes three disord objects");
    }
    if (fn == "coeffs" || fn == "vars" || fn == "powers") {
        arity(1, 1);
        RtValue v = eval(e.args[0]);
        const Mvp* p = std::get_if<Mvp>(&v);
        if (!p) throw Error(Errc::TypeMismatch, fn + "() is only defined for mvp objects");
        if (fn == "coeffs") return coeffs(*p);
        if (fn == "vars") return vars(*p);
        return powers(*p);
    }
    if (fn == "map") {
        arity(2, 2);
        if (e.args[1].kind != script::Expr::Kind::Name)
            throw Error(Errc::TypeMismatch, "map() takes a function name");
        const std::string& which = e.args[1].text;
        Value (*f)(const Value&) = nullptr;
        if (which == "double") f = map_double;
        else if (which == "upper") f = map_upper;
        else if (which == "lengths") f = map_lengths;
        else throw Error(Errc::TypeMismatch, "unknown map function '" + which + "'");
        RtValue v = eval(e.args[0]);
        if (const Disord* d = std::get_if<Disord>(&v)) return map_elements(*d, f);
        if (const PlainVec* p = std::get_if<PlainVec>(&v)) {
            std::vector<Value> out;
            out.reserve(p->items.size());
            for (const Value& x : p->items) out.push_back(f(x));
            return PlainVec{std::move(out), out.empty() ? p->kind : out[0].kind()};
        }
        if (const Value* s = std::get_if<Value>(&v)) return f(*s);
        throw Error(Errc::TypeMismatch, "map() is not defined for mvp objects");
    }
    if (fn == "sort" || fn == "rev") {
        arity(1, 1);
        RtValue v = eval(e.args[0]);
        if (const Disord* d = std::get_if<Disord>(&v)) {
            if (fn == "sort") return PlainVec{sort_plain(*d), d->kind()};
            return reverse(*d);
        }
        if (const PlainVec* p = std::get_if<PlainVec>(&v)) {
            std::vector<Value> out = p->items;
            if (fn == "sort") {
                if (!out.empty() && out[0].kind() == Value::Kind::List)
                    throw Error(Errc::TypeMismatch, "cannot sort lists");
                std::sort(out.begin(), out.end(), value_less);
            } else {
                std::reverse(out.begin(), out.end());
            }
            return PlainVec{std::move(out), p->kind};
        }
        if (std::holds_alternative<Value>(v)) return v;
        throw Error(Errc::TypeMismatch, fn + "() is not defined for mvp objects");
    }
    if (fn == "max" || fn == "min" || fn == "sum" || fn == "length") {
        arity(1, 1);
        RtValue v = eval(e.args[0]);
        Reduction r = fn == "max"   ? Reduction::Max
                      : fn == "min" ? Reduction::Min
                      : fn == "sum" ? Reduction::Sum
                                    : Reduction::Length;
        if (const Disord* d = std::get_if<Disord>(&v)) return reduce(r, *d);
        if (const PlainVec* p = std::get_if<PlainVec>(&v))
            return reduce(r, Disord::from_values(p->items, p->kind));
        if (const Value* s = std::get_if<Value>(&v)) {
            if (fn == "length") return Value::number(1.0);
            return *s;
        }
        throw Error(Errc::TypeMismatch, fn + "() is not defined for mvp objects");
    }
    if (fn == "pmax" || fn == "pmin") {
        arity(2, 2);
        RtValue a = eval(e.args[0]), b = eval(e.args[1]);
        BinOp op = fn == "pmax" ? BinOp::Pmax : BinOp::Pmin;
        if (std::holds_alternative<Disord>(a) || std::holds_alternative<Disord>(b))
            return elementwise(op, as_operand(a), as_operand(b));
        return plain_binary(op, a, b);
    }
    throw Error(Errc::UnknownName, "could not find function '" + fn + "'");
}

StatementOutcome Interpreter::execute(const script::Statement& st) {
    StatementOutcome oc;
    oc.line = st.line;
    using K = script::Statement::Kind;
    try {
        switch (st.kind) {
        case K::Echo: {
            RtValue v = eval(st.value);
            oc.echoed = true;
            oc.rendered = render(v);
            oc.result = std::move(v);
            break;
        }
        case K::Assign:
        case K::AssignEcho: {
            RtValue v = eval(st.value);
            env_[st.name] = v;
            if (st.kind == K::AssignEcho) {
                oc.echoed = true;
                oc.rendered = render(v);
                oc.result = std::move(v);
            }
            break;
        }
        case K::IndexAssign: {
            auto it = env_.find(st.name);
            if (it == env_.end())
                throw Error(Errc::UnknownName, "object '" + st.name + "' not found");
            const Disord* d = std::get_if<Disord>(&it->second);
            if (!d)
                throw Error(Errc::TypeMismatch, "indexed replacement needs a disord object");
            RtValue idx = eval(*st.index);
            RtValue val = eval(st.value);
            it->second = do_replace(*d, idx, val);
            break;
        }
        case K::CoeffsAssign:
        case K::CoeffsIndexAssign: {
            auto it = env_.find(st.name);
            if (it == env_.end())
                throw Error(Errc::UnknownName, "object '" + st.name + "' not found");
            const Mvp* p = std::get_if<Mvp>(&it->second);
            if (!p)
                throw Error(Errc::TypeMismatch, "coeffs<- is only defined for mvp objects");
            Mvp next;
            if (st.kind == K::CoeffsAssign) {
                RtValue val = eval(st.value);
                if (std::optional<double> c = scalar_number(val)) {
                    next = set_coeffs(*p, *c);
                } else if (const Disord* dv = std::get_if<Disord>(&val)) {
                    next = set_coeffs(*p, *dv);
                } else if (std::holds_alternative<PlainVec>(val)) {
                    throw Error(Errc::PlainVectorReplacement, "replacement value not length 1");
                } else {
                    throw Error(Errc::TypeMismatch, "replacement coefficients must be numeric");
                }
            } else {
                Disord cv = coeffs(*p);
                RtValue idx = eval(*st.index);
                RtValue val = eval(st.value);
                next = set_coeffs(*p, do_replace(cv, idx, val));
            }
            it->second = enumerate(next);
            break;
        }
        }
    } catch (const Error& e) {
        oc.errored = true;
        oc.code = e.code();
        oc.rendered = std::string("Error: ") + e.what();
    }
    return oc;
}

RunResult run_script(const std::string& source, const Options& opt) {
    RunResult rr;
    script::Program prog;
    try {
        prog = script::parse_program(source);
    } catch (const Error& e) {
        rr.status = 2;
        rr.err = std::string(e.what()) + "\n";
        return rr;
    }
    Interpreter interp(opt);
    for (const script::Statement& st : prog.statements) {
        StatementOutcome oc = interp.execute(st);
        if (oc.errored)
            rr.err += oc.rendered + "\n";
        else if (oc.echoed)
            rr.out += oc.rendered + "\n";
        bool fatal = oc.errored && !st.wrapped_in_try;
        rr.outcomes.push_back(std::move(oc));
        if (fatal) {
            rr.status = 1;
            break;
        }
    }
    return rr;
}

int run_repl(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt) {
    Interpreter interp(opt);
    std::string line;
    int lineno = 0;
    out << "> " << std::flush;
    while (std::getline(in, line)) {
        ++lineno;
        if (line == "q" || line == "quit") break;
        try {
            if (std::optional<script::Statement> st = script::parse_line(line, lineno)) {
                StatementOutcome oc = interp.execute(*st);
                if (oc.errored)
                    err << oc.rendered << '\n';
                else if (oc.echoed)
                    out << oc.rendered << '\n';
            }
        } catch (const Error& e) {
            err << e.what() << '\n';
        }
        out << "> " << std::flush;
    }
    return 0;
}

}  // namespace disord
