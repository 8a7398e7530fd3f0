#include "disord/mvp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "disord/error.hpp"

namespace disord {

namespace {

// Total and deterministic (not numeric) tie-break so that folding equal
// monomials is independent of the incoming term order.
bool term_before(const Term& a, const Term& b) {
    if (a.mono < b.mono) return true;
    if (b.mono < a.mono) return false;
    return std::bit_cast<std::uint64_t>(a.coeff) < std::bit_cast<std::uint64_t>(b.coeff);
}

std::vector<Term> fold_sorted(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), term_before);
    std::vector<Term> out;
    for (Term& t : ts) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0.0; });
    return out;
}

}  // namespace

Monomial Monomial::from_factors(const std::vector<std::pair<std::string, int>>& factors) {
    Monomial m;
    for (const auto& [name, exp] : factors) m.factors_[name] += exp;
    std::erase_if(m.factors_, [](const auto& f) { return f.second == 0; });
    return m;
}

std::string Monomial::key() const {
    std::string out;
    for (const auto& [name, exp] : factors_) {
        if (!out.empty()) out += ' ';
        out += name;
        if (exp != 1) {
            out += '^';
            out += std::to_string(exp);
        }
    }
    return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m = *this;
    for (const auto& [name, exp] : o.factors_) m.factors_[name] += exp;
    std::erase_if(m.factors_, [](const auto& f) { return f.second == 0; });
    return m;
}

Mvp Mvp::from_terms(std::vector<Term> terms) {
    Mvp p;
    p.terms_ = fold_sorted(std::move(terms));
    return p;
}

std::vector<Term> Mvp::canonical_terms() const {
    std::vector<Term> ts = terms_;
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    return ts;
}

Hash Mvp::digest() const {
    ByteSink sink;
    sink.u8('M');
    sink.u64(terms_.size());
    for (const Term& t : canonical_terms()) {
        sink.str(t.mono.key());
        sink.f64(t.coeff);
    }
    return Hash::of_bytes(sink.bytes());
}

Mvp operator+(const Mvp& a, const Mvp& b) {
    std::vector<Term> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return Mvp::from_terms(std::move(ts));
}

Mvp operator-(const Mvp& a, const Mvp& b) { return a + (-b); }

Mvp Mvp::operator-() const {
    std::vector<Term> ts = terms_;
    for (Term& t : ts) t.coeff = -t.coeff;
    return from_terms(std::move(ts));
}

Mvp operator*(const Mvp& a, const Mvp& b) {
    std::vector<Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
        for (const Term& tb : b.terms_)
            ts.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Mvp::from_terms(std::move(ts));
}

bool operator==(const Mvp& a, const Mvp& b) {
    std::vector<Term> ta = a.canonical_terms(), tb = b.canonical_terms();
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (!(ta[i].mono == tb[i].mono) || ta[i].coeff != tb[i].coeff) return false;
    return true;
}

Mvp constant_mvp(double c) { return Mvp::from_terms({{Monomial{}, c}}); }

Mvp scalar_mul(const Mvp& p, double c) {
    std::vector<Term> ts = p.terms();
    for (Term& t : ts) t.coeff *= c;
    return Mvp::from_terms(std::move(ts));
}

Mvp scalar_add(const Mvp& p, double c) {
    std::vector<Term> ts = p.terms();
    ts.push_back({Monomial{}, c});
    return Mvp::from_terms(std::move(ts));
}

Mvp int_pow(const Mvp& p, long k) {
    if (k < 0)
        throw Error(Errc::NegativePower, "negative powers are not defined for mvp objects");
    Mvp out = constant_mvp(1.0);
    for (long i = 0; i < k; ++i) out = out * p;
    return out;
}

Mvp reordered(const Mvp& p, std::span<const std::size_t> perm) {
    if (perm.size() != p.size())
        throw Error(Errc::LengthMismatch, "term permutation has wrong length");
    std::vector<Term> ts(p.size());
    for (std::size_t i = 0; i < perm.size(); ++i) ts[i] = p.terms()[perm[i]];
    // Reordering is an internal storage detail; the canonical content is
    // untouched, so skip normalization.
    Mvp out;
    out.terms_ = std::move(ts);
    return out;
}

Disord coeffs(const Mvp& p) {
    std::vector<Value> vs;
    vs.reserve(p.size());
    for (const Term& t : p.terms()) vs.push_back(Value::number(t.coeff));
    return Disord::with_hash(std::move(vs), p.digest(), Value::Kind::Number);
}

Disord vars(const Mvp& p) {
    std::vector<Value> vs;
    vs.reserve(p.size());
    for (const Term& t : p.terms()) {
        std::vector<Value> names;
        for (const auto& [name, exp] : t.mono.factors()) names.push_back(Value::symbol(name));
        vs.push_back(Value::list(std::move(names), Value::ListKind::Symbol));
    }
    return Disord::with_hash(std::move(vs), p.digest(), Value::Kind::List);
}

Disord powers(const Mvp& p) {
    std::vector<Value> vs;
    vs.reserve(p.size());
    for (const Term& t : p.terms()) {
        std::vector<Value> exps;
        for (const auto& [name, exp] : t.mono.factors()) exps.push_back(Value::number(exp));
        vs.push_back(Value::list(std::move(exps), Value::ListKind::Number));
    }
    return Disord::with_hash(std::move(vs), p.digest(), Value::Kind::List);
}

Mvp set_coeffs(const Mvp& p, double value) {
    std::vector<Term> ts = p.terms();
    for (Term& t : ts) t.coeff = value;
    return Mvp::from_terms(std::move(ts));
}

Mvp set_coeffs(const Mvp& p, const Disord& value) {
    if (!value.empty() && value.kind() != Value::Kind::Number)
        throw Error(Errc::TypeMismatch, "replacement coefficients must be numeric");
    if (!value.empty() && !(value.hash() == p.digest()))
        throw Error::hash_mismatch(p.digest(), value.hash());
    if (value.size() != p.size())
        throw Error(Errc::LengthMismatch, "replacement value has wrong length");
    std::vector<Term> ts = p.terms();
    for (std::size_t i = 0; i < ts.size(); ++i) ts[i].coeff = value.at(i).num();
    return Mvp::from_terms(std::move(ts));
}

namespace {

int integral_exponent(double x) {
    if (!std::isfinite(x) || x != std::floor(x))
        throw Error(Errc::TypeMismatch, "powers must be integers");
    return static_cast<int>(x);
}

}  // namespace

Mvp mvp_from_triples(const std::vector<Value>& vars, const std::vector<Value>& powers,
                     const std::vector<Value>& coeffs) {
    if (vars.size() != powers.size() || powers.size() != coeffs.size())
        throw Error(Errc::LengthMismatch, "vars, powers and coeffs lengths differ");
    std::vector<Term> ts;
    ts.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (vars[i].kind() != Value::Kind::List || powers[i].kind() != Value::Kind::List)
            throw Error(Errc::TypeMismatch, "vars and powers must be lists");
        const std::vector<Value>& names = vars[i].items();
        const std::vector<Value>& exps = powers[i].items();
        if (names.size() != exps.size())
            throw Error(Errc::LengthMismatch, "each vars entry must pair with powers of the same length");
        if (coeffs[i].kind() != Value::Kind::Number)
            throw Error(Errc::TypeMismatch, "coeffs must be numeric");
        std::vector<std::pair<std::string, int>> factors;
        factors.reserve(names.size());
        for (std::size_t j = 0; j < names.size(); ++j) {
            if (names[j].kind() != Value::Kind::Symbol || exps[j].kind() != Value::Kind::Number)
                throw Error(Errc::TypeMismatch, "vars entries are symbols and powers entries are numbers");
            factors.emplace_back(names[j].sym(), integral_exponent(exps[j].num()));
        }
        ts.push_back({Monomial::from_factors(factors), coeffs[i].num()});
    }
    return Mvp::from_terms(std::move(ts));
}

Mvp mvp_from_triples(const Disord& vars, const Disord& powers, const Disord& coeffs) {
    if (!vars.compatible_with(powers))
        throw Error::hash_mismatch(vars.hash(), powers.hash());
    if (!powers.compatible_with(coeffs))
        throw Error::hash_mismatch(powers.hash(), coeffs.hash());
    if (!vars.compatible_with(coeffs))
        throw Error::hash_mismatch(vars.hash(), coeffs.hash());
    return mvp_from_triples(vars.elements(), powers.elements(), coeffs.elements());
}

}  // namespace disord
