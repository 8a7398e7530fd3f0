#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "disord/disord.hpp"
#include "disord/hash.hpp"

namespace disord {

// Product of named variables with nonzero integer exponents.  The empty
// monomial is the constant term's key.
class Monomial {
public:
    Monomial() = default;
    static Monomial from_factors(const std::vector<std::pair<std::string, int>>& factors);

    const std::map<std::string, int>& factors() const { return factors_; }
    bool constant() const { return factors_.empty(); }
    std::size_t nvars() const { return factors_.size(); }

    // "a b^2 c^14"; exponent 1 prints bare.
    std::string key() const;

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    // Lexicographic over (name, exponent) pairs with numeric exponents, so
    // a^6 precedes a^11.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }

private:
    std::map<std::string, int> factors_;
};

struct Term {
    Monomial mono;
    double coeff = 0.0;
};

// Sparse multivariate polynomial: a finite monomial→coefficient map.  Terms
// are held in an explicit enumeration order (canonical after construction;
// a host may re-enumerate) while equality, digests and printing use the
// canonical form only.
class Mvp {
public:
    Mvp() = default;

    // Combines like monomials, drops zero coefficients, sorts canonically.
    static Mvp from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::vector<Term> canonical_terms() const;
    Hash digest() const;

    friend Mvp operator+(const Mvp& a, const Mvp& b);
    friend Mvp operator-(const Mvp& a, const Mvp& b);
    friend Mvp operator*(const Mvp& a, const Mvp& b);
    Mvp operator-() const;

    friend bool operator==(const Mvp& a, const Mvp& b);
    friend bool operator!=(const Mvp& a, const Mvp& b) { return !(a == b); }
    friend Mvp reordered(const Mvp& p, std::span<const std::size_t> perm);

private:
    std::vector<Term> terms_;
};

Mvp constant_mvp(double c);
Mvp scalar_mul(const Mvp& p, double c);
Mvp scalar_add(const Mvp& p, double c);
Mvp int_pow(const Mvp& p, long k);  // k < 0 raises NegativePower

// Terms permuted by perm; canonical content unchanged.
Mvp reordered(const Mvp& p, std::span<const std::size_t> perm);

// Joint accessors: one Disord per facet, all carrying the polynomial's
// digest so they stay mutually compatible.
Disord coeffs(const Mvp& p);
Disord vars(const Mvp& p);
Disord powers(const Mvp& p);

// Replace all coefficients.  A Disord value must carry the polynomial's
// digest and match its term count; zero results drop their terms.
Mvp set_coeffs(const Mvp& p, double value);
Mvp set_coeffs(const Mvp& p, const Disord& value);

// Rebuild a polynomial from parallel vars/powers/coeffs sequences.  Disord
// inputs must have pairwise-equal hashes.
Mvp mvp_from_triples(const std::vector<Value>& vars, const std::vector<Value>& powers,
                     const std::vector<Value>& coeffs);
Mvp mvp_from_triples(const Disord& vars, const Disord& powers, const Disord& coeffs);

}  // namespace disord
