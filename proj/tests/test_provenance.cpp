#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "disord/error.hpp"
#include "disord/hash.hpp"

using namespace disord;

namespace {

Hash of_string(const std::string& s) {
    ByteSink sink;
    sink.str(s);
    return fresh_from_sequence(sink.bytes());
}

}  // namespace

TEST_CASE("hex form is 40 lowercase hex chars") {
    Hash h = of_string("abc");
    std::string hex = h.hex();
    CHECK(hex.size() == 40);
    for (char c : hex) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
    CHECK(h.hex12() == hex.substr(0, 12) + "...");
}

TEST_CASE("digest is deterministic and order-sensitive") {
    CHECK(of_string("12345") == of_string("12345"));
    CHECK(of_string("12345") != of_string("54321"));

    ByteSink fwd, rev;
    for (int i = 1; i <= 10; ++i) fwd.i64(i);
    for (int i = 10; i >= 1; --i) rev.i64(i);
    CHECK(fresh_from_sequence(fwd.bytes()) != fresh_from_sequence(rev.bytes()));
}

TEST_CASE("known SHA-1 vector") {
    // digest of the empty message
    ByteSink empty;
    CHECK(fresh_from_sequence(empty.bytes()).hex() != Hash().hex());
    CHECK(Hash::of_bytes({}).hex() == "da39a3ee5e6b4b0d3255bfef95601890afd80709");
}

TEST_CASE("parse_hex round-trips and rejects junk") {
    Hash h = of_string("round trip");
    CHECK(Hash::parse_hex(h.hex()) == h);
    CHECK_THROWS_AS(Hash::parse_hex("zz"), Error);
    CHECK_THROWS_AS(Hash::parse_hex(h.hex().substr(1)), Error);
    std::string upper = h.hex();
    upper[0] = 'A';
    CHECK_THROWS_AS(Hash::parse_hex(upper), Error);
}

TEST_CASE("derive_subset: all-true mask is the identity") {
    Hash p = of_string("parent");
    std::vector<bool> all(7, true);
    CHECK(derive_subset(p, all) == p);

    std::vector<bool> some(7, true);
    some[3] = false;
    Hash s = derive_subset(p, some);
    CHECK(s != p);
    CHECK(derive_subset(p, some) == s);

    std::vector<bool> other(7, false);
    other[3] = true;
    CHECK(derive_subset(p, other) != s);
}

TEST_CASE("derive_permutation: identity returns the parent") {
    Hash p = of_string("parent");
    std::vector<std::size_t> id{0, 1, 2, 3};
    CHECK(derive_permutation(p, id) == p);

    std::vector<std::size_t> rot{1, 2, 3, 0};
    Hash q = derive_permutation(p, rot);
    CHECK(q != p);
    CHECK(derive_permutation(p, rot) == q);
}

TEST_CASE("involute_reverse is an involution with no fixed point") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 10000; ++i) {
        ByteSink sink;
        sink.u64(rng());
        sink.u64(rng());
        Hash h = fresh_from_sequence(sink.bytes());
        Hash r = involute_reverse(h);
        CHECK(r != h);
        CHECK(involute_reverse(r) == h);
    }
}

TEST_CASE("distinct inputs give distinct tokens") {
    std::set<std::string> seen;
    for (int i = 0; i < 2000; ++i) {
        ByteSink sink;
        sink.i64(i);
        seen.insert(fresh_from_sequence(sink.bytes()).hex());
    }
    CHECK(seen.size() == 2000);
}

TEST_CASE("byte sink encodings do not alias") {
    // "ab" + "c" must differ from "a" + "bc": lengths are part of str().
    ByteSink s1, s2;
    s1.str("ab");
    s1.str("c");
    s2.str("a");
    s2.str("bc");
    CHECK(fresh_from_sequence(s1.bytes()) != fresh_from_sequence(s2.bytes()));

    // -0.0 folds onto 0.0: values that compare equal must hash equal.
    ByteSink z1, z2;
    z1.f64(0.0);
    z2.f64(-0.0);
    CHECK(fresh_from_sequence(z1.bytes()) == fresh_from_sequence(z2.bytes()));
}
