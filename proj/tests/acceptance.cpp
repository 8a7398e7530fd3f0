// End-to-end acceptance gate.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.  Numeric tolerance is pinned below; everything
// else is exact (integer arithmetic, verbatim text, multiset equality).
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "disord/disord.hpp"
#include "disord/fuzz.hpp"
#include "disord/hash.hpp"
#include "disord/interp.hpp"
#include "disord/mvp.hpp"
#include "disord/mvp_text.hpp"
#include "disord/random.hpp"

using namespace disord;

namespace {

constexpr double kRelTol = 1e-9;  // for doubles reproduced from reference transcripts

std::vector<std::string> detail;
bool ok = true;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        ok = false;
        detail.push_back(what);
    }
}

bool close(double a, double b) {
    if (a == b) return true;
    return std::fabs(a - b) <= kRelTol * std::max(std::fabs(a), std::fabs(b));
}

std::vector<double> sorted_nums(const Disord& d) {
    std::vector<double> xs;
    for (const Value& v : d.elements()) xs.push_back(v.num());
    std::sort(xs.begin(), xs.end());
    return xs;
}

void expect_multiset(const Disord& d, std::vector<double> want, const std::string& what) {
    std::sort(want.begin(), want.end());
    std::vector<double> got = sorted_nums(d);
    if (got.size() != want.size()) {
        expect(false, what + ": size " + std::to_string(got.size()));
        return;
    }
    for (std::size_t i = 0; i < got.size(); ++i)
        expect(close(got[i], want[i]), what + ": element " + std::to_string(i));
}

// element grid of a rendered disord: drop the hash header and order footer
std::vector<std::string> grid(const std::string& rendered) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < rendered.size()) {
        std::size_t nl = rendered.find('\n', pos);
        if (nl == std::string::npos) nl = rendered.size();
        lines.push_back(rendered.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.size() >= 2) {
        lines.erase(lines.begin());
        lines.pop_back();
    }
    return lines;
}

const Disord& as_disord(const RunResult& rr, std::size_t i) {
    return std::get<Disord>(*rr.outcomes.at(i).result);
}

const Mvp& as_mvp(const RunResult& rr, std::size_t i) {
    return std::get<Mvp>(*rr.outcomes.at(i).result);
}

// ---- reference polynomial texts ------------------------------------------

const char* kPolyA =
    "3 a b^9 e^4 f + 7 a^2 b^4 d^6 e f^4 + 4 a^4 b^6 c^5 d^11 f^4 + "
    "6 a^6 b^3 c^14 f^2 + 5 a^11 e^6 f^6 + b^8 e^7 f^12 + 2 b^10 d^10 f^4";
const char* kPolyB =
    "5 a c^2 e^8 f^7 + 4 a^2 b^5 c^6 e^3 + 7 a^2 b^7 c^4 d e^2 + "
    "a^4 d^6 e^5 f + 6 a^6 d^6 f^6 + 3 b^7 c^7 e^5 + 2 b^10 c^3 f^7";
const char* kSum14 =
    "3 a b^9 e^4 f + 10 a c^2 e^8 f^7 + 7 a^2 b^4 d^6 e f^4 + 8 a^2 b^5 c^6 e^3 + "
    "14 a^2 b^7 c^4 d e^2 + 4 a^4 b^6 c^5 d^11 f^4 + 2 a^4 d^6 e^5 f + "
    "6 a^6 b^3 c^14 f^2 + 12 a^6 d^6 f^6 + 5 a^11 e^6 f^6 + 6 b^7 c^7 e^5 + "
    "b^8 e^7 f^12 + 4 b^10 c^3 f^7 + 2 b^10 d^10 f^4";
const char* kZeroedA =
    "7 a^2 b^4 d^6 e f^4 + 4 a^4 b^6 c^5 d^11 f^4 + 6 a^6 b^3 c^14 f^2 + 5 a^11 e^6 f^6";
const char* kModB = "a c^2 e^8 f^7 + a^2 b^7 c^4 d e^2 + a^4 d^6 e^5 f + b^7 c^7 e^5";

// ---- criteria --------------------------------------------------------------

bool criterion1() {
    std::string src =
        "a <- disord(9, 4, 7, 1, 2, 6, 3, 8, 5)\n"
        "a^2\n"
        "a + 1/a\n"
        "max(a)\n"
        "sort(a)\n"
        "x <- a + 1/a\n"
        "y <- a*2 - 9\n"
        "x + y\n"
        "b <- disord(2, 3, 8, 1, 5, 6, 9, 7, 4)\n"
        "d <- disord(1:10)\n"
        "e <- 10 + 3*d - d^2\n"
        "e\n"
        "e < 4\n"
        "d[e < 4] <- e[e < 4]\n"
        "d\n"
        "b[b > 0.6] <- b[b > 0.6] + 3\n"
        "b\n";
    RunResult rr = run_script(src, Options{});
    expect(rr.status == 0, "session status");
    if (rr.status != 0) return ok;

    std::vector<double> sq, recip, xy;
    for (int k = 1; k <= 9; ++k) {
        sq.push_back(k * k);
        recip.push_back(k + 1.0 / k);
        xy.push_back(3.0 * k + 1.0 / k - 9.0);
    }
    expect_multiset(as_disord(rr, 1), sq, "a^2");
    expect_multiset(as_disord(rr, 2), recip, "a + 1/a");
    expect(std::get<Value>(*rr.outcomes[3].result).num() == 9, "max(a)");
    expect(rr.outcomes[4].rendered == "[1] 1 2 3 4 5 6 7 8 9", "sort(a)");
    expect_multiset(as_disord(rr, 7), xy, "x + y");
    expect_multiset(as_disord(rr, 11), {12, 12, 10, 6, 0, -8, -18, -30, -44, -60}, "e");

    const Disord& mask = as_disord(rr, 12);
    int ntrue = 0;
    for (const Value& v : mask.elements()) ntrue += v.flag() ? 1 : 0;
    expect(mask.size() == 10 && ntrue == 6, "e < 4 truth counts");

    expect_multiset(as_disord(rr, 14), {1, 2, 3, 4, 0, -8, -18, -30, -44, -60},
                    "d after d[e<4] <- e[e<4]");
    expect_multiset(as_disord(rr, 16), {5, 6, 11, 4, 8, 9, 12, 10, 7},
                    "b after b[b>0.6] <- b[b>0.6]+3");

    // 7 significant digits, exactly as displayed in the reference session
    std::vector<std::string> g2 = grid(rr.outcomes[2].rendered);
    expect(g2 == std::vector<std::string>{
                     "[1] 9.111111 4.250000 7.142857 2.000000 2.500000 6.166667 3.333333",
                     "[8] 8.125000 5.200000"},
           "display of a + 1/a");
    std::vector<std::string> g7 = grid(rr.outcomes[7].rendered);
    expect(g7 == std::vector<std::string>{
                     "[1] 18.1111111  3.2500000 12.1428571 -5.0000000 -2.5000000  9.1666667",
                     "[7]  0.3333333 15.1250000  6.2000000"},
           "display of x + y");
    return ok;
}

bool criterion2() {
    std::string src =
        "a <- disord(9, 4, 7, 1, 2, 6, 3, 8, 5)\n"
        "b <- disord(2, 3, 8, 1, 5, 6, 9, 7, 4)\n"
        "try(a[1])\n"
        "try(a[1] <- 1000)\n"
        "try(a + b)\n";
    RunResult rr = run_script(src, Options{});
    expect(rr.status == 0, "session status");
    const char* frag[3] = {"must extract each element once and once only (or none of them)",
                           "must specify each element once and once only", "do not match"};
    for (int i = 0; i < 3; ++i) {
        const StatementOutcome& oc = rr.outcomes.at(2 + i);
        expect(oc.errored, std::string("statement ") + std::to_string(i) + " errored");
        expect(oc.rendered.find(frag[i]) != std::string::npos,
               std::string("verbatim message ") + std::to_string(i));
    }
    return ok;
}

bool criterion3() {
    Mvp a = parse_mvp(kPolyA);
    Mvp b = parse_mvp(kPolyB);
    expect(a + scalar_mul(b, 2) == parse_mvp(kSum14), "a + 2b reparses equal");
    expect((a + b) * (a - b) == int_pow(a, 2) - int_pow(b, 2), "difference of squares");
    for (std::uint64_t s = 0; s < 100; ++s) {
        Mvp p = rmvp_poly(s);
        Mvp q = rmvp_poly(s + 5000);
        expect((p + q) * (p - q) == int_pow(p, 2) - int_pow(q, 2),
               "difference of squares, seed " + std::to_string(s));
    }
    return ok;
}

bool criterion4() {
    std::string src = std::string("a <- mvp(\"") + kPolyA + "\")\n" +
                      "coeffs(a)[coeffs(a) < 4] <- 0\na\n" +
                      "b <- mvp(\"" + kPolyB + "\")\n" +
                      "coeffs(b) <- coeffs(b) %% 2\nb\n";
    RunResult rr = run_script(src, Options{});
    expect(rr.status == 0, "session status");
    expect(as_mvp(rr, 2) == parse_mvp(kZeroedA), "zeroing coefficients < 4");
    expect(as_mvp(rr, 2).terms().size() == 4, "zeroed polynomial has 4 terms");
    expect(as_mvp(rr, 5) == parse_mvp(kModB), "coefficients mod 2");
    expect(as_mvp(rr, 5).terms().size() == 4, "mod-2 polynomial has 4 terms");
    return ok;
}

bool criterion5() {
    std::string src =
        "x <- mvp(\"2 p^3 q + 5 q^2 r - 3 r s^4 + 7 s t^2\")\n"
        "y <- mvp(\"4 p q^3 + q r^2 - 2 r^2 s + 6 t^5\")\n"
        "try(coeffs(x) + coeffs(y))\n"
        "try(coeffs(x) <- coeffs(y))\n"
        "try(coeffs(x) <- 1:2)\n"
        "try(coeffs(x)[coeffs(x) < 3] <- coeffs(x)[coeffs(y) < 3])\n"
        "x\n";
    RunResult rr = run_script(src, Options{});
    expect(rr.status == 0, "session status");
    for (std::size_t i = 2; i <= 5; ++i) {
        const StatementOutcome& oc = rr.outcomes.at(i);
        expect(oc.errored, "statement " + std::to_string(i) + " raised");
        expect(oc.code == Errc::HashMismatch || oc.code == Errc::PlainVectorReplacement,
               "statement " + std::to_string(i) + " error class");
    }
    expect(as_mvp(rr, 6) == parse_mvp("2 p^3 q + 5 q^2 r - 3 r s^4 + 7 s t^2"),
           "x left untouched");
    return ok;
}

bool criterion6() {
    std::string doubling =
        "a <- mvp(\"a^2 c^10 d^2 f^2 + 7 a^3 d^5 e^14 + 6 a^5 c^7 d^4 e^2 + "
        "4 a^8 c d^5 e^6 + 2 b^2 c^4 d^10 e^5 f + 5 b^2 c^6 d^2 e^7 f^6 + "
        "3 c^6 d^4 e^2 f^6\")\n"
        "pa <- powers(a)\nva <- vars(a)\nca <- coeffs(a)\n"
        "pa[ca < 4] <- map(pa, double)[ca < 4]\n"
        "mvp(va, pa, ca)\n";
    RunResult r1 = run_script(doubling, Options{});
    expect(r1.status == 0, "doubling status");
    expect(as_mvp(r1, 5) ==
               parse_mvp("7 a^3 d^5 e^14 + a^4 c^20 d^4 f^4 + 6 a^5 c^7 d^4 e^2 + "
                         "4 a^8 c d^5 e^6 + 5 b^2 c^6 d^2 e^7 f^6 + "
                         "2 b^4 c^8 d^20 e^10 f^2 + 3 c^12 d^8 e^4 f^12"),
           "power doubling output");

    std::string uppercase =
        "a <- mvp(\"3 + 5*a*b - 7*a*b*x^2 + 2*a*b^2*c*d*x*y - 6*x*y + 8*a*b*c*d*x\")\n"
        "pa <- powers(a)\nva <- vars(a)\nca <- coeffs(a)\n"
        "va[map(pa, lengths) > 4] <- map(va, upper)[map(pa, lengths) > 4]\n"
        "mvp(va, pa, ca)\n";
    RunResult r2 = run_script(uppercase, Options{});
    expect(r2.status == 0, "uppercase status");
    expect(as_mvp(r2, 5) ==
               parse_mvp("3 + 8 A B C D X + 2 A B^2 C D X Y + 5 a b - 7 a b x^2 - 6 x y"),
           "uppercase output");

    for (std::uint64_t s = 0; s < 100; ++s) {
        Mvp p = rmvp_poly(s + 300);
        Disord c = coeffs(p), v = vars(p), w = powers(p);
        expect(c.hash() == v.hash() && v.hash() == w.hash(),
               "accessors share one hash, seed " + std::to_string(s));
        expect(mvp_from_triples(v, w, c) == p,
               "triple reconstruction, seed " + std::to_string(s));
    }
    return ok;
}

bool criterion7() {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 10000; ++i) {
        ByteSink sink;
        sink.u64(rng());
        sink.u64(rng());
        Hash h = Hash::of_bytes(sink.bytes());
        expect(involute_reverse(involute_reverse(h)) == h, "involution " + std::to_string(i));
        expect(involute_reverse(h) != h, "involution moves " + std::to_string(i));
    }

    for (std::uint64_t s = 0; s < 1000; ++s) {
        Mvp p = rmvp_poly(3 * s), q = rmvp_poly(3 * s + 1), r = rmvp_poly(3 * s + 2);
        bool laws = (p + q == q + p) && (p * q == q * p) &&
                    ((p + q) + r == p + (q + r)) && ((p * q) * r == p * (q * r)) &&
                    (p * (q + r) == p * q + p * r) &&
                    ((p + q) * (p - q) == int_pow(p, 2) - int_pow(q, 2));
        expect(laws, "ring laws, seed " + std::to_string(s));
        expect(parse_mvp(mvp_terms_string(p)) == p, "round trip, seed " + std::to_string(s));
    }

    for (std::uint64_t s = 0; s < 1000; ++s) {
        std::vector<double> vals = rdis_values(3 + s % 9, mix64(s));
        std::vector<Value> elems;
        for (double v : vals) elems.push_back(Value::number(v));
        Disord d = Disord::from_values(elems);
        double cut = 1.0 + static_cast<double>(s % 10);
        Disord m = elementwise(BinOp::Gt, d, Value::number(cut));
        Disord back = replace_bool(d, m, extract_bool(d, m));
        expect(back == d, "replace of extract, seed " + std::to_string(s));
    }
    return ok;
}

bool criterion8() {
    fuzz::CampaignResult sound = fuzz::run_campaign(10000, 4, 1);
    expect(sound.pass, "10000-program campaign");
    expect(sound.programs_run == 10000, "campaign completed");
    fuzz::CampaignResult broken = fuzz::run_campaign(200, 3, 1, true);
    expect(!broken.pass, "broken build caught");
    expect(broken.programs_run <= 200, "broken build caught within 200 programs");
    return ok;
}

const char* kLabels[8] = {
    "reference session reproduces element multisets and 7-digit display",
    "extraction, replacement and mixing errors carry the verbatim texts",
    "polynomial sum and difference-of-squares identities hold exactly",
    "coefficient zeroing and mod-2 reduction give the 4-term results",
    "cross-polynomial coefficient mixing always raises, never corrupts",
    "accessor-triple rebuilds reproduce the mapped polynomials",
    "property suites: involution, ring laws, round trips, replace/extract",
    "metamorphic campaign clean over 10000 programs; broken build caught",
};

}  // namespace

int main() {
    bool (*criteria[8])() = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7, criterion8};
    int failed = 0;
    for (int i = 0; i < 8; ++i) {
        ok = true;
        detail.clear();
        bool pass = criteria[i]();
        std::printf("%s %d: %s\n", pass ? "PASS" : "FAIL", i + 1, kLabels[i]);
        if (!pass) {
            ++failed;
            for (const std::string& d : detail) std::fprintf(stderr, "    %s\n", d.c_str());
        }
    }
    return failed == 0 ? 0 : 1;
}
