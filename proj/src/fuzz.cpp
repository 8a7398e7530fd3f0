#include "disord/fuzz.hpp"

#include <algorithm>
#include <random>

#include "disord/random.hpp"

namespace disord::fuzz {

namespace {

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(mix64(seed)) { prog_.seed = seed; }

    FuzzProgram run() {
        preamble();
        std::vector<std::pair<bool, int>> blocks;  // {is_error_recipe, index}
        std::vector<std::size_t> mains = random_perm(kMainRecipes, rng_());
        for (std::size_t i = 0; i < 8; ++i) blocks.emplace_back(false, static_cast<int>(mains[i]));
        blocks.emplace_back(true, 0);  // positional extract, always present
        std::vector<std::size_t> errs = random_perm(kErrorRecipes - 1, rng_());
        for (std::size_t i = 0; i < 3; ++i) blocks.emplace_back(true, static_cast<int>(errs[i]) + 1);
        std::vector<std::size_t> order = random_perm(blocks.size(), rng_());
        for (std::size_t i : order) {
            if (blocks[i].first)
                error_recipe(blocks[i].second);
            else
                main_recipe(blocks[i].second);
        }
        for (const std::string& line : lines_) {
            prog_.source += line;
            prog_.source += '\n';
        }
        return std::move(prog_);
    }

  private:
    static constexpr int kMainRecipes = 19;
    static constexpr int kErrorRecipes = 9;

    std::mt19937_64 rng_;
    FuzzProgram prog_;
    std::vector<std::string> lines_;
    int names_ = 0;
    std::size_t len_a_ = 0;
    std::size_t len_b_ = 0;

    std::uint64_t pick(std::uint64_t bound) { return rng_() % bound; }
    void emit(std::string line) { lines_.push_back(std::move(line)); }
    void tag(const char* t) { prog_.op_kinds.emplace_back(t); }
    std::string fresh(const char* stem) { return stem + std::to_string(++names_); }
    std::string ab() { return pick(2) ? "a" : "b"; }
    std::string num(std::uint64_t lo, std::uint64_t hi) {
        return std::to_string(lo + pick(hi - lo + 1));
    }

    std::string mvp_literal() {
        static const char* const kVars[3] = {"x", "y", "z"};
        int nterms = 2 + static_cast<int>(pick(5));
        std::string s;
        for (int t = 0; t < nterms; ++t) {
            bool neg = pick(2) == 0;
            if (t == 0)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            int coeff = 1 + static_cast<int>(pick(9));
            int nv = 1 + static_cast<int>(pick(3));
            std::vector<std::size_t> which = random_perm(3, rng_());
            bool wrote = false;
            if (coeff != 1) {
                s += std::to_string(coeff);
                wrote = true;
            }
            for (int v = 0; v < nv; ++v) {
                if (wrote) s += pick(2) ? " " : "*";
                s += kVars[which[v]];
                int exp = 1 + static_cast<int>(pick(6));
                if (exp > 1) s += "^" + std::to_string(exp);
                wrote = true;
            }
            if (!wrote) s += std::to_string(coeff);
        }
        return s;
    }

    void preamble() {
        // Distinct lengths: fresh hashes are content-derived, so equal-length
        // families could alias in one storage order and not another.
        len_a_ = 3 + pick(10);
        len_b_ = 3 + pick(9);
        if (len_b_ >= len_a_) ++len_b_;
        emit("a <- rdis(" + std::to_string(len_a_) + ", " + num(1, 999983) + ")");
        emit("b <- rdis(" + std::to_string(len_b_) + ")");
        tag("rdis");
        emit("a");
        tag("echo_disord");
        emit("p <- mvp(\"" + mvp_literal() + "\")");
        tag("mvp_parse");
        emit("q <- rmvp(" + num(1, 999983) + ")");
        tag("rmvp");
        emit("q");
        tag("echo_mvp");
    }

    void main_recipe(int k) {
        switch (k) {
        case 0: {  // elementwise arithmetic with a scalar
            static const char* const kOps[5] = {"+", "-", "*", "/", "%%"};
            std::string d = ab();
            emit("(" + fresh("x") + " <- " + d + " " + kOps[pick(5)] + " " + num(2, 5) + ")");
            tag("arith");
            break;
        }
        case 1: {  // elementwise arithmetic between compatible disords
            std::string d = ab(), x = fresh("x");
            emit(x + " <- " + d + " * " + d);
            emit(x);
            tag("arith");
            break;
        }
        case 2: {  // boolean mask extraction
            std::string d = ab(), m = fresh("m");
            emit(m + " <- " + d + " > " + num(2, 5));
            emit(d + "[" + m + "]");
            tag("mask");
            tag("extract");
            break;
        }
        case 3: {  // boolean mask replacement
            std::string d = ab(), m = fresh("m");
            emit(m + " <- " + d + " < " + num(2, 4));
            emit(d + "[" + m + "] <- " + num(0, 9));
            emit(d);
            tag("mask");
            tag("replace");
            break;
        }
        case 4: {  // reductions
            static const char* const kRed[4] = {"sum", "max", "min", "length"};
            emit(std::string(kRed[pick(4)]) + "(" + ab() + ")");
            tag("reduce");
            break;
        }
        case 5:
            emit("sort(" + ab() + ")");
            tag("sort");
            break;
        case 6:
            emit("rev(" + ab() + ")");
            tag("rev");
            break;
        case 7:
            emit(std::string(pick(2) ? "pmax" : "pmin") + "(" + ab() + ", " + num(2, 6) + ")");
            tag("pminmax");
            break;
        case 8:
            emit("map(" + ab() + ", double)");
            tag("map");
            break;
        case 9: {  // whole-vector positional extraction (a permutation)
            std::string d = ab();
            if (pick(2))
                emit(d + "[1:length(" + d + ")]");
            else
                emit(d + "[length(" + d + "):1]");
            tag("perm_extract");
            break;
        }
        case 10: {  // character disords
            static const char* const kWords[8] = {"apple", "pear",  "fig",  "plum",
                                                  "kiwi",  "lime", "mango", "peach"};
            std::vector<std::size_t> w = random_perm(8, rng_());
            std::string s = fresh("s");
            emit(s + " <- disord(\"" + kWords[w[0]] + "\", \"" + kWords[w[1]] + "\", \"" +
                 kWords[w[2]] + "\")");
            emit("sort(" + s + ")");
            emit("map(" + s + ", upper)");
            tag("symbols");
            break;
        }
        case 11: {  // polynomial arithmetic
            static const char* const kExpr[6] = {"p + q", "p * q", "p - q",
                                                 "q^2",   "p * ",  "p + "};
            std::uint64_t i = pick(6);
            std::string e = kExpr[i];
            if (i >= 4) e += num(2, 9);
            emit(e);
            tag(i == 3 ? "mvp_pow" : "mvp_arith");
            break;
        }
        case 12:
            emit("(p + q) * (p - q) == p * p - q * q");
            tag("mvp_eq");
            break;
        case 13: {
            std::string t = pick(2) ? "p" : "q";
            emit("coeffs(" + t + ")");
            emit("vars(" + t + ")");
            emit("powers(" + t + ")");
            tag("accessors");
            break;
        }
        case 14:
            emit("sum(coeffs(q))");
            emit("coeffs(q) + 1");
            tag("acc_arith");
            break;
        case 15: {  // rebuild from accessor triples
            std::string t = pick(2) ? "p" : "q", n = fresh("p");
            emit(n + " <- mvp(vars(" + t + "), powers(" + t + "), coeffs(" + t + "))");
            emit(n + " == " + t);
            tag("triples");
            break;
        }
        case 16: {
            std::string n = fresh("p");
            emit(n + " <- p");
            emit("coeffs(" + n + ") <- " + num(1, 9));
            emit(n);
            tag("coeffs_assign");
            break;
        }
        case 17: {
            std::string n = fresh("p");
            emit(n + " <- q");
            emit("coeffs(" + n + ") <- coeffs(" + n + ") %% 2");
            emit(n);
            tag("coeffs_mod");
            break;
        }
        case 18: {
            std::string n = fresh("p");
            emit(n + " <- q");
            emit("coeffs(" + n + ")[coeffs(" + n + ") > " + num(1, 6) + "] <- " + num(0, 9));
            emit(n);
            tag("coeffs_mask");
            break;
        }
        default: break;
        }
    }

    void error_recipe(int k) {
        switch (k) {
        case 0:
            emit("try(a[" + num(1, std::min<std::uint64_t>(len_a_, 3)) + "])");
            tag("err_positional");
            break;
        case 1:
            emit("try(a + b)");
            tag("err_mismatch");
            break;
        case 2:
            emit("try(a[b > 0])");
            tag("err_foreign_mask");
            break;
        case 3: {
            std::string m = fresh("m");
            emit(m + " <- a > 0");
            emit("try(a[" + m + "] <- sort(a))");
            tag("err_plainrep");
            break;
        }
        case 4:
            emit("try(coeffs(q) <- 1:3)");
            tag("err_coeffs_plain");
            break;
        case 5:
            emit("try(coeffs(p) <- coeffs(q))");
            tag("err_coeffs_foreign");
            break;
        case 6:
            emit("try(p + a)");
            tag("err_mvp_type");
            break;
        case 7:
            emit("try(q^-2)");
            tag("err_negpow");
            break;
        case 8:
            emit("try(zz9)");
            tag("err_unknown");
            break;
        default: break;
        }
    }
};

char kind_letter(Value::Kind k) {
    switch (k) {
    case Value::Kind::Number: return 'n';
    case Value::Kind::Boolean: return 'b';
    case Value::Kind::Symbol: return 's';
    case Value::Kind::List: return 'l';
    }
    return '?';
}

}  // namespace

FuzzProgram gen_program(std::uint64_t seed) { return Gen(seed).run(); }

LineReport classify(const StatementOutcome& oc) {
    LineReport lr;
    lr.line = oc.line;
    if (oc.errored) {
        // Error identity is the code: messages may embed hash tokens.
        lr.cls = LineClass::OrderFree;
        lr.payload = std::string("error:") + errc_name(oc.code);
        return lr;
    }
    if (!oc.echoed) return lr;
    if (oc.result && std::holds_alternative<Disord>(*oc.result)) {
        const Disord& d = std::get<Disord>(*oc.result);
        std::vector<std::string> elems;
        elems.reserve(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) elems.push_back(canon_string(d.at(i)));
        std::sort(elems.begin(), elems.end());
        lr.cls = LineClass::OrderExposed;
        lr.payload = "disord.";
        lr.payload += kind_letter(d.kind());
        lr.payload += '{';
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) lr.payload += '|';
            lr.payload += elems[i];
        }
        lr.payload += '}';
        return lr;
    }
    lr.cls = LineClass::OrderFree;
    lr.payload = oc.rendered;
    return lr;
}

ObservableReport observe(const std::string& source, const Options& opt) {
    RunResult rr = run_script(source, opt);
    ObservableReport rep;
    rep.status = rr.status;
    rep.lines.reserve(rr.outcomes.size());
    for (const StatementOutcome& oc : rr.outcomes) rep.lines.push_back(classify(oc));
    return rep;
}

Verdict check_invariance(const FuzzProgram& prog, int trials, bool permit_positional_extract) {
    Options base;
    base.permit_positional_extract = permit_positional_extract;
    ObservableReport ref = observe(prog.source, base);
    for (int t = 1; t < trials; ++t) {
        Options opt;
        opt.order = Options::Order::Shuffle;
        opt.shuffle_seed = mix64(prog.seed ^ (0x51EDD00ULL + static_cast<std::uint64_t>(t)));
        opt.permit_positional_extract = permit_positional_extract;
        ObservableReport rep = observe(prog.source, opt);
        std::size_t n = std::min(ref.lines.size(), rep.lines.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (ref.lines[i].cls != rep.lines[i].cls ||
                ref.lines[i].payload != rep.lines[i].payload)
                return {false, prog.seed, rep.lines[i].line};
        }
        if (ref.lines.size() != rep.lines.size()) {
            const auto& longer = ref.lines.size() > rep.lines.size() ? ref.lines : rep.lines;
            return {false, prog.seed, longer[n].line};
        }
        if (ref.status != rep.status)
            return {false, prog.seed, n ? ref.lines[n - 1].line : 0};
    }
    return {true, prog.seed, 0};
}

CampaignResult run_campaign(int programs, int trials, std::uint64_t base_seed,
                            bool permit_positional_extract) {
    CampaignResult cr;
    for (int i = 0; i < programs; ++i) {
        FuzzProgram prog = gen_program(base_seed + static_cast<std::uint64_t>(i));
        Verdict v = check_invariance(prog, trials, permit_positional_extract);
        ++cr.programs_run;
        if (!v.pass) {
            cr.pass = false;
            cr.fail_seed = v.seed;
            cr.fail_line = v.line;
            return cr;
        }
    }
    return cr;
}

}  // namespace disord::fuzz
