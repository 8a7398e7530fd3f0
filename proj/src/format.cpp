#include "disord/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace disord {

namespace {

// Significant-digit shape of x at seven digits: sign, decimal exponent, and
// the count of significant digits once trailing zeros are dropped.
struct SigParts {
    bool neg = false;
    int exp = 0;
    int nsig = 1;
};

SigParts sig_parts(double x) {
    SigParts p;
    if (x == 0.0) return p;
    p.neg = x < 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6e", std::fabs(x));
    const char* e = std::strchr(buf, 'e');
    p.exp = std::atoi(e + 1);
    p.nsig = 7;
    for (const char* q = e - 1; *q != '.' && p.nsig > 1; --q) {
        if (*q != '0') break;
        --p.nsig;
    }
    return p;
}

// Signed zero prints as plain zero.
std::string drop_minus_zero(std::string s) {
    if (!s.empty() && s[0] == '-' &&
        s.find_first_not_of("0.", 1) == std::string::npos)
        s.erase(0, 1);
    return s;
}

std::string fixed_token(double x, int decimals) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return drop_minus_zero(buf);
}

std::string sci_token(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", decimals, x);
    return buf;
}

int index_width(std::size_t n) {
    int w = 1;
    while (n >= 10) {
        n /= 10;
        ++w;
    }
    return w;
}

void rstrip(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::string bool_token(bool b) { return b ? "TRUE" : "FALSE"; }

std::vector<std::string> element_tokens(const std::vector<Value>& xs, bool& left_justify) {
    left_justify = false;
    std::vector<std::string> toks;
    toks.reserve(xs.size());
    switch (xs[0].kind()) {
    case Value::Kind::Number: {
        std::vector<double> nums;
        nums.reserve(xs.size());
        for (const Value& v : xs) nums.push_back(v.num());
        return format_numbers(nums);
    }
    case Value::Kind::Boolean:
        for (const Value& v : xs) toks.push_back(bool_token(v.flag()));
        return toks;
    case Value::Kind::Symbol:
        left_justify = true;
        for (const Value& v : xs) toks.push_back('"' + v.sym() + '"');
        return toks;
    case Value::Kind::List:
        break;  // rendered as [[i]] blocks, never as a token row
    }
    for (const Value& v : xs) toks.push_back(canon_string(v));
    return toks;
}

}  // namespace

std::vector<std::string> format_numbers(const std::vector<double>& xs) {
    int mxsl = 1, rgt = 0, d_sci = 0, wexp = 2;
    bool anyneg = false, any_finite = false;
    for (double x : xs) {
        if (!std::isfinite(x)) continue;
        any_finite = true;
        SigParts p = sig_parts(x);
        anyneg = anyneg || p.neg;
        int left = std::max(p.exp + 1, 1);
        mxsl = std::max(mxsl, (p.neg ? 1 : 0) + left);
        rgt = std::max(rgt, p.nsig - 1 - p.exp);
        d_sci = std::max(d_sci, p.nsig - 1);
        if (p.exp > 99 || p.exp < -99) wexp = 3;
    }
    int fixed_width = mxsl + rgt + (rgt > 0 ? 1 : 0);
    int sci_width = (anyneg ? 1 : 0) + 1 + (d_sci > 0 ? d_sci + 1 : 0) + 2 + wexp;
    bool sci = any_finite && fixed_width > sci_width;

    std::vector<std::string> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (std::isnan(x))
            out.push_back("NaN");
        else if (std::isinf(x))
            out.push_back(x > 0 ? "Inf" : "-Inf");
        else
            out.push_back(sci ? sci_token(x, d_sci) : fixed_token(x, rgt));
    }
    return out;
}

std::string empty_name_for(Value::Kind kind, Value::ListKind hint, bool in_list) {
    switch (kind) {
    case Value::Kind::Number:
        if (in_list) return hint == Value::ListKind::Symbol ? "character(0)" : "integer(0)";
        return "numeric(0)";
    case Value::Kind::Boolean: return "logical(0)";
    case Value::Kind::Symbol: return "character(0)";
    case Value::Kind::List: return "list()";
    }
    return "numeric(0)";
}

std::string render_vector(const std::vector<Value>& xs, const std::string& empty_name) {
    if (xs.empty()) return empty_name;

    bool left_justify = false;
    std::vector<std::string> toks = element_tokens(xs, left_justify);
    std::size_t wtok = 0;
    for (const std::string& t : toks) wtok = std::max(wtok, t.size());

    const int labw = index_width(xs.size()) + 2;
    auto label = [&](std::size_t i) {
        std::string l = "[" + std::to_string(i + 1) + "]";
        return std::string(labw - l.size(), ' ') + l;
    };

    std::vector<std::string> lines;
    std::string line = label(0);
    int width = labw;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i > 0 && width + static_cast<int>(wtok) + 1 > kConsoleWidth) {
            rstrip(line);
            lines.push_back(std::move(line));
            line = label(i);
            width = labw;
        }
        std::string pad(wtok - toks[i].size(), ' ');
        line += ' ';
        line += left_justify ? toks[i] + pad : pad + toks[i];
        width += static_cast<int>(wtok) + 1;
    }
    rstrip(line);
    lines.push_back(std::move(line));

    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += '\n';
        out += lines[i];
    }
    return out;
}

std::string render_value_line(const Value& v) {
    return render_vector({v}, empty_name_for(v.kind(), Value::ListKind::Number, false));
}

std::string render_list_blocks(const std::vector<Value>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Value& v = items[i];
        out += "[[" + std::to_string(i + 1) + "]]\n";
        Value::Kind inner = v.items().empty() ? Value::Kind::Number : v.items()[0].kind();
        out += render_vector(v.items(), empty_name_for(inner, v.list_kind(), true));
        out += "\n\n";
    }
    return out;
}

std::string render_disord(const Disord& d) {
    std::string out = "A disord object with hash " + d.hash().hex() + " and elements\n";
    if (d.kind() == Value::Kind::List && !d.empty()) {
        out += render_list_blocks(d.elements());
    } else {
        out += render_vector(d.elements(), empty_name_for(d.kind(), Value::ListKind::Number, false));
        out += '\n';
    }
    out += "(in some order)";
    return out;
}

}  // namespace disord
