#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "disord/disord.hpp"
#include "disord/error.hpp"
#include "disord/mvp.hpp"
#include "disord/script.hpp"

namespace disord {

// Ordinary R-style vector: order is visible and meaningful.
struct PlainVec {
    std::vector<Value> items;
    Value::Kind kind = Value::Kind::Number;  // element kind when empty
};

using RtValue = std::variant<Value, PlainVec, Disord, Mvp>;

struct Options {
    enum class Order { Insertion, Shuffle };
    Order order = Order::Insertion;
    std::uint64_t shuffle_seed = 0;
    // Fault-injection hook: lets positional extraction through unchecked so
    // the order-invariance harness can demonstrate it catches the bug.
    bool permit_positional_extract = false;
};

struct StatementOutcome {
    int line = 0;
    bool echoed = false;
    bool errored = false;
    Errc code = Errc::TypeMismatch;      // valid when errored
    std::string rendered;                // echo text or "Error: ..." line
    std::optional<RtValue> result;       // echoed value
};

struct RunResult {
    std::vector<StatementOutcome> outcomes;
    std::string out;
    std::string err;
    int status = 0;  // 0 ok, 1 runtime error, 2 parse error
};

class Interpreter {
public:
    explicit Interpreter(const Options& opt) : opt_(opt) {}

    StatementOutcome execute(const script::Statement& st);
    RtValue eval(const script::Expr& e);

private:
    RtValue eval_impl(const script::Expr& e);
    RtValue eval_call(const script::Expr& e);
    RtValue eval_binary(const std::string& op, RtValue a, RtValue b);
    RtValue do_extract(RtValue target, RtValue index);
    Disord do_replace(const Disord& d, const RtValue& index, const RtValue& value);

    // Storage-order policy: fresh disords may be stored shuffled, and
    // polynomial terms may be enumerated in a shuffled order.
    Disord fresh_disord(std::vector<Value> values, Value::Kind empty_kind);
    Mvp enumerate(const Mvp& p) const;

    Options opt_;
    std::map<std::string, RtValue> env_;
    std::uint64_t disord_counter_ = 0;
    std::uint64_t rng_counter_ = 0;
};

std::string render(const RtValue& v);

RunResult run_script(const std::string& source, const Options& opt);
int run_repl(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt);

}  // namespace disord
