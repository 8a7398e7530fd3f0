#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disord/interp.hpp"

namespace disord::fuzz {

// A generated script plus the operation kinds it exercises (for coverage
// accounting). Generation is deterministic in the seed.
struct FuzzProgram {
    std::uint64_t seed = 0;
    std::string source;
    std::vector<std::string> op_kinds;
};

enum class LineClass { Silent, OrderFree, OrderExposed };

// What one statement is allowed to pin down across storage orders. Order-free
// lines carry their exact text (or error code); order-exposed lines carry the
// sorted element multiset — never the hash token, which legitimately varies.
struct LineReport {
    int line = 0;
    LineClass cls = LineClass::Silent;
    std::string payload;
};

struct ObservableReport {
    std::vector<LineReport> lines;
    int status = 0;
};

struct Verdict {
    bool pass = true;
    std::uint64_t seed = 0;
    int line = 0;  // first divergent line when !pass
};

struct CampaignResult {
    bool pass = true;
    std::uint64_t fail_seed = 0;
    int fail_line = 0;
    int programs_run = 0;
};

FuzzProgram gen_program(std::uint64_t seed);

LineReport classify(const StatementOutcome& oc);

ObservableReport observe(const std::string& source, const Options& opt);

// Runs the program under insertion order plus trials-1 shuffled storage
// orders and demands identical reports. permit_positional_extract simulates
// a broken build whose positional reads leak storage positions.
Verdict check_invariance(const FuzzProgram& prog, int trials,
                         bool permit_positional_extract = false);

// Programs use seeds base_seed, base_seed+1, ... so a FAIL seed can be
// replayed directly with --programs 1.
CampaignResult run_campaign(int programs, int trials, std::uint64_t base_seed,
                            bool permit_positional_extract = false);

}  // namespace disord::fuzz
