#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "disord/fuzz.hpp"

int main(int argc, char** argv) {
    CLI::App app{"order-invariance fuzzer: reruns generated scripts under shuffled "
                 "storage orders and checks that every admissible observable agrees"};

    int programs = 1000;
    int trials = 4;
    std::uint64_t seed = 1;
    bool broken = false;
    app.add_option("--programs", programs, "number of generated programs")
        ->check(CLI::PositiveNumber);
    app.add_option("--trials", trials, "storage orders per program")->check(CLI::Range(2, 64));
    app.add_option("--seed", seed, "base seed; program i uses seed+i");
    app.add_flag("--permit-positional-extract", broken,
                 "simulate a broken build whose positional reads leak storage order");

    CLI11_PARSE(app, argc, argv);

    disord::fuzz::CampaignResult cr = disord::fuzz::run_campaign(programs, trials, seed, broken);
    if (cr.pass) {
        std::cout << "PASS " << cr.programs_run << '\n';
        return 0;
    }
    std::cout << "FAIL " << cr.fail_seed << ' ' << cr.fail_line << '\n';
    return 1;
}
