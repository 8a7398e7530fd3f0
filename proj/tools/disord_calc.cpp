#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "disord/interp.hpp"

namespace {

bool parse_storage_order(const std::string& text, disord::Options& opt) {
    if (text == "insertion") {
        opt.order = disord::Options::Order::Insertion;
        return true;
    }
    if (text.rfind("shuffle:", 0) == 0) {
        try {
            opt.order = disord::Options::Order::Shuffle;
            opt.shuffle_seed = std::stoull(text.substr(8));
            return true;
        } catch (...) {
        }
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disord script interpreter"};
    app.require_subcommand(1);

    std::string order_text = "insertion";
    std::string file;

    CLI::App* run = app.add_subcommand("run", "execute a script file");
    run->add_option("file", file, "script file")->required();
    run->add_option("--storage-order", order_text, "insertion | shuffle:<seed>");

    CLI::App* repl = app.add_subcommand("repl", "interactive session");
    repl->add_option("--storage-order", order_text, "insertion | shuffle:<seed>");

    CLI11_PARSE(app, argc, argv);

    disord::Options opt;
    if (!parse_storage_order(order_text, opt)) {
        std::cerr << "disord-calc: invalid --storage-order, expected insertion or shuffle:<seed>\n";
        return 2;
    }

    if (repl->parsed()) return disord::run_repl(std::cin, std::cout, std::cerr, opt);

    std::ifstream in(file);
    if (!in) {
        std::cerr << "disord-calc: cannot open " << file << '\n';
        return 2;
    }
    std::ostringstream source;
    source << in.rdbuf();
    disord::RunResult rr = disord::run_script(source.str(), opt);
    std::cout << rr.out;
    std::cerr << rr.err;
    return rr.status;
}
