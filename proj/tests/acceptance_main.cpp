#include <cstdio>
#include <cstdlib>
#include <string>

#include "sq/acceptance.hpp"
#include "sq/parallel.hpp"

// usage: acceptance [criterion]
int main(int argc, char** argv) {
    sq::AcceptanceOptions opt;
    opt.threads = sq::default_threads();
    opt.on_line = [](const sq::CheckLine& c) {
        std::printf("%s\n", sq::format_line(c).c_str());
        std::fflush(stdout);
    };
    std::vector<sq::CheckLine> lines;
    try {
        lines = argc > 1 ? sq::run_criterion(std::atoi(argv[1]), opt) : sq::run_acceptance(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    int failed = 0;
    for (const auto& c : lines) failed += !c.pass;
    std::printf("%zu checks, %d failed\n", lines.size(), failed);
    return failed ? 1 : 0;
}
