#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sq {

struct CheckLine {
    std::string id;      // "4b"
    std::string title;
    bool pass = false;
    std::string detail;  // measured values, one line
    double seconds = 0;
};

struct AcceptanceOptions {
    int threads = 1;
    std::uint64_t seed = 20240611;
    int property_cases = 1000;
    std::function<void(const CheckLine&)> on_line;  // called as each line finishes
};

// criterion numbers 1..9
std::vector<CheckLine> run_criterion(int k, const AcceptanceOptions& opt);
std::vector<CheckLine> run_acceptance(const AcceptanceOptions& opt);
std::string format_line(const CheckLine& c);

}  // namespace sq
