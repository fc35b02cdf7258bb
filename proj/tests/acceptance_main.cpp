// Verification suite runner: one PASS/FAIL line per criterion, nonzero exit
// on any failure.

#include <cstdlib>
#include <iostream>

#include "hqr/acceptance.hpp"

int main(int argc, char** argv) {
    unsigned seed = 1;
    if (argc > 1) seed = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));

    bool all = true;
    for (const auto& r : hqr::run_acceptance(seed)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": "
                  << r.detail << std::endl;
        all = all && r.pass;
    }
    std::cout << (all ? "all criteria passed" : "criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
