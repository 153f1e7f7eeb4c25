/**
 * @file acceptance.cpp
 * @brief Runs every acceptance check and prints one PASS/FAIL line each.
 *
 * Exit status is 1 when any check fails. With --report the status only
 * reflects whether every check reached a verdict without throwing.
 */

#include <cstring>
#include <iostream>

#include <coreseq/acceptance.hpp>

int main(int argc, char** argv) {
    bool report = argc > 1 && std::strcmp(argv[1], "--report") == 0;
    int failed = 0, errored = 0;
    for (auto const& check : coreseq::acceptance::all_checks()) {
        auto r = check();
        std::cout << r.line() << std::endl;
        if (!r.passed) ++failed;
        if (r.errored) ++errored;
    }
    std::cout << (failed ? std::to_string(failed) + " check(s) failed" : std::string("all checks passed")) << "\n";
    return report ? (errored ? 1 : 0) : (failed ? 1 : 0);
}
