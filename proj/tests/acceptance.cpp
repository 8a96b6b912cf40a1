// Acceptance suite: runs every verification identity at its full declared
// range and prints one pass/fail line per criterion.
#include <cstdio>

#include "bpp/verify.hpp"

int main() {
    auto checks = bpp::verify::run_all();
    bool all_ok = true;
    for (const auto& c : checks) {
        std::printf("[%s] %2d. %s — %s (%.2fs)\n", c.pass ? "PASS" : "FAIL",
                    c.id, c.name.c_str(), c.detail.c_str(), c.seconds);
        all_ok = all_ok && c.pass;
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES PRESENT");
    return all_ok ? 0 : 1;
}
