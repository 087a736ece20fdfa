// One line per acceptance criterion; the exit status is nonzero if any fails.

#include <cstdio>

#include "lagcap/verify.hpp"

int main() {
    int failed = 0;
    for (const auto& r : lagcap::run_all()) {
        std::printf("%-4s criterion %2d  %-22s %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.c_str());
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(lagcap::check_names().size()) - failed,
                lagcap::check_names().size());
    return failed == 0 ? 0 : 1;
}
