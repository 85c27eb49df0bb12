#include <cstdio>
#include <cstring>

#include "slicegap/acceptance.hpp"

// one PASS/FAIL line per criterion; --quick halves the cutoffs
int main(int argc, char** argv) {
    slicegap::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    int failed = 0;
    for (int id = 1; id <= 9; ++id) {
        auto r = slicegap::run_criterion(id, opt);
        std::printf("%s  %d  %-16s %7ld ms  (budget %ld ms)\n", r.pass() ? "PASS" : "FAIL", r.id, r.name.c_str(), r.elapsed_ms, r.budget_ms);
        if (!r.pass()) {
            std::printf("      %s\n", r.detail.dump().c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
