// Verification sweep: one pass/fail line per criterion, exit 0 iff all
// pass. With --cli <path> the reproduce-paper aggregation of the CLI
// binary is exercised as the final criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "fragdist/acceptance.hpp"

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
    }

    const auto results = fragdist::acceptance::run_all();
    bool ok = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d: %s — %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        ok = ok && r.pass;
    }

    if (!cli_path.empty()) {
        const std::string cmd = "\"" + cli_path + "\" reproduce-paper > /dev/null";
        const int rc = std::system(cmd.c_str());
        const bool cli_ok = rc == 0;
        std::printf("[%s] 12: reproduce-paper aggregates 1-11 and exits 0 — exit code %d\n",
                    cli_ok ? "PASS" : "FAIL", rc);
        ok = ok && cli_ok;
    } else {
        std::printf("[SKIP] 12: reproduce-paper (pass --cli <path> to run)\n");
    }

    std::printf("RESULT: %s\n", ok ? "all criteria passed" : "FAILURES present");
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
