// Acceptance suite: runs the full verification battery and prints one
// PASS/FAIL line per claim.  Exits nonzero if anything fails.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "scatlab/claims.hpp"

int main(int argc, char** argv) {
    scatlab::ClaimOptions opt;
    std::vector<std::string> only;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) opt.threads = std::stoul(argv[++i]);
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
        else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
            std::string list = argv[++i];
            size_t pos = 0;
            while (pos != std::string::npos) {
                size_t comma = list.find(',', pos);
                only.push_back(list.substr(pos, comma == std::string::npos ? comma : comma - pos));
                pos = comma == std::string::npos ? comma : comma + 1;
            }
        } else {
            std::fprintf(stderr, "usage: acceptance [--threads N] [--seed S] [--only C01,C02,...]\n");
            return 2;
        }
    }

    std::printf("threads=%u seed=%llu\n", scatlab::effective_threads(opt.threads),
                (unsigned long long)opt.seed);
    std::fflush(stdout);

    int failures = 0;
    auto results = scatlab::run_claims(opt, only, [&](const scatlab::ClaimResult& r) {
        std::printf("[%s] %s %-28s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.slug.c_str(),
                    r.elapsed_s, r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    });

    std::printf("%zu claims, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
