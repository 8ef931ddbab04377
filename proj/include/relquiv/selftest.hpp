#pragma once

#include "relquiv/extension.hpp"
#include "relquiv/generator.hpp"
#include "relquiv/oracle.hpp"

namespace relquiv {

struct SelftestOptions {
    int string_count = 200;
    int gentle_count = 100;
    int max_vertices = 12;
    double density = 0.0;  // 0 = vary per instance
    std::uint64_t seed = 2024;
    bool parallel = true;
    int threads = 0;  // 0 = runtime default
};

struct SelftestFailure {
    std::uint64_t seed = 0;
    bool gentle = false;
    std::string what;
    std::string bqv;  // reproducer
};

struct SelftestReport {
    int instances = 0;
    long long checks = 0;
    std::vector<SelftestFailure> failures;

    bool ok() const { return failures.empty(); }
};

struct InstanceResult {
    long long checks = 0;
    std::vector<std::string> failures;
};

// The full differential battery on one presentation: resolution verification
// on both sides, witness counts against oracle dimensions, support sets, top
// bases, the new-arrow multiset three ways, serialization round trips, and
// the gentle fast path when applicable.
InstanceResult check_instance(const StringPresentation& P, bool expect_gentle);

SelftestReport run_selftest(const SelftestOptions& opt);

std::string selftest_summary(const SelftestReport& rep);

}  // namespace relquiv
