#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qqg {

// Which statement families to run.
//   algebra : PBW dimension, idempotents, block relations, commutation,
//             A-elements, associator scalars and cocycle identity
//   modules : constructors, classification, regular-module decomposition
//   tensor  : the full tensor-product decomposition corpus + associator
//   green   : presentations, bases, ring axioms, identity corpus,
//             cross-checks against the constructive engine
//   stable  : stable-quotient presentation and consistency
struct SuiteConfig {
    int n = 3;
    uint64_t seed = 0xC0FFEE;
    int s_max = 4;
    int samples = 30;  // sample count for the randomized/cross-tier checks
    std::vector<std::string> suites = {"all"};
    int threads = 1;
    bool exhaustive = true;  // full parameter ranges (n=3 scale); else sampled

    bool wants(const std::string& name) const;
};

enum class CheckStatus { Pass, Unverified, Fail };

struct CheckRecord {
    std::string id;         // stable identifier, also the task seed tag
    std::string statement;  // the identity or property being verified
    std::string params;     // instance parameters
    CheckStatus status = CheckStatus::Fail;
    std::string detail;  // counterexample or diagnostic on non-pass
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;

    int passed() const;
    int failed() const;
    int unverified() const;
    // Line-delimited JSON records plus a summary block; byte-identical for
    // identical configs.
    std::string to_jsonl() const;
    // 0 if everything passed, 2 if only unverified, 1 if any failed.
    int exit_code() const;
};

SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace qqg
