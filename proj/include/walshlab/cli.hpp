#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "walshlab/boolfn.hpp"
#include "walshlab/lab.hpp"

namespace walshlab {

// Exit-code contract: 0 success, 1 usage, 2 I/O or parse, 3 invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInvariant = 3;

nlohmann::ordered_json cmd_analyze(const std::string& path, int cap = kMaxVars);

ExperimentReport cmd_experiment(Problem problem, int n, uint64_t trials,
                                uint64_t seed, bool force_worst_case,
                                int cap = kDefaultSimulatorCap);

struct GenerateResult {
    BooleanFunction f;
    nlohmann::ordered_json meta;  // generator, n, seed, and per-kind parameters
};

// kind: linear | affine | random | bent-mm | plateaued | noisy-linear:Ln |
// noisy-linear:LnEps
GenerateResult cmd_generate(const std::string& kind, int n, uint64_t seed,
                            std::optional<uint64_t> base, int constant_term,
                            bool force_worst_case);

nlohmann::ordered_json cmd_count(int n);

// Full argv dispatch; prints to out/err and maps every failure to the exit
// codes above.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace walshlab
