#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "walshlab/boolfn.hpp"
#include "walshlab/djsim.hpp"
#include "walshlab/fngen.hpp"
#include "walshlab/rng.hpp"

namespace walshlab {

enum class Problem { P1, P2, P3, P4, P5, P6, P7 };

std::string to_string(Problem p);
Problem problem_from_string(const std::string& s);

// How the perturbation count e is chosen when drawing noisy-linear inputs.
enum class ErrorPolicy { WorstCase, UniformBudget, Fixed };

// Per-trial function supplier. Draws must consume randomness only from the
// passed generator so trials stay independent and reproducible.
struct FunctionSource {
    std::string name;
    std::function<BooleanFunction(int n, SplitMix64& gen)> draw;

    static FunctionSource random();
    static FunctionSource constant(int bit);
    static FunctionSource bent();       // n even
    static FunctionSource plateaued();  // n odd >= 3
    static FunctionSource fixed(BooleanFunction f);
};

struct TrialRow {
    uint64_t trial = 0;
    int64_t errors = -1;  // flipped positions for noisy-linear draws, -1 otherwise
    uint64_t max_abs_w = 0;
    bool success = false;
    double exact_rate = 0.0;  // exact per-trial success probability
};

struct ExperimentReport {
    Problem problem = Problem::P1;
    int n = 0;
    uint64_t trials = 0;
    uint64_t successes = 0;
    double empirical_rate = 0.0;
    double exact_rate_min = 0.0;
    double exact_rate_mean = 0.0;  // not serialized
    double sigma = 0.0;            // sqrt(sum p(1-p))/trials; not serialized
    double target_bound = 0.0;     // published success-rate floor for the problem
    uint64_t seed = 0;
    uint64_t queries_classical = 0;  // 2^n per trial: full-table read
    uint64_t queries_quantum = 0;    // 1 per trial: one circuit run
    std::vector<TrialRow> rows;

    // {problem, n, trials, successes, empirical_rate, exact_rate_min,
    //  paper_bound, seed, queries_classical, queries_quantum}
    std::string to_json_string() const;
    // header trial,e,max_abs_W,success; e empty when not applicable
    std::string to_csv() const;
};

// Parity recovery: trial t uses the linear function with mask t mod 2^n and
// takes one sample; success means the sample equals the mask. trials = 2^n
// sweeps every linear function once.
ExperimentReport run_p1(int n, uint64_t trials, uint64_t seed,
                        int cap = kDefaultSimulatorCap);

// One-shot nonzero-coefficient search. Every returned mask is verified
// against the trial's spectrum; a miss aborts with a diagnostic since the
// guarantee holds with probability 1. With require_plateaued_magnitude the
// returned mask must also satisfy |W| = 2^((n+1)/2).
ExperimentReport run_p2(int n, const FunctionSource& source, uint64_t trials,
                        uint64_t seed, bool require_plateaued_magnitude = false,
                        Problem label = Problem::P2, int cap = kDefaultSimulatorCap);

// One sample per trial; success means the sample attains max|W|. For
// plateaued sources (label P4) the exact per-trial rate must be 1.
ExperimentReport run_p3_p4(int n, const FunctionSource& source, uint64_t trials,
                           uint64_t seed, Problem label,
                           int cap = kDefaultSimulatorCap);

// Noisy-linear max-correlation search, one sample per trial. Success is
// magnitude tie-inclusive: any sampled mask attaining max|W| counts. The
// exact per-trial success probability is checked against the bound in
// integer arithmetic; run_p6 uses the budget 2^(n-3) and floor 9/16, run_p7
// the budget floor(1.17 * 2^(n-3)) and floor (1 - 1.17/4)^2. Requires n odd,
// n >= 3.
ExperimentReport run_p6(int n, uint64_t trials, uint64_t seed,
                        ErrorPolicy policy = ErrorPolicy::WorstCase,
                        uint64_t fixed_errors = 0, int cap = kDefaultSimulatorCap);
ExperimentReport run_p7(int n, uint64_t trials, uint64_t seed,
                        ErrorPolicy policy = ErrorPolicy::WorstCase,
                        uint64_t fixed_errors = 0, int cap = kDefaultSimulatorCap);

enum class AuditMethod { ClassicalFwt, DjSingleShot };

// Oracle queries consumed by one invocation of the method: 2^n for the
// classical transform (full table read), 1 for a single circuit run.
uint64_t query_audit(const BooleanFunction& f, AuditMethod method);

// Brute-force |L_n| for n in {3, 4}: an exhaustive scan of all 2^(2^n)
// functions at n = 3, distance-ball enumeration with a disjointness check at
// n = 4. CapacityError outside that range.
BigInt enumerate_ln(int n);

}  // namespace walshlab
