#include "walshlab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <json.hpp>

#include "walshlab/djsim.hpp"
#include "walshlab/spectral.hpp"

namespace walshlab {

std::string to_string(Problem p) {
    switch (p) {
        case Problem::P1: return "P1";
        case Problem::P2: return "P2";
        case Problem::P3: return "P3";
        case Problem::P4: return "P4";
        case Problem::P5: return "P5";
        case Problem::P6: return "P6";
        case Problem::P7: return "P7";
    }
    return "P1";
}

Problem problem_from_string(const std::string& s) {
    for (Problem p : {Problem::P1, Problem::P2, Problem::P3, Problem::P4,
                      Problem::P5, Problem::P6, Problem::P7}) {
        if (s == to_string(p)) return p;
    }
    throw ValueError("unknown problem id \"" + s + "\" (expected P1..P7)");
}

FunctionSource FunctionSource::random() {
    return FunctionSource{"random", [](int n, SplitMix64& gen) {
                              return random_function(n, gen);
                          }};
}

FunctionSource FunctionSource::constant(int bit) {
    return FunctionSource{bit ? "constant1" : "constant0",
                          [bit](int n, SplitMix64&) {
                              BooleanFunction f = BooleanFunction::zeros(n);
                              return bit ? f.complemented() : f;
                          }};
}

FunctionSource FunctionSource::bent() {
    return FunctionSource{"bent", [](int n, SplitMix64& gen) {
                              if (n < 2 || n % 2 != 0) {
                                  throw ValueError("bent inputs need even n >= 2");
                              }
                              const auto pi = random_permutation(
                                  uint32_t{1} << (n / 2), gen);
                              return bent_mm(n, pi, random_function(n / 2, gen));
                          }};
}

FunctionSource FunctionSource::plateaued() {
    return FunctionSource{"plateaued", [](int n, SplitMix64& gen) {
                              if (n < 3 || n % 2 == 0) {
                                  throw ValueError("plateaued inputs need odd n >= 3");
                              }
                              const int m = n - 1;
                              const auto draw_bent = [&] {
                                  const auto pi = random_permutation(
                                      uint32_t{1} << (m / 2), gen);
                                  return bent_mm(m, pi, random_function(m / 2, gen));
                              };
                              const BooleanFunction g = draw_bent();
                              const BooleanFunction h = draw_bent();
                              return plateaued_concat(g, h);
                          }};
}

FunctionSource FunctionSource::fixed(BooleanFunction f) {
    return FunctionSource{"fixed", [f = std::move(f)](int n, SplitMix64&) {
                              if (f.n() != n) {
                                  throw DimensionError(
                                      "fixed source has a different variable count");
                              }
                              return f;
                          }};
}

std::string ExperimentReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["problem"] = walshlab::to_string(problem);
    j["n"] = n;
    j["trials"] = trials;
    j["successes"] = successes;
    j["empirical_rate"] = empirical_rate;
    j["exact_rate_min"] = exact_rate_min;
    j["paper_bound"] = target_bound;
    j["seed"] = seed;
    j["queries_classical"] = queries_classical;
    j["queries_quantum"] = queries_quantum;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
    std::string out = "trial,e,max_abs_W,success\n";
    for (const TrialRow& r : rows) {
        out += std::to_string(r.trial);
        out += ',';
        if (r.errors >= 0) out += std::to_string(r.errors);
        out += ',';
        out += std::to_string(r.max_abs_w);
        out += ',';
        out += r.success ? '1' : '0';
        out += '\n';
    }
    return out;
}

namespace {

// Runs trials in parallel; each trial draws from its own derived stream, so
// the merged report does not depend on scheduling. Any per-trial failure is
// surfaced as an InvariantViolation for the lowest failing trial index.
template <typename Fn>
ExperimentReport run_trials(Problem label, int n, uint64_t trials, uint64_t seed,
                            double bound, Fn&& per_trial) {
    if (trials < 1) throw ValueError("trials must be >= 1");
    std::vector<TrialRow> rows(trials);
    std::vector<std::string> failures(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int64_t t = 0; t < int64_t(trials); ++t) {
        SplitMix64 gen = derive_stream(seed, uint64_t(t));
        try {
            rows[t] = per_trial(uint64_t(t), gen);
        } catch (const std::exception& e) {
            failures[t] = e.what();
        }
        rows[t].trial = uint64_t(t);
    }
    for (uint64_t t = 0; t < trials; ++t) {
        if (!failures[t].empty()) {
            throw InvariantViolation(to_string(label) + " trial " +
                                     std::to_string(t) + ": " + failures[t]);
        }
    }

    ExperimentReport report;
    report.problem = label;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.target_bound = bound;
    report.queries_classical = trials << n;
    report.queries_quantum = trials;
    double mean = 0.0;
    double variance = 0.0;
    double min_rate = 2.0;
    for (const TrialRow& r : rows) {
        if (r.success) ++report.successes;
        mean += r.exact_rate;
        variance += r.exact_rate * (1.0 - r.exact_rate);
        if (r.exact_rate < min_rate) min_rate = r.exact_rate;
    }
    report.empirical_rate = double(report.successes) / double(trials);
    report.exact_rate_mean = mean / double(trials);
    report.exact_rate_min = min_rate;
    report.sigma = std::sqrt(variance) / double(trials);
    report.rows = std::move(rows);
    return report;
}

uint64_t tied_max_mass(const WalshSpectrum& s, int64_t max_abs) {
    uint64_t num = 0;
    for (int64_t v : s.values()) {
        if (v == max_abs || v == -max_abs) num += uint64_t(v) * uint64_t(v);
    }
    return num;
}

struct NoisyBoundCheck {
    uint64_t numerator;    // bound = numerator / denominator
    uint64_t denominator;
};

ExperimentReport run_noisy(Problem label, NoisyLinearSpec::Variant variant,
                           NoisyBoundCheck bound, int n, uint64_t trials,
                           uint64_t seed, ErrorPolicy policy, uint64_t fixed_errors,
                           int cap) {
    if (n < 3 || n % 2 == 0) {
        throw ValueError(to_string(label) + " requires an odd variable count, n >= 3");
    }
    const uint64_t size = uint64_t{1} << n;
    const double bound_value = double(bound.numerator) / double(bound.denominator);
    return run_trials(label, n, trials, seed, bound_value, [&](uint64_t, SplitMix64& gen) {
        const uint64_t base = gen.below(size);
        const NoisyLinearSpec spec = variant == NoisyLinearSpec::Variant::Ln
                                         ? NoisyLinearSpec::ln(n, base)
                                         : NoisyLinearSpec::ln_eps(n, base);
        std::optional<uint64_t> requested;
        if (policy == ErrorPolicy::WorstCase) requested = spec.max_errors;
        if (policy == ErrorPolicy::Fixed) requested = fixed_errors;
        NoisyLinearDraw draw = noisy_linear(spec, gen, requested);

        const WalshSpectrum s = walsh_spectrum(draw.f);
        const int64_t max_abs = s.max_abs();
        const uint64_t mass = tied_max_mass(s, max_abs);
        // exact per-trial success probability mass/2^(2n) >= bound, checked
        // as integers
        const auto lhs = (unsigned __int128)mass * bound.denominator;
        const auto rhs = (unsigned __int128)bound.numerator << (2 * n);
        if (lhs < rhs) {
            throw InvariantViolation(
                "exact success probability below the bound: mass " +
                std::to_string(mass) + " at base " + std::to_string(base) +
                " with " + std::to_string(draw.errors) + " errors");
        }

        const MeasurementDistribution d = dj_distribution(draw.f, cap);
        draw.f.charge_queries(1);
        const uint64_t outcome = d.sample(gen);

        TrialRow row;
        row.errors = int64_t(draw.errors);
        row.max_abs_w = uint64_t(max_abs);
        row.success = s[outcome] == max_abs || s[outcome] == -max_abs;
        row.exact_rate = std::ldexp(double(mass), -2 * n);
        return row;
    });
}

}  // namespace

ExperimentReport run_p1(int n, uint64_t trials, uint64_t seed, int cap) {
    if (n < 1) throw ValueError("P1 requires n >= 1");
    const uint64_t size = uint64_t{1} << n;
    return run_trials(Problem::P1, n, trials, seed, 1.0,
                      [&](uint64_t trial, SplitMix64& gen) {
        // trial t recovers the mask t mod 2^n; trials = 2^n sweeps them all
        const uint64_t mask = trial % size;
        BooleanFunction f = linear(n, mask);
        const uint64_t recovered = bv_recover_linear(f, gen, cap);
        if (recovered != mask) {
            throw InvariantViolation("recovered mask " + std::to_string(recovered) +
                                     " differs from " + std::to_string(mask));
        }
        TrialRow row;
        row.max_abs_w = size;
        row.success = true;
        row.exact_rate = 1.0;
        return row;
    });
}

ExperimentReport run_p2(int n, const FunctionSource& source, uint64_t trials,
                        uint64_t seed, bool require_plateaued_magnitude,
                        Problem label, int cap) {
    const int64_t plateau = n % 2 == 1 ? int64_t{1} << ((n + 1) / 2) : 0;
    return run_trials(label, n, trials, seed, 1.0, [&](uint64_t, SplitMix64& gen) {
        BooleanFunction f = source.draw(n, gen);
        const WalshSpectrum s = walsh_spectrum(f);
        const uint64_t omega = solve_nonzero_walsh(f, gen, cap);
        if (s[omega] == 0) {
            throw InvariantViolation("sampled mask " + std::to_string(omega) +
                                     " has a zero coefficient");
        }
        if (require_plateaued_magnitude &&
            s[omega] != plateau && s[omega] != -plateau) {
            throw InvariantViolation("sampled mask " + std::to_string(omega) +
                                     " does not attain the plateau magnitude");
        }
        TrialRow row;
        row.max_abs_w = uint64_t(s.max_abs());
        row.success = true;
        row.exact_rate = 1.0;
        return row;
    });
}

ExperimentReport run_p3_p4(int n, const FunctionSource& source, uint64_t trials,
                           uint64_t seed, Problem label, int cap) {
    return run_trials(label, n, trials, seed,
                      label == Problem::P4 ? 1.0 : 0.0,
                      [&](uint64_t, SplitMix64& gen) {
        BooleanFunction f = source.draw(n, gen);
        const WalshSpectrum s = walsh_spectrum(f);
        const int64_t max_abs = s.max_abs();
        const uint64_t mass = tied_max_mass(s, max_abs);
        if (label == Problem::P4 && mass != (uint64_t{1} << (2 * n))) {
            throw InvariantViolation(
                "plateaued input has outcomes below the maximum magnitude");
        }
        const MeasurementDistribution d = dj_distribution(f, cap);
        f.charge_queries(1);
        const uint64_t outcome = d.sample(gen);
        TrialRow row;
        row.max_abs_w = uint64_t(max_abs);
        row.success = s[outcome] == max_abs || s[outcome] == -max_abs;
        row.exact_rate = std::ldexp(double(mass), -2 * n);
        return row;
    });
}

ExperimentReport run_p6(int n, uint64_t trials, uint64_t seed, ErrorPolicy policy,
                        uint64_t fixed_errors, int cap) {
    return run_noisy(Problem::P6, NoisyLinearSpec::Variant::Ln,
                     NoisyBoundCheck{9, 16}, n, trials, seed, policy, fixed_errors,
                     cap);
}

ExperimentReport run_p7(int n, uint64_t trials, uint64_t seed, ErrorPolicy policy,
                        uint64_t fixed_errors, int cap) {
    // (1 - 1.17/4)^2 = (283/400)^2
    return run_noisy(Problem::P7, NoisyLinearSpec::Variant::LnEps,
                     NoisyBoundCheck{80089, 160000}, n, trials, seed, policy,
                     fixed_errors, cap);
}

uint64_t query_audit(const BooleanFunction& f, AuditMethod method) {
    switch (method) {
        case AuditMethod::ClassicalFwt:
            return f.size();
        case AuditMethod::DjSingleShot:
            return 1;
    }
    return 0;
}

BigInt enumerate_ln(int n) {
    if (n != 3 && n != 4) {
        throw CapacityError("brute-force enumeration is only tractable for n in {3, 4}");
    }
    const uint64_t size = uint64_t{1} << n;
    std::vector<uint64_t> linear_tables;
    for (uint64_t omega = 0; omega < size; ++omega) {
        uint64_t table = 0;
        for (uint64_t x = 0; x < size; ++x) {
            table |= uint64_t(parity64(x & omega)) << x;
        }
        linear_tables.push_back(table);
    }

    if (n == 3) {
        // exhaustive scan of all 256 functions, budget 2^0 = 1
        uint64_t count = 0;
        for (uint64_t table = 0; table < 256; ++table) {
            for (uint64_t l : linear_tables) {
                if (std::popcount(table ^ l) <= 1) {
                    ++count;
                    break;
                }
            }
        }
        return BigInt(count);
    }

    // n = 4: enumerate the distance-2 ball around each linear center and
    // check that no function is reached from two centers
    std::unordered_set<uint64_t> seen;
    uint64_t inserted = 0;
    for (uint64_t l : linear_tables) {
        seen.insert(l);
        ++inserted;
        for (int i = 0; i < int(size); ++i) {
            seen.insert(l ^ (uint64_t{1} << i));
            ++inserted;
            for (int j = i + 1; j < int(size); ++j) {
                seen.insert(l ^ (uint64_t{1} << i) ^ (uint64_t{1} << j));
                ++inserted;
            }
        }
    }
    if (seen.size() != inserted) {
        throw InvariantViolation("distance balls around distinct linear centers overlap");
    }
    return BigInt(seen.size());
}

}  // namespace walshlab
