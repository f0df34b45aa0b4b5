#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "walshlab/boolfn.hpp"
#include "walshlab/rng.hpp"

namespace walshlab {

// Default register-width ceiling for the statevector path (2^20 doubles = 8 MiB).
inline constexpr int kDefaultSimulatorCap = 20;

// Real amplitude vector over the n-qubit input register. The ancilla qubit
// stays in (|0> - |1>)/sqrt(2) for the whole circuit and is factored out.
class DjState {
public:
    DjState(int n, std::vector<double> amp);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }
    double amp(uint64_t z) const { return amp_[z]; }
    std::span<const double> amplitudes() const { return amp_; }
    std::span<double> amplitudes() { return amp_; }

    double norm_squared() const;

private:
    int n_;
    std::vector<double> amp_;
};

// The three circuit stages. dj_evolve composes them; they are exposed so the
// intermediate states can be inspected.
DjState dj_uniform_state(int n);
// Flips the sign of amp[x] wherever f(x) = 1. One oracle application, charged
// as a single query.
void apply_phase_oracle(DjState& state, const BooleanFunction& f);
// One Hadamard gate per qubit, each an in-place (a+b, a-b)/sqrt(2) butterfly.
void apply_hadamard_layer(DjState& state);

// Statevector run of the circuit: uniform superposition, phase oracle,
// Hadamard layer. Throws CapacityError for n above the cap.
DjState dj_evolve(const BooleanFunction& f, int cap = kDefaultSimulatorCap);

// Final-state amplitudes scaled by 2^n, integer arithmetic end to end:
// signs (-1)^f(x) followed by n exact (a+b, a-b) stages. Analytic companion
// to dj_evolve; charges no queries.
std::vector<int64_t> dj_integer_amplitudes(const BooleanFunction& f);

// Measurement law of the final state: p[z] = A[z]^2 / 2^(2n) with integer
// numerators, so zero-probability outcomes are exactly impossible to draw.
class MeasurementDistribution {
public:
    MeasurementDistribution(int n, std::vector<int64_t> scaled_amplitudes);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }

    int64_t scaled_amplitude(uint64_t z) const { return w_[z]; }
    uint64_t numerator(uint64_t z) const {
        return uint64_t(w_[z] < 0 ? -w_[z] : w_[z]) * uint64_t(w_[z] < 0 ? -w_[z] : w_[z]);
    }
    uint64_t denominator() const { return uint64_t{1} << (2 * n_); }
    // Exact: numerators and the power-of-two denominator are both
    // representable, so the quotient is an exact double for n <= 26.
    double probability(uint64_t z) const;

    std::vector<uint64_t> support() const;

    // Inverse-CDF draw over the exact integer masses.
    uint64_t sample(SplitMix64& gen) const;

private:
    int n_;
    std::vector<int64_t> w_;
    std::vector<uint64_t> cum_;  // inclusive prefix sums of the numerators
};

MeasurementDistribution dj_distribution(const BooleanFunction& f,
                                        int cap = kDefaultSimulatorCap);

// count i.i.d. measurement outcomes; identical (distribution, seed) pairs
// yield identical sequences on every platform.
std::vector<uint64_t> dj_sample(const MeasurementDistribution& d, uint64_t seed,
                                uint64_t count);

enum class DjVerdict { Constant, Balanced };

// One circuit run each (one oracle use). The promise-based decision returns
// Constant exactly when the all-zero state is measured; if the input is
// neither constant nor balanced the answer follows the same measurement rule
// but carries no guarantee.
DjVerdict decide_constant_or_balanced(const BooleanFunction& f, uint64_t seed);
DjVerdict decide_constant_or_balanced(const BooleanFunction& f, SplitMix64& gen,
                                      int cap = kDefaultSimulatorCap);

// Recovers omega from the oracle of f = omega.x in a single run.
uint64_t bv_recover_linear(const BooleanFunction& f, uint64_t seed);
uint64_t bv_recover_linear(const BooleanFunction& f, SplitMix64& gen,
                           int cap = kDefaultSimulatorCap);

// One-shot draw of a mask with a nonzero spectrum coefficient. Outcomes
// outside the support have probability exactly zero.
uint64_t solve_nonzero_walsh(const BooleanFunction& f, uint64_t seed);
uint64_t solve_nonzero_walsh(const BooleanFunction& f, SplitMix64& gen,
                             int cap = kDefaultSimulatorCap);

}  // namespace walshlab
