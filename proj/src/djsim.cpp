#include "walshlab/djsim.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walshlab {

namespace {

constexpr uint64_t kParallelCutover = uint64_t{1} << 16;

void check_cap(const BooleanFunction& f, int cap) {
    if (f.n() > cap) {
        throw CapacityError("register width " + std::to_string(f.n()) +
                            " exceeds the simulator cap of " + std::to_string(cap));
    }
}

}  // namespace

DjState::DjState(int n, std::vector<double> amp) : n_(n), amp_(std::move(amp)) {
    if (n < 1 || n > kMaxVars) throw ValueError("register width out of range");
    if (amp_.size() != (uint64_t{1} << n)) {
        throw DimensionError("state must have 2^n amplitudes");
    }
}

double DjState::norm_squared() const {
    double acc = 0.0;
    for (double a : amp_) acc += a * a;
    return acc;
}

DjState dj_uniform_state(int n) {
    if (n < 1 || n > kMaxVars) throw ValueError("register width out of range");
    const double u = 1.0 / std::sqrt(double(uint64_t{1} << n));
    return DjState(n, std::vector<double>(uint64_t{1} << n, u));
}

void apply_phase_oracle(DjState& state, const BooleanFunction& f) {
    if (state.n() != f.n()) {
        throw DimensionError("state and oracle widths differ");
    }
    f.charge_queries(1);  // one U_f application
    auto amp = state.amplitudes();
    const int64_t size = int64_t(amp.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (size >= int64_t(kParallelCutover))
#endif
    for (int64_t x = 0; x < size; ++x) {
        if (f.bit(uint64_t(x))) amp[x] = -amp[x];
    }
}

void apply_hadamard_layer(DjState& state) {
    auto amp = state.amplitudes();
    const uint64_t size = amp.size();
    const double scale = 1.0 / std::numbers::sqrt2;
    for (uint64_t half = 1; half < size; half <<= 1) {
        const uint64_t low_mask = half - 1;
        const int64_t pairs = int64_t(size / 2);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (size >= kParallelCutover)
#endif
        for (int64_t p = 0; p < pairs; ++p) {
            const uint64_t j = ((uint64_t(p) & ~low_mask) << 1) | (uint64_t(p) & low_mask);
            const double lo = amp[j];
            const double hi = amp[j + half];
            amp[j] = (lo + hi) * scale;
            amp[j + half] = (lo - hi) * scale;
        }
    }
}

DjState dj_evolve(const BooleanFunction& f, int cap) {
    check_cap(f, cap);
    DjState state = dj_uniform_state(f.n());
    apply_phase_oracle(state, f);
    apply_hadamard_layer(state);
    return state;
}

std::vector<int64_t> dj_integer_amplitudes(const BooleanFunction& f) {
    const uint64_t size = f.size();
    std::vector<int64_t> a(size);
    for (uint64_t x = 0; x < size; ++x) a[x] = f.bit(x) ? -1 : 1;
    for (uint64_t half = 1; half < size; half <<= 1) {
        for (uint64_t block = 0; block < size; block += 2 * half) {
            for (uint64_t j = block; j < block + half; ++j) {
                const int64_t lo = a[j];
                const int64_t hi = a[j + half];
                a[j] = lo + hi;
                a[j + half] = lo - hi;
            }
        }
    }
    return a;
}

MeasurementDistribution::MeasurementDistribution(int n,
                                                 std::vector<int64_t> scaled_amplitudes)
    : n_(n), w_(std::move(scaled_amplitudes)) {
    if (n < 1 || n > kMaxVars) throw ValueError("register width out of range");
    if (w_.size() != (uint64_t{1} << n)) {
        throw DimensionError("distribution must have 2^n outcomes");
    }
    cum_.resize(w_.size());
    uint64_t acc = 0;
    for (uint64_t z = 0; z < w_.size(); ++z) {
        const uint64_t a = uint64_t(w_[z] < 0 ? -w_[z] : w_[z]);
        acc += a * a;
        cum_[z] = acc;
    }
    if (acc != denominator()) {
        throw InvariantViolation("measurement masses do not sum to 2^(2n)");
    }
}

double MeasurementDistribution::probability(uint64_t z) const {
    return std::ldexp(double(numerator(z)), -2 * n_);
}

std::vector<uint64_t> MeasurementDistribution::support() const {
    std::vector<uint64_t> out;
    for (uint64_t z = 0; z < w_.size(); ++z) {
        if (w_[z] != 0) out.push_back(z);
    }
    return out;
}

uint64_t MeasurementDistribution::sample(SplitMix64& gen) const {
    const uint64_t u = gen.bits(2 * n_);
    // smallest z with cum[z] > u; zero-mass outcomes can never be hit
    uint64_t lo = 0;
    uint64_t hi = cum_.size() - 1;
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo) / 2;
        if (cum_[mid] > u) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

MeasurementDistribution dj_distribution(const BooleanFunction& f, int cap) {
    check_cap(f, cap);
    return MeasurementDistribution(f.n(), dj_integer_amplitudes(f));
}

std::vector<uint64_t> dj_sample(const MeasurementDistribution& d, uint64_t seed,
                                uint64_t count) {
    SplitMix64 gen = derive_stream(seed, 0);
    std::vector<uint64_t> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i) out.push_back(d.sample(gen));
    return out;
}

namespace {

uint64_t one_shot(const BooleanFunction& f, SplitMix64& gen, int cap) {
    const MeasurementDistribution d = dj_distribution(f, cap);
    f.charge_queries(1);  // the circuit run behind this sample
    const uint64_t outcome = d.sample(gen);
    assert(d.scaled_amplitude(outcome) != 0);
    return outcome;
}

}  // namespace

DjVerdict decide_constant_or_balanced(const BooleanFunction& f, SplitMix64& gen,
                                      int cap) {
    return one_shot(f, gen, cap) == 0 ? DjVerdict::Constant : DjVerdict::Balanced;
}

DjVerdict decide_constant_or_balanced(const BooleanFunction& f, uint64_t seed) {
    SplitMix64 gen = derive_stream(seed, 0);
    return decide_constant_or_balanced(f, gen);
}

uint64_t bv_recover_linear(const BooleanFunction& f, SplitMix64& gen, int cap) {
    return one_shot(f, gen, cap);
}

uint64_t bv_recover_linear(const BooleanFunction& f, uint64_t seed) {
    SplitMix64 gen = derive_stream(seed, 0);
    return bv_recover_linear(f, gen);
}

uint64_t solve_nonzero_walsh(const BooleanFunction& f, SplitMix64& gen, int cap) {
    return one_shot(f, gen, cap);
}

uint64_t solve_nonzero_walsh(const BooleanFunction& f, uint64_t seed) {
    SplitMix64 gen = derive_stream(seed, 0);
    return solve_nonzero_walsh(f, gen);
}

}  // namespace walshlab
