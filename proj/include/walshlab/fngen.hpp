#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walshlab/boolfn.hpp"
#include "walshlab/rng.hpp"

namespace walshlab {

using BigInt = boost::multiprecision::cpp_int;

// Truth table of omega.x (the affine variant adds a constant term).
BooleanFunction linear(int n, uint64_t omega);
BooleanFunction affine(int n, uint64_t omega, int constant_term);

// Each table bit i.i.d. uniform; deterministic per seed.
BooleanFunction random_function(int n, uint64_t seed);
BooleanFunction random_function(int n, SplitMix64& gen);

// Fisher-Yates permutation of {0, ..., count-1}.
std::vector<uint32_t> random_permutation(uint32_t count, SplitMix64& gen);

// f(x, y) = x . pi(y) xor g(y) on n = 2m variables, x in the low m bits of
// the index. pi must be a bijection on {0,1}^m and g an m-variable function.
// Every instance is bent: |W| = 2^(n/2) at every mask.
BooleanFunction bent_mm(int n, std::span<const uint32_t> pi, const BooleanFunction& g);

// f = (1 xor x_n) g xor x_n h for bent g, h on the same n-1 variables. The
// spectrum is W_g +/- W_h, so the values land in {0, +-2^((n+1)/2)} with
// support size exactly 2^(n-1).
BooleanFunction plateaued_concat(const BooleanFunction& g, const BooleanFunction& h);

// epsilon implied by the 1.17 budget constant: (3 - 2*sqrt(2) - 0.17) / 4.
inline constexpr double kNoisyLinearEpsilon = 0.0003932188134524242;

// A family of functions within a bounded Hamming distance of a fixed linear
// function.
struct NoisyLinearSpec {
    enum class Variant { Ln, LnEps, Custom };

    int n = 0;
    uint64_t base = 0;        // mask of the underlying linear function
    uint64_t max_errors = 0;  // distance budget
    Variant variant = Variant::Custom;

    // budget 2^(n-3); requires n >= 3
    static NoisyLinearSpec ln(int n, uint64_t base);
    // budget floor(1.17 * 2^(n-3)) = 117 * 2^(n-3) / 100, computed in integers
    static NoisyLinearSpec ln_eps(int n, uint64_t base);
    static NoisyLinearSpec custom(int n, uint64_t base, uint64_t max_errors);
};

struct NoisyLinearDraw {
    BooleanFunction f;
    uint64_t errors;  // number of flipped table positions
};

// Flips e positions of the base linear table, where e is uniform on
// {0, ..., max_errors} unless fixed_errors pins it. The flipped set is a
// uniform random e-subset, so distance(f, base) = e always.
NoisyLinearDraw noisy_linear(const NoisyLinearSpec& spec, SplitMix64& gen,
                             std::optional<uint64_t> fixed_errors = std::nullopt);
NoisyLinearDraw noisy_linear(const NoisyLinearSpec& spec, uint64_t seed,
                             bool force_worst_case = false);

// Exact class size 2^n * sum_{i=0}^{2^(n-3)} C(2^n, i), and the per-center
// ball size sum_{i=0}^{2^(n-3)} C(2^n, i) it is built from.
BigInt class_size_ln(int n);
BigInt ln_ball_size(int n);

double binary_entropy(double lambda);

// log2 of the published bracket around the ball size: lower 2^(n-3) (from
// 2^(2^(n-3)) < ball), upper 2^n * H(1/8).
struct ClassSizeBounds {
    double log2_lower;
    double log2_upper;
};
ClassSizeBounds class_size_log2_bounds(int n);

// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& v);

}  // namespace walshlab
