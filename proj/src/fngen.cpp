#include "walshlab/fngen.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "walshlab/spectral.hpp"

namespace walshlab {

namespace {

void check_mask(int n, uint64_t mask) {
    if (mask >= (uint64_t{1} << n)) {
        throw DimensionError("mask does not fit in " + std::to_string(n) + " bits");
    }
}

void set_bit(std::vector<uint64_t>& words, uint64_t idx) {
    words[idx >> 6] |= uint64_t{1} << (idx & 63);
}

}  // namespace

BooleanFunction linear(int n, uint64_t omega) {
    if (n < 1 || n > kMaxVars) throw ValueError("variable count out of range");
    check_mask(n, omega);
    std::vector<uint64_t> words(table_words(n), 0);
    // seed the first up-to-64 entries, then double: the upper half of the
    // table for variable j is the lower half complemented iff bit j is set
    const int head = n < 6 ? n : 6;
    uint64_t w0 = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << head); ++x) {
        w0 |= uint64_t(parity64(x & omega)) << x;
    }
    words[0] = w0;
    for (int j = 6; j < n; ++j) {
        const uint64_t half = uint64_t{1} << (j - 6);
        const uint64_t flip = (omega >> j) & 1 ? ~uint64_t{0} : 0;
        for (uint64_t k = 0; k < half; ++k) words[half + k] = words[k] ^ flip;
    }
    return BooleanFunction::from_words(n, std::move(words));
}

BooleanFunction affine(int n, uint64_t omega, int constant_term) {
    if (constant_term != 0 && constant_term != 1) {
        throw ValueError("constant term must be 0 or 1");
    }
    BooleanFunction f = linear(n, omega);
    return constant_term ? f.complemented() : f;
}

BooleanFunction random_function(int n, SplitMix64& gen) {
    if (n < 1 || n > kMaxVars) throw ValueError("variable count out of range");
    std::vector<uint64_t> words(table_words(n));
    for (uint64_t& w : words) w = gen.next();
    return BooleanFunction::from_words(n, std::move(words));
}

BooleanFunction random_function(int n, uint64_t seed) {
    SplitMix64 gen = derive_stream(seed, 0);
    return random_function(n, gen);
}

std::vector<uint32_t> random_permutation(uint32_t count, SplitMix64& gen) {
    std::vector<uint32_t> pi(count);
    for (uint32_t i = 0; i < count; ++i) pi[i] = i;
    for (uint32_t i = count; i > 1; --i) {
        const uint64_t j = gen.below(i);
        std::swap(pi[i - 1], pi[j]);
    }
    return pi;
}

BooleanFunction bent_mm(int n, std::span<const uint32_t> pi, const BooleanFunction& g) {
    if (n < 2 || n > kMaxVars || n % 2 != 0) {
        throw ValueError("bent construction needs an even variable count >= 2");
    }
    const int m = n / 2;
    const uint64_t half_size = uint64_t{1} << m;
    if (pi.size() != half_size) {
        throw DimensionError("permutation must have 2^(n/2) entries");
    }
    std::vector<bool> seen(half_size, false);
    for (uint32_t v : pi) {
        if (v >= half_size || seen[v]) {
            throw ValueError("permutation is not a bijection on {0,1}^(n/2)");
        }
        seen[v] = true;
    }
    if (g.n() != m) {
        throw DimensionError("inner function must have n/2 variables");
    }
    std::vector<uint64_t> words(table_words(n), 0);
    for (uint64_t y = 0; y < half_size; ++y) {
        const uint64_t row_mask = pi[y];
        const int gy = g.bit(y) ? 1 : 0;
        for (uint64_t x = 0; x < half_size; ++x) {
            if (parity64(x & row_mask) ^ gy) set_bit(words, (y << m) | x);
        }
    }
    return BooleanFunction::from_words(n, std::move(words));
}

BooleanFunction plateaued_concat(const BooleanFunction& g, const BooleanFunction& h) {
    if (g.n() != h.n()) {
        throw DimensionError("the two halves must have equal variable counts");
    }
    if (g.n() + 1 > kMaxVars) throw ValueError("variable count out of range");
    const auto bent = SpectrumClass{SpectrumClass::Kind::Bent, g.n() / 2};
    if (walsh_spectrum(g).classify() != bent || walsh_spectrum(h).classify() != bent) {
        throw ValueError("both halves must be bent");
    }
    const int n = g.n() + 1;
    const uint64_t half_size = g.size();
    std::vector<uint64_t> words(table_words(n), 0);
    if (half_size >= 64) {
        const uint64_t half_words = table_words(g.n());
        for (uint64_t i = 0; i < half_words; ++i) {
            words[i] = g.words()[i];
            words[half_words + i] = h.words()[i];
        }
    } else {
        words[0] = g.words()[0] | (h.words()[0] << half_size);
    }
    return BooleanFunction::from_words(n, std::move(words));
}

NoisyLinearSpec NoisyLinearSpec::ln(int n, uint64_t base) {
    if (n < 3) throw ValueError("the distance budget 2^(n-3) needs n >= 3");
    if (n > kMaxVars) throw ValueError("variable count out of range");
    check_mask(n, base);
    return NoisyLinearSpec{n, base, uint64_t{1} << (n - 3), Variant::Ln};
}

NoisyLinearSpec NoisyLinearSpec::ln_eps(int n, uint64_t base) {
    if (n < 3) throw ValueError("the distance budget 1.17 * 2^(n-3) needs n >= 3");
    if (n > kMaxVars) throw ValueError("variable count out of range");
    check_mask(n, base);
    return NoisyLinearSpec{n, base, (117 * (uint64_t{1} << (n - 3))) / 100,
                           Variant::LnEps};
}

NoisyLinearSpec NoisyLinearSpec::custom(int n, uint64_t base, uint64_t max_errors) {
    if (n < 1 || n > kMaxVars) throw ValueError("variable count out of range");
    check_mask(n, base);
    if (max_errors > (uint64_t{1} << n)) {
        throw ValueError("distance budget exceeds the table size");
    }
    return NoisyLinearSpec{n, base, max_errors, Variant::Custom};
}

NoisyLinearDraw noisy_linear(const NoisyLinearSpec& spec, SplitMix64& gen,
                             std::optional<uint64_t> fixed_errors) {
    uint64_t e;
    if (fixed_errors) {
        if (*fixed_errors > spec.max_errors) {
            throw ValueError("requested error count exceeds the budget");
        }
        e = *fixed_errors;
    } else {
        e = gen.below(spec.max_errors + 1);
    }
    BooleanFunction f = linear(spec.n, spec.base);
    if (e == 0) return NoisyLinearDraw{std::move(f), 0};

    // Floyd's algorithm: a uniform e-subset of the 2^n table positions.
    const uint64_t size = uint64_t{1} << spec.n;
    std::unordered_set<uint64_t> flips;
    flips.reserve(e * 2);
    for (uint64_t j = size - e; j < size; ++j) {
        const uint64_t t = gen.below(j + 1);
        if (!flips.insert(t).second) flips.insert(j);
    }
    std::vector<uint64_t> words(f.words().begin(), f.words().end());
    for (uint64_t idx : flips) words[idx >> 6] ^= uint64_t{1} << (idx & 63);
    return NoisyLinearDraw{BooleanFunction::from_words(spec.n, std::move(words)), e};
}

NoisyLinearDraw noisy_linear(const NoisyLinearSpec& spec, uint64_t seed,
                             bool force_worst_case) {
    SplitMix64 gen = derive_stream(seed, 0);
    return noisy_linear(spec, gen,
                        force_worst_case ? std::optional<uint64_t>(spec.max_errors)
                                         : std::nullopt);
}

BigInt ln_ball_size(int n) {
    if (n < 3) throw ValueError("the distance budget 2^(n-3) needs n >= 3");
    const uint64_t table = uint64_t{1} << n;
    const uint64_t budget = uint64_t{1} << (n - 3);
    BigInt sum = 1;   // C(2^n, 0)
    BigInt term = 1;
    for (uint64_t i = 0; i < budget; ++i) {
        term *= table - i;
        term /= i + 1;  // exact: term stays C(2^n, i+1)
        sum += term;
    }
    return sum;
}

BigInt class_size_ln(int n) {
    return BigInt(uint64_t{1} << n) * ln_ball_size(n);
}

double binary_entropy(double lambda) {
    return -lambda * std::log2(lambda) - (1.0 - lambda) * std::log2(1.0 - lambda);
}

ClassSizeBounds class_size_log2_bounds(int n) {
    if (n < 3) throw ValueError("the distance budget 2^(n-3) needs n >= 3");
    return ClassSizeBounds{
        double(uint64_t{1} << (n - 3)),
        double(uint64_t{1} << n) * binary_entropy(0.125),
    };
}

double log2_big(const BigInt& v) {
    if (v <= 0) throw ValueError("log2 of a non-positive value");
    const size_t bits = boost::multiprecision::msb(v);
    if (bits <= 52) return std::log2(v.convert_to<double>());
    // top 64 bits carry all the precision a double can hold
    const BigInt top = v >> (bits - 63);
    return double(bits - 63) + std::log2(top.convert_to<double>());
}

}  // namespace walshlab
