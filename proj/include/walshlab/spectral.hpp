#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walshlab/boolfn.hpp"

namespace walshlab {

// Shape of a spectrum's value set.
struct SpectrumClass {
    enum class Kind { Bent, Plateaued, General };

    Kind kind = Kind::General;
    int k = 0;  // amplitude exponent when plateaued: |W| in {0, 2^k}

    std::string to_string() const;

    friend bool operator==(const SpectrumClass&, const SpectrumClass&) = default;
};

// Signed integer Walsh spectrum of an n-variable function: w[omega] counts
// agreements minus disagreements between f and the linear function omega.x.
// Construction verifies Parseval (sum of squares = 2^(2n), exactly) and the
// parity constraint (every entry even for n >= 1); both failing only on a bug.
class WalshSpectrum {
public:
    WalshSpectrum(int n, std::vector<int64_t> w);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }
    int64_t operator[](uint64_t omega) const { return w_[omega]; }
    std::span<const int64_t> values() const { return w_; }

    // Masks with a nonzero coefficient, ascending. Nonempty by Parseval.
    std::vector<uint64_t> support() const;

    int64_t max_abs() const;

    struct Peak {
        uint64_t mask;
        int64_t value;
    };
    // Smallest-index argmax of |w| and its signed value. A positive value
    // means correlation with the linear function mask.x, a negative one with
    // its complement.
    Peak max_correlation() const;

    // 2^(n-1) - max|w|/2: distance to the nearest affine function.
    int64_t nonlinearity() const;

    // Largest m with w = 0 on every mask of weight <= m; nullopt when
    // w[0] != 0 (the function is not even balanced).
    std::optional<int> resiliency_order() const;

    SpectrumClass classify() const;

private:
    int n_;
    std::vector<int64_t> w_;
};

// In-place Walsh-Hadamard butterfly over a length-2^n array: for each stage
// i = 0..n-1 every pair (j, j + 2^i) becomes (a+b, a-b). Exact integer
// arithmetic, no auxiliary storage.
void walsh_transform_serial(std::span<int64_t> a);
// Same arithmetic with each stage's pairs distributed across threads. The
// result is identical to the serial kernel.
void walsh_transform_parallel(std::span<int64_t> a);
// Dispatches to the parallel kernel for large arrays.
void walsh_transform(std::span<int64_t> a);

// Full spectrum of f. Reads the whole table, charging 2^n oracle queries.
WalshSpectrum walsh_spectrum(const BooleanFunction& f);

// Serial transform that reports the working array after every butterfly
// stage (stage index 0..n-1).
WalshSpectrum walsh_spectrum_staged(
    const BooleanFunction& f,
    const std::function<void(int stage, std::span<const int64_t>)>& observer);

// Single coefficient by direct summation over all 2^n inputs (and charged as
// 2^n oracle queries). Independent of the butterfly kernels.
int64_t walsh_point(const BooleanFunction& f, uint64_t omega);

// Walsh sum restricted to a subset of inputs; |result| <= |subset|. Each
// member is a point query.
int64_t restricted_walsh(const BooleanFunction& f, uint64_t omega,
                         std::span<const uint64_t> subset);

}  // namespace walshlab
