#include "walshlab/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walshlab {

namespace {

// Arrays at least this large go through the threaded kernel.
constexpr uint64_t kParallelCutover = uint64_t{1} << 16;

void check_parseval(int n, std::span<const int64_t> w) {
    unsigned __int128 sum = 0;
    uint64_t parity_or = 0;
    for (int64_t v : w) {
        sum += (unsigned __int128)((__int128)v * v);
        parity_or |= uint64_t(v);
    }
    if (sum != (unsigned __int128)1 << (2 * n)) {
        throw InvariantViolation("spectrum violates sum W^2 = 2^(2n) at n = " +
                                 std::to_string(n));
    }
    if (n >= 1 && (parity_or & 1)) {
        throw InvariantViolation("spectrum entry with odd parity at n = " +
                                 std::to_string(n));
    }
}

std::vector<int64_t> signs_of(const BooleanFunction& f) {
    const uint64_t size = f.size();
    std::vector<int64_t> a(size);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (size >= kParallelCutover)
#endif
    for (int64_t i = 0; i < int64_t(size); ++i) {
        a[i] = f.bit(uint64_t(i)) ? -1 : 1;
    }
    return a;
}

}  // namespace

std::string SpectrumClass::to_string() const {
    switch (kind) {
        case Kind::Bent:
            return "Bent";
        case Kind::Plateaued:
            return "Plateaued(" + std::to_string(k) + ")";
        case Kind::General:
            return "General";
    }
    return "General";
}

WalshSpectrum::WalshSpectrum(int n, std::vector<int64_t> w)
    : n_(n), w_(std::move(w)) {
    if (n < 1 || n > kMaxVars) throw ValueError("spectrum variable count out of range");
    if (w_.size() != (uint64_t{1} << n)) {
        throw DimensionError("spectrum must have 2^n entries");
    }
    check_parseval(n_, w_);
}

std::vector<uint64_t> WalshSpectrum::support() const {
    std::vector<uint64_t> out;
    for (uint64_t i = 0; i < w_.size(); ++i) {
        if (w_[i] != 0) out.push_back(i);
    }
    return out;
}

int64_t WalshSpectrum::max_abs() const {
    int64_t best = 0;
    for (int64_t v : w_) {
        const int64_t a = v < 0 ? -v : v;
        if (a > best) best = a;
    }
    return best;
}

WalshSpectrum::Peak WalshSpectrum::max_correlation() const {
    uint64_t best_mask = 0;
    int64_t best_abs = -1;
    for (uint64_t i = 0; i < w_.size(); ++i) {
        const int64_t a = w_[i] < 0 ? -w_[i] : w_[i];
        if (a > best_abs) {
            best_abs = a;
            best_mask = i;
        }
    }
    return Peak{best_mask, w_[best_mask]};
}

int64_t WalshSpectrum::nonlinearity() const {
    return (int64_t{1} << (n_ - 1)) - max_abs() / 2;
}

std::optional<int> WalshSpectrum::resiliency_order() const {
    if (w_[0] != 0) return std::nullopt;
    int min_weight = n_ + 1;
    for (uint64_t i = 1; i < w_.size(); ++i) {
        if (w_[i] == 0) continue;
        const int wt = std::popcount(i);
        if (wt < min_weight) min_weight = wt;
    }
    // Parseval guarantees a nonzero entry somewhere past the origin.
    return min_weight - 1;
}

SpectrumClass WalshSpectrum::classify() const {
    int64_t magnitude = 0;
    bool has_zero = false;
    for (int64_t v : w_) {
        const int64_t a = v < 0 ? -v : v;
        if (a == 0) {
            has_zero = true;
        } else if (magnitude == 0) {
            magnitude = a;
        } else if (a != magnitude) {
            return SpectrumClass{SpectrumClass::Kind::General, 0};
        }
    }
    if (!has_zero && n_ % 2 == 0 && magnitude == int64_t{1} << (n_ / 2)) {
        return SpectrumClass{SpectrumClass::Kind::Bent, n_ / 2};
    }
    if (magnitude > 0 && (magnitude & (magnitude - 1)) == 0) {
        return SpectrumClass{SpectrumClass::Kind::Plateaued,
                             std::countr_zero(uint64_t(magnitude))};
    }
    return SpectrumClass{SpectrumClass::Kind::General, 0};
}

void walsh_transform_serial(std::span<int64_t> a) {
    const uint64_t size = a.size();
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
}

void walsh_transform_parallel(std::span<int64_t> a) {
    const uint64_t size = a.size();
    const int64_t pairs = int64_t(size / 2);
    for (uint64_t half = 1; half < size; half <<= 1) {
        const uint64_t low_mask = half - 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int64_t p = 0; p < pairs; ++p) {
            // pair p maps to index j by inserting a 0 at the stage bit
            const uint64_t j = ((uint64_t(p) & ~low_mask) << 1) | (uint64_t(p) & low_mask);
            const int64_t lo = a[j];
            const int64_t hi = a[j + half];
            a[j] = lo + hi;
            a[j + half] = lo - hi;
        }
    }
}

void walsh_transform(std::span<int64_t> a) {
#ifdef _OPENMP
    if (a.size() >= kParallelCutover && omp_get_max_threads() > 1) {
        walsh_transform_parallel(a);
        return;
    }
#endif
    walsh_transform_serial(a);
}

WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
    f.charge_queries(f.size());
    std::vector<int64_t> a = signs_of(f);
    walsh_transform(a);
    return WalshSpectrum(f.n(), std::move(a));
}

WalshSpectrum walsh_spectrum_staged(
    const BooleanFunction& f,
    const std::function<void(int stage, std::span<const int64_t>)>& observer) {
    f.charge_queries(f.size());
    std::vector<int64_t> a = signs_of(f);
    const uint64_t size = a.size();
    int stage = 0;
    for (uint64_t half = 1; half < size; half <<= 1, ++stage) {
        for (uint64_t block = 0; block < size; block += 2 * half) {
            for (uint64_t j = block; j < block + half; ++j) {
                const int64_t lo = a[j];
                const int64_t hi = a[j + half];
                a[j] = lo + hi;
                a[j + half] = lo - hi;
            }
        }
        if (observer) observer(stage, a);
    }
    return WalshSpectrum(f.n(), std::move(a));
}

int64_t walsh_point(const BooleanFunction& f, uint64_t omega) {
    if (omega >= f.size()) {
        throw DimensionError("mask does not fit in " + std::to_string(f.n()) + " bits");
    }
    f.charge_queries(f.size());
    int64_t acc = 0;
    for (uint64_t x = 0; x < f.size(); ++x) {
        acc += (int(f.bit(x)) ^ parity64(x & omega)) ? -1 : 1;
    }
    return acc;
}

int64_t restricted_walsh(const BooleanFunction& f, uint64_t omega,
                         std::span<const uint64_t> subset) {
    if (omega >= f.size()) {
        throw DimensionError("mask does not fit in " + std::to_string(f.n()) + " bits");
    }
    int64_t acc = 0;
    for (uint64_t x : subset) {
        if (x >= f.size()) {
            throw DimensionError("subset member " + std::to_string(x) +
                                 " does not fit in " + std::to_string(f.n()) + " bits");
        }
        acc += (f.evaluate(x) ^ parity64(x & omega)) ? -1 : 1;
    }
    return acc;
}

}  // namespace walshlab
