#include "walshlab/boolfn.hpp"

#include <string>

namespace walshlab {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxVars) {
        throw ValueError("variable count must be in [1, " +
                         std::to_string(kMaxVars) + "], got " + std::to_string(n));
    }
}

// Clears the bits above 2^n in the last word.
void mask_tail(std::vector<uint64_t>& words, int n) {
    if (n < 6) words.back() &= (uint64_t{1} << (uint64_t{1} << n)) - 1;
}

}  // namespace

BooleanFunction BooleanFunction::from_bits(int n, std::span<const uint8_t> bits) {
    check_n(n);
    const uint64_t size = uint64_t{1} << n;
    if (bits.size() != size) {
        throw DimensionError("table must have exactly 2^n = " + std::to_string(size) +
                             " entries, got " + std::to_string(bits.size()));
    }
    std::vector<uint64_t> words(table_words(n), 0);
    for (uint64_t i = 0; i < size; ++i) {
        if (bits[i] > 1) {
            throw ValueError("table entry at index " + std::to_string(i) +
                             " is not binary");
        }
        words[i >> 6] |= uint64_t{bits[i]} << (i & 63);
    }
    return BooleanFunction(n, std::move(words));
}

BooleanFunction BooleanFunction::from_bits(int n, std::initializer_list<int> bits) {
    std::vector<uint8_t> buf;
    buf.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw ValueError("table entry is not binary");
        buf.push_back(static_cast<uint8_t>(b));
    }
    return from_bits(n, buf);
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<uint64_t> words) {
    check_n(n);
    if (words.size() != table_words(n)) {
        throw DimensionError("expected " + std::to_string(table_words(n)) +
                             " table words, got " + std::to_string(words.size()));
    }
    mask_tail(words, n);
    return BooleanFunction(n, std::move(words));
}

BooleanFunction BooleanFunction::zeros(int n) {
    check_n(n);
    return BooleanFunction(n, std::vector<uint64_t>(table_words(n), 0));
}

int BooleanFunction::evaluate(uint64_t x) const {
    if (x >= size()) {
        throw DimensionError("input " + std::to_string(x) + " does not fit in " +
                             std::to_string(n_) + " bits");
    }
    queries_.fetch_add(1, std::memory_order_relaxed);
    return bit(x) ? 1 : 0;
}

uint64_t BooleanFunction::weight() const {
    uint64_t count = 0;
    for (uint64_t w : words_) count += std::popcount(w);
    return count;
}

BooleanFunction BooleanFunction::complemented() const {
    std::vector<uint64_t> words(words_.size());
    for (size_t i = 0; i < words_.size(); ++i) words[i] = ~words_[i];
    mask_tail(words, n_);
    return BooleanFunction(n_, std::move(words));
}

BooleanFunction& BooleanFunction::operator=(const BooleanFunction& other) {
    n_ = other.n_;
    words_ = other.words_;
    queries_.store(other.queries(), std::memory_order_relaxed);
    return *this;
}

BooleanFunction& BooleanFunction::operator=(BooleanFunction&& other) noexcept {
    n_ = other.n_;
    words_ = std::move(other.words_);
    queries_.store(other.queries(), std::memory_order_relaxed);
    return *this;
}

uint64_t distance(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.n() != g.n()) {
        throw DimensionError("distance requires equal variable counts, got " +
                             std::to_string(f.n()) + " and " + std::to_string(g.n()));
    }
    uint64_t count = 0;
    const auto fw = f.words();
    const auto gw = g.words();
    for (size_t i = 0; i < fw.size(); ++i) count += std::popcount(fw[i] ^ gw[i]);
    return count;
}

BooleanFunction xor_linear(const BooleanFunction& f, uint64_t omega) {
    if (omega >= f.size()) {
        throw DimensionError("mask does not fit in " + std::to_string(f.n()) + " bits");
    }
    std::vector<uint64_t> words(f.words().begin(), f.words().end());
    // XOR in the truth table of omega.x, built 64 entries at a time.
    const uint64_t size = f.size();
    for (uint64_t base = 0; base < size; base += 64) {
        uint64_t chunk = 0;
        const uint64_t limit = size - base < 64 ? size - base : 64;
        for (uint64_t j = 0; j < limit; ++j) {
            chunk |= uint64_t(parity64((base + j) & omega)) << j;
        }
        words[base >> 6] ^= chunk;
    }
    return BooleanFunction::from_words(f.n(), std::move(words));
}

void mobius_transform(std::span<uint64_t> words, int n) {
    static constexpr uint64_t kLowHalf[6] = {
        0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
        0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
    };
    const int in_word = n < 6 ? n : 6;
    for (uint64_t& w : words) {
        uint64_t v = w;
        for (int i = 0; i < in_word; ++i) v ^= (v & kLowHalf[i]) << (uint64_t{1} << i);
        w = v;
    }
    for (int i = 6; i < n; ++i) {
        const uint64_t half = uint64_t{1} << (i - 6);
        for (uint64_t base = 0; base < words.size(); base += 2 * half) {
            for (uint64_t j = 0; j < half; ++j) {
                words[base + half + j] ^= words[base + j];
            }
        }
    }
}

AnfPolynomial AnfPolynomial::from_words(int n, std::vector<uint64_t> words) {
    check_n(n);
    if (words.size() != table_words(n)) {
        throw DimensionError("expected " + std::to_string(table_words(n)) +
                             " coefficient words, got " + std::to_string(words.size()));
    }
    mask_tail(words, n);
    return AnfPolynomial(n, std::move(words));
}

int AnfPolynomial::degree() const {
    int best = 0;
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t v = words_[w];
        while (v) {
            const uint64_t mask = (uint64_t{w} << 6) | uint64_t(std::countr_zero(v));
            const int deg = std::popcount(mask);
            if (deg > best) best = deg;
            v &= v - 1;
        }
    }
    return best;
}

std::vector<uint64_t> AnfPolynomial::monomials() const {
    std::vector<uint64_t> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t v = words_[w];
        while (v) {
            out.push_back((uint64_t{w} << 6) | uint64_t(std::countr_zero(v)));
            v &= v - 1;
        }
    }
    return out;
}

BooleanFunction AnfPolynomial::to_truth_table() const {
    std::vector<uint64_t> words(words_.begin(), words_.end());
    mobius_transform(words, n_);
    return BooleanFunction::from_words(n_, std::move(words));
}

AnfPolynomial to_anf(const BooleanFunction& f) {
    f.charge_queries(f.size());
    std::vector<uint64_t> words(f.words().begin(), f.words().end());
    mobius_transform(words, f.n());
    return AnfPolynomial::from_words(f.n(), std::move(words));
}

int degree(const BooleanFunction& f) { return to_anf(f).degree(); }

}  // namespace walshlab
