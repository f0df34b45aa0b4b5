#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "walshlab/errors.hpp"

namespace walshlab {

// Hard ceiling on the variable count. A full spectrum of 2^26 64-bit values
// is 0.5 GiB, the intended desk-scale limit.
inline constexpr int kMaxVars = 26;

inline uint64_t table_words(int n) {
    return n >= 6 ? (uint64_t{1} << (n - 6)) : 1;
}

inline int parity64(uint64_t v) { return std::popcount(v) & 1; }

// An n-variable Boolean function stored as a bit-packed truth table.
//
// Index convention: f(x1,...,xn) lives at index sum_j x_j * 2^(j-1), i.e. x1
// is the least significant bit of the table index. The table is immutable
// after construction. The oracle-query counter is the only mutable state; it
// never decreases and may be bumped concurrently from shared const readers.
class BooleanFunction {
public:
    // bits[i] = f at index i; each entry must be 0 or 1.
    static BooleanFunction from_bits(int n, std::span<const uint8_t> bits);
    static BooleanFunction from_bits(int n, std::initializer_list<int> bits);
    // words: little-endian bit packing, 2^n bits; unused high bits are cleared.
    static BooleanFunction from_words(int n, std::vector<uint64_t> words);
    static BooleanFunction zeros(int n);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }

    // Raw table read. Representation access, not an oracle query.
    bool bit(uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }

    // Single-point oracle query: returns f(x) and charges one query.
    // x must fit in n bits.
    int evaluate(uint64_t x) const;

    uint64_t weight() const;
    bool is_balanced() const { return weight() == size() / 2; }
    BooleanFunction complemented() const;

    std::span<const uint64_t> words() const { return words_; }

    uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }

    // Whole-table transforms charge their oracle cost here (2^n for a full
    // classical read, 1 per quantum circuit run).
    void charge_queries(uint64_t count) const {
        queries_.fetch_add(count, std::memory_order_relaxed);
    }

    BooleanFunction(const BooleanFunction& other)
        : n_(other.n_), words_(other.words_), queries_(other.queries()) {}
    BooleanFunction(BooleanFunction&& other) noexcept
        : n_(other.n_), words_(std::move(other.words_)), queries_(other.queries()) {}
    BooleanFunction& operator=(const BooleanFunction& other);
    BooleanFunction& operator=(BooleanFunction&& other) noexcept;

    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    BooleanFunction(int n, std::vector<uint64_t> words)
        : n_(n), words_(std::move(words)) {}

    int n_;
    std::vector<uint64_t> words_;
    mutable std::atomic<uint64_t> queries_{0};
};

// Hamming distance between two truth tables of equal n.
uint64_t distance(const BooleanFunction& f, const BooleanFunction& g);

// g(x) = f(x) xor (x . omega mod 2).
BooleanFunction xor_linear(const BooleanFunction& f, uint64_t omega);

// Coefficients of the algebraic normal form, bit-packed: the bit at mask m is
// the coefficient of the monomial prod_{j: bit j of m} x_j (mask 0 is the
// constant term).
class AnfPolynomial {
public:
    static AnfPolynomial from_words(int n, std::vector<uint64_t> words);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }
    bool coefficient(uint64_t mask) const {
        return (words_[mask >> 6] >> (mask & 63)) & 1;
    }

    // Largest monomial order with a set coefficient; 0 for constants.
    int degree() const;

    // Set coefficient masks in ascending order.
    std::vector<uint64_t> monomials() const;

    // Inverse transform back to the truth table.
    BooleanFunction to_truth_table() const;

    std::span<const uint64_t> words() const { return words_; }

    friend bool operator==(const AnfPolynomial& a, const AnfPolynomial& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    AnfPolynomial(int n, std::vector<uint64_t> words)
        : n_(n), words_(std::move(words)) {}

    int n_;
    std::vector<uint64_t> words_;
};

// In-place binary Moebius transform over a packed table of 2^n bits. An
// involution: applying it twice restores the input.
void mobius_transform(std::span<uint64_t> words, int n);

// ANF of f via the Moebius transform. Consumes the whole table, so it charges
// 2^n oracle queries.
AnfPolynomial to_anf(const BooleanFunction& f);

int degree(const BooleanFunction& f);

}  // namespace walshlab
