#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace cyclelift::numth {

struct PrimePower {
    std::int64_t prime;
    int multiplicity;
    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

// Trial division. Throws HypothesisViolation for n <= 0.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);  // sorted ascending
int valuation(std::int64_t n, std::int64_t p);       // n != 0
std::int64_t ipow(std::int64_t base, int exp);

// Standard Kronecker symbol (a/n), total on Z x Z.
int kronecker(std::int64_t a, std::int64_t n);

// A place of Q: a prime, or the real place when prime == 0.
struct Place {
    std::int64_t prime = 0;
    static Place infinity() { return Place{0}; }
    static Place at(std::int64_t p) { return Place{p}; }
    bool is_infinite() const { return prime == 0; }
};

// (a, b)_place for nonzero rationals.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, Place place);

// Primes dividing numerators and denominators of a and b, plus 2.
std::vector<std::int64_t> bad_primes(const mpq_class& a, const mpq_class& b);

}  // namespace cyclelift::numth
