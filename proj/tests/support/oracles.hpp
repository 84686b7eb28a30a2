#pragma once

// Brute-force references used by the tests and the acceptance runner. They
// share no code with the library beyond plain integer types.

#include <cstdint>
#include <vector>

namespace oracle {

// Square-free integer in the square class of num/den.
std::int64_t squarefree_class(std::int64_t num, std::int64_t den);

// (a, b)_ell for squarefree a, b by searching for a primitive solution of
// a x^2 + b y^2 = z^2 modulo ell^3 (odd ell) or 2^6.
int hilbert_by_search(std::int64_t a, std::int64_t b, std::int64_t ell);

// Quadratic character of Q(sqrt(delta)) from squares mod p.
int chi_by_squares(std::int64_t delta, std::int64_t n);

// Number of ideal classes of Z[sqrt(delta)], by enumerating the ideals
// Z a + Z (b + sqrt(delta)) and reducing their norm forms.
std::int64_t class_number_by_ideals(std::int64_t delta);

std::int64_t rho_by_divisors(std::int64_t delta, std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

}  // namespace oracle
