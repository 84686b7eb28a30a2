#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cyclelift::quadfield {

// Primitive positive definite form a x^2 + b xy + c y^2.
struct BinaryForm {
    std::int64_t a, b, c;
    bool operator==(const BinaryForm&) const = default;
    auto operator<=>(const BinaryForm&) const = default;
};

struct QuadField {
    std::int64_t delta;        // squarefree, even, negative
    std::int64_t disc;         // 4 * delta
    std::int64_t class_number;
    std::int64_t unit_order;   // always 2 under the standing hypotheses
};

QuadField make_field(std::int64_t delta);

// Reduced primitive forms of the given negative discriminant, sorted.
std::vector<BinaryForm> reduced_forms(std::int64_t disc);

// Gauss reduction of a positive definite form.
BinaryForm reduce(BinaryForm f);

int chi_k(const QuadField& field, std::int64_t n);

std::int64_t rho(const QuadField& field, std::int64_t n);
std::int64_t rho_divisor_sum(const QuadField& field, std::int64_t n);

// Throws HypothesisViolation unless D_B is squarefree with an even, positive
// number of prime factors, all of them inert in the field.
void check_db(const QuadField& field, std::int64_t d_b);

std::int64_t optimal_embedding_count(const QuadField& field, std::int64_t d_b);

// Exact value of (i/2pi) L(1, check chi'_k) by the product formula.
mpq_class lvalue_closed_form(const QuadField& field, std::int64_t d_b);

// Smallest prime q whose Hilbert profile of (-pq, delta) is -1 exactly at
// infinity and p, and which splits in the field.
std::int64_t auxiliary_split_prime(const QuadField& field, std::int64_t p,
                                   std::int64_t search_bound = 100000);

}  // namespace cyclelift::quadfield
