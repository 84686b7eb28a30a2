#include "cyclelift/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cyclelift/errors.hpp"
#include "cyclelift/numth.hpp"

namespace cyclelift::quadfield {

std::vector<BinaryForm> reduced_forms(std::int64_t disc) {
    if (disc >= 0 || ((disc % 4) + 4) % 4 > 1)
        throw HypothesisViolation("reduced_forms: need a negative discriminant = 0,1 mod 4");
    std::vector<BinaryForm> out;
    const std::int64_t abs_d = -disc;
    for (std::int64_t a = 1; 3 * a * a <= abs_d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BinaryForm reduce(BinaryForm f) {
    if (f.a <= 0 || f.c <= 0) throw HypothesisViolation("reduce: form must be positive definite");
    for (;;) {
        // normalize b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            const std::int64_t two_a = 2 * f.a;
            std::int64_t k = (f.a - f.b) / two_a;
            if (f.a - f.b < 0 && (f.a - f.b) % two_a != 0) --k;
            // b' = b + 2ak lands in (-a, a]
            const std::int64_t nb = f.b + two_a * k;
            f.c = f.a * k * k + f.b * k + f.c;
            f.b = nb;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

QuadField make_field(std::int64_t delta) {
    if (delta >= 0) throw HypothesisViolation("make_field: delta must be negative");
    if (delta % 2 != 0) throw HypothesisViolation("make_field: delta must be even");
    if (!numth::is_squarefree(delta)) throw HypothesisViolation("make_field: delta must be squarefree");
    QuadField f{delta, 4 * delta, 0, 2};
    f.class_number = static_cast<std::int64_t>(reduced_forms(f.disc).size());
    return f;
}

int chi_k(const QuadField& field, std::int64_t n) {
    if (n <= 0) throw HypothesisViolation("chi_k: n must be positive");
    return numth::kronecker(field.disc, n);
}

std::int64_t rho(const QuadField& field, std::int64_t n) {
    if (n <= 0) throw HypothesisViolation("rho: N must be positive");
    std::int64_t out = 1;
    for (const auto& [p, e] : numth::factorize(n)) {
        switch (chi_k(field, p)) {
            case 1: out *= e + 1; break;
            case -1:
                if (e % 2 == 1) return 0;
                break;
            default: break;
        }
    }
    return out;
}

std::int64_t rho_divisor_sum(const QuadField& field, std::int64_t n) {
    if (n <= 0) throw HypothesisViolation("rho_divisor_sum: N must be positive");
    std::int64_t s = 0;
    for (std::int64_t d : numth::divisors(n)) s += chi_k(field, d);
    return s;
}

void check_db(const QuadField& field, std::int64_t d_b) {
    if (d_b <= 1) throw HypothesisViolation("D_B must have at least two prime factors");
    const auto fac = numth::factorize(d_b);
    for (const auto& [p, e] : fac) {
        if (e > 1) throw HypothesisViolation("D_B must be squarefree");
        if (chi_k(field, p) != -1)
            throw HypothesisViolation("prime " + std::to_string(p) + " of D_B is not inert in Q(sqrt(" +
                                      std::to_string(field.delta) + "))");
    }
    if (fac.size() % 2 != 0) throw HypothesisViolation("D_B must have an even number of prime factors");
}

std::int64_t optimal_embedding_count(const QuadField& field, std::int64_t d_b) {
    check_db(field, d_b);
    return field.class_number << numth::factorize(d_b).size();
}

mpq_class lvalue_closed_form(const QuadField& field, std::int64_t d_b) {
    check_db(field, d_b);
    mpq_class v(-field.class_number, field.unit_order);
    for (const auto& pp : numth::factorize(d_b)) {
        const mpz_class l = pp.prime;
        v *= mpq_class(2 * l * l + l - 1, l * l);
    }
    v.canonicalize();
    return v;
}

std::int64_t auxiliary_split_prime(const QuadField& field, std::int64_t p, std::int64_t search_bound) {
    if (p <= 2 || !numth::is_prime(p)) throw HypothesisViolation("auxiliary_split_prime: p must be an odd prime");
    if (chi_k(field, p) != -1) throw HypothesisViolation("auxiliary_split_prime: p is not inert");
    const mpq_class d(field.delta);
    for (std::int64_t q = 3; q <= search_bound; q += 2) {
        if (!numth::is_prime(q) || chi_k(field, q) != 1) continue;
        const mpq_class a(-p * q);
        bool ok = numth::hilbert_symbol(a, d, numth::Place::infinity()) == -1;
        for (std::int64_t ell : numth::bad_primes(a, d)) {
            if (!ok) break;
            const int want = (ell == p) ? -1 : 1;
            ok = numth::hilbert_symbol(a, d, numth::Place::at(ell)) == want;
        }
        if (ok) return q;
    }
    throw SearchBoundExhausted("auxiliary_split_prime: no prime below " + std::to_string(search_bound));
}

}  // namespace cyclelift::quadfield
