#include "cyclelift/numth.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "cyclelift/errors.hpp"

namespace cyclelift::numth {

Factorization factorize(std::int64_t n) {
    if (n <= 0) throw HypothesisViolation("factorize: n must be positive, got " + std::to_string(n));
    Factorization out;
    auto strip = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (std::int64_t p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].multiplicity == 1;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    for (const auto& pp : factorize(std::llabs(n)))
        if (pp.multiplicity > 1) return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n == 0) throw HypothesisViolation("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

namespace {

// Jacobi symbol for odd positive n.
int jacobi(std::int64_t a, std::int64_t n) {
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker_two(std::int64_t a) {
    if (a % 2 == 0) return 0;
    const std::int64_t r = ((a % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        const int k = kronecker_two(a);
        if (k == 0) return 0;
        result *= k;
    }
    if (n == 1) return result;
    return result * jacobi(a, n);
}

namespace {

// a = num/den has the same square class as num*den.
mpz_class square_class_rep(const mpq_class& a) {
    return mpz_class(a.get_num() * a.get_den());
}

int mpz_val(mpz_class& u, unsigned long p) {
    int v = 0;
    while (mpz_divisible_ui_p(u.get_mpz_t(), p)) {
        mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), p);
        ++v;
    }
    return v;
}

}  // namespace

int hilbert_symbol(const mpq_class& a, const mpq_class& b, Place place) {
    if (sgn(a) == 0 || sgn(b) == 0) throw HypothesisViolation("hilbert_symbol: arguments must be nonzero");
    if (place.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    const std::int64_t ell = place.prime;
    if (ell < 2) throw HypothesisViolation("hilbert_symbol: invalid place");
    mpz_class u = square_class_rep(a);
    mpz_class v = square_class_rep(b);
    const auto p = static_cast<unsigned long>(ell);
    const int alpha = mpz_val(u, p);
    const int beta = mpz_val(v, p);
    if (ell == 2) {
        const unsigned long u8 = mpz_fdiv_ui(u.get_mpz_t(), 8);
        const unsigned long v8 = mpz_fdiv_ui(v.get_mpz_t(), 8);
        auto eps = [](unsigned long r) { return static_cast<int>(((r - 1) / 2) % 2); };
        auto omega = [](unsigned long r) { return static_cast<int>(((r * r - 1) / 8) % 2); };
        const int e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
        return (e % 2 == 0) ? 1 : -1;
    }
    int result = 1;
    if ((alpha % 2 == 1) && (beta % 2 == 1) && (ell % 4 == 3)) result = -result;
    const long ls = static_cast<long>(ell);
    if (beta % 2 == 1) result *= mpz_kronecker_si(u.get_mpz_t(), ls);
    if (alpha % 2 == 1) result *= mpz_kronecker_si(v.get_mpz_t(), ls);
    return result;
}

std::vector<std::int64_t> bad_primes(const mpq_class& a, const mpq_class& b) {
    std::set<std::int64_t> primes{2};
    for (const mpz_class& z : {a.get_num(), a.get_den(), b.get_num(), b.get_den()}) {
        mpz_class m = abs(z);
        if (m == 0) continue;
        if (!m.fits_slong_p()) throw HypothesisViolation("bad_primes: component exceeds 63 bits");
        for (const auto& pp : factorize(m.get_si())) primes.insert(pp.prime);
    }
    return {primes.begin(), primes.end()};
}

}  // namespace cyclelift::numth
