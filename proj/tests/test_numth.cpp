#include <doctest.h>

#include <random>

#include "cyclelift/errors.hpp"
#include "cyclelift/numth.hpp"
#include "support/oracles.hpp"

using namespace cyclelift;
using numth::Place;

TEST_CASE("factorize small values") {
    CHECK(numth::factorize(1).empty());
    CHECK(numth::factorize(12) == numth::Factorization{{2, 2}, {3, 1}});
    CHECK(numth::factorize(35) == numth::Factorization{{5, 1}, {7, 1}});
    CHECK_THROWS_AS(numth::factorize(0), HypothesisViolation);
    CHECK_THROWS_AS(numth::factorize(-6), HypothesisViolation);
}

TEST_CASE("factorize reconstructs its input") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(1, std::int64_t{1} << 40);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t n = dist(rng);
        std::int64_t prod = 1;
        std::int64_t last = 1;
        for (const auto& [p, e] : numth::factorize(n)) {
            CHECK(p > last);
            CHECK(numth::is_prime(p));
            last = p;
            for (int k = 0; k < e; ++k) prod *= p;
        }
        CHECK(prod == n);
    }
    // a large semiprime near the 63-bit ceiling
    CHECK(numth::factorize(std::int64_t{2147483647} * 2147483629) ==
          numth::Factorization{{2147483629, 1}, {2147483647, 1}});
}

TEST_CASE("kronecker examples") {
    CHECK(numth::kronecker(-8, 3) == 1);
    CHECK(numth::kronecker(-8, 5) == -1);
    CHECK(numth::kronecker(-8, 2) == 0);
    CHECK(numth::kronecker(5, -1) == 1);
    CHECK(numth::kronecker(-5, -1) == -1);
    CHECK(numth::kronecker(3, 1) == 1);
    CHECK(numth::kronecker(1, 0) == 1);
    CHECK(numth::kronecker(2, 0) == 0);
}

TEST_CASE("kronecker agrees with squares mod p") {
    for (std::int64_t p = 3; p < 500; p += 2) {
        if (!numth::is_prime(p)) continue;
        std::vector<char> sq(static_cast<std::size_t>(p), 0);
        for (std::int64_t s = 1; s < p; ++s) sq[static_cast<std::size_t>(s * s % p)] = 1;
        for (std::int64_t a = -99; a < 100; ++a) {
            if (a % p == 0) continue;
            const int expect = sq[static_cast<std::size_t>(((a % p) + p) % p)] ? 1 : -1;
            CHECK(numth::kronecker(a, p) == expect);
        }
    }
}

TEST_CASE("kronecker is multiplicative in n") {
    for (std::int64_t a = -30; a <= 30; ++a)
        for (std::int64_t m = -20; m <= 40; ++m) {
            if (m == 0) continue;  // (a/0) is not multiplicative
            for (std::int64_t n = 1; n <= 40; ++n)
                CHECK(numth::kronecker(a, m * n) == numth::kronecker(a, m) * numth::kronecker(a, n));
        }
}

TEST_CASE("hilbert symbol examples") {
    CHECK(numth::hilbert_symbol(1, 7, Place::at(7)) == 1);
    CHECK(numth::hilbert_symbol(1, -3, Place::infinity()) == 1);
    CHECK(numth::hilbert_symbol(-1, -1, Place::infinity()) == -1);
    CHECK(numth::hilbert_symbol(-15, -2, Place::at(5)) == -1);
    CHECK(numth::hilbert_symbol(-1, -1, Place::at(2)) == -1);
    CHECK_THROWS_AS(numth::hilbert_symbol(0, 3, Place::at(3)), HypothesisViolation);
}

TEST_CASE("hilbert symbol matches brute-force solvability") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-99, 99), den(1, 99);
    for (int i = 0; i < 300; ++i) {
        const int an = num(rng), bn = num(rng), ad = den(rng), bd = den(rng);
        if (an == 0 || bn == 0) continue;
        const mpq_class a(an, ad), b(bn, bd);
        const std::int64_t sa = oracle::squarefree_class(an, ad);
        const std::int64_t sb = oracle::squarefree_class(bn, bd);
        for (std::int64_t ell : numth::bad_primes(mpq_class(sa), mpq_class(sb))) {
            CAPTURE(an);
            CAPTURE(ad);
            CAPTURE(bn);
            CAPTURE(bd);
            CAPTURE(ell);
            CHECK(numth::hilbert_symbol(a, b, Place::at(ell)) == oracle::hilbert_by_search(sa, sb, ell));
        }
    }
}

TEST_CASE("hilbert symbol is symmetric and satisfies reciprocity") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(-99, 99), den(1, 99);
    for (int i = 0; i < 500; ++i) {
        const int an = num(rng), bn = num(rng);
        if (an == 0 || bn == 0) continue;
        mpq_class a(an, den(rng)), b(bn, den(rng));
        a.canonicalize();
        b.canonicalize();
        int prod = numth::hilbert_symbol(a, b, Place::infinity());
        for (std::int64_t ell : numth::bad_primes(a, b)) {
            CHECK(numth::hilbert_symbol(a, b, Place::at(ell)) == numth::hilbert_symbol(b, a, Place::at(ell)));
            prod *= numth::hilbert_symbol(a, b, Place::at(ell));
        }
        CHECK(prod == 1);
    }
}

TEST_CASE("divisors and squarefree") {
    CHECK(numth::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(numth::is_squarefree(-10));
    CHECK_FALSE(numth::is_squarefree(-12));
    CHECK(numth::valuation(250, 5) == 3);
}
