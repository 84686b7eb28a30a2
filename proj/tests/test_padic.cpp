#include <doctest.h>

#include <cstdlib>
#include <random>

#include <gmpxx.h>

#include "cyclelift/errors.hpp"
#include "cyclelift/padic.hpp"

using namespace cyclelift;
using namespace cyclelift::padic;

namespace {

LocalContext ctx5() { return LocalContext::make(5, -2, 20); }

// Exact product of x0+y0 d and x1+y1 d over Z, then reduced mod p^N.
std::pair<mpz_class, mpz_class> exact_mul(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1,
                                          std::int64_t delta) {
    mpz_class a(static_cast<long>(x0)), b(static_cast<long>(y0)), c(static_cast<long>(x1)),
        d(static_cast<long>(y1));
    return {a * c + b * d * static_cast<long>(delta), a * d + b * c};
}

std::int64_t mod_of(const mpz_class& v, std::int64_t m) {
    mpz_class r = v % mpz_class(static_cast<long>(m));
    if (r < 0) r += static_cast<long>(m);
    return r.get_si();
}

}  // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(LocalContext::make(3, -2, 10), HypothesisViolation);  // -2 is a square mod 3
    CHECK_THROWS_AS(LocalContext::make(2, -2, 10), HypothesisViolation);
    CHECK_THROWS_AS(LocalContext::make(5, -2, 4), HypothesisViolation);
    CHECK_THROWS_AS(LocalContext::make(5, -2, 40), PrecisionExhausted);
    CHECK(LocalContext::max_precision(5) == 26);
    CHECK(LocalContext::make(5, -2, 26).modulus == 1490116119384765625LL);
}

TEST_CASE("default precision policy") {
    unsetenv("CYCLELIFT_PRECISION");
    CHECK(LocalContext::default_precision(5, 2, 3) == 18);
    CHECK(LocalContext::default_precision(5, 20, 20) == 26);
    setenv("CYCLELIFT_PRECISION", "12", 1);
    CHECK(LocalContext::default_precision(5, 2, 3) == 12);
    unsetenv("CYCLELIFT_PRECISION");
}

TEST_CASE("element arithmetic matches exact integer arithmetic") {
    const auto ctx = ctx5();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const auto x0 = dist(rng), y0 = dist(rng), x1 = dist(rng), y1 = dist(rng);
        const auto a = QuadLocalElem::from_ints(ctx, x0, y0);
        const auto b = QuadLocalElem::from_ints(ctx, x1, y1);
        const auto [px, py] = exact_mul(x0, y0, x1, y1, -2);
        const auto prod = a * b;
        CHECK(prod.x() == mod_of(px, ctx.modulus));
        CHECK(prod.y() == mod_of(py, ctx.modulus));
        const auto sum = a + b;
        CHECK(sum.x() == mod_of(mpz_class(static_cast<long>(x0 + x1)), ctx.modulus));
        const auto n = a.norm();
        CHECK(n.y() == 0);
        CHECK(n.agrees_with(a * a.conj()));
        if (a.val_bound().exact && a.valuation() == 0) CHECK((a * a.unit_inverse()).agrees_with(QuadLocalElem::one(ctx)));
    }
}

TEST_CASE("valuations and precision tracking") {
    const auto ctx = ctx5();
    const auto e = QuadLocalElem::from_ints(ctx, 25, 50);
    CHECK(e.valuation() == 2);
    CHECK(e.unit_part().agrees_with(QuadLocalElem::from_ints(ctx, 1, 2)));
    CHECK(e.div_p_pow(2).prec() == ctx.precision - 2);
    const auto z = QuadLocalElem::zero(ctx);
    CHECK_FALSE(z.val_bound().exact);
    CHECK_THROWS_AS(z.valuation(), PrecisionExhausted);
    // product precision: p^2 * (known to 18) is known to 20
    const auto low = QuadLocalElem::from_residues(ctx, 7, 1, 18);
    CHECK((low * e).prec() == 20);
    CHECK((low * QuadLocalElem::one(ctx)).prec() == 18);
}

TEST_CASE("hermitian form on the basis") {
    const auto ctx = ctx5();
    const auto v0 = VectorC::from_ints(ctx, 1, 0, 0, 0);
    const auto v1 = VectorC::from_ints(ctx, 0, 0, 1, 0);
    const auto h01 = herm(v0, v1);
    CHECK(h01.exp == 0);
    CHECK(h01.value.agrees_with(QuadLocalElem::delta(ctx)));
    CHECK(herm(v0, v0).value.is_zero());
    CHECK(herm(v1, v1).value.is_zero());
}

TEST_CASE("qform examples") {
    const auto ctx = ctx5();
    const auto b = VectorC::from_ints(ctx, 0, 1, 1, 0);
    const auto hb = herm(b, b);
    CHECK(hb.exp == 0);
    CHECK(hb.value.agrees_with(QuadLocalElem::from_ints(ctx, -4)));
    CHECK(qform(b).valuation == 0);
    CHECK(ord_q(b) == 0);
    CHECK(ord_q(VectorC::from_ints(ctx, 0, 5, 5, 0)) == 2);
    CHECK_FALSE(qform(VectorC::from_ints(ctx, 1, 0, 0, 0)).valuation.has_value());
    CHECK_THROWS_AS(ord_q(VectorC::from_ints(ctx, 1, 0, 0, 0)), DegenerateVector);
    CHECK(ord_q(VectorC::from_ints(ctx, 0, 1, 1, 0, 1)) == -2);
}

TEST_CASE("epsilon") {
    const auto ctx = ctx5();
    CHECK(epsilon(VectorC::from_ints(ctx, 1, 0, 0, 0)).agrees_with(VectorC::from_ints(ctx, 1, 0, 0, 0)));
    const auto b = VectorC::from_ints(ctx, 0, 1, 1, 0);
    const auto eb = epsilon(b);
    CHECK(eb.agrees_with(VectorC::from_ints(ctx, 0, -1, 1, 0)));
    const auto q = herm(eb, eb);
    CHECK(q.value.agrees_with(QuadLocalElem::from_ints(ctx, 4)));
    CHECK(epsilon(eb).agrees_with(b));
}

TEST_CASE("epsilon negates the quadratic form") {
    const auto ctx = ctx5();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> dist(-500, 500);
    for (int i = 0; i < 500; ++i) {
        const auto b = VectorC::from_ints(ctx, dist(rng), dist(rng), dist(rng), dist(rng));
        if (b.is_zero()) continue;
        const auto q = herm(b, b);
        const auto qe = herm(epsilon(b), epsilon(b));
        CHECK(q.exp == qe.exp);
        CHECK(q.value.agrees_with(-qe.value));
        CHECK(q.value.is_rational());
    }
}

TEST_CASE("vector normalization and scaling") {
    const auto ctx = ctx5();
    const auto b = VectorC::from_ints(ctx, 0, 5, 5, 0);
    CHECK(b.denom_exp() == -1);
    CHECK(b.a0().valuation() == 0);
    CHECK(b.agrees_with(VectorC::from_ints(ctx, 0, 1, 1, 0).scaled_p(1)));
    const auto s = b.scaled(QuadLocalElem::from_ints(ctx, 0, 1));
    CHECK(ord_q(s) == ord_q(b));
    CHECK((b - b).is_zero());
}
