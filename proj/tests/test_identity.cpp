#include <doctest.h>

#include "cyclelift/errors.hpp"
#include "cyclelift/identity.hpp"
#include "support/oracles.hpp"

using namespace cyclelift;
using namespace cyclelift::identity;
using quadfield::make_field;

TEST_CASE("symbols") {
    CHECK(Symbol::parse("Zplus(12,3)") == Symbol::Zplus(12, 3));
    CHECK(Symbol::parse(Symbol::Zo(7).to_string()) == Symbol::Zo(7));
    CHECK(Symbol::parse("K") == Symbol::K());
    CHECK_THROWS_AS(Symbol::parse("Zq(1)"), HypothesisViolation);
    SymbolicDivisor d(Symbol::Zo(2), mpq_class(1, 2));
    d.add_term(Symbol::Zo(2), mpq_class(-1, 2));
    CHECK(d.is_zero());
    CHECK((mpq_class(2) * SymbolicDivisor(Symbol::K())).weight(Symbol::K()) == 2);
}

TEST_CASE("orthogonal series") {
    const auto f = make_field(-2);
    const auto phi = build_phi_o(f, 35, 10);
    CHECK(phi.coeff(0) == SymbolicDivisor(Symbol::K(), -1));
    CHECK(phi.coeff(7) == SymbolicDivisor(Symbol::Zo(7)));
    CHECK(phi.max_exponent() == 10);
    CHECK_THROWS_AS(phi.coeff(11), TruncationInsufficient);
}

TEST_CASE("unitary series") {
    const auto f = make_field(-2);
    const auto phi = build_phi_u(f, 35, 20);
    CHECK(phi.coeff(3).is_zero());
    CHECK(phi.coeff(2) == SymbolicDivisor(Symbol::Zo(2)));
    CHECK(phi.coeff(12) == SymbolicDivisor(Symbol::Zo(72)) + SymbolicDivisor(Symbol::Zo(8)));
    CHECK(phi.coeff(0) == SymbolicDivisor(Symbol::K(), mpq_class(-2808, 1225)));
    for (std::int64_t m = 1; m <= 20; m += 2) CHECK(phi.coeff(m).is_zero());
    const auto g = make_field(-10);
    const auto psi = build_phi_u(g, 51, 100);
    for (std::int64_t m = 1; m <= 100; ++m)
        if (m % 10 != 0) CHECK(psi.coeff(m).is_zero());
}

TEST_CASE("main theorem") {
    struct Case { std::int64_t delta, db; };
    for (const auto& c : {Case{-2, 35}, Case{-10, 51}, Case{-2, 65}}) {
        const auto f = make_field(c.delta);
        if (c.db == 65) CHECK(quadfield::chi_k(f, 13) == -1);
        const auto serial = verify_main_theorem(f, c.db, 100, Exec::serial);
        const auto parallel = verify_main_theorem(f, c.db, 100, Exec::parallel);
        CHECK(serial.ok());
        CHECK(serial.checked == 101);
        CHECK(serial.to_json() == parallel.to_json());
    }
    CHECK_THROWS_AS(verify_main_theorem(make_field(-2), 33, 100), HypothesisViolation);
}

TEST_CASE("fiber counts") {
    const auto f = make_field(-2);
    CHECK(fiber_count(f, 2, 1, 1, 1) == 2);
    CHECK(fiber_count(f, 2, 1, 5, 1) == 0);
    CHECK(fiber_count(f, 12, 1, 1, 1) == 4);
    CHECK_THROWS_AS(fiber_count(f, 0, 1, 1, 1), HypothesisViolation);
    // changing nu_p from 1 to p zeroes the count or divides the argument by p
    for (std::int64_t m = 1; m <= 400; ++m)
        for (std::int64_t c = 1; c <= 3; ++c) {
            const std::int64_t a = fiber_count(f, m, c, 5, 1);
            if (m % (c * 2 * 5) == 0) CHECK(a == 2 * oracle::rho_by_divisors(-2, m / (c * 10)));
            else CHECK(a == 0);
        }
}

TEST_CASE("remark identity") {
    struct Case { std::int64_t delta, db; };
    for (const auto& c : {Case{-2, 35}, Case{-10, 51}, Case{-2, 65}}) {
        const auto f = make_field(c.delta);
        const auto n = quadfield::optimal_embedding_count(f, c.db);
        const auto serial = verify_remark_identity(f, c.db, 100, n, Exec::serial);
        const auto parallel = verify_remark_identity(f, c.db, 100, n, Exec::parallel);
        CHECK(serial.report.ok());
        CHECK(serial.c_prime.is_zero());
        CHECK(serial.report.to_json() == parallel.report.to_json());
        const auto zero = verify_remark_identity(f, c.db, 0, n);
        CHECK(zero.report.ok());
        CHECK(zero.c_prime.is_zero());
        CHECK_THROWS_AS(verify_remark_identity(f, c.db, 10, n + 1), HypothesisViolation);
    }
}
