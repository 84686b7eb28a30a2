#include <doctest.h>

#include <random>

#include "cyclelift/errors.hpp"
#include "cyclelift/localcycles.hpp"
#include "support/horizontal.hpp"

using namespace cyclelift;
using namespace cyclelift::localcycles;
using bttree::ball;
using bttree::neighbors;
using bttree::standard_lattices;

namespace {

LocalContext ctx5() { return LocalContext::make(5, -2, 20); }

VectorC vec(const LocalContext& ctx, std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1, int e = 0) {
    return VectorC::from_ints(ctx, x0, y0, x1, y1, e);
}

}  // namespace

TEST_CASE("special homomorphism construction") {
    const auto ctx = ctx5();
    CHECK(make_special_hom(Sign::minus, vec(ctx, 0, 5, 5, 0)).ord_qpm == 2);
    CHECK(make_special_hom(Sign::plus, vec(ctx, 0, 1, 1, 0)).ord_qpm == 1);
    CHECK_THROWS_AS(make_special_hom(Sign::plus, vec(ctx, 0, 1, 1, 0, 1)), HypothesisViolation);
    CHECK_THROWS_AS(make_special_hom(Sign::minus, vec(ctx, 0, 1, 1, 0, 1)), HypothesisViolation);
    CHECK_THROWS_AS(make_special_hom(Sign::minus, vec(ctx, 1, 0, 0, 0)), DegenerateVector);
}

TEST_CASE("minus multiplicities around the centre") {
    const auto ctx = ctx5();
    const auto [l0, l2] = standard_lattices(ctx);
    const auto h = make_special_hom(Sign::minus, vec(ctx, 0, 5, 5, 0));
    CHECK(multiplicity(h, l0) == 1);
    for (const auto& n : neighbors(l0)) CHECK(multiplicity(h, n) == 1);
    int checked_d2 = 0, outside_d4 = 0;
    for (const auto& e : ball(l0, 4)) {
        if (e.dist == 2 && bttree::contains(e.lattice, h.vec)) {
            CHECK(bttree::r_invariant(h.vec, e.lattice) == 0);
            CHECK(multiplicity(h, e.lattice) == 0);
            ++checked_d2;
        }
        if (e.dist == 3) {
            // type 2 lattices at odd distance may still contain vec
            const int r = bttree::r_invariant(h.vec, e.lattice);
            CHECK(r <= 0);
            CHECK(multiplicity(h, e.lattice) == 0);
        }
        if (e.dist == 4 && bttree::r_invariant(h.vec, e.lattice) < 0) ++outside_d4;
    }
    CHECK(checked_d2 > 0);
    CHECK(outside_d4 > 0);
}

TEST_CASE("unitary cycle examples") {
    const auto ctx = ctx5();
    const auto [l0, l2] = standard_lattices(ctx);
    const auto unit = unitary_cycle(make_special_hom(Sign::minus, vec(ctx, 0, 1, 1, 0)));
    CHECK(unit.vertical.empty());
    CHECK(unit.total_horizontal() == 1);
    CHECK(unit.horizontal.at(0).central == l0);

    const auto c = unitary_cycle(make_special_hom(Sign::minus, vec(ctx, 0, 5, 5, 0)));
    CHECK(c.vertical.size() == 7);
    CHECK(c.mult_at(l0) == 1);
    for (const auto& n : neighbors(l0)) CHECK(c.mult_at(n) == 1);
    CHECK(c.total_horizontal() == 1);

    // plus with ord q+ = 1: the central lattice of (d, 1) is the type 0 lattice
    const auto hp = make_special_hom(Sign::plus, vec(ctx, 0, 1, 1, 0));
    const auto cp = unitary_cycle(hp);
    CHECK(bttree::central_lattice(hp.vec).vtype() == 0);
    CHECK(cp.mult_at(l0) == 1);
    for (const auto& n : neighbors(l0)) CHECK(cp.mult_at(n) == 0);
    CHECK(cp.vertical.size() == 1);
    CHECK(cp.total_horizontal() == 1);
}

TEST_CASE("unitary cycle matches the multiplicity function on a ball") {
    const auto ctx = ctx5();
    const auto [l0, l2] = standard_lattices(ctx);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> dist(-60, 60);
    for (int i = 0; i < 12; ++i) {
        const auto v = vec(ctx, dist(rng), dist(rng), dist(rng), dist(rng));
        if (v.is_zero()) continue;
        const Sign s = i % 2 ? Sign::plus : Sign::minus;
        const auto h = make_special_hom(s, v);
        if (h.ord_qpm > 3) continue;
        const auto cyc = unitary_cycle(h);
        const auto center = bttree::central_lattice(v);
        for (const auto& e : ball(center, h.ord_qpm + 2)) CHECK(cyc.mult_at(e.lattice) == multiplicity(h, e.lattice));
    }
}

TEST_CASE("orthogonal cycle examples") {
    const auto ctx = ctx5();
    const auto [l0, l2] = standard_lattices(ctx);
    const auto j0 = make_orth_endo(0, vec(ctx, 0, 1, 1, 0));
    const auto c0 = orthogonal_cycle(j0);
    CHECK(c0.vertical.empty());
    CHECK(c0.total_horizontal() == 2);
    const auto j2 = make_orth_endo(2, vec(ctx, 0, 1, 1, 0));
    const auto c2 = orthogonal_cycle(j2);
    for (const auto& e : ball(l0, 4)) CHECK(c2.mult_at(e.lattice) == std::max(2 - e.dist, 0));
}

TEST_CASE("split pair norms") {
    const auto ctx = ctx5();
    const auto j = make_orth_endo(2, vec(ctx, 1, 0, 0, 5));
    CHECK(j.nu_p == 1);
    const auto [a, b] = split_pair(j);
    CHECK(std::max(a.ord_qpm, b.ord_qpm) == 2);
    CHECK(std::min(a.ord_qpm, b.ord_qpm) == 1);

    const auto j3 = make_orth_endo(3, vec(ctx, 0, 1, 1, 0));
    CHECK(j3.nu_p == 5);
    const auto [c, d] = split_pair(j3);
    CHECK(std::max(c.ord_qpm, d.ord_qpm) == 3);
    CHECK(std::min(c.ord_qpm, d.ord_qpm) == 2);

    const auto j0 = make_orth_endo(0, vec(ctx, 1, 0, 0, 5));
    const auto [e, f] = split_pair(j0);
    CHECK(e.sign == Sign::plus);
    CHECK(f.sign == Sign::plus);
    CHECK(e.vec.agrees_with(j0.eigvec));
    CHECK(f.vec.agrees_with(padic::epsilon(j0.eigvec)));
}

TEST_CASE("split pair sums to the orthogonal cycle") {
    for (const auto& ctx : {LocalContext::make(3, -10, 20), ctx5()}) {
        std::mt19937_64 rng(29);
        std::uniform_int_distribution<std::int64_t> dist(-40, 40);
        for (int i = 0; i < 8; ++i) {
            const auto v = vec(ctx, dist(rng), dist(rng), dist(rng), dist(rng));
            if (v.is_zero()) continue;
            for (int alpha = 0; alpha <= 3; ++alpha) {
                const auto j = make_orth_endo(alpha, v);
                const auto [hp, hm] = split_pair(j);
                CHECK(unitary_cycle(hp) + unitary_cycle(hm) == orthogonal_cycle(j));
                CHECK(oracle::horizontal_polynomial_matches(j));
            }
        }
    }
}

TEST_CASE("fiber points") {
    const auto ctx = ctx5();
    const auto [l0, l2] = standard_lattices(ctx);
    const auto hm = make_special_hom(Sign::minus, vec(ctx, 0, 1, 1, 0));
    CHECK(fiber_points(hm, l0).kind == FiberKind::single_point);
    CHECK_FALSE(fiber_points(hm, l0).superspecial);
    const auto far = ball(l0, 3).back().lattice;
    CHECK(fiber_points(hm, far).kind == FiberKind::empty);
    const auto hp = make_special_hom(Sign::plus, vec(ctx, 0, 1, 1, 0));
    CHECK(fiber_points(hp, l0).kind == FiberKind::full_line);
    CHECK(fiber_points(make_special_hom(Sign::minus, vec(ctx, 0, 5, 5, 0)), l0).kind == FiberKind::full_line);
}

TEST_CASE("ordinary equation examples") {
    const auto ctx = ctx5();
    const auto [l0, l2] = standard_lattices(ctx);
    const auto b = vec(ctx, 1, 0, 1, 1);
    const auto em = ordinary_equation(make_special_hom(Sign::minus, b), l0);
    CHECK(em.p_exp == 0);
    CHECK(em.type0_chart);
    CHECK(em.c0.agrees_with(QuadLocalElem::one(ctx)));
    CHECK(em.c1.agrees_with(QuadLocalElem::from_ints(ctx, 1, 1)));
    CHECK(em.horizontal);
    const auto ep = ordinary_equation(make_special_hom(Sign::plus, b), l0);
    CHECK(ep.p_exp == 1);
    CHECK(ep.c0.agrees_with(QuadLocalElem::one(ctx)));
    CHECK(ep.c1.agrees_with(QuadLocalElem::from_ints(ctx, 1, -1)));
    const auto e5 = ordinary_equation(make_special_hom(Sign::minus, vec(ctx, 0, 5, 5, 0)), l0);
    CHECK(e5.p_exp == 1);
    CHECK(e5.c0.val_bound().v == 0);
    CHECK(e5.c1.val_bound().v == 0);
    const auto far = ball(l0, 3).back().lattice;
    CHECK_THROWS_AS(ordinary_equation(make_special_hom(Sign::minus, b), far), EmptyIntersection);
}

TEST_CASE("superspecial exponents") {
    const auto ctx = ctx5();
    const auto [l0, l2] = standard_lattices(ctx);
    const auto hm = make_special_hom(Sign::minus, vec(ctx, 0, 5, 5, 0));
    CHECK(superspecial_exponents(hm, l0, l2) == SuperspecialExponents{1, 1});
    const auto hp = make_special_hom(Sign::plus, vec(ctx, 1, 0, 0, 5));
    const auto inf = neighbors(l0).at(5);
    CHECK(bttree::r_invariant(hp.vec, l0) == 0);
    CHECK(bttree::r_invariant(hp.vec, inf) == 1);
    CHECK(superspecial_exponents(hp, l0, inf) == SuperspecialExponents{1, 1});
    const auto far = ball(l0, 3).back().lattice;
    const auto far0 = neighbors(far).front();
    CHECK(superspecial_exponents(make_special_hom(Sign::minus, vec(ctx, 0, 1, 1, 0)), far0, far) ==
          SuperspecialExponents{0, 0});
    CHECK_THROWS_AS(superspecial_exponents(hm, l0, ball(l0, 3).back().lattice), NotAdjacent);
}
