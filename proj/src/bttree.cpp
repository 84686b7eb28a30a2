#include "cyclelift/bttree.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include <gmpxx.h>

#include "cyclelift/errors.hpp"
#include "cyclelift/numth.hpp"

namespace cyclelift::bttree {

namespace {

int floor_div2(int k) { return (k >= 0) ? k / 2 : -((-k + 1) / 2); }

std::int64_t mod_pos(std::int64_t v, std::int64_t m) {
    const std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// Index of an element of minimal valuation; throws when the minimum cannot
// be decided at the available precision. Returns -1 when all are zero.
int pick_min_valuation(const std::vector<QuadLocalElem>& xs, int& v_out) {
    int best = -1;
    int best_v = 0;
    int inexact_floor = INT32_MAX;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const padic::ValBound b = xs[i].val_bound();
        if (!b.exact) {
            inexact_floor = std::min(inexact_floor, b.v);
            continue;
        }
        if (best < 0 || b.v < best_v) {
            best = static_cast<int>(i);
            best_v = b.v;
        }
    }
    if (best >= 0 && inexact_floor <= best_v)
        throw PrecisionExhausted("lattice reduction: pivot valuation undecidable", best_v + 1);
    v_out = best_v;
    return best;
}

constexpr int kPivotMargin = 4;

}  // namespace

std::size_t LatticeKeyHash::operator()(const LatticeKey& k) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(k.cx);
    auto mix = [&h](std::int64_t v) { h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(k.cy);
    mix(k.D);
    mix(k.v0);
    mix(k.v1);
    return h;
}

Lattice Lattice::from_generators(const LocalContext& ctx, const std::vector<VectorC>& gens) {
    int D = INT32_MIN;
    for (const auto& g : gens)
        if (!g.is_zero()) D = std::max(D, g.denom_exp());
    if (D == INT32_MIN) throw HypothesisViolation("lattice: no nonzero generators");

    std::vector<QuadLocalElem> first, second;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        first.push_back(g.a0().mul_p_pow(D - g.denom_exp()));
        second.push_back(g.a1().mul_p_pow(D - g.denom_exp()));
    }
    int v0 = 0;
    const int k = pick_min_valuation(first, v0);
    if (k < 0) throw HypothesisViolation("lattice: generators are degenerate (rank < 2)");
    const QuadLocalElem uinv = first[k].unit_part().unit_inverse();
    const QuadLocalElem c_full = second[k] * uinv;

    std::vector<QuadLocalElem> rest;
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (static_cast<int>(i) == k) continue;
        rest.push_back(second[i] - first[i].div_p_pow(v0) * c_full);
    }
    int v1 = 0;
    if (pick_min_valuation(rest, v1) < 0) throw HypothesisViolation("lattice: generators are degenerate (rank < 2)");
    if (std::max(v0, v1) + kPivotMargin > ctx.precision)
        throw PrecisionExhausted("lattice reduction: pivots too close to precision", std::max(v0, v1) + kPivotMargin);
    if (c_full.prec() < v1) throw PrecisionExhausted("lattice reduction: off-diagonal entry lost precision", v1 + 1);

    const std::int64_t pv1 = ctx.pow(v1);
    QuadLocalElem c = QuadLocalElem::from_ints(ctx, c_full.x() % pv1, c_full.y() % pv1);
    const padic::ValBound cb = c.val_bound();
    const int m = std::min({v0, v1, cb.exact ? cb.v : INT32_MAX});
    if (m > 0) {
        v0 -= m;
        v1 -= m;
        D -= m;
        c = QuadLocalElem::from_ints(ctx, c.x() / ctx.pow(m), c.y() / ctx.pow(m));
    }
    return Lattice(ctx, LatticeKey{D, v0, v1, c.x(), c.y()});
}

Lattice Lattice::from_key(const LocalContext& ctx, const LatticeKey& key) { return Lattice(ctx, key); }

QuadLocalElem Lattice::offdiag() const { return QuadLocalElem::from_ints(ctx_, key_.cx, key_.cy); }

VectorC Lattice::col0() const {
    return VectorC(QuadLocalElem::from_ints(ctx_, ctx_.pow(key_.v0)), offdiag(), key_.D);
}

VectorC Lattice::col1() const {
    return VectorC(QuadLocalElem::zero(ctx_), QuadLocalElem::from_ints(ctx_, ctx_.pow(key_.v1)), key_.D);
}

Lattice Lattice::scaled_p(int k) const {
    LatticeKey nk = key_;
    nk.D -= k;
    return Lattice(ctx_, nk);
}

Lattice dual(const Lattice& L) {
    // The dual of p^{-D} span{(p^v0, c), (0, p^v1)} is
    // p^{D - v0 - v1} span{(p^v0, conj c), (0, p^v1)}.
    const LatticeKey& k = L.key();
    const std::int64_t pv1 = L.ctx().pow(k.v1);
    return Lattice::from_key(L.ctx(), LatticeKey{k.v0 + k.v1 - k.D, k.v0, k.v1, k.cx, mod_pos(-k.cy, pv1)});
}

std::optional<int> Lattice::vertex_type() const {
    const Lattice d = dual(*this);
    if (d.key() == key_) return 0;
    if (d.key() == scaled_p(1).key()) return 2;
    return std::nullopt;
}

VertexLattice VertexLattice::from(const Lattice& L) {
    const auto t = L.vertex_type();
    if (!t) throw HypothesisViolation("lattice " + describe(L) + " is not a vertex lattice");
    return VertexLattice(L, *t);
}

std::pair<VertexLattice, VertexLattice> standard_lattices(const LocalContext& ctx) {
    const VectorC v0 = VectorC::from_ints(ctx, 1, 0, 0, 0);
    const VectorC v1 = VectorC::from_ints(ctx, 0, 0, 1, 0);
    return {VertexLattice::from(Lattice::from_generators(ctx, {v0, v1})),
            VertexLattice::from(Lattice::from_generators(ctx, {v0.scaled_p(-1), v1}))};
}

std::pair<VectorC, VectorC> hyperbolic_basis(const VertexLattice& L) {
    // Vertex lattices are epsilon-stable, so the canonical off-diagonal entry
    // is rational and the canonical columns are already isotropic.
    const LatticeKey& k = L.key();
    if (k.cy != 0) throw HyperbolicBasisFailure("canonical basis of " + describe(L) + " is not rational");
    const int s = k.v0 + k.v1 - 2 * k.D;
    if (s != (L.vtype() == 0 ? 0 : -1))
        throw HyperbolicBasisFailure("canonical basis of " + describe(L) + " has h(w0,w1) = delta p^" + std::to_string(s));
    return {L.col0(), L.col1()};
}

std::vector<VertexLattice> neighbors(const VertexLattice& L) {
    const LocalContext& ctx = L.ctx();
    const auto [w0, w1] = hyperbolic_basis(L);
    const int nt = L.vtype() == 0 ? 2 : 0;
    std::vector<VertexLattice> out;
    out.reserve(static_cast<std::size_t>(ctx.p) + 1);
    for (std::int64_t a = 0; a < ctx.p; ++a) {
        const VectorC mix = w0.scaled(QuadLocalElem::from_ints(ctx, a)) + w1;
        const std::vector<VectorC> gens = L.vtype() == 0 ? std::vector<VectorC>{w0, mix.scaled_p(-1)}
                                                         : std::vector<VectorC>{w0.scaled_p(1), mix};
        out.push_back(VertexLattice(Lattice::from_generators(ctx, gens), nt));
    }
    const std::vector<VectorC> gens = L.vtype() == 0 ? std::vector<VectorC>{w0.scaled_p(-1), w1}
                                                     : std::vector<VectorC>{w0, w1.scaled_p(1)};
    out.push_back(VertexLattice(Lattice::from_generators(ctx, gens), nt));
    return out;
}

int r_invariant(const VectorC& b, const Lattice& L) {
    if (b.is_zero()) throw DegenerateVector("r_invariant of the zero vector");
    const LatticeKey& k = L.key();
    const int base = k.D - b.denom_exp() - k.v0;
    const QuadLocalElem t = b.a1().mul_p_pow(k.v0) - L.offdiag() * b.a0();
    const padic::ValBound x = b.a0().val_bound();
    const padic::ValBound y = t.val_bound();
    const int cx = base + x.v;
    const int cy = base - k.v1 + y.v;
    if (x.exact && y.exact) return std::min(cx, cy);
    if (!x.exact && !y.exact) throw PrecisionExhausted("r_invariant: vector vanishes to precision", b.ctx().precision + 1);
    const int known = x.exact ? cx : cy;
    const int bound = x.exact ? cy : cx;
    if (bound <= known) throw PrecisionExhausted("r_invariant: membership undecidable", b.ctx().precision + (known - bound) + 1);
    return known;
}

bool contains(const Lattice& L, const VectorC& b) { return b.is_zero() || r_invariant(b, L) >= 0; }

VertexLattice central_lattice(const VectorC& b) {
    const int k = padic::ord_q(b);
    const int t = -floor_div2(-k);  // ceil(k/2)
    const VectorC bc = b.scaled_p(-t);
    const Lattice L = Lattice::from_generators(b.ctx(), {bc, padic::epsilon(bc)});
    const VertexLattice V = VertexLattice::from(L);
    const int expected = (k - 2 * t == 0) ? 0 : 2;
    if (V.vtype() != expected) throw Error("central lattice has unexpected type");
    return V;
}

int distance(const VertexLattice& L, const VertexLattice& M, int cap) {
    if (L == M) return 0;
    std::unordered_set<LatticeKey, LatticeKeyHash> seen{L.key()};
    std::vector<VertexLattice> frontier{L};
    for (int d = 1; d <= cap; ++d) {
        std::vector<VertexLattice> next;
        for (const auto& v : frontier) {
            for (auto& n : neighbors(v)) {
                if (n == M) return d;
                if (seen.insert(n.key()).second) next.push_back(std::move(n));
            }
        }
        frontier = std::move(next);
        if (frontier.size() > 20'000'000)
            throw SearchRadiusExceeded("distance: BFS frontier too large at depth " + std::to_string(d));
    }
    throw SearchRadiusExceeded("distance: not found within " + std::to_string(cap) + " steps");
}

int distance_fast(const VertexLattice& L, const VertexLattice& M) {
    const LatticeKey& a = L.key();
    const LatticeKey& b = M.key();
    if (a.cy != 0 || b.cy != 0) throw HyperbolicBasisFailure("distance_fast: non-rational canonical form");
    const auto p = static_cast<unsigned long>(L.ctx().p);
    mpz_class pa0, pb0;
    mpz_ui_pow_ui(pa0.get_mpz_t(), p, static_cast<unsigned long>(a.v0));
    mpz_ui_pow_ui(pb0.get_mpz_t(), p, static_cast<unsigned long>(b.v0));
    mpz_class x = pa0 * mpz_class(static_cast<long>(b.cx)) - pb0 * mpz_class(static_cast<long>(a.cx));
    const int shift = a.D - b.D;
    const int det_val = 2 * shift + (b.v0 - a.v0) + (b.v1 - a.v1);
    int min_val = std::min(b.v0 - a.v0, b.v1 - a.v1);
    if (x != 0) {
        int vx = 0;
        while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
            ++vx;
        }
        min_val = std::min(min_val, vx - a.v0 - a.v1);
    }
    min_val += shift;
    return det_val - 2 * min_val;
}

std::vector<BallEntry> ball(const VertexLattice& center, int radius) {
    std::vector<BallEntry> out{{center, 0}};
    std::unordered_set<LatticeKey, LatticeKeyHash> seen{center.key()};
    std::size_t level_begin = 0;
    for (int d = 1; d <= radius; ++d) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (auto& n : neighbors(out[i].lattice))
                if (seen.insert(n.key()).second) out.push_back({std::move(n), d});
        }
        level_begin = level_end;
    }
    return out;
}

std::string path_word(const VertexLattice& L) {
    VertexLattice cur = standard_lattices(L.ctx()).first;
    int d = distance_fast(cur, L);
    std::string word;
    while (d > 0) {
        const auto nbrs = neighbors(cur);
        bool moved = false;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (distance_fast(nbrs[i], L) == d - 1) {
                if (!word.empty()) word += '.';
                word += std::to_string(i);
                cur = nbrs[i];
                --d;
                moved = true;
                break;
            }
        }
        if (!moved) throw Error("path_word: descent failed");
    }
    return word;
}

std::string describe(const Lattice& L) {
    const LatticeKey& k = L.key();
    return "p^-" + std::to_string(k.D) + "<(p^" + std::to_string(k.v0) + ", " + L.offdiag().to_string() + "), (0, p^" +
           std::to_string(k.v1) + ")>";
}

}  // namespace cyclelift::bttree
