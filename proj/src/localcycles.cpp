#include "cyclelift/localcycles.hpp"

#include <algorithm>
#include <map>

#include "cyclelift/errors.hpp"

namespace cyclelift::localcycles {

namespace {

int ceil_half(int k) { return k >= 0 ? (k + 1) / 2 : -((-k) / 2); }

bool key_less(const VertexLattice& a, const VertexLattice& b) { return a.key() < b.key(); }

}  // namespace

const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

SpecialHom make_special_hom(Sign sign, const VectorC& vec) {
    const int k = padic::ord_q(vec);
    const int ord = sign == Sign::plus ? k + 1 : k;
    if (ord < 0) throw HypothesisViolation("special homomorphism has non-integral norm (ord " + std::to_string(ord) + ")");
    return {sign, vec, ord};
}

OrthEndo make_orth_endo(int alpha, const VectorC& vec) {
    if (alpha < 0) throw HypothesisViolation("orthogonal endomorphism: alpha must be nonnegative");
    const int k = padic::ord_q(vec);
    const int t = ceil_half(k);
    const VectorC eig = vec.scaled_p(-t);
    return {alpha, eig, (k - 2 * t == -1) ? 1 : vec.ctx().p};
}

int LocalCycle::mult_at(const VertexLattice& L) const {
    auto it = std::lower_bound(vertical.begin(), vertical.end(), L,
                               [](const VerticalEntry& e, const VertexLattice& v) { return key_less(e.vertex, v); });
    return (it != vertical.end() && it->vertex == L) ? it->mult : 0;
}

int LocalCycle::total_horizontal() const {
    int s = 0;
    for (const auto& h : horizontal) s += h.count;
    return s;
}

LocalCycle operator+(const LocalCycle& a, const LocalCycle& b) {
    std::map<bttree::LatticeKey, VerticalEntry> vert;
    for (const auto* c : {&a, &b})
        for (const auto& e : c->vertical) {
            auto [it, fresh] = vert.try_emplace(e.vertex.key(), e);
            if (!fresh) it->second.mult += e.mult;
        }
    std::map<bttree::LatticeKey, HorizontalEntry> hor;
    for (const auto* c : {&a, &b})
        for (const auto& e : c->horizontal) {
            auto [it, fresh] = hor.try_emplace(e.central.key(), e);
            if (!fresh) it->second.count += e.count;
        }
    LocalCycle out;
    for (auto& [k, e] : vert) out.vertical.push_back(e);
    for (auto& [k, e] : hor) out.horizontal.push_back(e);
    return out;
}

bool LocalCycle::operator==(const LocalCycle& o) const {
    auto same_v = [](const VerticalEntry& x, const VerticalEntry& y) { return x.vertex == y.vertex && x.mult == y.mult; };
    auto same_h = [](const HorizontalEntry& x, const HorizontalEntry& y) {
        return x.central == y.central && x.count == y.count;
    };
    return std::equal(vertical.begin(), vertical.end(), o.vertical.begin(), o.vertical.end(), same_v) &&
           std::equal(horizontal.begin(), horizontal.end(), o.horizontal.begin(), o.horizontal.end(), same_h);
}

int multiplicity(const SpecialHom& h, const VertexLattice& L, const std::optional<VertexLattice>& center) {
    if (bttree::r_invariant(h.vec, L) < 0) return 0;
    const VertexLattice c = center ? *center : bttree::central_lattice(h.vec);
    const int d = bttree::distance_fast(L, c);
    const int k = h.ord_qpm;
    const int t = ceil_half(k);
    return (k % 2 == 0) ? t - d / 2 : t - (d + 1) / 2;
}

namespace {

LocalCycle collect(const VertexLattice& center, int radius, int horizontal_count,
                   const std::function<int(const VertexLattice&, int)>& mult) {
    LocalCycle out;
    for (const auto& e : bttree::ball(center, radius)) {
        const int m = mult(e.lattice, e.dist);
        if (m > 0) out.vertical.push_back({e.lattice, m});
    }
    std::sort(out.vertical.begin(), out.vertical.end(),
              [](const VerticalEntry& a, const VerticalEntry& b) { return key_less(a.vertex, b.vertex); });
    out.horizontal.push_back({center, horizontal_count});
    return out;
}

}  // namespace

LocalCycle unitary_cycle(const SpecialHom& h) {
    const VertexLattice c = bttree::central_lattice(h.vec);
    return collect(c, h.ord_qpm, 1, [&](const VertexLattice& L, int) { return multiplicity(h, L, c); });
}

LocalCycle orthogonal_cycle(const OrthEndo& j) {
    const VertexLattice c = bttree::central_lattice(j.eigvec);
    return collect(c, j.alpha, 2, [&](const VertexLattice&, int d) { return std::max(j.alpha - d, 0); });
}

std::pair<SpecialHom, SpecialHom> split_pair(const OrthEndo& j) {
    const VectorC& b0 = j.eigvec;
    const int nu_shift = j.nu_p == 1 ? 0 : -1;  // multiplication by nu^{-1}
    if (j.alpha == 0) {
        const Sign s = j.nu_p == 1 ? Sign::plus : Sign::minus;
        return {make_special_hom(s, b0), make_special_hom(s, padic::epsilon(b0))};
    }
    if (j.alpha % 2 == 0) {
        const int h = j.alpha / 2;
        return {make_special_hom(Sign::plus, b0.scaled_p(h + nu_shift)), make_special_hom(Sign::minus, b0.scaled_p(h))};
    }
    return {make_special_hom(Sign::plus, b0.scaled_p((j.alpha - 1) / 2)),
            make_special_hom(Sign::minus, b0.scaled_p((j.alpha + 1) / 2 + nu_shift))};
}

FiberPoints fiber_points(const SpecialHom& h, const VertexLattice& L) {
    const int r = bttree::r_invariant(h.vec, L);
    if (r < 0) return {FiberKind::empty};
    if (r >= 1) return {FiberKind::full_line};
    const bool ss = h.ord_qpm > 0;
    if (h.sign == Sign::minus)
        return L.vtype() == 0 ? FiberPoints{FiberKind::single_point, ss} : FiberPoints{FiberKind::empty};
    return L.vtype() == 0 ? FiberPoints{FiberKind::full_line} : FiberPoints{FiberKind::single_point, ss};
}

OrdinaryEquation ordinary_equation(const SpecialHom& h, const VertexLattice& L) {
    const int r = bttree::r_invariant(h.vec, L);
    if (r < 0) throw EmptyIntersection("vector " + h.vec.to_string() + " is not in " + bttree::describe(L));
    const auto& k = L.key();
    const VectorC& b = h.vec;
    // Coordinates in the canonical (hyperbolic) basis, divided by p^r.
    const int base = k.D - b.denom_exp() - k.v0 - r;
    const QuadLocalElem a0 = b.a0().mul_p_pow(base);
    const QuadLocalElem a1 = (b.a1().mul_p_pow(k.v0) - L.offdiag() * b.a0()).mul_p_pow(base - k.v1);

    const bool conj = (L.vtype() == 0) == (h.sign == Sign::plus);
    OrdinaryEquation eq{r, conj ? a0.conj() : a0, conj ? a1.conj() : a1, L.vtype() == 0, false};
    if (L.vtype() == 0 && h.sign == Sign::plus) eq.p_exp = r + 1;

    // Root of the reduced factor: -c1/c0 (type 0) or -c0/c1 (type 2).
    const QuadLocalElem& lead = eq.type0_chart ? eq.c0 : eq.c1;
    const QuadLocalElem& tail = eq.type0_chart ? eq.c1 : eq.c0;
    if (lead.val_bound().v == 0) {
        const QuadLocalElem root = (tail * lead.unit_inverse()).truncate(1);
        eq.horizontal = !root.is_rational();
    }
    return eq;
}

SuperspecialExponents superspecial_exponents(const SpecialHom& h, const VertexLattice& L0, const VertexLattice& L2) {
    if (L0.vtype() != 0 || L2.vtype() != 2) throw HypothesisViolation("superspecial_exponents: need a type-0 and a type-2 lattice");
    if (bttree::distance_fast(L0, L2) != 1) throw NotAdjacent("superspecial_exponents: lattices are not adjacent");
    const int r = bttree::r_invariant(h.vec, L0);
    const int rp = bttree::r_invariant(h.vec, L2);
    const int e1 = h.sign == Sign::minus ? r : r + 1;
    return {std::max(rp, 0), std::max(e1, 0)};
}

}  // namespace cyclelift::localcycles
