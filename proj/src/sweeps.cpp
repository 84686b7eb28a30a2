#include "cyclelift/sweeps.hpp"

#include <optional>
#include <random>

#include "cyclelift/errors.hpp"
#include "cyclelift/numth.hpp"
#include "cyclelift/quadfield.hpp"

namespace cyclelift::sweeps {

namespace {

using nlohmann::json;
using Items = std::vector<json>;

// Runs item(i) for i < n; each item reports (checked count, mismatches).
// Exceptions become mismatches of their own so a parallel region never
// unwinds.
template <class F>
Report run_items(std::int64_t n, Exec exec, F&& item) {
    std::vector<std::int64_t> checked(static_cast<std::size_t>(n), 0);
    std::vector<Items> found(static_cast<std::size_t>(n));
    const auto guarded = [&](std::int64_t i) {
        try {
            checked[static_cast<std::size_t>(i)] = item(i, found[static_cast<std::size_t>(i)]);
        } catch (const std::exception& ex) {
            found[static_cast<std::size_t>(i)].push_back({{"item", i}, {"error", ex.what()}});
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n; ++i) guarded(i);
    } else {
        for (std::int64_t i = 0; i < n; ++i) guarded(i);
    }
    Report r;
    for (std::size_t i = 0; i < found.size(); ++i) {
        r.checked += checked[i];
        for (auto& m : found[i]) r.mismatches.push_back(std::move(m));
    }
    return r;
}

int ceil_half(int k) { return k >= 0 ? (k + 1) / 2 : -((-k) / 2); }

int r_formula(int ord, int d) {
    const int t = ceil_half(ord);
    return ord % 2 == 0 ? t - d / 2 : t - (d + 1) / 2;
}

}  // namespace

Report rho_sweep(const std::vector<std::int64_t>& deltas, std::int64_t n_max, Exec exec) {
    std::vector<quadfield::QuadField> fields;
    for (auto d : deltas) fields.push_back(quadfield::make_field(d));
    const std::int64_t per = n_max;
    const std::int64_t total = per * static_cast<std::int64_t>(fields.size());
    // chunk the index range so each item is a block of N values
    constexpr std::int64_t kBlock = 250;
    const std::int64_t blocks = (total + kBlock - 1) / kBlock;
    Report r = run_items(blocks, exec, [&](std::int64_t b, Items& out) -> std::int64_t {
        std::int64_t done = 0;
        for (std::int64_t idx = b * kBlock; idx < std::min(total, (b + 1) * kBlock); ++idx) {
            const auto& f = fields[static_cast<std::size_t>(idx / per)];
            const std::int64_t n = idx % per + 1;
            const auto lhs = quadfield::rho(f, n);
            const auto rhs = quadfield::rho_divisor_sum(f, n);
            if (lhs != rhs) out.push_back({{"delta", f.delta}, {"n", n}, {"rho", lhs}, {"divisor_sum", rhs}});
            ++done;
        }
        return done;
    });
    r.params = {{"deltas", deltas}, {"max", n_max}};
    return r;
}

std::vector<padic::VectorC> random_anisotropic_vectors(const padic::LocalContext& ctx, int count, int ord_min,
                                                       int ord_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::int64_t span = numth::ipow(ctx.p, 3);
    std::uniform_int_distribution<std::int64_t> digit(-span, span);
    std::uniform_int_distribution<int> val(0, 3);
    std::uniform_int_distribution<int> den(-1, 3);
    std::vector<padic::VectorC> out;
    while (static_cast<int>(out.size()) < count) {
        const std::int64_t s0 = numth::ipow(ctx.p, val(rng));
        const std::int64_t s1 = numth::ipow(ctx.p, val(rng));
        const auto v = padic::VectorC::from_ints(ctx, s0 * digit(rng), s0 * digit(rng), s1 * digit(rng),
                                                 s1 * digit(rng), den(rng));
        if (v.is_zero()) continue;
        const auto q = padic::qform(v);
        if (!q.valuation || *q.valuation < ord_min || *q.valuation > ord_max) continue;
        out.push_back(v);
    }
    return out;
}

Report r_formula_sweep(const std::vector<padic::VectorC>& vectors, int radius, Exec exec) {
    Report r = run_items(static_cast<std::int64_t>(vectors.size()), exec, [&](std::int64_t i, Items& out) -> std::int64_t {
        const auto& b = vectors[static_cast<std::size_t>(i)];
        const int ord = padic::ord_q(b);
        const auto center = bttree::central_lattice(b);
        std::int64_t n = 0;
        for (const auto& e : bttree::ball(center, radius)) {
            const int direct = bttree::r_invariant(b, e.lattice);
            const int formula = r_formula(ord, e.dist);
            if (direct != formula)
                out.push_back({{"item", i}, {"vector", b.to_string()}, {"vertex", bttree::describe(e.lattice)},
                               {"d", e.dist}, {"direct", direct}, {"formula", formula}});
            ++n;
        }
        return n;
    });
    r.params = {{"vectors", vectors.size()}, {"radius", radius}};
    return r;
}

Report local_compare_sweep(const std::vector<padic::VectorC>& eigvecs, int alpha_max, Exec exec) {
    const std::int64_t per = alpha_max + 1;
    Report r = run_items(static_cast<std::int64_t>(eigvecs.size()) * per, exec, [&](std::int64_t i, Items& out) -> std::int64_t {
        const int alpha = static_cast<int>(i % per);
        const auto j = localcycles::make_orth_endo(alpha, eigvecs[static_cast<std::size_t>(i / per)]);
        const auto [hp, hm] = localcycles::split_pair(j);
        const auto center = bttree::central_lattice(j.eigvec);
        std::int64_t n = 0;
        const json tag = {{"item", i}, {"alpha", alpha}, {"nu_p", j.nu_p}};
        for (const auto& e : bttree::ball(center, alpha + 2)) {
            const int lhs = localcycles::multiplicity(hp, e.lattice) + localcycles::multiplicity(hm, e.lattice);
            const int rhs = std::max(alpha - e.dist, 0);
            if (lhs != rhs) {
                json m = tag;
                m.update({{"vertex", bttree::describe(e.lattice)}, {"unitary", lhs}, {"orthogonal", rhs}});
                out.push_back(m);
            }
            ++n;
        }
        // horizontal parts and norm bookkeeping
        const auto zu = localcycles::unitary_cycle(hp) + localcycles::unitary_cycle(hm);
        const auto zo = localcycles::orthogonal_cycle(j);
        if (!(zu == zo)) {
            json m = tag;
            m.update({{"cycles_differ", true}, {"unitary_horizontal", zu.total_horizontal()},
                      {"orthogonal_horizontal", zo.total_horizontal()}});
            out.push_back(m);
        }
        const int lo = std::min(hp.ord_qpm, hm.ord_qpm);
        const int hi = std::max(hp.ord_qpm, hm.ord_qpm);
        const bool norms_ok = alpha == 0 ? (lo == 0 && hi == 0) : (lo == alpha - 1 && hi == alpha);
        if (!norms_ok) {
            json m = tag;
            m.update({{"ord_plus", hp.ord_qpm}, {"ord_minus", hm.ord_qpm}});
            out.push_back(m);
        }
        return n + 2;
    });
    r.params = {{"eigvecs", eigvecs.size()}, {"alpha_max", alpha_max}};
    return r;
}

Report chart_sweep(const std::vector<localcycles::SpecialHom>& homs, int radius, Exec exec) {
    Report r = run_items(static_cast<std::int64_t>(homs.size()), exec, [&](std::int64_t i, Items& out) -> std::int64_t {
        const auto& h = homs[static_cast<std::size_t>(i)];
        const auto center = bttree::central_lattice(h.vec);
        std::int64_t n = 0;
        auto fail = [&](json extra) {
            extra["item"] = i;
            out.push_back(std::move(extra));
        };
        const auto ballv = bttree::ball(center, radius);
        for (const auto& e : ballv) {
            const int m = localcycles::multiplicity(h, e.lattice, center);
            const auto fp = localcycles::fiber_points(h, e.lattice);
            if ((fp.kind == localcycles::FiberKind::full_line) != (m > 0))
                fail({{"vertex", bttree::describe(e.lattice)}, {"fiber_vs_mult", m}});
            if (bttree::r_invariant(h.vec, e.lattice) >= 0) {
                const auto eq = localcycles::ordinary_equation(h, e.lattice);
                const bool is_center = e.lattice == center;
                if (eq.p_exp != m || eq.horizontal != is_center)
                    fail({{"vertex", bttree::describe(e.lattice)}, {"p_exp", eq.p_exp}, {"mult", m},
                          {"horizontal", eq.horizontal}, {"central", is_center}});
            }
            ++n;
            if (e.dist == radius || e.lattice.vtype() != 0) continue;
            for (const auto& nb : bttree::neighbors(e.lattice)) {
                const auto ex = localcycles::superspecial_exponents(h, e.lattice, nb);
                const int m0 = localcycles::multiplicity(h, e.lattice, center);
                const int m2 = localcycles::multiplicity(h, nb, center);
                if (ex.e_t1 != m0 || ex.e_t0 != m2)
                    fail({{"edge", bttree::describe(e.lattice) + " -- " + bttree::describe(nb)},
                          {"e_t0", ex.e_t0}, {"e_t1", ex.e_t1}, {"m_type2", m2}, {"m_type0", m0}});
                ++n;
            }
        }
        return n;
    });
    r.params = {{"homs", homs.size()}, {"radius", radius}};
    return r;
}

Report hilbert_sweep(const std::vector<std::pair<mpq_class, mpq_class>>& pairs, Exec exec) {
    Report r = run_items(static_cast<std::int64_t>(pairs.size()), exec, [&](std::int64_t i, Items& out) -> std::int64_t {
        const auto& [a, b] = pairs[static_cast<std::size_t>(i)];
        int prod = numth::hilbert_symbol(a, b, numth::Place::infinity());
        for (auto ell : numth::bad_primes(a, b)) prod *= numth::hilbert_symbol(a, b, numth::Place::at(ell));
        if (prod != 1) out.push_back({{"a", a.get_str()}, {"b", b.get_str()}, {"product", prod}});
        return 1;
    });
    r.params = {{"pairs", pairs.size()}};
    return r;
}

std::vector<std::pair<mpq_class, mpq_class>> random_rational_pairs(int count, int bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-bound + 1, bound - 1);
    std::uniform_int_distribution<int> den(1, bound - 1);
    std::vector<std::pair<mpq_class, mpq_class>> out;
    while (static_cast<int>(out.size()) < count) {
        const int an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        if (an == 0 || bn == 0) continue;
        mpq_class a(an, ad), b(bn, bd);
        a.canonicalize();
        b.canonicalize();
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace cyclelift::sweeps
