#include "cyclelift/identity.hpp"

#include <numeric>

#include "cyclelift/numth.hpp"
#include "cyclelift/serialize.hpp"

namespace cyclelift::identity {

namespace {

std::int64_t abs_delta(const QuadField& f) { return -f.delta; }

// Coefficientwise comparison of two symbolic series on [0, m_max]; results
// land in per-index slots so the parallel merge keeps serial order.
Report compare_series(const SymbolicSeries& lhs, const SymbolicSeries& rhs, std::int64_t m_max, Exec exec) {
    std::vector<std::optional<nlohmann::json>> slots(static_cast<std::size_t>(m_max + 1));
    const auto body = [&](std::int64_t m) {
        const SymbolicDivisor a = lhs.coeff(m);
        const SymbolicDivisor b = rhs.coeff(m);
        if (!(a == b))
            slots[static_cast<std::size_t>(m)] = nlohmann::json{{"m", m}, {"lhs", divisor_to_json(a)}, {"rhs", divisor_to_json(b)}};
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t m = 0; m <= m_max; ++m) body(m);
    } else {
        for (std::int64_t m = 0; m <= m_max; ++m) body(m);
    }
    Report r;
    r.checked = m_max + 1;
    for (auto& s : slots)
        if (s) r.mismatches.push_back(std::move(*s));
    return r;
}

}  // namespace

nlohmann::json divisor_to_json(const SymbolicDivisor& d) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [s, w] : d.terms()) o[s.to_string()] = serialize::rational_to_string(w);
    return o;
}

SymbolicSeries build_phi_o(const QuadField& field, std::int64_t d_b, std::int64_t m_max) {
    quadfield::check_db(field, d_b);
    SymbolicSeries s(m_max);
    s.set(0, SymbolicDivisor(Symbol::K(), -1));
    for (std::int64_t n = 1; n <= m_max; ++n) s.set(n, SymbolicDivisor(Symbol::Zo(n)));
    return s;
}

SymbolicSeries build_phi_u(const QuadField& field, std::int64_t d_b, std::int64_t m_max) {
    const mpq_class lv = quadfield::lvalue_closed_form(field, d_b);
    const std::int64_t t = abs_delta(field);
    SymbolicSeries s(m_max);
    s.set(0, SymbolicDivisor(Symbol::K(), lv));
    for (std::int64_t mp = 1; t * mp <= m_max; ++mp) {
        SymbolicDivisor c;
        for (std::int64_t a : numth::divisors(mp)) {
            if (std::gcd(a, d_b) != 1) continue;
            const int ch = quadfield::chi_k(field, a);
            if (ch != 0) c.add_term(Symbol::Zo(t * (mp / a) * (mp / a)), ch);
        }
        s.set(t * mp, std::move(c));
    }
    return s;
}

Report verify_main_theorem(const QuadField& field, std::int64_t d_b, std::int64_t m_max, Exec exec) {
    quadfield::check_db(field, d_b);
    if (m_max < 0) throw HypothesisViolation("m_max must be nonnegative");
    const std::int64_t t = abs_delta(field);
    const std::int64_t M = m_max / t;
    const SymbolicSeries phi_o = build_phi_o(field, d_b, std::max<std::int64_t>(t * M * M, 0));
    const auto lift = qseries::shimura_lift(phi_o, qseries::ShimuraParams::standard(3, d_b, t), m_max);
    const SymbolicSeries phi_u = build_phi_u(field, d_b, m_max);
    Report r = compare_series(lift.series, phi_u, m_max, exec);
    if (lift.policy != qseries::ConstantPolicy::exact_closed_form)
        r.mismatches.insert(r.mismatches.begin(), nlohmann::json{{"m", 0}, {"lhs", "unevaluated"}, {"rhs", divisor_to_json(phi_u.coeff(0))}});
    r.params = {{"delta", field.delta}, {"db", d_b}, {"mmax", m_max}, {"kappa", 3}, {"level", d_b}, {"t", t}};
    return r;
}

std::int64_t fiber_count(const QuadField& field, std::int64_t m, std::int64_t c, std::int64_t nu_p,
                         std::int64_t nu_away) {
    if (m < 1 || c < 1 || nu_p < 1 || nu_away < 1)
        throw HypothesisViolation("fiber_count: arguments must be positive");
    const std::int64_t den = c * abs_delta(field) * nu_p * nu_away;
    if (m % den != 0) return 0;
    return field.unit_order * quadfield::rho(field, m / den);
}

RemarkReport verify_remark_identity(const QuadField& field, std::int64_t d_b, std::int64_t m_max,
                                    std::int64_t num_embedding_classes, Exec exec) {
    const std::int64_t opt = quadfield::optimal_embedding_count(field, d_b);
    if (num_embedding_classes != opt)
        throw HypothesisViolation("remark identity: expected " + std::to_string(opt) + " embedding classes");
    if (m_max < 0) throw HypothesisViolation("m_max must be nonnegative");
    const auto fac = numth::factorize(d_b);
    std::vector<std::int64_t> primes;
    for (const auto& pp : fac) primes.push_back(pp.prime);
    const mpq_class inv_2h(1, 2 * field.class_number);

    // Constant of the naive series, taken from its own product formula.
    mpq_class c_naive(-1, 2 * field.unit_order);
    c_naive /= mpq_class(mpz_class(1) << static_cast<unsigned>(primes.size()));
    for (std::int64_t l : primes) c_naive *= mpq_class(2 * l * l + l - 1, l * l);

    SymbolicSeries rhs(m_max);
    for (std::int64_t i = 1; i <= opt; ++i) {
        SymbolicSeries naive(m_max);
        naive.set(0, SymbolicDivisor(Symbol::K(), c_naive));
        for (std::int64_t n = 1; n <= m_max; ++n) naive.set(n, SymbolicDivisor(Symbol::Zplus(n, i), inv_2h));
        rhs += mpq_class(2) * naive;
        for (unsigned mask = 1; mask < (1u << primes.size()); ++mask) {
            std::vector<std::int64_t> subset;
            for (std::size_t k = 0; k < primes.size(); ++k)
                if (mask & (1u << k)) subset.push_back(primes[k]);
            rhs += qseries::op_phi_set(subset, naive);
        }
    }

    SymbolicSeries lhs(m_max);
    lhs.set(0, SymbolicDivisor(Symbol::K(), quadfield::lvalue_closed_form(field, d_b)));
    for (std::int64_t m = 1; m <= m_max; ++m) {
        SymbolicDivisor c;
        const std::int64_t mstar = m / std::gcd(m, d_b);
        for (std::int64_t i = 1; i <= opt; ++i) {
            c.add_term(Symbol::Zplus(m, i), inv_2h);
            c.add_term(Symbol::Zplus(mstar, i), inv_2h);
        }
        lhs.set(m, std::move(c));
    }

    RemarkReport out;
    out.c_prime = lhs.coeff(0) - rhs.coeff(0);
    rhs.add_to(0, out.c_prime);
    out.report = compare_series(lhs, rhs, m_max, exec);
    out.report.params = {{"delta", field.delta}, {"db", d_b}, {"mmax", m_max}, {"classes", opt}};
    return out;
}

}  // namespace cyclelift::identity
