#include "cyclelift/qseries.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "cyclelift/numth.hpp"
#include "cyclelift/quadfield.hpp"

namespace cyclelift::qseries {

int Character::operator()(std::int64_t n) const {
    if (modulus > 1 && std::gcd(n, modulus) != 1) return 0;
    return kind == Kind::principal ? 1 : numth::kronecker(disc, n);
}

ShimuraParams ShimuraParams::standard(int kappa, std::int64_t level_N, std::int64_t t) {
    return {kappa, level_N, t, Character::principal(4 * level_N)};
}

void ShimuraParams::validate() const {
    if (kappa < 3 || kappa % 2 == 0) throw HypothesisViolation("lift: kappa must be an odd integer >= 3");
    if (level_N < 1) throw HypothesisViolation("lift: level N must be positive");
    if (t < 1 || !numth::is_squarefree(t)) throw HypothesisViolation("lift: t must be a positive squarefree integer");
    if (chi.modulus < 1) throw HypothesisViolation("lift: character modulus must be positive");
}

int chi_t(const ShimuraParams& params, std::int64_t n) {
    if (n < 1) throw HypothesisViolation("chi_t: n must be positive");
    const int c = params.chi(n);
    if (c == 0) return 0;
    const int minus_one = params.lambda() % 2 == 0 ? 1 : numth::kronecker(-1, n);
    return c * minus_one * numth::kronecker(params.t, n);
}

const char* to_string(ConstantPolicy p) {
    return p == ConstantPolicy::exact_closed_form ? "exact_closed_form" : "unevaluated";
}

std::optional<mpq_class> closed_form_constant_ratio(const ShimuraParams& params) {
    if (params.kappa != 3 || params.chi.kind != Character::Kind::principal || params.chi.modulus != 4 * params.level_N)
        return std::nullopt;
    try {
        const auto field = quadfield::make_field(-params.t);
        return mpq_class(-quadfield::lvalue_closed_form(field, params.level_N));
    } catch (const HypothesisViolation&) {
        return std::nullopt;
    }
}

std::int64_t lift_output_bound(std::int64_t input_max, std::int64_t t) {
    if (t < 1) throw HypothesisViolation("lift: t must be positive");
    std::int64_t M = static_cast<std::int64_t>(std::sqrt(static_cast<double>(input_max) / static_cast<double>(t)));
    while (t * (M + 1) * (M + 1) <= input_max) ++M;
    while (M > 0 && t * M * M > input_max) --M;
    return t * M;
}

PeriodicCharacter PeriodicCharacter::from(const std::function<int(std::int64_t)>& chi, std::int64_t modulus) {
    if (modulus < 1) throw HypothesisViolation("character modulus must be positive");
    PeriodicCharacter pc{modulus, std::vector<int>(static_cast<std::size_t>(modulus))};
    for (std::int64_t h = 1; h < modulus; ++h) pc.values[static_cast<std::size_t>(h)] = chi(h);
    pc.values[0] = modulus == 1 ? chi(1) : chi(modulus);
    return pc;
}

PeriodicCharacter PeriodicCharacter::from_shimura(const ShimuraParams& params) {
    const std::int64_t m = 4 * params.level_N * params.t;
    return from([&](std::int64_t n) { return chi_t(params, n); }, m);
}

std::complex<double> gauss_sum(const PeriodicCharacter& chi, std::int64_t a) {
    const std::int64_t M = chi.modulus;
    const std::int64_t ar = ((a % M) + M) % M;
    std::complex<double> s = 0;
    for (std::int64_t h = 0; h < M; ++h) {
        const int v = chi.values[static_cast<std::size_t>(h)];
        if (v == 0) continue;
        const std::int64_t phase = (ar * h) % M;
        s += static_cast<double>(v) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(M));
    }
    return s;
}

std::complex<double> lvalue_numeric(const PeriodicCharacter& chi, int s, std::int64_t terms) {
    if (terms < 1) throw HypothesisViolation("lvalue_numeric: terms must be positive");
    std::vector<std::complex<double>> g(static_cast<std::size_t>(chi.modulus));
    for (std::int64_t r = 0; r < chi.modulus; ++r) g[static_cast<std::size_t>(r)] = gauss_sum(chi, r);
    std::complex<double> partial = 0;
    std::complex<double> cesaro = 0;
    for (std::int64_t m = 1; m <= terms; ++m) {
        partial += g[static_cast<std::size_t>(m % chi.modulus)] / std::pow(static_cast<double>(m), s);
        cesaro += partial;
    }
    return cesaro / static_cast<double>(terms);
}

}  // namespace cyclelift::qseries
