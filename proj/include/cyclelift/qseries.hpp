#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclelift/errors.hpp"
#include "cyclelift/symbolic.hpp"

namespace cyclelift::qseries {

inline bool coeff_is_zero(const mpq_class& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const identity::SymbolicDivisor& c) { return c.is_zero(); }

// Sparse truncated q-expansion. Coefficients above max_exponent are unknown,
// absent ones below it are zero.
template <class C>
class FormalSeries {
public:
    explicit FormalSeries(std::int64_t max_exponent = 0) : max_(max_exponent) {
        if (max_exponent < 0) throw HypothesisViolation("series: negative max_exponent");
    }

    std::int64_t max_exponent() const { return max_; }
    const std::map<std::int64_t, C>& coeffs() const { return coeffs_; }

    C coeff(std::int64_t n) const {
        if (n < 0) return C{};
        if (n > max_)
            throw TruncationInsufficient("coefficient " + std::to_string(n) + " beyond truncation " +
                                         std::to_string(max_));
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? C{} : it->second;
    }

    void set(std::int64_t n, C c) {
        check_index(n);
        if (coeff_is_zero(c))
            coeffs_.erase(n);
        else
            coeffs_[n] = std::move(c);
    }

    void add_to(std::int64_t n, const C& c) {
        check_index(n);
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = coeffs_.try_emplace(n, c);
        if (!fresh) {
            it->second += c;
            if (coeff_is_zero(it->second)) coeffs_.erase(it);
        }
    }

    // Restrict to exponents <= m.
    FormalSeries truncated(std::int64_t m) const {
        FormalSeries out(std::min(m, max_));
        for (const auto& [n, c] : coeffs_)
            if (n <= out.max_) out.coeffs_.emplace(n, c);
        return out;
    }

    // Same coefficients with a larger bound. The caller vouches that every
    // exponent in (max_exponent, m] is structurally zero.
    FormalSeries widened(std::int64_t m) const {
        FormalSeries out(*this);
        out.max_ = std::max(m, max_);
        return out;
    }

    FormalSeries& operator+=(const FormalSeries& o) { return combine(o, mpq_class(1)); }
    FormalSeries& operator-=(const FormalSeries& o) { return combine(o, mpq_class(-1)); }
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
    friend FormalSeries operator*(const mpq_class& s, const FormalSeries& a) {
        FormalSeries out(a.max_);
        for (const auto& [n, c] : a.coeffs_) out.set(n, s * c);
        return out;
    }

    bool operator==(const FormalSeries& o) const { return max_ == o.max_ && coeffs_ == o.coeffs_; }

private:
    void check_index(std::int64_t n) const {
        if (n < 0 || n > max_)
            throw TruncationInsufficient("exponent " + std::to_string(n) + " outside [0, " + std::to_string(max_) + "]");
    }

    FormalSeries& combine(const FormalSeries& o, const mpq_class& s) {
        *this = truncated(std::min(max_, o.max_));
        for (const auto& [n, c] : o.coeffs_)
            if (n <= max_) add_to(n, s * c);
        return *this;
    }

    std::int64_t max_;
    std::map<std::int64_t, C> coeffs_;
};

using RationalSeries = FormalSeries<mpq_class>;
using SymbolicSeries = FormalSeries<identity::SymbolicDivisor>;

// Real Dirichlet character: principal modulo `modulus`, or n -> (disc/n)
// restricted to n coprime to `modulus` (modulus 1 means no restriction).
struct Character {
    enum class Kind { principal, kronecker };
    Kind kind = Kind::principal;
    std::int64_t modulus = 1;
    std::int64_t disc = 1;

    static Character principal(std::int64_t modulus) { return {Kind::principal, modulus, 1}; }
    static Character kronecker(std::int64_t disc, std::int64_t modulus = 1) { return {Kind::kronecker, modulus, disc}; }
    int operator()(std::int64_t n) const;
};

struct ShimuraParams {
    int kappa = 3;
    std::int64_t level_N = 1;
    std::int64_t t = 1;
    Character chi = Character::principal(4);

    // Principal character mod 4N.
    static ShimuraParams standard(int kappa, std::int64_t level_N, std::int64_t t);
    int lambda() const { return (kappa - 1) / 2; }
    void validate() const;
};

int chi_t(const ShimuraParams& params, std::int64_t n);

enum class ConstantPolicy { exact_closed_form, unevaluated };
const char* to_string(ConstantPolicy p);

template <class C>
struct LiftResult {
    FormalSeries<C> series;
    ConstantPolicy policy;
    // Under the unevaluated policy b(0) is a(0) times the generic constant,
    // which is not computed; a(0) is kept here and b(0) is left out.
    C a0;
};

// Exact b(0)/a(0) for kappa = 3, principal chi, t = |Delta| and N = D_B
// satisfying the standing hypotheses; nullopt otherwise.
std::optional<mpq_class> closed_form_constant_ratio(const ShimuraParams& params);

// Largest output exponent the input truncation supports.
std::int64_t lift_output_bound(std::int64_t input_max, std::int64_t t);

template <class C>
LiftResult<C> shimura_lift(const FormalSeries<C>& F, const ShimuraParams& params,
                           std::optional<std::int64_t> out_max = std::nullopt) {
    params.validate();
    const std::int64_t t = params.t;
    const std::int64_t om = out_max ? *out_max : lift_output_bound(F.max_exponent(), t);
    if (om < 0) throw HypothesisViolation("lift: negative output bound");
    const std::int64_t M = om / t;
    if (M > 0 && t * M * M > F.max_exponent())
        throw TruncationInsufficient("lift: output exponent " + std::to_string(t * M) + " needs input up to " +
                                     std::to_string(t * M * M) + ", have " + std::to_string(F.max_exponent()));
    LiftResult<C> out{FormalSeries<C>(om), ConstantPolicy::unevaluated, F.coeff(0)};
    const int w = (params.kappa - 3) / 2;
    for (std::int64_t m = 1; m <= M; ++m) {
        C b{};
        for (std::int64_t n = 1; n <= m; ++n) {
            if (m % n != 0) continue;
            const int ch = chi_t(params, n);
            if (ch == 0) continue;
            const std::int64_t k = m / n;
            C a = F.coeff(t * k * k);
            if (coeff_is_zero(a)) continue;
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(w));
            b += mpq_class(ch * pw) * a;
        }
        out.series.set(t * m, std::move(b));
    }
    if (auto r = closed_form_constant_ratio(params)) {
        out.policy = ConstantPolicy::exact_closed_form;
        out.series.set(0, *r * out.a0);
    }
    return out;
}

template <class C>
FormalSeries<C> op_U(std::int64_t d, const FormalSeries<C>& F, std::optional<std::int64_t> out_max = std::nullopt) {
    if (d < 1) throw HypothesisViolation("U_d: d must be positive");
    const std::int64_t om = out_max ? *out_max : F.max_exponent() / d;
    if (om * d > F.max_exponent())
        throw TruncationInsufficient("U_" + std::to_string(d) + " to exponent " + std::to_string(om) +
                                     " needs input up to " + std::to_string(om * d));
    FormalSeries<C> out(om);
    for (const auto& [n, c] : F.coeffs())
        if (n % d == 0 && n / d <= om) out.set(n / d, c);
    return out;
}

template <class C>
FormalSeries<C> op_B(std::int64_t d, const FormalSeries<C>& F) {
    if (d < 1) throw HypothesisViolation("B_d: d must be positive");
    FormalSeries<C> out(F.max_exponent() * d);
    for (const auto& [n, c] : F.coeffs()) out.set(n * d, c);
    return out;
}

// B_d o (1 - U_d); the coefficient at dn is a(n) - a(dn). Every exponent up
// to the input bound is determined, so the truncation is kept.
template <class C>
FormalSeries<C> op_phi(std::int64_t d, const FormalSeries<C>& F) {
    const FormalSeries<C> inner = F.truncated(F.max_exponent() / d) - op_U(d, F);
    return op_B(d, inner).widened(F.max_exponent()).truncated(F.max_exponent());
}

template <class C>
FormalSeries<C> op_phi_set(const std::vector<std::int64_t>& primes, const FormalSeries<C>& F) {
    std::set<std::int64_t> seen(primes.begin(), primes.end());
    if (seen.size() != primes.size()) throw HypothesisViolation("phi_I: primes must be distinct");
    FormalSeries<C> out = F;
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) out = op_phi(*it, out);
    return out;
}

// One period of a character as a table.
struct PeriodicCharacter {
    std::int64_t modulus;
    std::vector<int> values;
    static PeriodicCharacter from(const std::function<int(std::int64_t)>& chi, std::int64_t modulus);
    static PeriodicCharacter from_shimura(const ShimuraParams& params);  // chi_t mod 4Nt
};

std::complex<double> gauss_sum(const PeriodicCharacter& chi, std::int64_t a);

// Cesaro mean of the first `terms` partial sums of sum m^{-s} gauss_sum(chi, m).
std::complex<double> lvalue_numeric(const PeriodicCharacter& chi, int s, std::int64_t terms);

}  // namespace cyclelift::qseries
