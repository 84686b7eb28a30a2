#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cyclelift::padic {

// Working data for o_{k,p} = Z_p[delta], delta^2 = Delta, p inert.
// Small and trivially copyable so elements can carry it by value.
struct LocalContext {
    std::int64_t p = 0;
    std::int64_t delta_sq = 0;
    int precision = 0;
    std::int64_t modulus = 0;  // p^precision

    // Validates p odd prime, Delta a non-residue mod p, precision >= 8 and
    // p^precision < 2^62.
    static LocalContext make(std::int64_t p, std::int64_t delta_sq, int precision);

    // Largest precision whose modulus stays below 2^62.
    static int max_precision(std::int64_t p);

    // 2 (t_max + radius) + 8, overridden by CYCLELIFT_PRECISION when set,
    // then clamped to max_precision.
    static int default_precision(std::int64_t p, int t_max, int radius);

    std::int64_t pow(int k) const;  // p^k, 0 <= k <= precision
    bool operator==(const LocalContext& o) const { return p == o.p && delta_sq == o.delta_sq && precision == o.precision; }
};

// Lower bound on a valuation. exact=false means the element is zero to the
// known precision and v is that precision.
struct ValBound {
    int v;
    bool exact;
};

// x + y*delta known modulo p^prec.
class QuadLocalElem {
public:
    QuadLocalElem() = default;
    static QuadLocalElem from_ints(const LocalContext& ctx, std::int64_t x, std::int64_t y = 0);
    static QuadLocalElem zero(const LocalContext& ctx) { return from_ints(ctx, 0, 0); }
    static QuadLocalElem one(const LocalContext& ctx) { return from_ints(ctx, 1, 0); }
    static QuadLocalElem delta(const LocalContext& ctx) { return from_ints(ctx, 0, 1); }
    // Residues taken mod p^prec; prec capped at ctx.precision.
    static QuadLocalElem from_residues(const LocalContext& ctx, std::int64_t x, std::int64_t y, int prec);

    const LocalContext& ctx() const { return ctx_; }
    std::int64_t x() const { return x_; }
    std::int64_t y() const { return y_; }
    int prec() const { return prec_; }

    ValBound val_bound() const;
    int valuation() const;  // throws PrecisionExhausted when zero to precision
    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }
    // Signed representative of x in (-p^prec/2, p^prec/2].
    std::int64_t x_signed() const;
    std::int64_t y_signed() const;

    QuadLocalElem conj() const;
    QuadLocalElem norm() const;  // e * conj(e), y component zero
    QuadLocalElem unit_inverse() const;
    QuadLocalElem mul_p_pow(int k) const;  // exact multiplication by p^k
    QuadLocalElem div_p_pow(int k) const;  // exact division, needs val >= k
    QuadLocalElem truncate(int prec) const;
    // Unit part e / p^val(e).
    QuadLocalElem unit_part() const;

    QuadLocalElem operator-() const;
    friend QuadLocalElem operator+(const QuadLocalElem& a, const QuadLocalElem& b);
    friend QuadLocalElem operator-(const QuadLocalElem& a, const QuadLocalElem& b);
    friend QuadLocalElem operator*(const QuadLocalElem& a, const QuadLocalElem& b);

    // Equal modulo p^min(prec).
    bool agrees_with(const QuadLocalElem& o) const;

    std::string to_string() const;

private:
    LocalContext ctx_{};
    std::int64_t x_ = 0;
    std::int64_t y_ = 0;
    int prec_ = 0;
};

// p^{-denom_exp} (a0 v0 + a1 v1) with h(v0, v1) = delta, v0 and v1 isotropic.
class VectorC {
public:
    VectorC() = default;
    VectorC(QuadLocalElem a0, QuadLocalElem a1, int denom_exp = 0);
    static VectorC from_ints(const LocalContext& ctx, std::int64_t x0, std::int64_t y0, std::int64_t x1,
                             std::int64_t y1, int denom_exp = 0);

    const QuadLocalElem& a0() const { return a0_; }
    const QuadLocalElem& a1() const { return a1_; }
    int denom_exp() const { return e_; }
    const LocalContext& ctx() const { return a0_.ctx(); }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }

    // p^k * this; never loses precision.
    VectorC scaled_p(int k) const { return VectorC(a0_, a1_, e_ - k, raw_tag{}); }
    VectorC scaled(const QuadLocalElem& s) const;
    friend VectorC operator+(const VectorC& u, const VectorC& v);
    friend VectorC operator-(const VectorC& u, const VectorC& v);

    bool agrees_with(const VectorC& o) const;
    std::string to_string() const;

private:
    struct raw_tag {};
    VectorC(QuadLocalElem a0, QuadLocalElem a1, int e, raw_tag) : a0_(a0), a1_(a1), e_(e) {}
    void normalize();

    QuadLocalElem a0_, a1_;
    int e_ = 0;
};

// p^exp * value
struct ScaledElem {
    QuadLocalElem value;
    int exp;
};

ScaledElem herm(const VectorC& u, const VectorC& v);

struct QformValue {
    std::optional<int> valuation;  // nullopt: isotropic to working precision
    std::int64_t unit_residue = 0;  // unit part of q mod p, in [1, p)
};

QformValue qform(const VectorC& b);
// Exact valuation of q(b); DegenerateVector when isotropic.
int ord_q(const VectorC& b);

VectorC epsilon(const VectorC& b);

}  // namespace cyclelift::padic
