#include "cyclelift/padic.hpp"

#include <algorithm>
#include <cstdlib>

#include "cyclelift/errors.hpp"
#include "cyclelift/numth.hpp"

namespace cyclelift::padic {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kModulusLimit = std::int64_t{1} << 62;

std::int64_t mod_pos(i128 v, std::int64_t m) {
    i128 r = v % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

int vp_residue(std::int64_t x, std::int64_t p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    // extended Euclid on (a, m); a is a unit mod m
    i128 r0 = m, r1 = mod_pos(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const i128 q = r0 / r1;
        i128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw Error("inverse_mod: not a unit");
    return mod_pos(s0, m);
}

}  // namespace

// ---------------------------------------------------------------- context

int LocalContext::max_precision(std::int64_t p) {
    int k = 0;
    std::int64_t m = 1;
    while (m <= (kModulusLimit - 1) / p) {
        m *= p;
        ++k;
    }
    return k;
}

int LocalContext::default_precision(std::int64_t p, int t_max, int radius) {
    int n = 2 * (std::max(t_max, 0) + std::max(radius, 0)) + 8;
    if (const char* env = std::getenv("CYCLELIFT_PRECISION"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 8)
            throw HypothesisViolation("CYCLELIFT_PRECISION must be an integer >= 8");
        n = static_cast<int>(v);
    }
    return std::min(n, max_precision(p));
}

LocalContext LocalContext::make(std::int64_t p, std::int64_t delta_sq, int precision) {
    if (p <= 2 || !numth::is_prime(p)) throw HypothesisViolation("local context: p must be an odd prime");
    if (numth::kronecker(delta_sq, p) != -1)
        throw HypothesisViolation("local context: p=" + std::to_string(p) + " is not inert for delta^2=" +
                                  std::to_string(delta_sq));
    if (precision < 8) throw HypothesisViolation("local context: precision must be >= 8");
    if (precision > max_precision(p))
        throw PrecisionExhausted("local context: p^precision does not fit in 62 bits", precision);
    LocalContext c;
    c.p = p;
    c.delta_sq = delta_sq;
    c.precision = precision;
    c.modulus = numth::ipow(p, precision);
    return c;
}

std::int64_t LocalContext::pow(int k) const {
    if (k < 0 || k > precision) throw PrecisionExhausted("p-power outside working precision", k);
    return numth::ipow(p, k);
}

// ---------------------------------------------------------------- elements

QuadLocalElem QuadLocalElem::from_residues(const LocalContext& ctx, std::int64_t x, std::int64_t y, int prec) {
    QuadLocalElem e;
    e.ctx_ = ctx;
    e.prec_ = std::clamp(prec, 0, ctx.precision);
    const std::int64_t m = numth::ipow(ctx.p, e.prec_);
    e.x_ = mod_pos(x, m);
    e.y_ = mod_pos(y, m);
    return e;
}

QuadLocalElem QuadLocalElem::from_ints(const LocalContext& ctx, std::int64_t x, std::int64_t y) {
    return from_residues(ctx, x, y, ctx.precision);
}

ValBound QuadLocalElem::val_bound() const {
    const int v = std::min(vp_residue(x_, ctx_.p, prec_), vp_residue(y_, ctx_.p, prec_));
    return {v, v < prec_};
}

int QuadLocalElem::valuation() const {
    const ValBound b = val_bound();
    if (!b.exact) throw PrecisionExhausted("valuation undecidable: element is zero to precision", prec_ + 1);
    return b.v;
}

std::int64_t QuadLocalElem::x_signed() const {
    const std::int64_t m = numth::ipow(ctx_.p, prec_);
    return x_ > m / 2 ? x_ - m : x_;
}

std::int64_t QuadLocalElem::y_signed() const {
    const std::int64_t m = numth::ipow(ctx_.p, prec_);
    return y_ > m / 2 ? y_ - m : y_;
}

QuadLocalElem QuadLocalElem::conj() const { return from_residues(ctx_, x_, -y_, prec_); }

QuadLocalElem QuadLocalElem::norm() const { return *this * conj(); }

QuadLocalElem QuadLocalElem::unit_inverse() const {
    if (val_bound().v != 0 || prec_ == 0) throw Error("unit_inverse: element is not a unit");
    const QuadLocalElem n = norm();
    const std::int64_t m = numth::ipow(ctx_.p, n.prec_);
    const std::int64_t ninv = inverse_mod(n.x_, m);
    return conj() * from_residues(ctx_, ninv, 0, n.prec_);
}

QuadLocalElem QuadLocalElem::mul_p_pow(int k) const {
    if (k < 0) return div_p_pow(-k);
    const int np = std::min(prec_ + k, ctx_.precision);
    if (k >= np) return from_residues(ctx_, 0, 0, np);
    const std::int64_t pk = numth::ipow(ctx_.p, k);
    const std::int64_t m = numth::ipow(ctx_.p, np);
    QuadLocalElem e;
    e.ctx_ = ctx_;
    e.prec_ = np;
    e.x_ = mod_pos(static_cast<i128>(x_) * pk, m);
    e.y_ = mod_pos(static_cast<i128>(y_) * pk, m);
    return e;
}

QuadLocalElem QuadLocalElem::div_p_pow(int k) const {
    if (k <= 0) return mul_p_pow(-k);
    if (prec_ < k) throw PrecisionExhausted("exact division by p^k below precision", k + 1);
    const std::int64_t pk = numth::ipow(ctx_.p, k);
    if (x_ % pk != 0 || y_ % pk != 0) throw Error("div_p_pow: element not divisible by p^k");
    return from_residues(ctx_, x_ / pk, y_ / pk, prec_ - k);
}

QuadLocalElem QuadLocalElem::truncate(int prec) const { return from_residues(ctx_, x_, y_, std::min(prec, prec_)); }

QuadLocalElem QuadLocalElem::unit_part() const { return div_p_pow(valuation()); }

QuadLocalElem QuadLocalElem::operator-() const { return from_residues(ctx_, -x_, -y_, prec_); }

QuadLocalElem operator+(const QuadLocalElem& a, const QuadLocalElem& b) {
    return QuadLocalElem::from_residues(a.ctx_, a.x_ + b.x_, a.y_ + b.y_, std::min(a.prec_, b.prec_));
}

QuadLocalElem operator-(const QuadLocalElem& a, const QuadLocalElem& b) {
    return QuadLocalElem::from_residues(a.ctx_, a.x_ - b.x_, a.y_ - b.y_, std::min(a.prec_, b.prec_));
}

QuadLocalElem operator*(const QuadLocalElem& a, const QuadLocalElem& b) {
    const LocalContext& c = a.ctx_;
    const int va = a.val_bound().v;
    const int vb = b.val_bound().v;
    const int np = std::min({a.prec_ + vb, b.prec_ + va, c.precision});
    const std::int64_t m = numth::ipow(c.p, np);
    const i128 xx = static_cast<i128>(a.x_) * b.x_ % m;
    const i128 yy = static_cast<i128>(a.y_) * b.y_ % m;
    const i128 xy = static_cast<i128>(a.x_) * b.y_ % m;
    const i128 yx = static_cast<i128>(a.y_) * b.x_ % m;
    QuadLocalElem e;
    e.ctx_ = c;
    e.prec_ = np;
    e.x_ = mod_pos(xx + yy * c.delta_sq, m);
    e.y_ = mod_pos(xy + yx, m);
    return e;
}

bool QuadLocalElem::agrees_with(const QuadLocalElem& o) const { return (*this - o).is_zero(); }

std::string QuadLocalElem::to_string() const {
    return std::to_string(x_signed()) + (y_signed() < 0 ? "" : "+") + std::to_string(y_signed()) + "d";
}

// ---------------------------------------------------------------- vectors

VectorC::VectorC(QuadLocalElem a0, QuadLocalElem a1, int denom_exp) : a0_(a0), a1_(a1), e_(denom_exp) {
    normalize();
}

VectorC VectorC::from_ints(const LocalContext& ctx, std::int64_t x0, std::int64_t y0, std::int64_t x1,
                           std::int64_t y1, int denom_exp) {
    return VectorC(QuadLocalElem::from_ints(ctx, x0, y0), QuadLocalElem::from_ints(ctx, x1, y1), denom_exp);
}

void VectorC::normalize() {
    const ValBound b0 = a0_.val_bound();
    const ValBound b1 = a1_.val_bound();
    if (!b0.exact && !b1.exact) return;  // zero vector, left as is
    int m;
    if (b0.exact && b1.exact) {
        m = std::min(b0.v, b1.v);
    } else {
        const ValBound& ex = b0.exact ? b0 : b1;
        const ValBound& in = b0.exact ? b1 : b0;
        if (in.v < ex.v)
            throw PrecisionExhausted("vector normalization: coordinate valuation undecidable", ex.v + 1);
        m = ex.v;
    }
    if (m == 0) return;
    a0_ = a0_.div_p_pow(m);
    a1_ = a1_.div_p_pow(m);
    e_ -= m;
}

VectorC VectorC::scaled(const QuadLocalElem& s) const { return VectorC(s * a0_, s * a1_, e_); }

VectorC operator+(const VectorC& u, const VectorC& v) {
    const int e = std::max(u.e_, v.e_);
    return VectorC(u.a0_.mul_p_pow(e - u.e_) + v.a0_.mul_p_pow(e - v.e_),
                   u.a1_.mul_p_pow(e - u.e_) + v.a1_.mul_p_pow(e - v.e_), e);
}

VectorC operator-(const VectorC& u, const VectorC& v) {
    return u + VectorC(-v.a0_, -v.a1_, v.e_, VectorC::raw_tag{});
}

bool VectorC::agrees_with(const VectorC& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return e_ == o.e_ && a0_.agrees_with(o.a0_) && a1_.agrees_with(o.a1_);
}

std::string VectorC::to_string() const {
    std::string s = "(" + a0_.to_string() + ", " + a1_.to_string() + ")";
    if (e_ != 0) s += "/p^" + std::to_string(e_);
    return s;
}

ScaledElem herm(const VectorC& u, const VectorC& v) {
    const QuadLocalElem d = QuadLocalElem::delta(u.ctx());
    const QuadLocalElem inner = u.a0() * v.a1().conj() - u.a1() * v.a0().conj();
    return {d * inner, -(u.denom_exp() + v.denom_exp())};
}

QformValue qform(const VectorC& b) {
    const ScaledElem q = herm(b, b);
    const ValBound vb = q.value.val_bound();
    if (!vb.exact) return {std::nullopt, 0};
    const QuadLocalElem u = q.value.div_p_pow(vb.v);
    return {vb.v + q.exp, u.x() % b.ctx().p};
}

int ord_q(const VectorC& b) {
    const QformValue q = qform(b);
    if (!q.valuation) throw DegenerateVector("vector " + b.to_string() + " is isotropic to working precision");
    return *q.valuation;
}

VectorC epsilon(const VectorC& b) { return VectorC(b.a0().conj(), b.a1().conj(), b.denom_exp()); }

}  // namespace cyclelift::padic
