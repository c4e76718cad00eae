#pragma once

#include <utility>

#include "dioph/weierstrass.hpp"

namespace dioph {

struct QuarticPoint {
    Rational u, v;
    friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

// v^2 = a*u^4 + b*u^3 + c*u^2 + d*u + e with a != 0.
class Quartic {
  public:
    Quartic(Rational a, Rational b, Rational c, Rational d, Rational e)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
          e_(std::move(e)) {
        if (a_ == 0) throw contract_error("quartic leading coefficient must be nonzero");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    const Rational& e() const { return e_; }

    Rational eval(const Rational& u) const {
        return (((a_ * u + b_) * u + c_) * u + d_) * u + e_;
    }

    bool contains(const QuarticPoint& p) const { return p.v * p.v == eval(p.u); }

    friend bool operator==(const Quartic& l, const Quartic& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_ && l.e_ == r.e_;
    }
    friend bool operator!=(const Quartic& l, const Quartic& r) { return !(l == r); }

  private:
    Rational a_, b_, c_, d_, e_;
};

// Recenter the variable: coefficients of the same quartic written in
// T = u - u0.  If (u0, v0) lies on the input, the output's constant term is
// v0^2 — a square, which is what to_cubic needs.
inline Quartic shift_by_point(const Quartic& q, const Rational& u0) {
    const Rational &a = q.a(), &b = q.b(), &c = q.c(), &d = q.d();
    return Quartic(a, 4 * a * u0 + b, (6 * a * u0 + 3 * b) * u0 + c,
                   ((4 * a * u0 + 3 * b) * u0 + 2 * c) * u0 + d, q.eval(u0));
}

inline Quartic shift_by_point(const Quartic& q, const QuarticPoint& p) {
    if (!q.contains(p)) throw contract_error("shift_by_point: point not on quartic");
    return shift_by_point(q, p.u);
}

namespace detail {

inline void require_root(const Quartic& q, const Rational& root, const char* op) {
    if (root <= 0 || root * root != q.e())
        throw contract_error(std::string(op) + ": root is not the positive square root of the constant term");
}

} // namespace detail

// The birational model: v^2 = quartic(u) with constant term q^2 maps to
//   y^2 + (d/q)xy + 2qb*y = x^3 + a2*x^2 - 4q^2*a*x + a2*(-4q^2*a),
// a2 = c - d^2/(4q^2).  Returns the curve and the chosen positive root q.
inline std::pair<LongWeierstrass, Rational> to_cubic(const Quartic& q) {
    auto root = rational_sqrt(q.e());
    if (!root || *root == 0)
        throw not_square_error(
            "quartic constant term is not a nonzero rational square; shift to a known point first");
    const Rational& r = *root;
    Rational a1 = q.d() / r;
    Rational a2 = q.c() - q.d() * q.d() / (4 * r * r);
    Rational a3 = 2 * r * q.b();
    Rational a4 = -4 * r * r * q.a();
    Rational a6 = a2 * a4;
    return {LongWeierstrass(a1, a2, std::move(a3), a4, std::move(a6)), r};
}

// x = (2q(v+q) + du)/u^2,  y = (4q^2(v+q) + 2q(du + cu^2) - d^2u^2/(2q))/u^3.
// The two u = 0 points are exceptional: (0, q) is the point at infinity and
// (0, -q) is (-a2, a1*a2 - a3).
inline CurvePoint quartic_to_cubic_point(const Quartic& q, const Rational& root,
                                         const QuarticPoint& p) {
    detail::require_root(q, root, "quartic_to_cubic_point");
    if (!q.contains(p)) throw contract_error("quartic_to_cubic_point: point not on quartic");
    const Rational &u = p.u, &v = p.v, &c = q.c(), &d = q.d();
    if (u == 0) {
        if (v == root) return CurvePoint::infinity();
        Rational a1 = d / root;
        Rational a2 = c - d * d / (4 * root * root);
        Rational a3 = 2 * root * q.b();
        return CurvePoint::affine(-a2, a1 * a2 - a3);
    }
    Rational x = (2 * root * (v + root) + d * u) / (u * u);
    Rational y = (4 * root * root * (v + root) + 2 * root * (d * u + c * u * u) -
                  d * d * u * u / (2 * root)) /
                 (u * u * u);
    CurvePoint out = CurvePoint::affine(std::move(x), std::move(y));
    if (!to_cubic(q).first.contains(out))
        throw internal_error("quartic_to_cubic_point: image fell off the curve");
    return out;
}

// u = (2q(x+c) - d^2/(2q))/y,  v = -q + u(ux - d)/(2q).  Needs an affine
// point with y != 0; infinity and the y = 0 points have no preimage here.
inline QuarticPoint cubic_to_quartic_point(const Quartic& q, const Rational& root,
                                           const CurvePoint& p) {
    detail::require_root(q, root, "cubic_to_quartic_point");
    if (p.is_infinity() || p.y() == 0)
        throw exceptional_point_error("cubic_to_quartic_point: no affine preimage at this point");
    if (!to_cubic(q).first.contains(p))
        throw contract_error("cubic_to_quartic_point: point not on the quartic's cubic");
    Rational u = (2 * root * (p.x() + q.c()) - q.d() * q.d() / (2 * root)) / p.y();
    Rational v = -root + u * (u * p.x() - q.d()) / (2 * root);
    QuarticPoint out{std::move(u), std::move(v)};
    if (!q.contains(out)) throw internal_error("cubic_to_quartic_point: image fell off the quartic");
    return out;
}

} // namespace dioph
