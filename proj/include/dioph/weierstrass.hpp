#pragma once

#include <utility>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

// Affine point or the distinguished point at infinity.  Pure value type; the
// curve it belongs to is whichever LongWeierstrass you hand it to, and every
// group-law entry point checks membership before doing algebra.
class CurvePoint {
  public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(Rational x, Rational y) {
        CurvePoint p;
        p.inf_ = false;
        p.x_ = std::move(x);
        p.y_ = std::move(y);
        return p;
    }

    bool is_infinity() const { return inf_; }
    const Rational& x() const {
        if (inf_) throw contract_error("point at infinity has no x");
        return x_;
    }
    const Rational& y() const {
        if (inf_) throw contract_error("point at infinity has no y");
        return y_;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

  private:
    CurvePoint() = default;
    bool inf_ = true;
    Rational x_, y_;
};

// y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over Q, nonsingular.
class LongWeierstrass {
  public:
    LongWeierstrass(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
        : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
          a6_(std::move(a6)) {
        if (discriminant() == 0) throw contract_error("singular curve");
    }

    const Rational& a1() const { return a1_; }
    const Rational& a2() const { return a2_; }
    const Rational& a3() const { return a3_; }
    const Rational& a4() const { return a4_; }
    const Rational& a6() const { return a6_; }

    Rational discriminant() const {
        Rational b2 = a1_ * a1_ + 4 * a2_;
        Rational b4 = 2 * a4_ + a1_ * a3_;
        Rational b6 = a3_ * a3_ + 4 * a6_;
        Rational b8 = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
                      a4_ * a4_;
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    }

    bool contains(const CurvePoint& p) const {
        if (p.is_infinity()) return true;
        const Rational &x = p.x(), &y = p.y();
        return y * y + a1_ * x * y + a3_ * y == x * x * x + a2_ * x * x + a4_ * x + a6_;
    }

    CurvePoint negate(const CurvePoint& p) const {
        require_on_curve(p, "negate");
        return negate_unchecked(p);
    }

    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const {
        require_on_curve(p, "add");
        require_on_curve(q, "add");
        return add_unchecked(p, q);
    }

    CurvePoint dbl(const CurvePoint& p) const {
        require_on_curve(p, "dbl");
        return add_unchecked(p, p);
    }

    CurvePoint scalar_mul(Int n, const CurvePoint& p) const {
        require_on_curve(p, "scalar_mul");
        CurvePoint base = n < 0 ? negate_unchecked(p) : p;
        if (n < 0) n = -n;
        CurvePoint acc = CurvePoint::infinity();
        while (n > 0) {
            if ((n & 1) != 0) acc = add_unchecked(acc, base);
            base = add_unchecked(base, base);
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const LongWeierstrass& a, const LongWeierstrass& b) {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ &&
               a.a6_ == b.a6_;
    }
    friend bool operator!=(const LongWeierstrass& a, const LongWeierstrass& b) {
        return !(a == b);
    }

  private:
    void require_on_curve(const CurvePoint& p, const char* op) const {
        if (!contains(p)) throw contract_error(std::string(op) + ": point not on this curve");
    }

    CurvePoint negate_unchecked(const CurvePoint& p) const {
        if (p.is_infinity()) return p;
        return CurvePoint::affine(p.x(), -p.y() - a1_ * p.x() - a3_);
    }

    CurvePoint add_unchecked(const CurvePoint& p, const CurvePoint& q) const {
        if (p.is_infinity()) return q;
        if (q.is_infinity()) return p;
        const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
        Rational lambda, nu;
        if (x1 == x2) {
            if (y1 + y2 + a1_ * x2 + a3_ == 0) return CurvePoint::infinity();
            // p == q with nonvanishing tangent denominator
            Rational den = 2 * y1 + a1_ * x1 + a3_;
            lambda = (3 * x1 * x1 + 2 * a2_ * x1 + a4_ - a1_ * y1) / den;
            nu = (-x1 * x1 * x1 + a4_ * x1 + 2 * a6_ - a3_ * y1) / den;
        } else {
            lambda = (y2 - y1) / (x2 - x1);
            nu = y1 - lambda * x1;
        }
        Rational x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
        Rational y3 = -(lambda + a1_) * x3 - nu - a3_;
        return CurvePoint::affine(std::move(x3), std::move(y3));
    }

    Rational a1_, a2_, a3_, a4_, a6_;
};

// Substituting y -> m - (a1*x + a3)/2 kills the cross terms:
// m^2 = x^3 + (a2 + a1^2/4)x^2 + (a4 + a1*a3/2)x + (a6 + a3^2/4).
// forward/inverse are mutually inverse bijections on points and commute with
// the group law.
class SquareCompletion {
  public:
    explicit SquareCompletion(LongWeierstrass source)
        : source_(std::move(source)),
          completed_(Rational(0), source_.a2() + source_.a1() * source_.a1() / 4, Rational(0),
                     source_.a4() + source_.a1() * source_.a3() / 2,
                     source_.a6() + source_.a3() * source_.a3() / 4) {}

    const LongWeierstrass& source() const { return source_; }
    const LongWeierstrass& curve() const { return completed_; }

    CurvePoint forward(const CurvePoint& p) const {
        if (!source_.contains(p)) throw contract_error("complete_square: point not on source");
        if (p.is_infinity()) return p;
        return CurvePoint::affine(p.x(),
                                  p.y() + (source_.a1() * p.x() + source_.a3()) / 2);
    }

    CurvePoint inverse(const CurvePoint& p) const {
        if (!completed_.contains(p))
            throw contract_error("complete_square: point not on completed curve");
        if (p.is_infinity()) return p;
        return CurvePoint::affine(p.x(),
                                  p.y() - (source_.a1() * p.x() + source_.a3()) / 2);
    }

  private:
    LongWeierstrass source_;
    LongWeierstrass completed_;
};

inline SquareCompletion complete_square(LongWeierstrass curve) {
    return SquareCompletion(std::move(curve));
}

// Every affine point with x = m/n, |m| <= num_bound, 1 <= n <= den_bound,
// gcd(m,n) = 1.  Order: n ascending, then m ascending, +y branch before -y.
inline std::vector<CurvePoint> naive_search(const LongWeierstrass& curve, const Int& num_bound,
                                            const Int& den_bound) {
    if (num_bound < 0 || den_bound < 1) throw contract_error("naive_search: bad bounds");
    std::vector<CurvePoint> out;
    for (Int n = 1; n <= den_bound; ++n) {
        for (Int m = -num_bound; m <= num_bound; ++m) {
            if (gcd(boost::multiprecision::abs(m), n) != 1) continue;
            Rational x = make_rational(m, n);
            Rational shift = (curve.a1() * x + curve.a3()) / 2;
            Rational rhs = x * x * x + curve.a2() * x * x + curve.a4() * x + curve.a6() +
                           shift * shift;
            auto r = rational_sqrt(rhs);
            if (!r) continue;
            out.push_back(CurvePoint::affine(x, *r - shift));
            if (*r != 0) out.push_back(CurvePoint::affine(x, -*r - shift));
        }
    }
    return out;
}

} // namespace dioph
