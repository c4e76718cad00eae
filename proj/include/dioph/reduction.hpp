#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dioph/quartic.hpp"

namespace dioph {

// One summand coeff * value^exp.  Problems allow exp = 0 (constants, with
// 0^0 = 1); solutions always carry exp >= 1.
struct Term {
    Rational coeff;
    int exp = 0;
    Rational value;
    friend bool operator==(const Term&, const Term&) = default;
};

inline Rational term_sum(const std::vector<Term>& terms) {
    Rational s(0);
    for (const Term& t : terms) {
        if (t.exp < 0) throw std::invalid_argument("term exponent must be nonnegative");
        s += t.coeff * rat_pow(t.value, static_cast<unsigned>(t.exp));
    }
    return s;
}

inline bool identity_holds(const std::vector<Term>& lhs, const std::vector<Term>& rhs) {
    return term_sum(lhs) == term_sum(rhs);
}

// X^3 + Y^3 + Z^3 + a*U^k = sum of coeff_i * value_i^exp_i, with the Z slot
// pinned to the chosen z and the right-hand values pinned to the given ones.
struct DEProblem {
    Rational a;
    int k = 3;
    Rational z;
    std::vector<Term> terms;

    void validate() const {
        if (a == 0) throw std::invalid_argument("problem: a must be nonzero");
        if (z == 0) throw std::invalid_argument("problem: z must be nonzero");
        if (k != 3 && k != 4) throw std::invalid_argument("problem: k must be 3 or 4");
        for (const Term& t : terms)
            if (t.exp < 0) throw std::invalid_argument("problem: exponents must be >= 0");
    }
};

// The cubes-equal-fifth-powers family: Y1 = t+v, Y2 = t-v, Y3 = beta*t on one
// side, X1 = t+x1, X2 = t-x1, X3 = alpha*t on the other.
struct CubesFifthsParams {
    Rational x1, alpha, beta;
};

struct RationalSolution {
    std::vector<Term> lhs, rhs;
    std::string provenance;
    bool trivial = false;
};

namespace detail {

inline bool is_degenerate(const std::vector<Term>& lhs, const std::vector<Term>& rhs) {
    for (const Term& t : lhs) {
        if (t.value == 0) return true;
        for (const Term& r : rhs)
            if (t == r) return true;
    }
    for (const Term& r : rhs)
        if (r.value == 0) return true;
    return false;
}

inline RationalSolution make_solution(std::vector<Term> lhs, std::vector<Term> rhs,
                                      std::string provenance) {
    for (const Term& t : lhs)
        if (t.exp < 1) throw contract_error("solution terms need positive exponents");
    for (const Term& t : rhs)
        if (t.exp < 1) throw contract_error("solution terms need positive exponents");
    if (!identity_holds(lhs, rhs))
        throw internal_error("mapped point does not satisfy its identity: " + provenance);
    RationalSolution s;
    s.trivial = is_degenerate(lhs, rhs);
    s.lhs = std::move(lhs);
    s.rhs = std::move(rhs);
    s.provenance = std::move(provenance);
    return s;
}

// Problem terms reappear verbatim on a solution's right side, except that
// exp-0 constants c*value^0 = c become c*1^1 so the solution invariant
// (positive exponents) holds with the same sum.
inline std::vector<Term> solution_rhs(const DEProblem& p) {
    std::vector<Term> out;
    out.reserve(p.terms.size());
    for (const Term& t : p.terms)
        out.push_back(t.exp == 0 ? Term{t.coeff, 1, Rational(1)} : t);
    return out;
}

} // namespace detail

inline Rational rhs_sum(const DEProblem& p) { return term_sum(p.terms); }

// k=3 reduction: y^2 = x^3 + H with H = -a^2/216 - a^2*S/(216*z^3).
inline LongWeierstrass build_k3(const DEProblem& p) {
    p.validate();
    if (p.k != 3) throw contract_error("build_k3: problem has k != 3");
    Rational a2 = p.a * p.a;
    Rational H = -a2 / 216 - a2 * rhs_sum(p) / (216 * rat_pow(p.z, 3));
    return LongWeierstrass(Rational(0), Rational(0), Rational(0), Rational(0), std::move(H));
}

// Inverse substitution t = -6zy/a, U = 6zx/a, then X = -z+t, Y = -z-t.
inline RationalSolution k3_point_to_solution(const DEProblem& p, const CurvePoint& pt) {
    LongWeierstrass curve = build_k3(p);
    if (pt.is_infinity())
        throw exceptional_point_error("k3: point at infinity yields no solution");
    if (!curve.contains(pt)) throw contract_error("k3: point not on the reduced curve");
    Rational t = -6 * p.z * pt.y() / p.a;
    Rational U = 6 * p.z * pt.x() / p.a;
    Rational X = -p.z + t, Y = -p.z - t;
    std::vector<Term> lhs{{Rational(1), 3, std::move(X)},
                          {Rational(1), 3, std::move(Y)},
                          {Rational(1), 3, p.z},
                          {p.a, 3, std::move(U)}};
    return detail::make_solution(std::move(lhs), detail::solution_rhs(p),
                                 "k3:Z=" + to_string(p.z) + ":(" + to_string(pt.x()) + "," +
                                     to_string(pt.y()) + ")");
}

// k=4 reduction, quartic model: t^2 = (a/6z)U^4 + Q, Q = -z^2/6 - S/(6z).
inline Quartic build_k4_quartic(const DEProblem& p) {
    p.validate();
    if (p.k != 4) throw contract_error("build_k4_quartic: problem has k != 4");
    Rational Q = -p.z * p.z / 6 - rhs_sum(p) / (6 * p.z);
    return Quartic(p.a / (6 * p.z), Rational(0), Rational(0), Rational(0), std::move(Q));
}

// k=4 reduction, cubic model (only when Q is a nonzero square):
// y^2 = x^3 + (az/9 + aS/(9z^2))x, together with q = +sqrt(Q).
inline std::pair<LongWeierstrass, Rational> build_k4_cubic(const DEProblem& p) {
    p.validate();
    if (p.k != 4) throw contract_error("build_k4_cubic: problem has k != 4");
    Rational S = rhs_sum(p);
    Rational Q = -p.z * p.z / 6 - S / (6 * p.z);
    auto q = rational_sqrt(Q);
    if (!q || *q == 0)
        throw not_square_error("k4: Q = " + to_string(Q) +
                               " is not a nonzero rational square; supply a quartic point and shift");
    Rational a4 = p.a * p.z / 9 + p.a * S / (9 * p.z * p.z);
    return {LongWeierstrass(Rational(0), Rational(0), Rational(0), std::move(a4), Rational(0)),
            std::move(*q)};
}

// Inverse maps U = 2qx/y, t = -q + U^2 x/(2q), then X = -z+t, Y = -z-t.
inline RationalSolution k4_point_to_solution(const DEProblem& p, const Rational& q,
                                             const CurvePoint& pt) {
    auto [curve, root] = build_k4_cubic(p);
    if (q != root) throw contract_error("k4: q is not this problem's positive square root of Q");
    if (pt.is_infinity() || pt.y() == 0)
        throw exceptional_point_error("k4: inverse map undefined at infinity / y = 0");
    if (!curve.contains(pt)) throw contract_error("k4: point not on the reduced curve");
    Rational U = 2 * q * pt.x() / pt.y();
    Rational t = -q + U * U * pt.x() / (2 * q);
    Rational X = -p.z + t, Y = -p.z - t;
    std::vector<Term> lhs{{Rational(1), 3, std::move(X)},
                          {Rational(1), 3, std::move(Y)},
                          {Rational(1), 3, p.z},
                          {p.a, 4, std::move(U)}};
    return detail::make_solution(std::move(lhs), detail::solution_rhs(p),
                                 "k4:Z=" + to_string(p.z) + ":(" + to_string(pt.x()) + "," +
                                     to_string(pt.y()) + ")");
}

// Non-square Q still reduces if the quartic has a known rational point: shift
// the quartic there (forcing a square constant term) and use the general
// quartic-to-cubic transformation.  seed is the exceptional image of
// (T, t) = (0, -q), the natural starting point for multiples.
struct K4ShiftReduction {
    Quartic model;    // t^2 = (a/6z)U^4 + Q
    Quartic shifted;  // same curve recentered at U = u0
    Rational u0;
    LongWeierstrass curve;
    Rational q;
    CurvePoint seed;
};

inline K4ShiftReduction build_k4_via_shift(const DEProblem& p, const QuarticPoint& known) {
    Quartic model = build_k4_quartic(p);
    if (!model.contains(known))
        throw contract_error("k4 shift: supplied point is not on the quartic model");
    if (known.v == 0)
        throw contract_error("k4 shift: point with t = 0 gives a zero constant term");
    Quartic shifted = shift_by_point(model, known.u);
    auto [curve, q] = to_cubic(shifted);
    CurvePoint seed = quartic_to_cubic_point(shifted, q, QuarticPoint{Rational(0), -q});
    return {std::move(model), std::move(shifted), known.u, std::move(curve), std::move(q),
            std::move(seed)};
}

inline RationalSolution k4_shift_point_to_solution(const DEProblem& p,
                                                   const K4ShiftReduction& red,
                                                   const CurvePoint& pt) {
    QuarticPoint tp = cubic_to_quartic_point(red.shifted, red.q, pt);
    Rational U = tp.u + red.u0;
    const Rational& t = tp.v;
    if (!red.model.contains(QuarticPoint{U, t}))
        throw internal_error("k4 shift: unshifted point fell off the quartic model");
    Rational X = -p.z + t, Y = -p.z - t;
    std::vector<Term> lhs{{Rational(1), 3, std::move(X)},
                          {Rational(1), 3, std::move(Y)},
                          {Rational(1), 3, p.z},
                          {p.a, 4, std::move(U)}};
    return detail::make_solution(std::move(lhs), detail::solution_rhs(p),
                                 "k4shift:Z=" + to_string(p.z) + ":(" + to_string(pt.x()) + "," +
                                     to_string(pt.y()) + ")");
}

// v^2 = ((2+alpha^5)/6) t^4 + ((20 x1^2 - 2 - beta^3)/6) t^2 + (5/3) x1^4.
inline Quartic build_cubes_fifths(const CubesFifthsParams& cp) {
    Rational a = (2 + rat_pow(cp.alpha, 5)) / 6;
    Rational c = (20 * cp.x1 * cp.x1 - 2 - rat_pow(cp.beta, 3)) / 6;
    Rational e = Rational(5, 3) * rat_pow(cp.x1, 4);
    return Quartic(std::move(a), Rational(0), std::move(c), Rational(0), std::move(e));
}

// Any (t, v) on the quartic with t != 0 gives three cubes equal to three
// fifth powers.
inline RationalSolution cubes_fifths_point_to_solution(const CubesFifthsParams& cp,
                                                       const QuarticPoint& pt) {
    const Rational &t = pt.u, &v = pt.v;
    if (t == 0) throw exceptional_point_error("cubes_fifths: t = 0 is degenerate");
    Quartic quartic = build_cubes_fifths(cp);
    if (!quartic.contains(pt))
        throw contract_error("cubes_fifths: point not on the family quartic");
    std::vector<Term> lhs{{Rational(1), 3, t + v},
                          {Rational(1), 3, t - v},
                          {Rational(1), 3, cp.beta * t}};
    std::vector<Term> rhs{{Rational(1), 5, t + cp.x1},
                          {Rational(1), 5, t - cp.x1},
                          {Rational(1), 5, cp.alpha * t}};
    return detail::make_solution(std::move(lhs), std::move(rhs),
                                 "cf:(" + to_string(t) + "," + to_string(v) + ")");
}

} // namespace dioph
