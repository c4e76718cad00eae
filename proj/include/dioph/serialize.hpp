#pragma once

#include <json.hpp>

#include "dioph/canonical.hpp"

namespace dioph {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return *it;
}

} // namespace detail

// Numbers travel as exact strings ("p/q" or "p"); bare JSON integers are
// accepted on input since they are exact too.
inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
    if (!j.is_string()) throw std::invalid_argument("expected a rational as a string");
    return parse_rational(j.get<std::string>());
}

inline Int int_from_json(const Json& j) {
    Rational r = rational_from_json(j);
    if (!is_integer(r)) throw std::invalid_argument("expected an integer");
    return numerator(r);
}

inline int exponent_from_json(const Json& j) {
    if (j.is_number_integer()) return j.get<int>();
    throw std::invalid_argument("expected an exponent as a JSON integer");
}

inline Json to_json(const Rational& x) { return to_string(x); }
inline Json to_json(const Int& n) { return to_string(n); }

inline Json to_json(const LongWeierstrass& c) {
    return Json{{"a1", to_string(c.a1())},
                {"a2", to_string(c.a2())},
                {"a3", to_string(c.a3())},
                {"a4", to_string(c.a4())},
                {"a6", to_string(c.a6())}};
}

inline LongWeierstrass curve_from_json(const Json& j) {
    return LongWeierstrass(rational_from_json(detail::field(j, "a1")),
                           rational_from_json(detail::field(j, "a2")),
                           rational_from_json(detail::field(j, "a3")),
                           rational_from_json(detail::field(j, "a4")),
                           rational_from_json(detail::field(j, "a6")));
}

inline Json to_json(const CurvePoint& p) {
    if (p.is_infinity()) return Json("inf");
    return Json{{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

inline CurvePoint point_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return CurvePoint::infinity();
        throw std::invalid_argument("point must be \"inf\" or {\"x\":..,\"y\":..}");
    }
    return CurvePoint::affine(rational_from_json(detail::field(j, "x")),
                              rational_from_json(detail::field(j, "y")));
}

inline Json to_json(const Quartic& q) {
    return Json{{"a", to_string(q.a())},
                {"b", to_string(q.b())},
                {"c", to_string(q.c())},
                {"d", to_string(q.d())},
                {"e", to_string(q.e())}};
}

inline Quartic quartic_from_json(const Json& j) {
    return Quartic(rational_from_json(detail::field(j, "a")),
                   rational_from_json(detail::field(j, "b")),
                   rational_from_json(detail::field(j, "c")),
                   rational_from_json(detail::field(j, "d")),
                   rational_from_json(detail::field(j, "e")));
}

inline Json to_json(const QuarticPoint& p) {
    return Json{{"u", to_string(p.u)}, {"v", to_string(p.v)}};
}

inline QuarticPoint quartic_point_from_json(const Json& j) {
    return QuarticPoint{rational_from_json(detail::field(j, "u")),
                        rational_from_json(detail::field(j, "v"))};
}

inline Json to_json(const Term& t) {
    return Json{{"coeff", to_string(t.coeff)}, {"exp", t.exp}, {"value", to_string(t.value)}};
}

inline Term term_from_json(const Json& j) {
    return Term{rational_from_json(detail::field(j, "coeff")),
                exponent_from_json(detail::field(j, "exp")),
                rational_from_json(detail::field(j, "value"))};
}

inline std::vector<Term> terms_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of terms");
    std::vector<Term> out;
    out.reserve(j.size());
    for (const Json& t : j) out.push_back(term_from_json(t));
    return out;
}

inline Json to_json(const std::vector<Term>& terms) {
    Json arr = Json::array();
    for (const Term& t : terms) arr.push_back(to_json(t));
    return arr;
}

inline Json to_json(const DEProblem& p) {
    return Json{{"a", to_string(p.a)}, {"k", p.k}, {"z", to_string(p.z)},
                {"terms", to_json(p.terms)}};
}

inline DEProblem problem_from_json(const Json& j) {
    DEProblem p{rational_from_json(detail::field(j, "a")),
                exponent_from_json(detail::field(j, "k")),
                rational_from_json(detail::field(j, "z")),
                terms_from_json(detail::field(j, "terms"))};
    p.validate();
    return p;
}

inline Json to_json(const CubesFifthsParams& cp) {
    return Json{{"x1", to_string(cp.x1)},
                {"alpha", to_string(cp.alpha)},
                {"beta", to_string(cp.beta)}};
}

inline CubesFifthsParams cubes_fifths_from_json(const Json& j) {
    return CubesFifthsParams{rational_from_json(detail::field(j, "x1")),
                             rational_from_json(detail::field(j, "alpha")),
                             rational_from_json(detail::field(j, "beta"))};
}

inline Json to_json(const IntegerTerm& t) {
    return Json{{"coeff", to_string(t.coeff)}, {"exp", t.exp}, {"value", to_string(t.value)}};
}

inline IntegerTerm integer_term_from_json(const Json& j) {
    return IntegerTerm{rational_from_json(detail::field(j, "coeff")),
                       exponent_from_json(detail::field(j, "exp")),
                       int_from_json(detail::field(j, "value"))};
}

inline Json to_json(const std::vector<IntegerTerm>& terms) {
    Json arr = Json::array();
    for (const IntegerTerm& t : terms) arr.push_back(to_json(t));
    return arr;
}

inline Json to_json(const IntegerSolution& s) {
    return Json{{"lhs", to_json(s.lhs)},    {"rhs", to_json(s.rhs)},
                {"mu", to_string(s.mu)},    {"verified", s.verified},
                {"trivial", s.trivial},     {"provenance", s.provenance}};
}

// mu/verified/trivial/provenance are optional on input so hand-written
// identity files stay terse.
inline IntegerSolution integer_solution_from_json(const Json& j) {
    IntegerSolution s;
    const Json& lhs = detail::field(j, "lhs");
    const Json& rhs = detail::field(j, "rhs");
    if (!lhs.is_array() || !rhs.is_array())
        throw std::invalid_argument("lhs/rhs must be arrays of terms");
    for (const Json& t : lhs) s.lhs.push_back(integer_term_from_json(t));
    for (const Json& t : rhs) s.rhs.push_back(integer_term_from_json(t));
    if (j.contains("mu")) s.mu = int_from_json(j["mu"]);
    if (j.contains("verified")) s.verified = j["verified"].get<bool>();
    if (j.contains("trivial")) s.trivial = j["trivial"].get<bool>();
    if (j.contains("provenance")) s.provenance = j["provenance"].get<std::string>();
    return s;
}

inline Json to_json(const RationalSolution& s) {
    return Json{{"lhs", to_json(s.lhs)},
                {"rhs", to_json(s.rhs)},
                {"trivial", s.trivial},
                {"provenance", s.provenance}};
}

} // namespace dioph
