#pragma once

#include <numeric>

#include "dioph/factor.hpp"
#include "dioph/reduction.hpp"

namespace dioph {

struct IntegerTerm {
    Rational coeff; // coefficients are part of the problem statement and stay put
    int exp = 1;
    Int value;
    friend bool operator==(const IntegerTerm&, const IntegerTerm&) = default;
};

struct IntegerSolution {
    std::vector<IntegerTerm> lhs, rhs;
    Int mu = 1;
    bool verified = false;
    bool trivial = false;
    std::string provenance;
};

inline Rational term_sum(const std::vector<IntegerTerm>& terms) {
    Rational s(0);
    for (const IntegerTerm& t : terms) {
        if (t.exp < 0) throw std::invalid_argument("term exponent must be nonnegative");
        s += t.coeff * Rational(int_pow(t.value, static_cast<unsigned>(t.exp)));
    }
    return s;
}

inline bool verify(const RationalSolution& s) { return identity_holds(s.lhs, s.rhs); }

inline bool verify(const IntegerSolution& s) { return term_sum(s.lhs) == term_sum(s.rhs); }

// Multiply the identity through by mu^L (L = lcm of the exponents), i.e.
// replace each value x in an exponent-e term by mu^(L/e) * x, with the least
// positive integer mu making every value integral: per prime,
// v_p(mu) = max over terms of ceil(v_p(den(x)) * e / L).
inline IntegerSolution scale_to_integers(const RationalSolution& s) {
    if (!verify(s)) throw contract_error("scale_to_integers: input identity does not hold");
    std::vector<const Term*> all;
    for (const Term& t : s.lhs) all.push_back(&t);
    for (const Term& t : s.rhs) all.push_back(&t);
    if (all.empty()) throw std::invalid_argument("scale_to_integers: empty identity");
    long L = 1;
    for (const Term* t : all) {
        if (t->exp < 1)
            throw std::invalid_argument(
                "scale_to_integers: exponent < 1 would need a rational scale factor");
        L = std::lcm(L, static_cast<long>(t->exp));
    }
    bool uniform = true;
    for (const Term* t : all) uniform = uniform && t->exp == L;

    Int mu = 1;
    if (uniform) {
        // mu^1 multiplies every value directly, so mu is just the lcm of the
        // denominators — no factoring needed.
        for (const Term* t : all) mu = lcm(mu, denominator(t->value));
    } else {
        std::map<Int, long> need;
        for (const Term* t : all) {
            Int den = denominator(t->value);
            if (den == 1) continue;
            for (const auto& [p, v] : factorize(den)) {
                long want = (static_cast<long>(v) * t->exp + L - 1) / L; // ceil
                auto [it, inserted] = need.emplace(p, want);
                if (!inserted && want > it->second) it->second = want;
            }
        }
        for (const auto& [p, v] : need) mu *= int_pow(p, static_cast<unsigned>(v));
    }

    auto scaled = [&](const std::vector<Term>& in) {
        std::vector<IntegerTerm> out;
        out.reserve(in.size());
        for (const Term& t : in) {
            Rational v = t.value * Rational(int_pow(mu, static_cast<unsigned>(L / t.exp)));
            if (!is_integer(v)) throw internal_error("scale_to_integers: scale did not clear " +
                                                     to_string(t.value));
            out.push_back(IntegerTerm{t.coeff, t.exp, numerator(v)});
        }
        return out;
    };

    IntegerSolution out;
    out.lhs = scaled(s.lhs);
    out.rhs = scaled(s.rhs);
    out.mu = std::move(mu);
    out.trivial = s.trivial;
    out.provenance = s.provenance;
    if (!verify(out)) throw internal_error("scale_to_integers: scaled identity does not hold");
    out.verified = true;
    return out;
}

} // namespace dioph
