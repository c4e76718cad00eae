#pragma once

#include <map>
#include <tuple>

#include "dioph/integerize.hpp"

namespace dioph {

// Identities are compared modulo everything the source material freely does:
// swapping X and Y, moving odd-power terms across the equals sign with their
// sign flipped, |value| for even powers, reordering, and writing the whole
// equation with both sides exchanged.  The canonical form collapses all of
// that: move the right side over negated, fold signs into coefficients,
// aggregate, sort, and normalize the leading sign.
using CanonicalForm = std::vector<std::tuple<int, Rational, Rational>>; // (exp, value, coeff)

namespace detail {

template <typename TermT>
void canonical_accumulate(std::map<std::pair<int, Rational>, Rational>& agg,
                          const std::vector<TermT>& terms, int side_sign) {
    for (const TermT& t : terms) {
        Rational c = t.coeff * side_sign;
        Rational v(t.value);
        if (t.exp == 0) {
            // c * v^0 is the constant c whatever v was
            agg[{0, Rational(1)}] += c;
            continue;
        }
        if (v == 0) continue; // c * 0^e contributes nothing
        if (t.exp % 2 == 1) {
            if (v < 0) {
                c = -c;
                v = -v;
            }
        } else if (v < 0) {
            v = -v;
        }
        agg[{t.exp, std::move(v)}] += c;
    }
}

} // namespace detail

template <typename TermT>
CanonicalForm canonical_form(const std::vector<TermT>& lhs, const std::vector<TermT>& rhs) {
    std::map<std::pair<int, Rational>, Rational> agg;
    detail::canonical_accumulate(agg, lhs, 1);
    detail::canonical_accumulate(agg, rhs, -1);
    CanonicalForm out;
    for (const auto& [key, coeff] : agg)
        if (coeff != 0) out.emplace_back(key.first, key.second, coeff);
    if (!out.empty() && std::get<2>(out.front()) < 0)
        for (auto& [e, v, c] : out) c = -c;
    return out;
}

inline CanonicalForm canonical_form(const RationalSolution& s) {
    return canonical_form(s.lhs, s.rhs);
}

inline CanonicalForm canonical_form(const IntegerSolution& s) {
    return canonical_form(s.lhs, s.rhs);
}

// Stable text rendering, used as the dedup index key in the solution store.
inline std::string canonical_key(const CanonicalForm& form) {
    std::string key;
    for (const auto& [e, v, c] : form) {
        if (!key.empty()) key += ';';
        key += std::to_string(e) + ":" + to_string(v) + ":" + to_string(c);
    }
    return key;
}

} // namespace dioph
