#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shl {

/// Exact arbitrary-precision rational scalar. All authoritative arithmetic in
/// this library happens in this type; doubles appear only as diagnostic
/// "shadows" of exact values. mpq_class keeps values in canonical reduced
/// form (positive denominator, coprime numerator/denominator) after every
/// operation.
using Rational = mpq_class;

/// Parse "p/q" or "p" (optional leading minus) into a canonical Rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Format as "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& x);

/// Diagnostic double shadow (never used in verdicts).
double shadow(const Rational& x);

/// x^e for integer e (negative exponents allowed; throws on 0^negative).
Rational pow_int(const Rational& x, long e);

/// t-Pochhammer symbol (a;t)_k = (1-a)(1-at)...(1-a t^{k-1}); 1 for k = 0.
Rational pochhammer_t(const Rational& a, const Rational& t, long k);

/// Parse a comma-separated list of rationals ("1/5,-1/6,1/9").
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace shl
