#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace topq {

// Arbitrary-precision rational; gmpxx keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

// Always "p/q", including integers ("2/1").
std::string to_string(const Rational& q);
// Accepts "p/q" or "p".
Rational parse_rational(std::string_view text);

inline int sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

bool is_zero(const QVector& v);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);
Rational dot(const QVector& a, const QVector& b);
QVector unit_vector(std::size_t n, std::size_t i);

}  // namespace topq
