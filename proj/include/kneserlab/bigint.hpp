#pragma once

// Exact arithmetic used throughout: counts are arbitrary-precision
// integers, ratios are exact rationals. No floating point enters any count.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kneserlab {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binom(n, k) with the convention binom(n, k) = 0 whenever k < 0 or k > n.
// Negative n yields 0 as well: every use site counts subsets of a set whose
// size never goes negative, so a negative argument means "no such object".
BigCount binomial(long long n, long long k);

BigCount factorial(long long n);

// base^exp for exp >= 0 (big exponents appear in closed forms).
BigCount big_pow(const BigCount& base, const BigCount& exp);
BigCount big_pow(long long base, const BigCount& exp);

// k! / (s_1! * ... * s_c!) for block sizes s summing to k.
BigCount multinomial(long long k, const std::vector<int>& sizes);

std::string to_string(const BigCount& v);

}  // namespace kneserlab
