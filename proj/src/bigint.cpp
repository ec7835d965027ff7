#include "kneserlab/bigint.hpp"

#include <vector>

namespace kneserlab {

BigCount binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

BigCount factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigCount result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

BigCount big_pow(const BigCount& base, const BigCount& exp) {
    if (exp < 0) throw std::invalid_argument("big_pow: negative exponent");
    BigCount result = 1;
    BigCount b = base;
    BigCount e = exp;
    while (e > 0) {
        if ((e & 1) != 0) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

BigCount big_pow(long long base, const BigCount& exp) { return big_pow(BigCount(base), exp); }

BigCount multinomial(long long k, const std::vector<int>& sizes) {
    BigCount result = factorial(k);
    long long total = 0;
    for (int s : sizes) {
        result /= factorial(s);
        total += s;
    }
    if (total != k) throw std::invalid_argument("multinomial: sizes do not sum to k");
    return result;
}

std::string to_string(const BigCount& v) { return v.str(); }

}  // namespace kneserlab
