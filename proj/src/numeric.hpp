#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reprlab {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// n(n-1)...(n-k+1); k = 0 gives 1.
inline BigInt falling_factorial(const BigInt& n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

inline Rational falling_factorial(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x - i;
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

inline BigInt catalan(int m) {
    if (m < 0) return 0;
    return binomial(2 * m, m) / (m + 1);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

inline std::string to_string(const BigInt& z) { return z.str(); }
inline std::string to_string(const Rational& q) { return q.str(); }

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration and size caps. Hard errors, never silent truncation.
struct Limits {
    int syt_cap = 12;           // max |lambda| for full SYT enumeration
    int partition_cap = 40;     // max n for enumerate_partitions
    int strict_cap = 60;        // max n for enumerate_strict
    int dim_cap_float = 3000;   // max matrix dimension, orthogonal flavor
    int dim_cap_rational = 300; // max matrix dimension, seminormal flavor
};

inline const Limits& default_limits() {
    static const Limits l{};
    return l;
}

} // namespace reprlab
