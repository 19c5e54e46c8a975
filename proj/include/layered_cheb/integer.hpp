#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace layered_cheb {

/// Exact signed integer used for every count and coefficient.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// binom(n, r) with the convention that it vanishes unless 0 <= r <= n.
BigInt binomial(long n, long r);

}  // namespace layered_cheb
