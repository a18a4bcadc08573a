#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace deltasets {

using BigInt = mpz_class;
using Rational = mpq_class;
using u128 = unsigned __int128;

BigInt pow_ui(std::uint64_t base, unsigned long exponent);
BigInt isqrt(const BigInt& x);

/// ceil(a / b) for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);
/// floor(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);
double to_double(const Rational& x);
Rational make_rational(const BigInt& num, const BigInt& den);

inline bool checked_mul(u128 a, u128 b, u128& out) { return !__builtin_mul_overflow(a, b, &out); }
inline bool checked_add(u128 a, u128 b, u128& out) { return !__builtin_add_overflow(a, b, &out); }

/// base^exponent if it fits in 128 bits.
std::optional<u128> checked_pow(std::uint64_t base, unsigned exponent);

BigInt to_bigint(u128 x);

}  // namespace deltasets
