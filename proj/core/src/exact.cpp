#include "deltasets/exact.hpp"

#include "deltasets/errors.hpp"

namespace deltasets {

BigInt pow_ui(std::uint64_t base, unsigned long exponent) {
    BigInt out;
    BigInt b = to_bigint(base);
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
    return out;
}

BigInt isqrt(const BigInt& x) {
    if (sgn(x) < 0) throw DomainError("isqrt of a negative number");
    BigInt out;
    mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
    return out;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

double to_double(const Rational& x) { return x.get_d(); }

Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<u128> checked_pow(std::uint64_t base, unsigned exponent) {
    u128 result = 1;
    for (unsigned i = 0; i < exponent; ++i)
        if (!checked_mul(result, base, result)) return std::nullopt;
    return result;
}

BigInt to_bigint(u128 x) {
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(x >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(x));
    return (hi << 64) + lo;
}

}  // namespace deltasets
