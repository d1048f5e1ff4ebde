#include "aborders/bigint.hpp"

#include <stdexcept>

namespace aborders {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt power(long base, long exp) {
    if (exp < 0) throw std::domain_error("negative exponent");
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(exp));
    if (base < 0 && exp % 2 == 1) out = -out;
    return out;
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("division by zero");
    if (numerator % denominator != 0)
        throw std::domain_error("division expected to be exact was not");
    return numerator / denominator;
}

}  // namespace aborders
