#include "bpp/bigint.hpp"

#include <stdexcept>

namespace bpp {

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    if (a < 0) return 0;
    b = std::min(b, a - b);
    Int num = 1, den = 1;
    for (long i = 0; i < b; ++i) {
        num *= (a - i);
        den *= (i + 1);
    }
    return num / den;
}

Int int_pow(const Int& a, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace bpp
