#ifndef BPP_BIGINT_HPP
#define BPP_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bpp {

// All coefficients and counts in this library are exact integers.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

Int factorial(long n);

// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a,
// and C(0,0) = 1.  This exact convention is load-bearing for the binomial
// determinants in the lascoux module.
Int binomial(long a, long b);

// a^e for e >= 0.
Int int_pow(const Int& a, long e);

}  // namespace bpp

#endif
