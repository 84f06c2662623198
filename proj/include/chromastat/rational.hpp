#ifndef CHROMASTAT_RATIONAL_HPP
#define CHROMASTAT_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromastat {

// Exact rational arithmetic for all statistics. Arbitrary precision so that
// high moments and large parameters never overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

// Always renders the explicit "p/q" form in lowest terms with q > 0,
// e.g. "9/5", "0/1", "-3/50".
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double rational_approx(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace chromastat

#endif
