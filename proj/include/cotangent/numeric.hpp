#ifndef COTANGENT_NUMERIC_HPP
#define COTANGENT_NUMERIC_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace cotangent {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool fits_int64(const Integer& v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline std::string to_string(const Rational& q)
{
    if (is_integral(q))
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline Integer ipow(long base, unsigned exp)
{
    return boost::multiprecision::pow(Integer(base), exp);
}

} // namespace cotangent

#endif
