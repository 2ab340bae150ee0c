#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace monofock {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r)
{
    return boost::rational_cast<double>(r);
}

inline std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace monofock
