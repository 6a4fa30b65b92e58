#pragma once

#include <boost/rational.hpp>

namespace ptiles {

// Exact rational arithmetic. Everything here stays at desk scale
// (denominators are small powers of p), so 64-bit components are plenty.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

}  // namespace ptiles
