#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace entcc {

using Rational = boost::rational<std::int64_t>;

// Reduced "num/den" form; whole values render as "n/1".
inline std::string rational_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace entcc
