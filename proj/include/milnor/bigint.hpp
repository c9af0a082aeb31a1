#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace milnor {

// Exact arithmetic everywhere: Magnus coefficients grow multiplicatively with
// exponents, and Seifert determinant intermediates overflow 64 bits.
using Int = boost::multiprecision::cpp_int;

}  // namespace milnor
