#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kleinzeta {

// Exact integer type used for all character-sum and zeta coefficients.
using BigInt = boost::multiprecision::cpp_int;

}
