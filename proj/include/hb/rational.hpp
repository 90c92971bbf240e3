#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace hb {

using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}
