#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#ifndef XDECOMP_DOUBLE_WEIGHTS
#include <boost/multiprecision/cpp_int.hpp>
#endif

namespace xdecomp {

// Weight is the arithmetic type for edge weights, demands, sparsity ratios
// and every derived quantity that enters a contract comparison. The default
// build uses exact rationals so that all cut/demand comparisons are exact;
// -DXDECOMP_DOUBLE_WEIGHTS switches to 64-bit floats for performance runs.
#ifdef XDECOMP_DOUBLE_WEIGHTS
using Weight = double;
using BigInt = long long;
#else
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Weight =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;
#endif

inline double to_double(const Weight& w) {
#ifdef XDECOMP_DOUBLE_WEIGHTS
  return w;
#else
  return w.template convert_to<double>();
#endif
}

// Exact conversion: every finite double is a dyadic rational.
inline Weight weight_from_double(double x) {
#ifdef XDECOMP_DOUBLE_WEIGHTS
  return x;
#else
  if (!std::isfinite(x)) throw std::invalid_argument("weight_from_double: not finite");
  return Weight(x);
#endif
}

inline Weight weight_pow(const Weight& base, int exp) {
  Weight r(1);
  Weight b = base;
  int e = exp;
  if (e < 0) throw std::invalid_argument("weight_pow: negative exponent");
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string weight_to_string(const Weight& w);
Weight weight_from_string(const std::string& s);

}  // namespace xdecomp
