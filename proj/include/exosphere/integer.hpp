#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace exosphere {

/// Arbitrary-precision signed integer. Everything in this library that can
/// outgrow 64 bits lives in this type; exact rationals in Rational.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational in canonical form: reduced, denominator > 0, zero as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Requested dimension (or index) lies outside the embedded dataset.
class DataUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact computation was cut off at its configured practical limit
/// (regularity certification beyond the scan cutoff, etc).
class CutoffExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

}  // namespace exosphere
