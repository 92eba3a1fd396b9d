#pragma once

// The angle ladder used to walk two rays apart.
//
//   c_0 = 0,  c_{n+1} = (1 + c_n) / (3 - c_n)   (inverse of cosine_floor)
//   c_n = n / (n + 2)
//   theta_n = arccos c_n,  theta_0 = pi/2,  theta_n -> 0
//
// If two rays meet at an angle >= theta_n, one projection round can produce
// a pair at exactly theta_{n-1}.

#include <cstdint>

#include <boost/rational.hpp>

namespace sasaki {

using Rational = boost::rational<std::int64_t>;

// Closed form n / (n + 2). Throws Error(NegativeIndex) for n < 0.
Rational schedule_c(std::int64_t n);
// The recurrence, iterated n times in exact arithmetic.
Rational schedule_c_recurrence(std::int64_t n);
double schedule_theta(std::int64_t n);
// Least n with schedule_theta(n) <= angle (up to 1e-12 of rounding slack).
// Throws Error(ThetaOutOfRange) unless 0 < angle <= pi/2 (+ slack).
std::int64_t schedule_n_min(double angle);

}  // namespace sasaki
