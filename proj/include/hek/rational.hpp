#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace hek {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using CNum = std::complex<double>;

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatQ = Matrix<Rat>;
using VecQ = Vector<Rat>;

/**
 * Numeric thresholds used whenever a check runs in floating point.
 *
 * eps_zero  absolute threshold for "this residual / singular value is zero"
 * eps_match absolute-or-relative threshold for "these two values agree"
 */
struct Tolerance {
    double eps_zero = 1e-9;
    double eps_match = 1e-7;
};

/**
 * Parse "p/q" or a plain integer string into an exact rational.
 *
 * Signs are accepted on the numerator only, the denominator must be a
 * positive integer, and decimal notation is rejected.  The result is
 * canonical (reduced, positive denominator).  Throws std::invalid_argument
 * on malformed input or a zero denominator.
 */
Rat parse_rat(const std::string& text);

/** Canonical string form: "p/q", or "p" when the denominator is 1. */
std::string rat_str(const Rat& q);

/** True iff q is the square of a rational (q >= 0, numerator and denominator both perfect squares). */
bool is_square(const Rat& q);

double to_double(const Rat& q);
CNum to_cnum(const Rat& q);

Rat rat_pow(const Rat& base, unsigned exp);

/** Height max(|numerator|, denominator) of a canonical rational. */
Int rat_height(const Rat& q);

}  // namespace hek
