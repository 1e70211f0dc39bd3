#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace hfw::nt {

using Rational = boost::rational<std::int64_t>;

bool is_prime(std::int64_t n);

/// Prime factorization of |n| as (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// p-adic valuation of a nonzero integer.
int valuation(std::int64_t n, std::int64_t p);
int valuation(const Rational& a, std::int64_t p);

/// Signed squarefree kernel: the unique squarefree s with a / s a nonzero
/// rational square. Requires a != 0.
std::int64_t squarefree_class(const Rational& a);

// Exact membership certificates for sums of nonzero rational squares. The
// argument is a positive squarefree integer naming a class of Q^x modulo
// squares.
bool sum_of_two_squares_class(std::int64_t s);    // no prime = 3 mod 4
bool sum_of_three_squares_class(std::int64_t s);  // s != 7 mod 8
bool sum_of_four_squares_class(std::int64_t s);   // every positive s

/// Minimal n such that the class s lies in I_n of Q modulo squares.
int squares_length(std::int64_t s);

}  // namespace hfw::nt
