#include "hfw/number_theory.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hfw::nt {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  n = std::llabs(n);
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

int valuation(const Rational& a, std::int64_t p) {
  return valuation(a.numerator(), p) - valuation(a.denominator(), p);
}

std::int64_t squarefree_class(const Rational& a) {
  if (a.numerator() == 0) throw std::domain_error("squarefree class of zero");
  // a = n/d and n/d ~ n*d modulo squares.
  std::int64_t s = 1;
  for (const auto& [q, e] : factorize(a.numerator())) {
    if (e % 2) s *= q;
  }
  for (const auto& [q, e] : factorize(a.denominator())) {
    if (e % 2) s *= q;
  }
  return a < 0 ? -s : s;
}

bool sum_of_two_squares_class(std::int64_t s) {
  if (s <= 0) return false;
  for (const auto& [q, e] : factorize(s)) {
    if (q % 4 == 3 && e % 2 == 1) return false;
  }
  return true;
}

bool sum_of_three_squares_class(std::int64_t s) {
  if (s <= 0) return false;
  // squarefree, so the 4^a factor is absent
  return s % 8 != 7;
}

bool sum_of_four_squares_class(std::int64_t s) { return s > 0; }

int squares_length(std::int64_t s) {
  if (s <= 0) throw std::domain_error("squares_length of a non-positive class");
  if (s == 1) return 1;
  if (sum_of_two_squares_class(s)) return 2;
  if (sum_of_three_squares_class(s)) return 3;
  return 4;
}

}  // namespace hfw::nt
