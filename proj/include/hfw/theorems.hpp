#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfw/factor.hpp"
#include "hfw/qfactor.hpp"

namespace hfw::thm {

/// Orderings of a factor hyperfield K_T against orderings of K containing T.
struct OrderingCount {
  std::string field;
  std::string subgroup;
  std::size_t factor_orderings = 0;  // |X(K_T)|
  std::size_t field_orderings = 0;   // |X(K | T)|
  bool equal() const { return factor_orderings == field_orderings; }
};
/// K = F_p: the field side is computed on F_p as a hyperfield with singleton
/// sums, keeping the orderings that contain T.
OrderingCount theorem_cr_check(std::int64_t p, const construct::SubgroupSpec& t);
/// K = Q, whose only ordering is the positive cone. Supports T = positives and
/// positive p-units. Throws std::invalid_argument for squares.
OrderingCount theorem_cr_check(const construct::QSubgroup& t, int window = 6);

/// I_n in Q modulo squares, decided by the two/three/four squares
/// certificates on squarefree classes.
struct SquaresProductCheck {
  unsigned height = 0;
  std::size_t pairs = 0;
  std::size_t counterexamples = 0;
  /// a = x1^2 + x2^2, b = y1^2 + y2^2 give ab = (x1 y2 + x2 y1)^2 + (x1 y1 - x2 y2)^2
  /// (or the variant with the signs swapped), so u^2 + v^2 = scale^2 ab with
  /// u, v != 0. scale is 5 when ab is a square and both variants vanish.
  struct Witness {
    std::int64_t a, b, x1, x2, y1, y2, u, v, scale;
  };
  std::vector<Witness> samples;
};
/// Every product of two classes of I_2 with squarefree representatives up to
/// `height` lies in I_2, with an explicit two-squares representation.
SquaresProductCheck q_squares_I2_closure(unsigned height);

/// Integers x, y > 0 with x^2 + y^2 = n, if any.
bool two_squares(std::int64_t n, std::int64_t& x, std::int64_t& y);

/// [7] lies in I_4 but not I_2: 7 = 2^2 + 1 + 1 + 1, and 7 = 3 mod 4 is prime.
struct SevenCertificate {
  std::vector<std::int64_t> four_squares;  // integers whose squares sum to 7
  bool in_I2 = true;
  bool in_I3 = true;
  bool in_I4 = false;
  bool bounded_search_agrees = false;  // [1] + [1] enumeration misses [7]
};
SevenCertificate q_squares_seven(unsigned height);

/// For every class [s] with squarefree |s| <= height: integers n with
/// n - |s| > 0 showing (I_n + [s]) and (I_n - [s]) both meet the positives.
struct ArchimedeanCheck {
  std::size_t classes = 0;
  std::size_t failures = 0;
  /// I_4 equals the positive cone on every checked class.
  bool i4_is_positive_cone = true;
};
ArchimedeanCheck q_squares_archimedean(unsigned height);

}  // namespace hfw::thm
