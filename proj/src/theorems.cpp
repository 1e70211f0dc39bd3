#include "hfw/theorems.hpp"

#include <cmath>
#include <stdexcept>

#include "hfw/punits.hpp"
#include "hfw/realalg.hpp"
#include "hfw/symbolic_analysis.hpp"

namespace hfw::thm {

OrderingCount theorem_cr_check(std::int64_t p, const construct::SubgroupSpec& t) {
  OrderingCount out;
  out.field = "F" + std::to_string(p);
  out.subgroup = "T" + std::to_string(t.elements().size());
  out.factor_orderings = real::enumerate_orderings(construct::factor_hyperfield(p, t)).size();
  const FiniteHyperstructure field = builtin::prime_field(static_cast<int>(p));
  HSet t_image;
  for (auto x : t.elements()) t_image.insert(field.index_of(std::to_string(x)));
  for (const HSet& ordering : real::enumerate_orderings(field)) {
    if (t_image.subset_of(ordering)) ++out.field_orderings;
  }
  return out;
}

OrderingCount theorem_cr_check(const construct::QSubgroup& t, int window) {
  OrderingCount out;
  out.field = "Q";
  out.subgroup = t.name();
  switch (t.kind) {
    case construct::QSubgroupKind::positives:
      out.factor_orderings = real::enumerate_orderings(construct::q_positives_hyperfield()).size();
      break;
    case construct::QSubgroupKind::positive_p_units:
      out.factor_orderings =
          sym::enumerate_orderings(sym::PUnitHyperfield(t.p), sym::Quantifier{window, true}).size();
      break;
    case construct::QSubgroupKind::squares:
      throw std::invalid_argument("orderings of Q modulo squares are not enumerated");
  }
  // Q has the single ordering Q_{>0}; every supported T consists of positives.
  out.field_orderings = 1;
  return out;
}

bool two_squares(std::int64_t n, std::int64_t& x, std::int64_t& y) {
  for (x = 1; 2 * x * x <= n; ++x) {
    const std::int64_t rest = n - x * x;
    y = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    if (y > 0 && y * y == rest) return true;
  }
  return false;
}

namespace {

bool is_squarefree(std::int64_t n) {
  for (const auto& [q, e] : nt::factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

}  // namespace

SquaresProductCheck q_squares_I2_closure(unsigned height) {
  SquaresProductCheck out;
  out.height = height;
  std::vector<std::int64_t> members;
  for (std::int64_t s = 1; s <= static_cast<std::int64_t>(height); ++s) {
    if (is_squarefree(s) && nt::sum_of_two_squares_class(s)) members.push_back(s);
  }
  for (std::int64_t a : members) {
    for (std::int64_t b : members) {
      ++out.pairs;
      // Integer representations; 1 and 2 use 1 = 1^2 + 0^2 style fallbacks.
      std::int64_t x1 = 0, x2 = 0, y1 = 0, y2 = 0;
      if (!two_squares(a, x1, x2)) {
        x1 = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(a))));
        x2 = 0;
      }
      if (!two_squares(b, y1, y2)) {
        y1 = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(b))));
        y2 = 0;
      }
      if (x1 * x1 + x2 * x2 != a || y1 * y1 + y2 * y2 != b) {
        ++out.counterexamples;
        continue;
      }
      std::int64_t u = x1 * y2 + x2 * y1, v = x1 * y1 - x2 * y2, scale = 1;
      if (u == 0 || v == 0) {
        u = x1 * y2 - x2 * y1;
        v = x1 * y1 + x2 * y2;
      }
      if (u == 0 || v == 0) {
        // ab = c^2 and 25 c^2 = (3c)^2 + (4c)^2.
        const std::int64_t c = u == 0 ? v : u;
        u = 3 * c;
        v = 4 * c;
        scale = 5;
      }
      const bool identity = u * u + v * v == scale * scale * a * b && u != 0 && v != 0;
      const std::int64_t cls = nt::squarefree_class(nt::Rational(a * b));
      if (!identity || !nt::sum_of_two_squares_class(cls)) {
        ++out.counterexamples;
        continue;
      }
      if (out.samples.size() < 8) out.samples.push_back({a, b, x1, x2, y1, y2, u, v, scale});
    }
  }
  return out;
}

SevenCertificate q_squares_seven(unsigned height) {
  SevenCertificate out;
  out.four_squares = {2, 1, 1, 1};
  std::int64_t sum = 0;
  for (auto x : out.four_squares) sum += x * x;
  out.in_I4 = sum == 7 && nt::sum_of_four_squares_class(7);
  out.in_I2 = nt::sum_of_two_squares_class(7);
  out.in_I3 = nt::sum_of_three_squares_class(7);
  const construct::QSubgroup t = construct::QSubgroup::squares();
  const construct::BoundedHSet i2 = construct::q_factor_sum({1, 1}, {1, 1}, t, height);
  out.bounded_search_agrees = !i2.members.count({1, 7});
  return out;
}

ArchimedeanCheck q_squares_archimedean(unsigned height) {
  ArchimedeanCheck out;
  for (std::int64_t s = 1; s <= static_cast<std::int64_t>(height); ++s) {
    if (!is_squarefree(s)) continue;
    for (int sign : {1, -1}) {
      ++out.classes;
      // [n] lies in I_n; n - s > 0 and n + s > 0 put [n + s] and [n - s]
      // (and their negatives' counterparts) in P.
      const std::int64_t n = s + 1;
      const std::int64_t plus = n + sign * s, minus = n - sign * s;
      if (plus <= 0 || minus <= 0) ++out.failures;
    }
    if (nt::squares_length(s) > 4) out.i4_is_positive_cone = false;
  }
  return out;
}

}  // namespace hfw::thm
