#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfw/number_theory.hpp"
#include "hfw/structure.hpp"

namespace hfw::construct {

using nt::Rational;

enum class QSubgroupKind { positives, squares, positive_p_units };

/// A multiplicative subgroup T of Q^x used in the factor construction.
struct QSubgroup {
  QSubgroupKind kind = QSubgroupKind::positives;
  std::int64_t p = 2;  // positive_p_units only

  static QSubgroup positives() { return {QSubgroupKind::positives, 2}; }
  static QSubgroup squares() { return {QSubgroupKind::squares, 2}; }
  static QSubgroup positive_p_units(std::int64_t p = 2);

  bool contains(const Rational& a) const;
  std::string name() const;
};

/// Canonical representative of a coset aT. sign is 0 only for the zero class.
/// key: 0 for positives, the positive squarefree part for squares, v_p(a) for
/// positive p-units.
struct QClass {
  int sign = 0;
  std::int64_t key = 0;

  bool is_zero() const { return sign == 0; }
  friend auto operator<=>(const QClass&, const QClass&) = default;
};

QClass q_factor_class(const Rational& a, const QSubgroup& t);
/// A rational in the class: +-1, +-squarefree, or +-p^key.
Rational q_representative(const QClass& c, const QSubgroup& t);
std::string q_label(const QClass& c, const QSubgroup& t);

/// {(sign, d) : d >= from}, the classes of all sign * p^d * (positive p-unit).
struct QRay {
  int sign = 1;
  std::int64_t from = 0;
  friend auto operator<=>(const QRay&, const QRay&) = default;
};

struct SumWitness {
  Rational t;
  Rational u;
  Rational value;  // x_rep * t + y_rep * u
};

enum class Certificate { none, two_squares };

/// Result of a factor sum over Q. If complete, members plus rays is exactly the
/// sum; otherwise members is a verified subset of it.
struct BoundedHSet {
  std::set<QClass> members;
  std::vector<QRay> rays;
  bool complete = false;
  unsigned height_bound = 0;
  /// Exact membership rule for a row that is infinite but decidable.
  Certificate certificate = Certificate::none;
  std::map<QClass, SumWitness> witnesses;

  /// Exact when complete or certified; otherwise membership in the found part.
  bool contains(const QClass& c) const;
};

/// [x] + [y] = {[xt + yu] : t, u in T}. Positives and positive p-units use
/// closed forms (complete); squares enumerate x m^2 + y n^2 for
/// 1 <= m, n <= height_bound (complete only through a certificate).
/// Witnesses are gathered by bounded search in every case.
BoundedHSet q_factor_sum(const QClass& x, const QClass& y, const QSubgroup& t,
                         unsigned height_bound);

/// Closed-form sum for positive p-units, without witnesses.
BoundedHSet q_punit_closed_sum(const QClass& x, const QClass& y, std::int64_t p);

/// Elements of T as n/d with 1 <= n, d <= height (reduced), ascending.
std::vector<Rational> q_subgroup_elements(const QSubgroup& t, unsigned height);

}  // namespace hfw::construct

namespace hfw::construct {

/// Q modulo the positive rationals as a finite structure, with every sum
/// taken from q_factor_sum. Isomorphic to the sign hyperfield.
FiniteHyperstructure q_positives_hyperfield();

}  // namespace hfw::construct
