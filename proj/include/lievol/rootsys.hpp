#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lievol/errors.hpp"
#include "lievol/rational.hpp"

namespace lievol {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

/// Family tag plus rank. Construct through make_lie_type() so the rank
/// floors (A>=1, B>=2, C>=1, D>=4) are enforced.
struct SimpleLieType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const SimpleLieType&, const SimpleLieType&) = default;
};

inline bool is_exceptional(Family f) {
  return f == Family::E6 || f == Family::E7 || f == Family::E8 || f == Family::F4 ||
         f == Family::G2;
}

inline int exceptional_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

inline std::string family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

/// Validates the family/rank pair. For exceptional families the rank
/// argument is ignored unless it contradicts the fixed rank.
inline SimpleLieType make_lie_type(Family family, std::optional<int> rank = std::nullopt) {
  if (is_exceptional(family)) {
    const int r = exceptional_rank(family);
    if (rank && *rank != r)
      throw InvalidTypeError(family_letter(family) + " has fixed rank " + std::to_string(r));
    return {family, r};
  }
  if (!rank) throw InvalidTypeError(family_letter(family) + " requires a rank");
  const int floor = family == Family::B ? 2 : family == Family::D ? 4 : 1;
  if (*rank < floor)
    throw InvalidTypeError(family_letter(family) + std::to_string(*rank) +
                           " is not admitted: rank must be >= " + std::to_string(floor));
  return {family, *rank};
}

/// Cartan label, e.g. "A2", "D5", "E8".
inline std::string cartan_name(const SimpleLieType& t) {
  if (is_exceptional(t.family)) return family_letter(t.family);
  return family_letter(t.family) + std::to_string(t.rank);
}

/// Compact simply connected group label: A_{n-1} -> SU_n, B_n -> Spin_{2n+1},
/// C_n -> Sp_{2n}, D_n -> Spin_{2n}.
inline std::string group_name(const SimpleLieType& t) {
  switch (t.family) {
    case Family::A: return "SU_" + std::to_string(t.rank + 1);
    case Family::B: return "Spin_" + std::to_string(2 * t.rank + 1);
    case Family::C: return "Sp_" + std::to_string(2 * t.rank);
    case Family::D: return "Spin_" + std::to_string(2 * t.rank);
    default: return family_letter(t.family);
  }
}

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

struct RootSystem {
  SimpleLieType lie_type;
  /// A[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  IntMatrix cartan_matrix;
  /// Gram matrix of the simple roots under the minimal form (long roots have
  /// squared length 2).
  RationalMatrix symmetrized_form;
  /// Coordinates in the simple-root basis, sorted by height then
  /// lexicographically; the last entry is the highest root.
  std::vector<IntVector> positive_roots;
  RationalVector weyl_vector;
  std::int64_t dual_coxeter = 0;
  std::vector<int> exponents;

  int rank() const { return lie_type.rank; }
  std::int64_t dimension() const {
    return rank() + 2 * static_cast<std::int64_t>(positive_roots.size());
  }
  const IntVector& highest_root() const { return positive_roots.back(); }
};

namespace detail {

// Dynkin diagram: bonds between simple roots plus each root's squared length
// under the minimal form. Numbering follows Bourbaki.
struct Diagram {
  std::vector<Rational> lengths;
  std::vector<std::pair<int, int>> bonds;
};

inline Diagram dynkin_diagram(const SimpleLieType& t) {
  const int r = t.rank;
  Diagram d;
  d.lengths.assign(r, Rational(2));
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(0, r - 1);
      break;
    case Family::B:
      chain(0, r - 1);
      d.lengths[r - 1] = Rational(1);
      break;
    case Family::C:
      chain(0, r - 1);
      for (int i = 0; i + 1 < r; ++i) d.lengths[i] = Rational(1);
      break;
    case Family::D:
      chain(0, r - 2);
      d.bonds.emplace_back(r - 3, r - 1);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // 1-3-4-5-6-..., with 2 attached to 4.
      d.bonds.emplace_back(0, 2);
      d.bonds.emplace_back(1, 3);
      chain(2, r - 1);
      break;
    case Family::F4:
      chain(0, 3);
      d.lengths[2] = Rational(1);
      d.lengths[3] = Rational(1);
      break;
    case Family::G2:
      chain(0, 1);
      d.lengths[0] = Rational(2, 3);
      break;
  }
  return d;
}

inline Rational pairing(const RationalMatrix& form, const IntVector& u, const IntVector& v) {
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) s += Rational(u[i] * v[j]) * form[i][j];
  }
  return s;
}

inline std::int64_t height(const IntVector& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace detail

/// Exponents m_1..m_r of the simple Lie algebra.
inline std::vector<int> exponents(const SimpleLieType& t) {
  const int r = t.rank;
  std::vector<int> m;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= r; ++i) m.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= r; ++i) m.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i <= r - 1; ++i) m.push_back(2 * i - 1);
      m.push_back(r - 1);
      std::sort(m.begin(), m.end());
      break;
    case Family::G2: m = {1, 5}; break;
    case Family::F4: m = {1, 5, 7, 11}; break;
    case Family::E6: m = {1, 4, 5, 7, 8, 11}; break;
    case Family::E7: m = {1, 5, 7, 9, 11, 13, 17}; break;
    case Family::E8: m = {1, 7, 11, 13, 17, 19, 23, 29}; break;
  }
  return m;
}

/// Closes a set of roots under the simple reflections
/// s_i(v) = v - <v, alpha_i^vee> alpha_i. Returns every root reached,
/// positive and negative.
inline std::set<IntVector> reflection_closure(const IntMatrix& cartan,
                                              const std::vector<IntVector>& seeds) {
  const std::size_t r = cartan.size();
  std::set<IntVector> seen(seeds.begin(), seeds.end());
  std::deque<IntVector> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    IntVector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t coroot = 0;
      for (std::size_t j = 0; j < r; ++j) coroot += v[j] * cartan[j][i];
      if (coroot == 0) continue;
      IntVector w = v;
      w[i] -= coroot;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return seen;
}

inline RootSystem build_root_system(const SimpleLieType& type) {
  const SimpleLieType t = make_lie_type(type.family, type.rank);
  const int r = t.rank;
  const detail::Diagram diagram = detail::dynkin_diagram(t);

  RootSystem rs;
  rs.lie_type = t;
  rs.symmetrized_form.assign(r, RationalVector(r, Rational(0)));
  for (int i = 0; i < r; ++i) rs.symmetrized_form[i][i] = diagram.lengths[i];
  // Bonded roots: (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2) / 2.
  for (auto [i, j] : diagram.bonds) {
    const Rational v = -std::max(diagram.lengths[i], diagram.lengths[j]) / Rational(2);
    rs.symmetrized_form[i][j] = v;
    rs.symmetrized_form[j][i] = v;
  }

  rs.cartan_matrix.assign(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rational a = Rational(2) * rs.symmetrized_form[i][j] / rs.symmetrized_form[j][j];
      if (!a.is_integer()) throw InvariantViolation("non-integral Cartan entry");
      rs.cartan_matrix[i][j] = a.num();
    }

  std::vector<IntVector> simple;
  for (int i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    simple.push_back(std::move(e));
  }
  for (const auto& root : reflection_closure(rs.cartan_matrix, simple))
    if (std::all_of(root.begin(), root.end(), [](std::int64_t c) { return c >= 0; }))
      rs.positive_roots.push_back(root);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const IntVector& a, const IntVector& b) {
              const auto ha = detail::height(a), hb = detail::height(b);
              return ha != hb ? ha < hb : a < b;
            });

  // (rho, alpha_i^vee) = sum_j rho_j A[j][i] = 1 for every i.
  RationalMatrix transposed(r, RationalVector(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) transposed[i][j] = Rational(rs.cartan_matrix[j][i]);
  rs.weyl_vector = solve_exact(transposed, RationalVector(r, Rational(1)));

  Rational rho_theta(0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      rho_theta += rs.weyl_vector[i] * rs.symmetrized_form[i][j] *
                   Rational(rs.highest_root()[j]);
  if (!rho_theta.is_integer()) throw InvariantViolation("(rho, theta) is not an integer");
  rs.dual_coxeter = rho_theta.num() + 1;
  rs.exponents = exponents(t);
  return rs;
}

/// (rho, mu) under the minimal form, one entry per positive root.
inline RationalVector rho_pairings_minimal(const RootSystem& rs) {
  RationalVector out;
  out.reserve(rs.positive_roots.size());
  for (const auto& mu : rs.positive_roots) {
    Rational s(0);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        if (mu[j] != 0) s += rs.weyl_vector[i] * rs.symmetrized_form[i][j] * Rational(mu[j]);
    out.push_back(s);
  }
  return out;
}

/// <rho, mu> under the Cartan-Killing form. The Killing form is 2 h^vee times
/// the minimal form on the algebra, so the dual form on h* picks up
/// 1 / (2 h^vee).
inline RationalVector rho_pairings_killing(const RootSystem& rs) {
  RationalVector out = rho_pairings_minimal(rs);
  const Rational scale(1, 2 * rs.dual_coxeter);
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace lievol
