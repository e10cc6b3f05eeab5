/*
 * seed.hpp
 * --------
 * Extended exchange matrices, seeds of geometric type, seed mutation, the
 * quiver view, and the brute-force cluster-variable oracle.
 *
 * Coefficients are carried exclusively by the frozen rows of the extended
 * matrix; the exchange relation is a single binomial exchange over all
 * rows, mutable and frozen alike.  Every cluster entry of a Seed is an
 * exact Laurent polynomial in the initial variables x1..xn, u1..um.
 *
 * Directions are 1-based at every public interface.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "clusteralg/laurent.hpp"

namespace clusteralg {

class ExtendedExchangeMatrix {
 public:
  /// entries has (n_mutable + n_frozen) rows and n_mutable columns; the top
  /// square block must be skew-symmetric.
  ExtendedExchangeMatrix(int n_mutable, int n_frozen, std::vector<std::vector<long>> entries);

  static ExtendedExchangeMatrix zero(int n_mutable, int n_frozen);

  int n_mutable() const { return n_mutable_; }
  int n_frozen() const { return n_frozen_; }
  int rows() const { return n_mutable_ + n_frozen_; }
  long at(int row, int col) const;  // 0-based
  const std::vector<std::vector<long>>& entries() const { return entries_; }

  bool operator==(const ExtendedExchangeMatrix&) const = default;

  /// The whole matrix with every entry negated.  Exchange relations are
  /// invariant under this, so it never changes any cluster variable.
  ExtendedExchangeMatrix negated() const;

 private:
  int n_mutable_;
  int n_frozen_;
  std::vector<std::vector<long>> entries_;
};

/// Matrix mutation in direction k (1-based), applied to every row
/// including the frozen ones.
ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& b, int k);

/// Quiver view of the skew-symmetric block: arrow_counts[i][j] arrows from
/// i+1 to j+1, at most one of (i,j),(j,i) nonzero.
struct Quiver {
  int vertices = 0;
  std::vector<std::vector<long>> arrow_counts;
};

Quiver quiver_of(const ExtendedExchangeMatrix& b);
/// Inverse of quiver_of on the mutable block; rejects 2-cycles.
ExtendedExchangeMatrix matrix_of(const Quiver& q, int n_frozen = 0);

/// Tropical coefficient y_j read off the frozen rows: the exponent vector
/// of u_1..u_m in y_j.
std::vector<long> tropical_y(const ExtendedExchangeMatrix& b, int j);

/// Coefficient mutation evaluated directly in the tropical semifield
/// (min of exponents as auxiliary addition).  Provided to assert the
/// equivalence with the frozen-row part of mutate_matrix.
std::vector<std::vector<long>> mutate_y_tropical(const ExtendedExchangeMatrix& b, int k);

/// A finite sequence of 1-based directions; adjacent equal directions
/// cancel (mutation is an involution) and are removed by normalize.
class MutationWord {
 public:
  MutationWord() = default;
  explicit MutationWord(std::vector<int> directions);
  const std::vector<int>& directions() const { return directions_; }
  std::size_t length() const { return directions_.size(); }
  MutationWord normalized() const;
  MutationWord reversed() const;

 private:
  std::vector<int> directions_;
};

class Seed {
 public:
  /// The root seed: cluster[i] = x_{i+1}, coefficients from frozen rows.
  explicit Seed(ExtendedExchangeMatrix matrix);
  Seed(ExtendedExchangeMatrix matrix, std::vector<LaurentPoly> cluster, VarTablePtr vars);

  const ExtendedExchangeMatrix& matrix() const { return matrix_; }
  const std::vector<LaurentPoly>& cluster() const { return cluster_; }
  const LaurentPoly& cluster_var(int i) const { return cluster_.at(static_cast<std::size_t>(i - 1)); }
  const VarTablePtr& vars() const { return vars_; }

  bool operator==(const Seed& other) const;

 private:
  ExtendedExchangeMatrix matrix_;
  std::vector<LaurentPoly> cluster_;
  VarTablePtr vars_;
};

/// One seed mutation: the exchange relation over all rows, with exact
/// division by the outgoing variable.  A division failure means the
/// Laurent phenomenon was violated by a bug and surfaces as MathError.
Seed mutate_seed(const Seed& s, int k);

/// The cluster at the endpoint of the word, starting from the root seed of
/// b0.  Laurent-ness is asserted at every step by the exact divisions.
std::vector<LaurentPoly> oracle_expand(const ExtendedExchangeMatrix& b0, const MutationWord& w);

/// Same walk, returning the full endpoint seed.
Seed oracle_walk(const ExtendedExchangeMatrix& b0, const MutationWord& w);
Seed oracle_walk(Seed s, const MutationWord& w);

}  // namespace clusteralg
