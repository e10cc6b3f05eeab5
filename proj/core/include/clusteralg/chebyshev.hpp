/*
 * chebyshev.hpp
 * -------------
 * The integer sequence c_n defined by c_1 = 0, c_2 = 1 and
 * c_n = r*c_{n-1} - c_{n-2}, extended to all integer indices by running the
 * recurrence backwards (equivalently by the antisymmetry c_{2-n} = -c_n).
 * On top of it: the linear combinations A_i(p, q) attached to an
 * alternating two-direction mutation word, modified binomial coefficients,
 * and weighted partial sums.
 */
#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "clusteralg/laurent.hpp"

namespace clusteralg {

/// Memoized view of the sequence for one fixed r >= 0.  The memo table is
/// append-only and internally synchronized; values are exact integers.
class ChebSeq {
 public:
  explicit ChebSeq(long r);
  long r() const { return r_; }
  Coeff value(long n) const;

 private:
  long r_;
  mutable std::unordered_map<long, Coeff> memo_;
  mutable std::mutex lock_;
};

/// c_n for parameter r; convenience wrapper around a transient computation.
Coeff cheb(long r, long n);

/// c_n when it fits a machine integer; throws MathError otherwise.
long cheb_ll(long r, long n);

/// Both determinant-style identities at (n, k): c_{n-1}*c_{n+k-3} -
/// c_{n+k-2}*c_{n-2} = c_k and c_{n-1}^2 - c_n*c_{n-2} = 1.  Requires n >= 3.
bool cheb_identities_hold(long r, long n, long k);

/// Product-form binomial for arbitrary integer arguments:
/// 1 when A = B, 0 when A < B, otherwise prod_{i=0}^{A-B-1} (A-i)/(A-B-i).
/// The product is evaluated as an exact rational and must come out integral.
Coeff modified_binomial(long a, long b);

/// Which of the two displayed shapes the alternating word has.  The word is
/// read from the far seed towards the expansion seed; its last direction is
/// always 1.
enum class WordShape {
  kStartsWithOne,  // 1,2,1,...,2,1  (even number of seeds)
  kStartsWithTwo,  // 2,1,2,...,2,1  (odd number of seeds)
};

/// The sequences A_i(p,q) = p*c_{i+1} + q*c_i or q*c_{i+1} + p*c_i according
/// to the word shape, together with the split point alpha.
class ASeq {
 public:
  ASeq(long p, long q, long r, WordShape shape);
  Coeff a(long i) const;
  long a_ll(long i) const;
  long p() const { return p_; }
  long q() const { return q_; }
  long r() const { return r_; }
  WordShape shape() const { return shape_; }
  /// Count of leading indices whose Dyck path type is the smaller one.
  long alpha() const;
  /// p + q - alpha: the exponent of the variable mutated first.
  long beta() const { return p_ + q_ - alpha(); }

 private:
  long p_, q_, r_;
  WordShape shape_;
};

/// Weighted partial sums s_0 = 0, s_i = sum_{j<i} c_{i-j+1} * tau_j.
/// Returns s_0..s_n for an input of length n.
std::vector<Coeff> weighted_partial_sums(const std::vector<long>& taus, long r);

}  // namespace clusteralg
