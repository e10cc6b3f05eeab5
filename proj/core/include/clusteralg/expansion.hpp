/*
 * expansion.hpp
 * -------------
 * Closed-form Laurent expansions of rank-2 cluster monomials, each checked
 * against the mutation oracle: the compatible-pair formula, the weighted
 * tau-sum formula (in the adjacent variable), the mixed formula splitting
 * the expansion into two positive parts, and the slice divisibility
 * quotient.  Also the positivity sweep driver.
 *
 * An ExpansionContext normalizes an instance: the two mutation directions
 * are relabeled so the walk from the expansion seed starts in direction
 * d1, and the whole extended matrix is negated when the d1->d2 arrow count
 * at the seed is negative (a no-op on every cluster variable).  All other
 * vertices, frozen rows included, enter the formulas as spectators.
 */
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "clusteralg/chebyshev.hpp"
#include "clusteralg/dyck.hpp"
#include "clusteralg/rank3.hpp"
#include "clusteralg/seed.hpp"

namespace clusteralg {

struct Spectator {
  std::size_t var_index;   // slot in the seed's variable table
  bool frozen;
  long xi, omega;     // arrows f->d1 and d2->f at the expansion seed
  long xi_adj, omega_adj;  // the same data after mutating the seed in d1
};

/// How the correction exponent for the tau-sum formula was decided.
enum class OffsetRule { kAlmostCyclic, kAcyclic, kSupportMin };

class ExpansionContext {
 public:
  /// word_from_t walks from the expansion seed t towards the far seed t',
  /// strictly alternating between two directions.  p is the exponent of
  /// the far-cluster variable in the direction of the word's first letter,
  /// q the other one.
  ///
  /// When the two directions exchange along a single arrow (r = 1) the
  /// word is first reduced modulo the period-5 recurrence of the seed
  /// pattern (which swaps p and q per period); the closed formulas are
  /// stated for reduced words.  A word that reduces to nothing leaves a
  /// trivial context whose expansions are plain monomials.
  static ExpansionContext build(const ExtendedExchangeMatrix& b_t, const MutationWord& word_from_t,
                                long p, long q);

  long n() const { return n_; }  // seeds in the reduced walk, both ends included
  long p() const { return p_; }
  long q() const { return q_; }
  long r() const { return r_; }
  WordShape shape() const { return shape_; }
  const ASeq& aseq() const { return aseq_; }
  int d1() const { return d1_; }  // 1-based direction labels in the seed
  int d2() const { return d2_; }
  bool negated() const { return negated_; }
  bool trivial() const { return trivial_; }
  const ExtendedExchangeMatrix& matrix() const { return b_t_; }
  const std::vector<Spectator>& spectators() const { return spectators_; }
  const VarTablePtr& t_vars() const { return t_vars_; }
  /// t_vars with the d1 variable replaced by the adjacent-cluster variable
  /// (same slot, name prefixed with "m").
  const VarTablePtr& adjacent_vars() const { return adj_vars_; }
  /// The walk as originally requested (before any period reduction).
  const MutationWord& query_word() const { return query_word_; }
  long query_p() const { return query_p_; }
  long query_q() const { return query_q_; }

  /// The d1 cluster variable of the adjacent seed, in t variables.
  LaurentPoly adjacent_variable() const;

 private:
  ExtendedExchangeMatrix b_t_ = ExtendedExchangeMatrix::zero(0, 0);
  bool negated_ = false;
  bool trivial_ = false;
  int d1_ = 1, d2_ = 2;
  long n_ = 2, p_ = 0, q_ = 0, r_ = 0;
  WordShape shape_ = WordShape::kStartsWithOne;
  ASeq aseq_{0, 0, 0, WordShape::kStartsWithOne};
  std::vector<Spectator> spectators_;
  VarTablePtr t_vars_;
  VarTablePtr adj_vars_;
  MutationWord query_word_;
  long query_p_ = 0, query_q_ = 0;
};

/// Correction exponent for the compatible-pair formula: the minimum of the
/// three extreme-family values (full/empty, empty/empty, empty/full).
Coeff spectator_offset(const ExpansionContext& ctx, const Spectator& f);
/// The same minimum taken over every achievable pair of family sizes.
Coeff spectator_offset_bruteforce(const ExpansionContext& ctx, const Spectator& f);

/// Correction exponent for the tau-sum formula, decided by classifying the
/// rank-3 subquiver sequence on (d1, d2, f); falls back to the minimum over
/// the achievable weighted-sum support when the classification is not
/// defined for the instance.
std::pair<Coeff, OffsetRule> spectator_offset_adjacent(const ExpansionContext& ctx,
                                                       const Spectator& f);

/// Compatible-pair expansion of the far cluster monomial, in t variables.
LaurentPoly expand_compat(const ExpansionContext& ctx);

/// Variant summing over single compatible pairs in the one large Dyck path
/// type instead of families; enumeration-backed, so only for small types.
LaurentPoly expand_compat_single_path(const ExpansionContext& ctx, int cap = 24);

struct TauExpansion {
  LaurentPoly adjacent;   // over adjacent_vars: the d1 slot is the adjacent variable
  LaurentPoly rewritten;  // the same element in t variables
};

/// Weighted tau-sum expansion.
TauExpansion expand_tau(const ExpansionContext& ctx);

struct MixedParts {
  LaurentPoly head;  // tau part with nonnegative adjacent exponents
  LaurentPoly tail;  // compatible-pair part with positive d1 exponents
};

/// The two halves of the mixed expansion, without rewriting the head.
MixedParts expand_mixed_parts(const ExpansionContext& ctx);

struct MixedExpansion {
  LaurentPoly head;           // tau part with nonnegative adjacent exponents
  LaurentPoly tail;           // compatible-pair part with positive d1 exponents
  LaurentPoly rewritten_sum;  // head rewritten into t variables, plus tail
};

/// Mixed expansion: every exponent of the adjacent variable, of x_{d1} and
/// of the spectators is nonnegative in the respective parts.
MixedExpansion expand_mixed(const ExpansionContext& ctx);

/// Reference value x_{d1;t'}^p * x_{d2;t'}^q computed by the oracle, in t
/// variables.
LaurentPoly oracle_reference(const ExpansionContext& ctx);

/// Rewrites a polynomial over adjacent_vars into t variables by exact
/// substitution of the adjacent variable (negative powers go through exact
/// division).
LaurentPoly rewrite_adjacent(const ExpansionContext& ctx, const LaurentPoly& adj);

/// The fixed-weight slice of the tau sum in two formal variables x1, x2,
/// divided exactly by (1 + x1^r)^(r*a - A_n).  Throws MathError when the
/// division fails; the caller checks nonnegativity of the quotient.
LaurentPoly tau_slice_quotient(long r, long p, long q, WordShape shape,
                               long n, long a);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct PositivityReport {
  std::vector<CheckResult> checks;
  std::size_t max_terms = 0;
  Coeff min_coeff_seen = 0;
  bool all_pass() const;
};

/// Runs the oracle along w, asserting Laurent-ness and nonnegativity of
/// every cluster variable; when the word ends in an alternating
/// two-direction tail, also cross-checks the three expansion formulas
/// against the oracle at the endpoint seed.
PositivityReport verify_positivity(const ExtendedExchangeMatrix& b0, const MutationWord& w);

}  // namespace clusteralg
