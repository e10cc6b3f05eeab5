/*
 * laurent.hpp
 * -----------
 * Sparse multivariate Laurent polynomials with arbitrary-precision integer
 * coefficients.
 *
 * A polynomial is a map from exponent vectors (one signed exponent per
 * variable of a fixed VarTable) to nonzero GMP integers.  The zero
 * polynomial is the empty map.  All operations are pure; values are
 * immutable after construction and safe to share across threads.
 *
 * Exact division is available for divisors that divide exactly in the
 * Laurent ring (monomial factors are always invertible).  A failed exact
 * division throws MathError: in this codebase it signals a broken
 * invariant upstream, never a user error.
 */
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace clusteralg {

using Coeff = mpz_class;
using ExpVec = std::vector<int32_t>;

/// Thrown when a mathematical invariant fails (inexact division,
/// non-integral binomial product, positivity violation, ...).
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Ordered list of distinct variable names, fixed for the lifetime of a
/// computation.  Mutable cluster variables come first, then frozen ones.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);
  /// x1..xn followed by u1..um.
  static std::shared_ptr<const VarTable> make_cluster(int n_mutable, int n_frozen);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarTable& other) const { return names_ == other.names_; }
  bool operator!=(const VarTable& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Graded-lexicographic order on exponent vectors: higher total degree
/// first, ties broken lexicographically.  Used as the internal term order
/// (it is the reduction order for exact division).
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Coeff, GrlexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

  static LaurentPoly zero(VarTablePtr vars) { return LaurentPoly(std::move(vars)); }
  static LaurentPoly constant(VarTablePtr vars, Coeff value);
  static LaurentPoly monomial(VarTablePtr vars, ExpVec exps, Coeff coeff);
  /// The single variable vars[index] raised to `power`.
  static LaurentPoly variable(VarTablePtr vars, std::size_t index, int32_t power = 1);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True iff every coefficient is >= 0.
  bool is_nonneg() const;
  Coeff min_coeff() const;  // 0 for the zero polynomial
  Coeff coeff_sum() const;

  /// Componentwise minimum of exponents over all terms; nullopt when zero.
  std::optional<ExpVec> min_exponents() const;

  bool operator==(const LaurentPoly& other) const;
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other) { *this = *this * other; return *this; }

  /// Adds coeff * x^exps, keeping canonical form.
  void add_term(const ExpVec& exps, const Coeff& coeff);

  /// p^e for e >= 0; for e < 0, p must be a monomial with coefficient +-1.
  LaurentPoly pow(long e) const;

  /// Canonical text form, terms sorted lexicographically by exponent vector.
  std::string to_string() const;
  static LaurentPoly parse(const std::string& text, VarTablePtr vars);

 private:
  VarTablePtr vars_;
  TermMap terms_;

  void check_same_table(const LaurentPoly& other) const;
  void check_width(const ExpVec& exps) const;
};

/// Exact division in the Laurent ring.  Throws MathError("not divisible")
/// if a nonzero remainder survives, std::invalid_argument on a zero divisor
/// or mismatched tables.
LaurentPoly div_exact(const LaurentPoly& numerator, const LaurentPoly& denominator);

/// A not-yet-reduced fraction of Laurent polynomials.
struct RationalPair {
  LaurentPoly num;
  LaurentPoly den;
};

/// True iff den divides num exactly, i.e. the fraction is a Laurent
/// polynomial in the table's variables.
bool is_laurent(const RationalPair& frac);

/// Exact image of p under vars[i] := values[i].  Every value lives in a
/// common target table.  A variable raised to a negative power must be
/// substituted by a monomial with coefficient +-1.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& values,
                       VarTablePtr target);

}  // namespace clusteralg
