#include "clusteralg/chebyshev.hpp"

#include <stdexcept>

namespace clusteralg {

ChebSeq::ChebSeq(long r) : r_(r) {
  if (r < 0) throw std::invalid_argument("ChebSeq requires r >= 0");
}

Coeff ChebSeq::value(long n) const {
  {
    std::lock_guard<std::mutex> g(lock_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
  }
  Coeff v = cheb(r_, n);
  std::lock_guard<std::mutex> g(lock_);
  memo_.emplace(n, v);
  return v;
}

Coeff cheb(long r, long n) {
  if (r < 0) throw std::invalid_argument("cheb requires r >= 0");
  if (n == 1) return 0;
  if (n == 2) return 1;
  Coeff prev = 0, cur = 1;  // c_1, c_2
  if (n > 2) {
    for (long i = 3; i <= n; ++i) {
      Coeff next = r * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // run the recurrence backwards: c_{i-1} = r*c_i - c_{i+1}
  for (long i = 0; i >= n; --i) {
    Coeff before = r * prev - cur;
    cur = prev;
    prev = before;
  }
  return prev;
}

long cheb_ll(long r, long n) {
  Coeff v = cheb(r, n);
  if (!v.fits_slong_p()) throw MathError("c_n does not fit a machine integer");
  return v.get_si();
}

bool cheb_identities_hold(long r, long n, long k) {
  if (n < 3) throw std::invalid_argument("identity requires n >= 3");
  Coeff lhs = cheb(r, n - 1) * cheb(r, n + k - 3) - cheb(r, n + k - 2) * cheb(r, n - 2);
  if (lhs != cheb(r, k)) return false;
  Coeff det = cheb(r, n - 1) * cheb(r, n - 1) - cheb(r, n) * cheb(r, n - 2);
  return det == 1;
}

Coeff modified_binomial(long a, long b) {
  if (a == b) return 1;
  if (a < b) return 0;
  if (a - b > 2'000'000) throw std::invalid_argument("modified_binomial: A - B too large");
  Coeff num = 1, den = 1;
  for (long i = 0; i <= a - b - 1; ++i) {
    num *= Coeff(a - i);
    den *= Coeff(a - b - i);
  }
  if (num == 0) return 0;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw MathError("modified_binomial: non-integral product");
  }
  return num / den;
}

ASeq::ASeq(long p, long q, long r, WordShape shape)
    : p_(p), q_(q), r_(r), shape_(shape) {
  if (p < 0 || q < 0) throw std::invalid_argument("ASeq requires p, q >= 0");
  if (r < 0) throw std::invalid_argument("ASeq requires r >= 0");
}

Coeff ASeq::a(long i) const {
  if (shape_ == WordShape::kStartsWithOne) {
    return p_ * cheb(r_, i + 1) + q_ * cheb(r_, i);
  }
  return q_ * cheb(r_, i + 1) + p_ * cheb(r_, i);
}

long ASeq::a_ll(long i) const {
  Coeff v = a(i);
  if (!v.fits_slong_p()) throw MathError("A_i does not fit a machine integer");
  return v.get_si();
}

long ASeq::alpha() const {
  return shape_ == WordShape::kStartsWithOne ? q_ : p_;
}

std::vector<Coeff> weighted_partial_sums(const std::vector<long>& taus, long r) {
  std::vector<Coeff> s(taus.size() + 1);
  s[0] = 0;
  for (std::size_t i = 1; i <= taus.size(); ++i) {
    Coeff acc = 0;
    for (std::size_t j = 0; j < i; ++j) {
      acc += cheb(r, static_cast<long>(i - j) + 1) * taus[j];
    }
    s[i] = acc;
  }
  return s;
}

}  // namespace clusteralg
