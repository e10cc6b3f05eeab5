#include "clusteralg/seed.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusteralg {

namespace {

long pos_part(long v) { return v > 0 ? v : 0; }

int sign_of(long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

void check_mul_overflow(long a, long b) {
  if (a == 0 || b == 0) return;
  long prod;
  if (__builtin_mul_overflow(a, b, &prod)) {
    throw MathError("exchange matrix entry overflow");
  }
}

}  // namespace

ExtendedExchangeMatrix::ExtendedExchangeMatrix(int n_mutable, int n_frozen,
                                               std::vector<std::vector<long>> entries)
    : n_mutable_(n_mutable), n_frozen_(n_frozen), entries_(std::move(entries)) {
  if (n_mutable < 0 || n_frozen < 0) throw std::invalid_argument("negative matrix dimensions");
  if (entries_.size() != static_cast<std::size_t>(rows())) {
    throw std::invalid_argument("matrix needs n_mutable + n_frozen rows");
  }
  for (const auto& row : entries_) {
    if (row.size() != static_cast<std::size_t>(n_mutable_)) {
      throw std::invalid_argument("matrix rows need n_mutable columns");
    }
  }
  for (int i = 0; i < n_mutable_; ++i) {
    for (int j = 0; j < n_mutable_; ++j) {
      if (entries_[i][j] != -entries_[j][i]) {
        throw std::invalid_argument("mutable block must be skew-symmetric");
      }
    }
  }
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::zero(int n_mutable, int n_frozen) {
  std::vector<std::vector<long>> e(static_cast<std::size_t>(n_mutable + n_frozen),
                                        std::vector<long>(static_cast<std::size_t>(n_mutable), 0));
  return ExtendedExchangeMatrix(n_mutable, n_frozen, std::move(e));
}

long ExtendedExchangeMatrix::at(int row, int col) const {
  if (row < 0 || row >= rows() || col < 0 || col >= n_mutable_) {
    throw std::invalid_argument("matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::negated() const {
  auto e = entries_;
  for (auto& row : e) {
    for (auto& v : row) v = -v;
  }
  return ExtendedExchangeMatrix(n_mutable_, n_frozen_, std::move(e));
}

ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& b, int k) {
  if (k < 1 || k > b.n_mutable()) throw std::invalid_argument("mutation direction out of range");
  const int kk = k - 1;
  auto e = b.entries();
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.n_mutable(); ++j) {
      if (i == kk || j == kk) {
        e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -b.at(i, j);
      } else {
        check_mul_overflow(b.at(i, kk), b.at(kk, j));
        long prod = b.at(i, kk) * b.at(kk, j);
        e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            b.at(i, j) + sign_of(b.at(i, kk)) * pos_part(prod);
      }
    }
  }
  return ExtendedExchangeMatrix(b.n_mutable(), b.n_frozen(), std::move(e));
}

Quiver quiver_of(const ExtendedExchangeMatrix& b) {
  Quiver q;
  q.vertices = b.n_mutable();
  q.arrow_counts.assign(static_cast<std::size_t>(q.vertices),
                        std::vector<long>(static_cast<std::size_t>(q.vertices), 0));
  for (int i = 0; i < q.vertices; ++i) {
    for (int j = 0; j < q.vertices; ++j) {
      q.arrow_counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pos_part(b.at(i, j));
    }
  }
  return q;
}

ExtendedExchangeMatrix matrix_of(const Quiver& q, int n_frozen) {
  const int n = q.vertices;
  std::vector<std::vector<long>> e(static_cast<std::size_t>(n + n_frozen),
                                        std::vector<long>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long fwd = q.arrow_counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      long back = q.arrow_counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (fwd < 0 || back < 0) throw std::invalid_argument("arrow counts must be nonnegative");
      if (fwd != 0 && back != 0) throw std::invalid_argument("quiver has a 2-cycle");
      if (i != j) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = fwd - back;
    }
  }
  return ExtendedExchangeMatrix(n, n_frozen, std::move(e));
}

std::vector<long> tropical_y(const ExtendedExchangeMatrix& b, int j) {
  if (j < 1 || j > b.n_mutable()) throw std::invalid_argument("index out of range");
  std::vector<long> exps(static_cast<std::size_t>(b.n_frozen()));
  for (int i = 0; i < b.n_frozen(); ++i) {
    exps[static_cast<std::size_t>(i)] = b.at(b.n_mutable() + i, j - 1);
  }
  return exps;
}

std::vector<std::vector<long>> mutate_y_tropical(const ExtendedExchangeMatrix& b, int k) {
  if (k < 1 || k > b.n_mutable()) throw std::invalid_argument("mutation direction out of range");
  const int m = b.n_frozen();
  std::vector<std::vector<long>> out(static_cast<std::size_t>(b.n_mutable()));
  std::vector<long> yk = tropical_y(b, k);
  for (int j = 1; j <= b.n_mutable(); ++j) {
    std::vector<long> yj = tropical_y(b, j);
    std::vector<long> res(static_cast<std::size_t>(m));
    if (j == k) {
      for (int i = 0; i < m; ++i) res[static_cast<std::size_t>(i)] = -yk[static_cast<std::size_t>(i)];
    } else {
      long bkj = b.at(k - 1, j - 1);
      for (int i = 0; i < m; ++i) {
        // y_j * y_k^{[b_kj]_+} * (y_k (+) 1)^{-b_kj}, with (+) = min of exponents
        long yk_i = yk[static_cast<std::size_t>(i)];
        res[static_cast<std::size_t>(i)] =
            yj[static_cast<std::size_t>(i)] + pos_part(bkj) * yk_i - bkj * std::min(yk_i, 0L);
      }
    }
    out[static_cast<std::size_t>(j - 1)] = std::move(res);
  }
  return out;
}

MutationWord::MutationWord(std::vector<int> directions) : directions_(std::move(directions)) {
  for (int d : directions_) {
    if (d < 1) throw std::invalid_argument("directions are 1-based and positive");
  }
}

MutationWord MutationWord::normalized() const {
  std::vector<int> stack;
  for (int d : directions_) {
    if (!stack.empty() && stack.back() == d) {
      stack.pop_back();  // consecutive equal mutations cancel
    } else {
      stack.push_back(d);
    }
  }
  return MutationWord(std::move(stack));
}

MutationWord MutationWord::reversed() const {
  std::vector<int> r(directions_.rbegin(), directions_.rend());
  return MutationWord(std::move(r));
}

Seed::Seed(ExtendedExchangeMatrix matrix) : matrix_(std::move(matrix)) {
  vars_ = VarTable::make_cluster(matrix_.n_mutable(), matrix_.n_frozen());
  cluster_.reserve(static_cast<std::size_t>(matrix_.n_mutable()));
  for (int i = 0; i < matrix_.n_mutable(); ++i) {
    cluster_.push_back(LaurentPoly::variable(vars_, static_cast<std::size_t>(i)));
  }
}

Seed::Seed(ExtendedExchangeMatrix matrix, std::vector<LaurentPoly> cluster, VarTablePtr vars)
    : matrix_(std::move(matrix)), cluster_(std::move(cluster)), vars_(std::move(vars)) {
  if (cluster_.size() != static_cast<std::size_t>(matrix_.n_mutable())) {
    throw std::invalid_argument("cluster size must equal n_mutable");
  }
}

bool Seed::operator==(const Seed& other) const {
  return matrix_ == other.matrix_ && cluster_ == other.cluster_;
}

Seed mutate_seed(const Seed& s, int k) {
  const auto& b = s.matrix();
  if (k < 1 || k > b.n_mutable()) throw std::invalid_argument("mutation direction out of range");
  const auto& vars = s.vars();
  const int n = b.n_mutable();
  LaurentPoly plus = LaurentPoly::constant(vars, 1);
  LaurentPoly minus = LaurentPoly::constant(vars, 1);
  for (int i = 0; i < b.rows(); ++i) {
    long bik = b.at(i, k - 1);
    if (bik == 0) continue;
    LaurentPoly factor = (i < n) ? s.cluster()[static_cast<std::size_t>(i)]
                                 : LaurentPoly::variable(vars, static_cast<std::size_t>(i));
    if (bik > 0) {
      plus *= factor.pow(bik);
    } else {
      minus *= factor.pow(-bik);
    }
  }
  LaurentPoly exchanged = div_exact(plus + minus, s.cluster()[static_cast<std::size_t>(k - 1)]);
  auto cluster = s.cluster();
  cluster[static_cast<std::size_t>(k - 1)] = std::move(exchanged);
  return Seed(mutate_matrix(b, k), std::move(cluster), vars);
}

Seed oracle_walk(Seed s, const MutationWord& w) {
  const MutationWord norm = w.normalized();
  for (int d : norm.directions()) {
    if (d > s.matrix().n_mutable()) throw std::invalid_argument("direction exceeds n_mutable");
    s = mutate_seed(s, d);
  }
  return s;
}

Seed oracle_walk(const ExtendedExchangeMatrix& b0, const MutationWord& w) {
  return oracle_walk(Seed(b0), w);
}

std::vector<LaurentPoly> oracle_expand(const ExtendedExchangeMatrix& b0, const MutationWord& w) {
  return oracle_walk(b0, w).cluster();
}

}  // namespace clusteralg
