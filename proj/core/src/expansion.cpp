#include "clusteralg/expansion.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <tuple>

namespace clusteralg {

namespace {

long pos_part(long v) { return v > 0 ? v : 0; }

int32_t to_exp(long v) {
  if (v < INT32_MIN || v > INT32_MAX) throw MathError("exponent out of range");
  return static_cast<int32_t>(v);
}

long coeff_ll(const Coeff& v, const char* what) {
  if (!v.fits_slong_p()) throw MathError(std::string(what) + " does not fit a machine integer");
  return v.get_si();
}

// ---------------------------------------------------------------------------
// Size distributions of compatible-pair families.
// ---------------------------------------------------------------------------

using SizeKey = std::pair<long, long>;  // (|S1|, |S2|)
using SizeDist = std::map<SizeKey, Coeff>;

constexpr int kEnumerationCap = 16;  // switch point between enumeration and recurrence

SizeDist convolve(const SizeDist& a, const SizeDist& b) {
  SizeDist out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    }
  }
  return out;
}

SizeDist enumerate_size_table(long a1, long a2, long r, int cap) {
  SizeDist out;
  auto raw = compatible_size_distribution(a1, a2, std::max<long>(r, 1), cap);
  for (const auto& [k, v] : raw) out[{k.first, k.second}] = v;
  return out;
}

// Size distribution of compatible pairs in the Dyck path of type
// (c_m, c_{m-1}).  Small types are enumerated from the definition; larger
// ones are decoded from the rank-2 oracle expansion, whose monomials are
// indexed by exactly these pairs.
SizeDist consecutive_type_table_uncached(long r, long m) {
  long a1 = cheb_ll(r, m);
  long a2 = cheb_ll(r, m - 1);
  if (pos_part(a1) + pos_part(a2) <= kEnumerationCap) {
    return enumerate_size_table(a1, a2, r, kEnumerationCap);
  }
  if (r < 1) throw MathError("large pair table requested with r < 1");
  std::vector<int> dirs;
  for (long i = 0; i < m - 1; ++i) dirs.push_back(i % 2 == 0 ? 1 : 2);
  ExtendedExchangeMatrix b(2, 0, {{0, r}, {-r, 0}});
  Seed far = oracle_walk(b, MutationWord(dirs));
  const LaurentPoly& u = far.cluster()[m % 2 == 0 ? 0 : 1];
  SizeDist out;
  for (const auto& [e, c] : u.terms()) {
    long e1 = e[0] + a1;
    long e2 = e[1] + a2;
    if (e1 % r != 0 || e2 % r != 0 || e1 < 0 || e2 < 0) {
      throw MathError("rank-2 expansion exponent not aligned with pair sizes");
    }
    out[{e2 / r, e1 / r}] += c;  // J = |S1| from the x2 exponent, K = |S2| from x1
  }
  return out;
}

const SizeDist& consecutive_type_table(long r, long m) {
  static std::map<std::pair<long, long>, SizeDist> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> g(lock);
  auto it = cache.find({r, m});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(r, m), consecutive_type_table_uncached(r, m)).first;
  }
  return it->second;
}

struct FamilyKey {
  long r, p, q, n;
  WordShape shape;
  bool operator<(const FamilyKey& o) const {
    return std::tie(r, p, q, n, shape) < std::tie(o.r, o.p, o.q, o.n, o.shape);
  }
};

// Size distribution over whole families: alpha factors of the smaller type
// and p+q-alpha of the larger.
const SizeDist& family_size_distribution(const ExpansionContext& ctx) {
  static std::map<FamilyKey, SizeDist> cache;
  static std::mutex lock;
  FamilyKey key{ctx.r(), ctx.p(), ctx.q(), ctx.n(), ctx.shape()};
  std::lock_guard<std::mutex> g(lock);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SizeDist acc;
  acc[{0, 0}] = 1;
  const long alpha = ctx.aseq().alpha();
  for (long i = 1; i <= ctx.p() + ctx.q(); ++i) {
    const SizeDist& factor =
        consecutive_type_table(ctx.r(), i <= alpha ? ctx.n() - 1 : ctx.n());
    acc = convolve(acc, factor);
  }
  return cache.emplace(key, std::move(acc)).first->second;
}

// ---------------------------------------------------------------------------
// Tau-sum tables.
// ---------------------------------------------------------------------------

// Sum of modified-binomial products keyed by the last two weighted partial
// sums (s_{n-3}, s_{n-2}); every monomial of the tau formula depends on the
// tuple only through this key.
using TauTable = std::map<std::pair<long, long>, Coeff>;

constexpr long kBoxGuard = 2'000'000;

struct TauBuilder {
  long r, n, beta;
  const ASeq& aseq;
  long c_n2, c_n1;  // c_{n-2}, c_{n-1}
  TauTable table;

  std::vector<long> prefix;  // tau_0..tau_{n-4}

  void run() {
    if (n == 2) {
      table[{0, 0}] += 1;
      return;
    }
    recurse(0, 0, 0, Coeff(1));
  }

  // depth chooses tau_depth; (s_prev, s_cur) = (s_{depth-1}, s_depth)
  void recurse(long depth, long s_prev, long s_cur, const Coeff& prod) {
    if (depth == n - 3) {
      finish(s_prev, s_cur, prod);
      return;
    }
    long upper = aseq.a_ll(depth + 1) - r * s_cur;
    if (upper < 0) return;
    if (upper > kBoxGuard) throw MathError("tau box out of range");
    for (long t = 0; t <= upper; ++t) {
      Coeff binom = modified_binomial(upper, t);
      if (binom == 0) continue;
      prefix.push_back(t);
      recurse(depth + 1, s_cur, r * s_cur - s_prev + t, prod * binom);
      prefix.pop_back();
    }
  }

  // Maximal-element parameters k of the comparison set for the current
  // prefix.  Members are completions (tau'_0..tau'_{n-3}) with
  // 0 <= tau'_i <= tau_i on the prefix, whose last two partial sums hit
  // (k*c_{n-2}, k*c_{n-1}) for some 0 <= k <= beta; maximality is
  // coordinatewise over the whole tuple.  The search is target-driven: the
  // weighted sum must land exactly on k*c_{n-2}, which prunes almost all
  // branches through achievable-range bounds.
  std::vector<long> maximal_ks() {
    const std::size_t plen = prefix.size();
    std::vector<long> weights(plen);  // coefficient of tau'_j in s'_{n-3}
    for (std::size_t j = 0; j < plen; ++j) {
      weights[j] = cheb_ll(r, n - 2 - static_cast<long>(j));
    }
    std::vector<long> smin(plen + 1, 0), smax(plen + 1, 0);
    for (std::size_t j = plen; j-- > 0;) {
      long lo = std::min<long>(0, weights[j] * prefix[j]);
      long hi = std::max<long>(0, weights[j] * prefix[j]);
      smin[j] = smin[j + 1] + lo;
      smax[j] = smax[j + 1] + hi;
    }

    std::vector<std::pair<std::vector<long>, long>> members;
    std::vector<long> cur;
    auto dfs = [&](auto&& self, std::size_t j, long remaining, long s_prev,
                   long s_cur, long k) -> void {
      if (remaining < smin[j] || remaining > smax[j]) return;
      if (j == plen) {
        if (remaining != 0) return;
        long tau_last = k * c_n1 - (r * s_cur - s_prev);
        cur.push_back(tau_last);
        members.emplace_back(cur, k);
        cur.pop_back();
        return;
      }
      for (long t = 0; t <= prefix[j]; ++t) {
        cur.push_back(t);
        self(self, j + 1, remaining - weights[j] * t, s_cur, r * s_cur - s_prev + t, k);
        cur.pop_back();
      }
    };
    for (long k = 0; k <= beta; ++k) dfs(dfs, 0, k * c_n2, 0, 0, k);

    std::vector<long> ks;
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < members.size() && maximal; ++j) {
        if (i == j) continue;
        bool dominates = true, strict = false;
        for (std::size_t c = 0; c < members[i].first.size(); ++c) {
          if (members[j].first[c] < members[i].first[c]) dominates = false;
          if (members[j].first[c] > members[i].first[c]) strict = true;
        }
        if (dominates && strict) maximal = false;
      }
      if (maximal && std::find(ks.begin(), ks.end(), members[i].second) == ks.end()) {
        ks.push_back(members[i].second);
      }
    }
    return ks;
  }

  void finish(long s_nm4, long s_nm3, const Coeff& prod) {
    long upper = aseq.a_ll(n - 2) - r * s_nm3;
    if (upper > kBoxGuard) throw MathError("tau box out of range");
    std::vector<long> ks = maximal_ks();
    const long a_nm3 = aseq.a_ll(n - 3);
    const long a_nm2 = aseq.a_ll(n - 2);
    const long hard_floor = -(std::labs(a_nm2) + std::labs(r * s_nm3) + 1);
    for (long t = upper;; --t) {
      if (upper >= 0 && t < 0) break;
      if (t < hard_floor) break;
      long s_nm2 = r * s_nm3 - s_nm4 + t;
      bool cond = true;
      for (long k : ks) {
        if ((s_nm2 - k * c_n1) * a_nm3 < (s_nm3 - k * c_n2) * a_nm2) {
          cond = false;
          break;
        }
      }
      if (!cond) {
        if (a_nm3 >= 0) break;  // the violated inequality only tightens below
        continue;
      }
      Coeff binom = modified_binomial(upper, t);
      if (binom != 0) {
        if (t == hard_floor) throw MathError("tau enumeration hit the hard floor");
        table[{s_nm3, s_nm2}] += prod * binom;
      }
    }
  }
};

struct TauKey {
  long r, p, q, n;
  WordShape shape;
  bool operator<(const TauKey& o) const {
    return std::tie(r, p, q, n, shape) < std::tie(o.r, o.p, o.q, o.n, o.shape);
  }
};

const TauTable& tau_table(long r, long p, long q, WordShape shape, long n) {
  static std::map<TauKey, TauTable> cache;
  static std::mutex lock;
  TauKey key{r, p, q, n, shape};
  std::lock_guard<std::mutex> g(lock);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ASeq aseq(p, q, r, shape);
  TauBuilder builder{r, n, aseq.beta(), aseq, cheb_ll(r, n - 2), cheb_ll(r, n - 1), {}, {}};
  builder.run();
  return cache.emplace(key, std::move(builder.table)).first->second;
}

const TauTable& tau_table_for(const ExpansionContext& ctx) {
  return tau_table(ctx.r(), ctx.p(), ctx.q(), ctx.shape(), ctx.n());
}

}  // namespace

// ---------------------------------------------------------------------------
// ExpansionContext
// ---------------------------------------------------------------------------

ExpansionContext ExpansionContext::build(const ExtendedExchangeMatrix& b_t,
                                         const MutationWord& word_from_t, long p,
                                         long q) {
  if (p < 0 || q < 0) throw std::invalid_argument("exponents p, q must be nonnegative");
  const auto& dirs = word_from_t.directions();
  if (dirs.empty()) throw std::invalid_argument("expansion word must not be empty");
  ExpansionContext ctx;
  ctx.d1_ = dirs[0];
  ctx.d2_ = 0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i] < 1 || dirs[i] > b_t.n_mutable()) {
      throw std::invalid_argument("word direction out of range");
    }
    if (i % 2 == 0) {
      if (dirs[i] != ctx.d1_) throw std::invalid_argument("word must alternate two directions");
    } else {
      if (ctx.d2_ == 0) ctx.d2_ = dirs[i];
      if (dirs[i] != ctx.d2_ || dirs[i] == ctx.d1_) {
        throw std::invalid_argument("word must alternate two distinct directions");
      }
    }
  }
  if (ctx.d2_ == 0) {
    // one-letter word: pick any other direction as the inert second one
    for (int cand = 1; cand <= b_t.n_mutable(); ++cand) {
      if (cand != ctx.d1_) {
        ctx.d2_ = cand;
        break;
      }
    }
    if (ctx.d2_ == 0) throw std::invalid_argument("expansion needs at least two mutable directions");
  }
  ctx.n_ = static_cast<long>(dirs.size()) + 1;
  ctx.p_ = p;
  ctx.q_ = q;
  // the walk from t reversed is the paper-order word; it ends in d1, and it
  // starts with d1 exactly when the seed count is even
  ctx.shape_ = (ctx.n_ % 2 == 0) ? WordShape::kStartsWithOne : WordShape::kStartsWithTwo;
  ctx.negated_ = b_t.at(ctx.d1_ - 1, ctx.d2_ - 1) < 0;
  ctx.b_t_ = ctx.negated_ ? b_t.negated() : b_t;
  ctx.r_ = ctx.b_t_.at(ctx.d1_ - 1, ctx.d2_ - 1);
  ctx.aseq_ = ASeq(p, q, ctx.r_, ctx.shape_);
  ctx.word_from_t_ = word_from_t;
  ctx.t_vars_ = VarTable::make_cluster(b_t.n_mutable(), b_t.n_frozen());

  std::vector<std::string> adj_names = ctx.t_vars_->names();
  adj_names[static_cast<std::size_t>(ctx.d1_ - 1)] =
      "m" + adj_names[static_cast<std::size_t>(ctx.d1_ - 1)];
  ctx.adj_vars_ = VarTable::make(std::move(adj_names));

  ExtendedExchangeMatrix b_adj = mutate_matrix(ctx.b_t_, ctx.d1_);
  for (int row = 0; row < ctx.b_t_.rows(); ++row) {
    if (row == ctx.d1_ - 1 || row == ctx.d2_ - 1) continue;
    Spectator f;
    f.var_index = static_cast<std::size_t>(row);
    f.frozen = row >= ctx.b_t_.n_mutable();
    f.xi = ctx.b_t_.at(row, ctx.d1_ - 1);
    f.omega = -ctx.b_t_.at(row, ctx.d2_ - 1);
    f.xi_adj = b_adj.at(row, ctx.d2_ - 1);
    f.omega_adj = -b_adj.at(row, ctx.d1_ - 1);
    ctx.spectators_.push_back(f);
  }
  return ctx;
}

LaurentPoly ExpansionContext::adjacent_variable() const {
  Seed root(b_t_);
  return mutate_seed(root, d1_).cluster()[static_cast<std::size_t>(d1_ - 1)];
}

// ---------------------------------------------------------------------------
// Correction exponents
// ---------------------------------------------------------------------------

Coeff spectator_offset(const ExpansionContext& ctx, const Spectator& f) {
  const ASeq& a = ctx.aseq();
  const long n = ctx.n();
  const long alpha = a.alpha();
  const long count = ctx.p() + ctx.q();
  // The minimized value splits over the family factors; per factor the
  // minimum sits at one of the three extreme pairs (full, empty), (empty,
  // empty), (empty, full) of that factor's path.
  Coeff total = f.xi * a.a(n - 1);
  for (long i = 1; i <= count; ++i) {
    long m = (i <= alpha) ? n - 1 : n;
    Coeff h = pos_part(cheb_ll(ctx.r(), m));
    Coeff v = pos_part(cheb_ll(ctx.r(), m - 1));
    Coeff corner1 = -f.xi * h;
    Coeff corner3 = -f.omega * v;
    total += std::min(std::min(corner1, Coeff(0)), corner3);
  }
  return total;
}

Coeff spectator_offset_bruteforce(const ExpansionContext& ctx, const Spectator& f) {
  const SizeDist& dist = family_size_distribution(ctx);
  if (dist.empty()) return 0;
  Coeff a_n1 = ctx.aseq().a(ctx.n() - 1);
  bool first = true;
  Coeff best = 0;
  for (const auto& [key, cnt] : dist) {
    Coeff v = f.xi * (a_n1 - key.first) - f.omega * Coeff(key.second);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

std::pair<Coeff, OffsetRule> spectator_offset_adjacent(const ExpansionContext& ctx,
                                                       const Spectator& f) {
  if (ctx.trivial()) return {Coeff(0), OffsetRule::kAlmostCyclic};
  const long n = ctx.n();
  const ASeq& a = ctx.aseq();
  // The exact minimum of the exponent numerator over the achievable
  // weighted partial sums.  The sequence classification of the (d1,d2,f)
  // subquiver decides the same value by sign analysis away from zero
  // boundaries; it is reported as an annotation via the returned rule.
  const TauTable& table = tau_table_for(ctx);
  bool first = true;
  Coeff best = 0;
  for (const auto& [key, c] : table) {
    Coeff v = f.xi_adj * Coeff(key.second) - f.omega_adj * Coeff(key.first);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  if (best == 0) return {best, OffsetRule::kAlmostCyclic};
  if (best == f.xi_adj * a.a(n - 2) - f.omega_adj * a.a(n - 3)) {
    return {best, OffsetRule::kAcyclic};
  }
  return {best, OffsetRule::kSupportMin};
}

// ---------------------------------------------------------------------------
// Expansions
// ---------------------------------------------------------------------------

namespace {

LaurentPoly assemble_pair_sum(const ExpansionContext& ctx, const SizeDist& dist,
                              bool positive_d1_only) {
  const ASeq& a = ctx.aseq();
  const long n = ctx.n();
  const long a_n1 = a.a_ll(n - 1);
  const long a_n2 = a.a_ll(n - 2);
  std::vector<Coeff> offsets;
  for (const auto& f : ctx.spectators()) offsets.push_back(spectator_offset(ctx, f));
  LaurentPoly out(ctx.t_vars());
  ExpVec e(ctx.t_vars()->size());
  for (const auto& [key, cnt] : dist) {
    const long big_j = key.first, big_k = key.second;
    long e1 = ctx.r() * big_k - a_n1;
    if (positive_d1_only && e1 <= 0) continue;
    std::fill(e.begin(), e.end(), 0);
    e[static_cast<std::size_t>(ctx.d1() - 1)] = to_exp(e1);
    e[static_cast<std::size_t>(ctx.d2() - 1)] = to_exp(ctx.r() * big_j - a_n2);
    for (std::size_t fi = 0; fi < ctx.spectators().size(); ++fi) {
      const Spectator& f = ctx.spectators()[fi];
      Coeff fexp = f.xi * (Coeff(a_n1) - big_j) - f.omega * Coeff(big_k) - offsets[fi];
      e[f.var_index] = to_exp(coeff_ll(fexp, "spectator exponent"));
    }
    out.add_term(e, cnt);
  }
  return out;
}

}  // namespace

LaurentPoly expand_compat(const ExpansionContext& ctx) {
  return assemble_pair_sum(ctx, family_size_distribution(ctx), false);
}

LaurentPoly expand_compat_single_path(const ExpansionContext& ctx, int cap) {
  const ASeq& a = ctx.aseq();
  SizeDist dist =
      enumerate_size_table(a.a_ll(ctx.n() - 1), a.a_ll(ctx.n() - 2), ctx.r(), cap);
  return assemble_pair_sum(ctx, dist, false);
}

namespace {

LaurentPoly assemble_tau_sum(const ExpansionContext& ctx, bool nonneg_adjacent_only) {
  const TauTable& table = tau_table_for(ctx);
  const ASeq& a = ctx.aseq();
  const long n = ctx.n();
  const long a_n1 = a.a_ll(n - 1);
  const long a_n2 = a.a_ll(n - 2);
  std::vector<Coeff> offsets;
  for (const auto& f : ctx.spectators()) {
    offsets.push_back(spectator_offset_adjacent(ctx, f).first);
  }
  LaurentPoly out(ctx.adjacent_vars());
  ExpVec e(ctx.adjacent_vars()->size());
  for (const auto& [key, coeff] : table) {
    const long s3 = key.first, s2 = key.second;
    long e_adj = a_n1 - ctx.r() * s2;
    if (nonneg_adjacent_only && e_adj < 0) continue;
    std::fill(e.begin(), e.end(), 0);
    e[static_cast<std::size_t>(ctx.d1() - 1)] = to_exp(e_adj);
    e[static_cast<std::size_t>(ctx.d2() - 1)] = to_exp(ctx.r() * s3 - a_n2);
    for (std::size_t fi = 0; fi < ctx.spectators().size(); ++fi) {
      const Spectator& f = ctx.spectators()[fi];
      Coeff fexp = f.xi_adj * Coeff(s2) - f.omega_adj * Coeff(s3) - offsets[fi];
      e[f.var_index] = to_exp(coeff_ll(fexp, "spectator exponent"));
    }
    out.add_term(e, coeff);
  }
  return out;
}

}  // namespace

LaurentPoly rewrite_adjacent(const ExpansionContext& ctx, const LaurentPoly& adj) {
  if (!adj.vars() || *adj.vars() != *ctx.adjacent_vars()) {
    throw std::invalid_argument("polynomial is not over the adjacent-variable table");
  }
  const std::size_t slot = static_cast<std::size_t>(ctx.d1() - 1);
  LaurentPoly tilde = ctx.adjacent_variable();
  int32_t emin = 0;
  for (const auto& [e, c] : adj.terms()) emin = std::min(emin, e[slot]);
  LaurentPoly num(ctx.t_vars());
  std::map<int32_t, LaurentPoly> powers;
  for (const auto& [e, c] : adj.terms()) {
    ExpVec rest = e;
    int32_t k = e[slot] - emin;
    rest[slot] = 0;
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, tilde.pow(k)).first;
    num += LaurentPoly::monomial(ctx.t_vars(), std::move(rest), c) * it->second;
  }
  if (emin == 0) return num;
  return div_exact(num, tilde.pow(-static_cast<long>(emin)));
}

TauExpansion expand_tau(const ExpansionContext& ctx) {
  TauExpansion out{assemble_tau_sum(ctx, false), LaurentPoly(ctx.t_vars())};
  out.rewritten = rewrite_adjacent(ctx, out.adjacent);
  return out;
}

MixedParts expand_mixed_parts(const ExpansionContext& ctx) {
  return {assemble_tau_sum(ctx, true),
          assemble_pair_sum(ctx, family_size_distribution(ctx), true)};
}

MixedExpansion expand_mixed(const ExpansionContext& ctx) {
  MixedParts parts = expand_mixed_parts(ctx);
  MixedExpansion out{std::move(parts.head), std::move(parts.tail), LaurentPoly(ctx.t_vars())};
  out.rewritten_sum = rewrite_adjacent(ctx, out.head) + out.tail;
  return out;
}

LaurentPoly oracle_reference(const ExpansionContext& ctx) {
  Seed far = oracle_walk(Seed(ctx.matrix()), ctx.word_from_t());
  const LaurentPoly& x1 = far.cluster()[static_cast<std::size_t>(ctx.d1() - 1)];
  const LaurentPoly& x2 = far.cluster()[static_cast<std::size_t>(ctx.d2() - 1)];
  return x1.pow(ctx.p()) * x2.pow(ctx.q());
}

LaurentPoly tau_slice_quotient(long r, long p, long q, WordShape shape,
                               long n, long a) {
  ASeq aseq(p, q, r, shape);
  const long a_n = aseq.a_ll(n);
  const long expnt = r * a - a_n;
  if (expnt < 0) throw std::invalid_argument("slice weight must satisfy r*a >= A_n");
  const TauTable& table = tau_table(r, p, q, shape, n + 1);
  auto vars = VarTable::make({"x1", "x2"});
  LaurentPoly sum(vars);
  const long a_n1 = aseq.a_ll(n - 1);
  const long a_n2 = aseq.a_ll(n - 2);
  for (const auto& [key, c] : table) {
    if (key.second != a) continue;
    ExpVec e{to_exp(r * key.first - a_n1), to_exp(r * (a_n1 - a) - a_n2)};
    sum.add_term(e, c);
  }
  LaurentPoly base(vars);
  base.add_term({0, 0}, 1);
  base.add_term({to_exp(r), 0}, 1);
  return div_exact(sum, base.pow(expnt));
}

bool PositivityReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

void add_check(PositivityReport& report, std::string name, bool pass, std::string details = "") {
  report.checks.push_back({std::move(name), pass, std::move(details)});
}

}  // namespace

PositivityReport verify_positivity(const ExtendedExchangeMatrix& b0, const MutationWord& w) {
  PositivityReport report;
  Seed end = Seed(b0);
  try {
    end = oracle_walk(b0, w);
    add_check(report, "laurent", true);
  } catch (const MathError& e) {
    add_check(report, "laurent", false, e.what());
    return report;
  }
  for (int i = 0; i < b0.n_mutable(); ++i) {
    const LaurentPoly& v = end.cluster()[static_cast<std::size_t>(i)];
    bool ok = v.is_nonneg();
    add_check(report, "nonneg x" + std::to_string(i + 1), ok, ok ? "" : v.to_string());
    report.max_terms = std::max(report.max_terms, v.term_count());
    Coeff mc = v.min_coeff();
    if (i == 0 || mc < report.min_coeff_seen) report.min_coeff_seen = mc;
  }

  // Cross-check the closed forms on the alternating two-direction tail of
  // the word, when one exists and the instance is desk-sized.
  auto dirs = w.normalized().directions();
  if (dirs.size() >= 2 && b0.n_mutable() >= 2) {
    int d = dirs.back();
    int e = 0;
    std::size_t start = dirs.size();
    for (std::size_t i = dirs.size(); i-- > 0;) {
      int expected;
      std::size_t from_end = dirs.size() - 1 - i;
      if (from_end % 2 == 0) {
        expected = d;
      } else {
        if (e == 0) e = dirs[i];
        expected = e;
      }
      if (dirs[i] != expected) break;
      start = i;
    }
    std::size_t tail_len = dirs.size() - start;
    if (e != 0 && tail_len >= 2) {
      tail_len = std::min<std::size_t>(tail_len, 4);  // cost guard
      long r_t = std::labs(end.matrix().at(d - 1, e - 1));
      if (r_t <= 3) {
        std::vector<int> back;
        for (std::size_t i = 0; i < tail_len; ++i) {
          back.push_back(i % 2 == 0 ? d : e);
        }
        for (auto [p, q] : {std::pair<long, long>{1, 0}, {0, 1}}) {
          try {
            ExpansionContext ctx =
                ExpansionContext::build(end.matrix(), MutationWord(back), p, q);
            LaurentPoly ref = oracle_reference(ctx);
            bool ok_compat = expand_compat(ctx) == ref;
            bool ok_tau = expand_tau(ctx).rewritten == ref;
            bool ok_mixed = expand_mixed(ctx).rewritten_sum == ref;
            std::string tag = "tail p=" + std::to_string(p) + ",q=" + std::to_string(q);
            add_check(report, tag + " compat", ok_compat);
            add_check(report, tag + " tau", ok_tau);
            add_check(report, tag + " mixed", ok_mixed);
          } catch (const std::exception& ex) {
            add_check(report, "tail cross-check", false, ex.what());
          }
        }
      }
    }
  }
  return report;
}

}  // namespace clusteralg
