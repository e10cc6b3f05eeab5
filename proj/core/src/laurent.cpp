#include "clusteralg/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace clusteralg {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate variable name: " + names_[i]);
      }
    }
  }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

std::shared_ptr<const VarTable> VarTable::make_cluster(int n_mutable, int n_frozen) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n_mutable + n_frozen));
  for (int i = 1; i <= n_mutable; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= n_frozen; ++j) names.push_back("u" + std::to_string(j));
  return make(std::move(names));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  long da = 0, db = 0;
  for (int32_t e : a) da += e;
  for (int32_t e : b) db += e;
  if (da != db) return da > db;  // higher total degree first
  return a > b;                  // then lexicographically larger first
}

LaurentPoly LaurentPoly::constant(VarTablePtr vars, Coeff value) {
  LaurentPoly p(std::move(vars));
  if (value != 0) {
    p.terms_.emplace(ExpVec(p.vars_->size(), 0), std::move(value));
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, ExpVec exps, Coeff coeff) {
  LaurentPoly p(std::move(vars));
  p.check_width(exps);
  if (coeff != 0) {
    p.terms_.emplace(std::move(exps), std::move(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, std::size_t index, int32_t power) {
  if (index >= vars->size()) throw std::invalid_argument("variable index out of range");
  ExpVec e(vars->size(), 0);
  e[index] = power;
  return monomial(std::move(vars), std::move(e), 1);
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

bool LaurentPoly::is_nonneg() const {
  for (const auto& [e, c] : terms_) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

Coeff LaurentPoly::min_coeff() const {
  if (terms_.empty()) return 0;
  Coeff m = terms_.begin()->second;
  for (const auto& [e, c] : terms_) {
    if (c < m) m = c;
  }
  return m;
}

Coeff LaurentPoly::coeff_sum() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::optional<ExpVec> LaurentPoly::min_exponents() const {
  if (terms_.empty()) return std::nullopt;
  ExpVec m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  if (vars_ && other.vars_ && *vars_ != *other.vars_) return false;
  return terms_ == other.terms_;
}

void LaurentPoly::check_same_table(const LaurentPoly& other) const {
  if (!vars_ || !other.vars_ || *vars_ != *other.vars_) {
    throw std::invalid_argument("mismatched variable tables");
  }
}

void LaurentPoly::check_width(const ExpVec& exps) const {
  if (exps.size() != vars_->size()) {
    throw std::invalid_argument("exponent vector length does not match variable table");
  }
}

void LaurentPoly::add_term(const ExpVec& exps, const Coeff& coeff) {
  check_width(exps);
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_same_table(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_same_table(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

namespace {

// Exponent vectors of width <= 8 with entries below the bias pack into one
// 128-bit key; adding two packed keys adds the exponents lanewise, so the
// product accumulates in a flat hash map without touching vectors.
constexpr int32_t kPackBias = 1 << 14;
constexpr std::size_t kPackWidth = 8;

using PackedKey = unsigned __int128;

struct PackedKeyHash {
  std::size_t operator()(PackedKey k) const {
    auto lo = static_cast<uint64_t>(k);
    auto hi = static_cast<uint64_t>(k >> 64);
    uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return static_cast<std::size_t>(x * 0x94d049bb133111ebULL);
  }
};

bool packable(const LaurentPoly::TermMap& terms, std::size_t width) {
  if (width > kPackWidth) return false;
  for (const auto& [e, c] : terms) {
    for (int32_t v : e) {
      if (v <= -kPackBias || v >= kPackBias) return false;
    }
  }
  return true;
}

PackedKey pack(const ExpVec& e) {
  PackedKey k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    k |= static_cast<PackedKey>(static_cast<uint16_t>(e[i] + kPackBias)) << (16 * i);
  }
  return k;
}

ExpVec unpack(PackedKey k, std::size_t width) {
  ExpVec e(width);
  for (std::size_t i = 0; i < width; ++i) {
    auto lane = static_cast<int32_t>(static_cast<uint16_t>(k >> (16 * i)));
    e[i] = lane - 2 * kPackBias;  // both operands carried one bias each
  }
  return e;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_table(b);
  LaurentPoly r(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const std::size_t width = a.vars_->size();

  if (packable(a.terms_, width) && packable(b.terms_, width)) {
    std::vector<std::pair<PackedKey, const Coeff*>> pa, pb;
    pa.reserve(a.terms_.size());
    pb.reserve(b.terms_.size());
    for (const auto& [e, c] : a.terms_) pa.emplace_back(pack(e), &c);
    for (const auto& [e, c] : b.terms_) pb.emplace_back(pack(e), &c);
    std::unordered_map<PackedKey, Coeff, PackedKeyHash> acc;
    acc.reserve(pa.size() + pb.size());
    for (const auto& [ka, ca] : pa) {
      for (const auto& [kb, cb] : pb) {
        Coeff& slot = acc[ka + kb];
        mpz_addmul(slot.get_mpz_t(), ca->get_mpz_t(), cb->get_mpz_t());
      }
    }
    for (auto& [k, c] : acc) {
      if (c != 0) r.terms_.emplace(unpack(k, width), std::move(c));
    }
    return r;
  }

  ExpVec e(width);
  Coeff prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, prod);
      } else {
        it->second += prod;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (!vars_) throw std::invalid_argument("pow on default-constructed polynomial");
  if (e == 0) return constant(vars_, 1);
  if (e < 0) {
    if (terms_.size() != 1) {
      throw std::invalid_argument("negative power of a non-monomial");
    }
    const auto& [exps, c] = *terms_.begin();
    if (c != 1 && c != -1) {
      throw std::invalid_argument("negative power of a monomial with non-unit coefficient");
    }
    ExpVec powed(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      long pe = static_cast<long>(exps[i]) * e;
      powed[i] = static_cast<int32_t>(pe);
    }
    Coeff pc = (c == -1 && (e % 2 != 0)) ? Coeff(-1) : Coeff(1);
    return monomial(vars_, std::move(powed), std::move(pc));
  }
  LaurentPoly base = *this;
  LaurentPoly acc = constant(vars_, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

namespace {

// Divides ordinary (nonnegative-exponent) polynomials exactly, reducing by
// the divisor's grlex-leading term.  Returns nullopt when not divisible.
std::optional<LaurentPoly> divide_ordinary(const LaurentPoly& num, const LaurentPoly& den) {
  const auto& dlead = *den.terms().begin();
  LaurentPoly q(num.vars());
  LaurentPoly rem = num;
  const std::size_t width = num.vars()->size();
  ExpVec t(width);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().begin();
    if (!mpz_divisible_p(rlead.second.get_mpz_t(), dlead.second.get_mpz_t())) {
      return std::nullopt;
    }
    Coeff c = rlead.second / dlead.second;
    bool ok = true;
    for (std::size_t i = 0; i < width; ++i) {
      t[i] = rlead.first[i] - dlead.first[i];
      if (t[i] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    LaurentPoly step = LaurentPoly::monomial(num.vars(), t, c);
    q += step;
    rem -= step * den;
  }
  return q;
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (!numerator.vars() || !denominator.vars() || *numerator.vars() != *denominator.vars()) {
    throw std::invalid_argument("mismatched variable tables");
  }
  if (denominator.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (numerator.is_zero()) return LaurentPoly::zero(numerator.vars());

  // Shift both operands into the ordinary polynomial ring: num = x^a * N,
  // den = x^b * D with N, D having componentwise minimal exponent 0.
  ExpVec a = *numerator.min_exponents();
  ExpVec b = *denominator.min_exponents();
  ExpVec neg_a(a.size()), neg_b(b.size()), shift(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    neg_a[i] = -a[i];
    neg_b[i] = -b[i];
    shift[i] = a[i] - b[i];
  }
  LaurentPoly n_shifted = numerator * LaurentPoly::monomial(numerator.vars(), neg_a, 1);
  LaurentPoly d_shifted = denominator * LaurentPoly::monomial(numerator.vars(), neg_b, 1);
  auto q = divide_ordinary(n_shifted, d_shifted);
  if (!q) throw MathError("not divisible: " + numerator.to_string() + " by " + denominator.to_string());
  return *q * LaurentPoly::monomial(numerator.vars(), shift, 1);
}

bool is_laurent(const RationalPair& frac) {
  if (frac.den.is_zero()) throw std::invalid_argument("zero denominator");
  if (frac.num.is_zero()) return true;
  try {
    (void)div_exact(frac.num, frac.den);
    return true;
  } catch (const MathError&) {
    return false;
  }
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& values,
                       VarTablePtr target) {
  if (values.size() != p.vars()->size()) {
    throw std::invalid_argument("substitution needs one value per variable");
  }
  for (const auto& v : values) {
    if (!v.vars() || *v.vars() != *target) {
      throw std::invalid_argument("substitution values must live in the target table");
    }
  }
  LaurentPoly result(target);
  std::map<std::pair<std::size_t, int32_t>, LaurentPoly> power_cache;
  for (const auto& [exps, coeff] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      auto key = std::make_pair(i, exps[i]);
      auto it = power_cache.find(key);
      if (it == power_cache.end()) {
        it = power_cache.emplace(key, values[i].pow(exps[i])).first;
      }
      term = term * it->second;
    }
    result += term;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Canonical serialization sorts terms lexicographically by exponent vector.
  std::vector<const std::pair<const ExpVec, Coeff>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : sorted) {
    if (!first) out << " + ";
    first = false;
    const auto& [exps, coeff] = *t;
    bool constant_term = std::all_of(exps.begin(), exps.end(), [](int32_t e) { return e == 0; });
    bool printed_factor = false;
    if (constant_term) {
      out << coeff.get_str();
      continue;
    }
    if (coeff == -1) {
      out << "-";
    } else if (coeff != 1) {
      out << coeff.get_str() << "*";
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (printed_factor) out << "*";
      printed_factor = true;
      out << vars_->name(i);
      if (exps[i] != 1) out << "^" << exps[i];
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

long parse_integer(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) ++c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start || (c.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start])))) {
    throw std::invalid_argument("expected integer at position " + std::to_string(start));
  }
  return std::stol(c.s.substr(start, c.pos - start));
}

std::string parse_name(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_')) {
    ++c.pos;
  }
  if (c.pos == start) throw std::invalid_argument("expected variable name");
  return c.s.substr(start, c.pos - start);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, VarTablePtr vars) {
  LaurentPoly result(vars);
  Cursor c{text};
  if (c.eof()) throw std::invalid_argument("empty polynomial text");
  while (!c.eof()) {
    Coeff coeff = 1;
    bool saw_coeff = false;
    if (c.peek() == '+' || c.peek() == '-' || std::isdigit(static_cast<unsigned char>(c.peek()))) {
      char ch = c.peek();
      if (ch == '-' || ch == '+') {
        // sign may prefix either a number or a variable
        std::size_t save = c.pos;
        ++c.pos;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
          c.pos = save;
          coeff = parse_integer(c);
          saw_coeff = true;
        } else {
          coeff = (ch == '-') ? -1 : 1;
        }
      } else {
        coeff = parse_integer(c);
        saw_coeff = true;
      }
    }
    ExpVec exps(vars->size(), 0);
    bool expect_var = !saw_coeff || c.peek() == '*';
    if (saw_coeff && c.peek() == '*') ++c.pos;
    while (expect_var && !c.eof() && c.peek() != '+') {
      std::string name = parse_name(c);
      auto idx = vars->index_of(name);
      if (!idx) throw std::invalid_argument("unknown variable: " + name);
      long e = 1;
      if (c.peek() == '^') {
        ++c.pos;
        e = parse_integer(c);
      }
      exps[*idx] += static_cast<int32_t>(e);
      if (c.peek() == '*') {
        ++c.pos;
        continue;
      }
      break;
    }
    result.add_term(exps, coeff);
    if (c.eof()) break;
    if (c.peek() != '+') throw std::invalid_argument("expected '+' between terms");
    ++c.pos;
  }
  return result;
}

}  // namespace clusteralg
