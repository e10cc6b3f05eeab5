#include "clusteralg/dyck.hpp"

#include <stdexcept>

namespace clusteralg {

DyckPath DyckPath::maximal(long a1, long a2) {
  if (a1 < 0) a1 = 0;
  if (a2 < 0) a2 = 0;
  if (a1 > 4096 || a2 > 4096) throw std::invalid_argument("Dyck path type too large");
  DyckPath d;
  d.a1_ = static_cast<int>(a1);
  d.a2_ = static_cast<int>(a2);
  d.points_.push_back({0, 0});
  auto height = [&](long i) -> int {
    return a1 == 0 ? 0 : static_cast<int>((i * a2) / a1);
  };
  if (a1 == 0) {
    for (int y = 1; y <= d.a2_; ++y) {
      d.v_pos_.push_back(static_cast<int>(d.horizontal_.size()));
      d.horizontal_.push_back(false);
      d.points_.push_back({0, y});
    }
  } else {
    for (int x = 1; x <= d.a1_; ++x) {
      d.h_pos_.push_back(static_cast<int>(d.horizontal_.size()));
      d.horizontal_.push_back(true);
      d.points_.push_back({x, height(x - 1)});
      int top = (x == d.a1_) ? d.a2_ : height(x);
      for (int y = height(x - 1) + 1; y <= top; ++y) {
        d.v_pos_.push_back(static_cast<int>(d.horizontal_.size()));
        d.horizontal_.push_back(false);
        d.points_.push_back({x, y});
      }
    }
  }
  return d;
}

int DyckPath::horizontal_edge_position(int i) const {
  if (i < 1 || i > a1_) throw std::invalid_argument("horizontal edge index out of range");
  return h_pos_[static_cast<std::size_t>(i - 1)];
}

int DyckPath::vertical_edge_position(int j) const {
  if (j < 1 || j > a2_) throw std::invalid_argument("vertical edge index out of range");
  return v_pos_[static_cast<std::size_t>(j - 1)];
}

LatticePoint DyckPath::left_endpoint_of_horizontal(int i) const {
  return points_[static_cast<std::size_t>(horizontal_edge_position(i))];
}

LatticePoint DyckPath::upper_endpoint_of_vertical(int j) const {
  return points_[static_cast<std::size_t>(vertical_edge_position(j)) + 1];
}

std::optional<int> DyckPath::position_of(const LatticePoint& p) const {
  const int len = length();
  for (int k = 0; k < len; ++k) {
    if (points_[static_cast<std::size_t>(k)] == p) return k;
  }
  if (len >= 0 && p == LatticePoint{a1_, a2_}) return 0;  // (a1,a2) == (0,0)
  return std::nullopt;
}

int DyckPath::height_at(int x) const {
  if (x < 0 || x > a1_) throw std::invalid_argument("abscissa out of range");
  int h = 0;
  for (const auto& p : points_) {
    if (p.x == x && p.y > h) h = p.y;
  }
  if (x == a1_) h = a2_;
  return h;
}

bool is_maximal_profile(int a1, int a2, const std::vector<int>& heights) {
  if (static_cast<int>(heights.size()) != a1 + 1) {
    throw std::invalid_argument("profile needs a1 + 1 heights");
  }
  for (int x = 0; x <= a1; ++x) {
    if (x > 0 && heights[static_cast<std::size_t>(x)] < heights[static_cast<std::size_t>(x - 1)]) {
      return false;  // not a monotone staircase
    }
    for (int y = 0; y <= a2; ++y) {
      bool above_path = y > heights[static_cast<std::size_t>(x)];
      bool above_diag = static_cast<long>(y) * a1 > static_cast<long>(x) * a2;
      if (!above_path && above_diag) return false;  // path crosses the diagonal
      if (above_path && !above_diag) return false;  // a point between path and diagonal
    }
  }
  if (heights[0] != 0 || heights[static_cast<std::size_t>(a1)] != a2) return false;
  return true;
}

namespace {

// Number of steps from position a to position b going forward around the
// cycle, with the full length for a == b.
int cyclic_span(int from, int to, int len) {
  if (len == 0) return 0;
  int d = (to - from) % len;
  if (d < 0) d += len;
  return d == 0 ? len : d;
}

}  // namespace

Subpath subpath(const DyckPath& path, const LatticePoint& a, const LatticePoint& b) {
  auto pa = path.position_of(a);
  auto pb = path.position_of(b);
  if (!pa || !pb) throw std::invalid_argument("point is not on the path");
  const int len = path.length();
  Subpath result;
  if (len == 0) return result;
  int span = cyclic_span(*pa, *pb, len);
  // edge index (1-based u or v number) at each step position
  std::vector<int> edge_at(static_cast<std::size_t>(len));
  int h_index = 0, v_index = 0;
  for (int k = 0; k < len; ++k) {
    edge_at[static_cast<std::size_t>(k)] =
        path.step_is_horizontal()[static_cast<std::size_t>(k)] ? ++h_index : ++v_index;
  }
  for (int k = 0; k < span; ++k) {
    int pos = (*pa + k) % len;
    if (k > 0) result.interior.push_back(path.points()[static_cast<std::size_t>(pos)]);
    if (path.step_is_horizontal()[static_cast<std::size_t>(pos)]) {
      result.horizontal.push_back(edge_at[static_cast<std::size_t>(pos)]);
    } else {
      result.vertical.push_back(edge_at[static_cast<std::size_t>(pos)]);
    }
  }
  return result;
}

namespace {

struct CompatScratch {
  // prefix counts over the doubled step array
  std::vector<int> horiz;    // total horizontal steps before position k
  std::vector<int> vert;     // total vertical steps
  std::vector<int> s1_hits;  // horizontal steps in S1
  std::vector<int> s2_hits;  // vertical steps in S2
};

void build_prefix(const DyckPath& path, uint64_t s1, uint64_t s2, CompatScratch& sc) {
  const int len = path.length();
  sc.horiz.assign(static_cast<std::size_t>(2 * len + 1), 0);
  sc.vert.assign(static_cast<std::size_t>(2 * len + 1), 0);
  sc.s1_hits.assign(static_cast<std::size_t>(2 * len + 1), 0);
  sc.s2_hits.assign(static_cast<std::size_t>(2 * len + 1), 0);
  int h_index = 0, v_index = 0;
  std::vector<bool> in_set(static_cast<std::size_t>(len), false);
  for (int k = 0; k < len; ++k) {
    if (path.step_is_horizontal()[static_cast<std::size_t>(k)]) {
      ++h_index;
      in_set[static_cast<std::size_t>(k)] = (s1 >> (h_index - 1)) & 1;
    } else {
      ++v_index;
      in_set[static_cast<std::size_t>(k)] = (s2 >> (v_index - 1)) & 1;
    }
  }
  for (int k = 0; k < 2 * len; ++k) {
    int pos = k % len;
    bool horiz = path.step_is_horizontal()[static_cast<std::size_t>(pos)];
    sc.horiz[static_cast<std::size_t>(k + 1)] = sc.horiz[static_cast<std::size_t>(k)] + (horiz ? 1 : 0);
    sc.vert[static_cast<std::size_t>(k + 1)] = sc.vert[static_cast<std::size_t>(k)] + (horiz ? 0 : 1);
    sc.s1_hits[static_cast<std::size_t>(k + 1)] =
        sc.s1_hits[static_cast<std::size_t>(k)] + ((horiz && in_set[static_cast<std::size_t>(pos)]) ? 1 : 0);
    sc.s2_hits[static_cast<std::size_t>(k + 1)] =
        sc.s2_hits[static_cast<std::size_t>(k)] + ((!horiz && in_set[static_cast<std::size_t>(pos)]) ? 1 : 0);
  }
}

bool compatible_with_scratch(const DyckPath& path, uint64_t s1, uint64_t s2, long r,
                             const CompatScratch& sc) {
  const int len = path.length();
  for (int i = 1; i <= path.a1(); ++i) {
    if (!((s1 >> (i - 1)) & 1)) continue;
    int pe = path.horizontal_edge_position(i);  // position of E
    for (int j = 1; j <= path.a2(); ++j) {
      if (!((s2 >> (j - 1)) & 1)) continue;
      int pf = (path.vertical_edge_position(j) + 1) % len;  // position of F
      int span = cyclic_span(pe, pf, len);
      bool found = false;
      for (int k = 1; k < span && !found; ++k) {
        // A at cyclic offset k from E; ranges [E, A) and [A, F)
        int a_abs = pe + k;
        int af_h = sc.horiz[static_cast<std::size_t>(pe + span)] - sc.horiz[static_cast<std::size_t>(a_abs)];
        int af_s2 = sc.s2_hits[static_cast<std::size_t>(pe + span)] - sc.s2_hits[static_cast<std::size_t>(a_abs)];
        if (af_h == r * af_s2) {
          found = true;
          break;
        }
        int ea_v = sc.vert[static_cast<std::size_t>(a_abs)] - sc.vert[static_cast<std::size_t>(pe)];
        int ea_s1 = sc.s1_hits[static_cast<std::size_t>(a_abs)] - sc.s1_hits[static_cast<std::size_t>(pe)];
        if (ea_v == r * ea_s1) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

bool is_compatible(const DyckPath& path, uint64_t s1, uint64_t s2, long r) {
  if (r < 1) throw std::invalid_argument("compatibility requires r >= 1");
  if (path.a1() > 0 && (s1 >> path.a1()) != 0) throw std::invalid_argument("S1 out of range");
  if (path.a1() == 0 && s1 != 0) throw std::invalid_argument("S1 out of range");
  if (path.a2() > 0 && (s2 >> path.a2()) != 0) throw std::invalid_argument("S2 out of range");
  if (path.a2() == 0 && s2 != 0) throw std::invalid_argument("S2 out of range");
  if (s1 == 0 || s2 == 0) return true;  // vacuous
  CompatScratch sc;
  build_prefix(path, s1, s2, sc);
  return compatible_with_scratch(path, s1, s2, r, sc);
}

bool is_compatible(const DyckPath& path, const std::vector<int>& s1, const std::vector<int>& s2,
                   long r) {
  uint64_t m1 = 0, m2 = 0;
  for (int i : s1) {
    if (i < 1 || i > path.a1()) throw std::invalid_argument("S1 index out of range");
    m1 |= uint64_t{1} << (i - 1);
  }
  for (int j : s2) {
    if (j < 1 || j > path.a2()) throw std::invalid_argument("S2 index out of range");
    m2 |= uint64_t{1} << (j - 1);
  }
  return is_compatible(path, m1, m2, r);
}

void enumerate_compatible_pairs(long a1, long a2, long r,
                                const std::function<void(uint64_t, uint64_t)>& emit, int cap) {
  if (a1 < 0) a1 = 0;
  if (a2 < 0) a2 = 0;
  if (a1 + a2 > cap) {
    throw std::invalid_argument("enumeration cap exceeded: type " + std::to_string(a1) + "x" +
                                std::to_string(a2) + " with cap " + std::to_string(cap));
  }
  DyckPath path = DyckPath::maximal(a1, a2);
  const uint64_t n1 = uint64_t{1} << a1;
  const uint64_t n2 = uint64_t{1} << a2;
  CompatScratch sc;
  for (uint64_t s1 = 0; s1 < n1; ++s1) {
    for (uint64_t s2 = 0; s2 < n2; ++s2) {
      if (s1 == 0 || s2 == 0) {
        emit(s1, s2);
        continue;
      }
      build_prefix(path, s1, s2, sc);
      if (compatible_with_scratch(path, s1, s2, r, sc)) emit(s1, s2);
    }
  }
}

std::map<std::pair<int, int>, Coeff> compatible_size_distribution(long a1, long a2,
                                                                  long r, int cap) {
  std::map<std::pair<int, int>, Coeff> dist;
  enumerate_compatible_pairs(
      a1, a2, r,
      [&](uint64_t s1, uint64_t s2) {
        auto key = std::make_pair(__builtin_popcountll(s1), __builtin_popcountll(s2));
        auto it = dist.find(key);
        if (it == dist.end()) {
          dist.emplace(key, 1);
        } else {
          it->second += 1;
        }
      },
      cap);
  return dist;
}

}  // namespace clusteralg
