#include <doctest.h>

#include <set>

#include "clusteralg/dyck.hpp"
#include "clusteralg/seed.hpp"

using namespace clusteralg;

namespace {

std::vector<LatticePoint> corners(const DyckPath& d) {
  const auto& pts = d.points();
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == 0 || i + 1 == pts.size()) {
      out.push_back(pts[i]);
      continue;
    }
    bool before_horiz = pts[i].y == pts[i - 1].y;
    bool after_horiz = pts[i + 1].y == pts[i].y;
    if (before_horiz != after_horiz) out.push_back(pts[i]);
  }
  return out;
}

std::vector<int> height_profile(const DyckPath& d) {
  std::vector<int> h(static_cast<std::size_t>(d.a1()) + 1);
  for (int x = 0; x <= d.a1(); ++x) h[static_cast<std::size_t>(x)] = d.height_at(x);
  return h;
}

}  // namespace

TEST_CASE("maximal path of type 6x4 has the documented corners") {
  auto d = DyckPath::maximal(6, 4);
  std::vector<LatticePoint> expected{{0, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2},
                                     {5, 2}, {5, 3}, {6, 3}, {6, 4}};
  CHECK(corners(d) == expected);
}

TEST_CASE("degenerate and clamped types") {
  auto flat = DyckPath::maximal(5, 0);
  CHECK(flat.a1() == 5);
  CHECK(flat.a2() == 0);
  CHECK(flat.length() == 5);
  for (bool h : flat.step_is_horizontal()) CHECK(h);

  auto clamped = DyckPath::maximal(-2, 3);
  auto plain = DyckPath::maximal(0, 3);
  CHECK(clamped.points() == plain.points());
}

TEST_CASE("subpaths of the 6x4 example") {
  auto d = DyckPath::maximal(6, 4);
  auto ab = subpath(d, {2, 1}, {3, 2});
  CHECK(ab.horizontal == std::vector<int>{3});
  CHECK(ab.vertical == std::vector<int>{2});

  auto ba = subpath(d, {3, 2}, {2, 1});
  CHECK(ba.horizontal == std::vector<int>{4, 5, 6, 1, 2});
  CHECK(ba.vertical == std::vector<int>{3, 4, 1});

  auto aa = subpath(d, {2, 1}, {2, 1});
  CHECK(aa.horizontal.size() + aa.vertical.size() == 10);

  // C = (5,3) lies in the interior of BA but not of AB
  LatticePoint c{5, 3};
  auto contains = [&](const std::vector<LatticePoint>& pts) {
    for (const auto& p : pts) {
      if (p == c) return true;
    }
    return false;
  };
  CHECK(contains(ba.interior));
  CHECK_FALSE(contains(ab.interior));

  CHECK_THROWS_AS((void)subpath(d, {1, 3}, {2, 1}), std::invalid_argument);
}

TEST_CASE("wraparound splits the edge sets") {
  auto d = DyckPath::maximal(6, 4);
  for (std::size_t i = 0; i < d.points().size() - 1; ++i) {
    for (std::size_t j = 0; j < d.points().size() - 1; ++j) {
      if (i == j) continue;
      auto fwd = subpath(d, d.points()[i], d.points()[j]);
      auto back = subpath(d, d.points()[j], d.points()[i]);
      CHECK(fwd.horizontal.size() + back.horizontal.size() == 6);
      CHECK(fwd.vertical.size() + back.vertical.size() == 4);
    }
  }
}

TEST_CASE("compatibility verdicts from the worked figures") {
  auto small = DyckPath::maximal(6, 4);
  auto large = DyckPath::maximal(7, 4);
  std::vector<int> s1{1, 2};
  std::vector<int> s2{3, 4};
  CHECK_FALSE(is_compatible(small, s1, s2, 3));
  CHECK(is_compatible(large, s1, s2, 3));
}

TEST_CASE("pairs with an empty side are always compatible") {
  for (int a1 = 0; a1 <= 8; a1 += 2) {
    for (int a2 = 0; a2 <= 8; a2 += 2) {
      auto d = DyckPath::maximal(a1, a2);
      for (long r = 1; r <= 4; ++r) {
        CHECK(is_compatible(d, uint64_t{0}, uint64_t{0}, r));
        if (a1 > 0) {
          CHECK(is_compatible(d, (uint64_t{1} << a1) - 1, uint64_t{0}, r));
        }
        if (a2 > 0) {
          CHECK(is_compatible(d, uint64_t{0}, (uint64_t{1} << a2) - 1, r));
        }
      }
    }
  }
}

TEST_CASE("maximality predicate holds exactly for the constructed paths") {
  for (int a1 = 0; a1 <= 12; ++a1) {
    for (int a2 = 0; a2 <= a1; ++a2) {
      auto d = DyckPath::maximal(a1, a2);
      auto h = height_profile(d);
      CHECK(is_maximal_profile(a1, a2, h));
      // lowering any interior column keeps the path weakly below the
      // diagonal but loses maximality
      for (int x = 1; x < a1; ++x) {
        auto perturbed = h;
        if (perturbed[static_cast<std::size_t>(x)] >
            perturbed[static_cast<std::size_t>(x - 1)]) {
          perturbed[static_cast<std::size_t>(x)] -= 1;
          CHECK_FALSE(is_maximal_profile(a1, a2, perturbed));
        }
      }
    }
  }
}

TEST_CASE("enumeration basics") {
  int count = 0;
  enumerate_compatible_pairs(0, 0, 2, [&](uint64_t, uint64_t) { ++count; });
  CHECK(count == 1);

  std::vector<std::pair<uint64_t, uint64_t>> pairs;
  enumerate_compatible_pairs(1, 0, 2, [&](uint64_t s1, uint64_t s2) { pairs.emplace_back(s1, s2); });
  CHECK(pairs == std::vector<std::pair<uint64_t, uint64_t>>{{0, 0}, {1, 0}});

  CHECK_THROWS_AS(enumerate_compatible_pairs(20, 10, 2, [](uint64_t, uint64_t) {}),
                  std::invalid_argument);
}

TEST_CASE("pair count of type 2x1 matches the rank-2 expansion") {
  // type (c_3, c_2) for r = 2; the matching cluster variable is two
  // alternating mutations away
  ExtendedExchangeMatrix b(2, 0, {{0, 2}, {-2, 0}});
  Seed far = oracle_walk(b, MutationWord({1, 2}));
  Coeff monomials = far.cluster()[1].coeff_sum();
  Coeff pairs = 0;
  for (const auto& [k, v] : compatible_size_distribution(2, 1, 2)) pairs += v;
  CHECK(pairs == monomials);
}

TEST_CASE("downward closure of compatibility, reported not asserted") {
  int violations = 0;
  for (int a1 = 1; a1 <= 6; ++a1) {
    for (int a2 = 1; a2 <= 6; ++a2) {
      auto d = DyckPath::maximal(a1, a2);
      for (long r = 2; r <= 3; ++r) {
        std::set<std::pair<uint64_t, uint64_t>> good;
        enumerate_compatible_pairs(a1, a2, r,
                                   [&](uint64_t s1, uint64_t s2) { good.insert({s1, s2}); });
        for (const auto& [s1, s2] : good) {
          for (int bit = 0; bit < a1; ++bit) {
            if (s1 & (uint64_t{1} << bit)) {
              if (!good.count({s1 & ~(uint64_t{1} << bit), s2})) ++violations;
            }
          }
          for (int bit = 0; bit < a2; ++bit) {
            if (s2 & (uint64_t{1} << bit)) {
              if (!good.count({s1, s2 & ~(uint64_t{1} << bit)})) ++violations;
            }
          }
        }
      }
    }
  }
  WARN_MESSAGE(violations == 0, "downward closure violated " << violations << " times");
}
