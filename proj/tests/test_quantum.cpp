#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lieram/quantum.hpp"

using namespace lieram;

namespace {

QChar qchar(const std::string& t, std::int64_t ell, TorusElement chi_s = {}, std::vector<int> support = {},
            std::int64_t eps = 1) {
  const auto rs = make_root_system(t);
  if (chi_s.empty()) chi_s = trivial_torus(rs->rank());
  return make_qchar(rs, ell, chi_s, support, eps);
}

UnityExp ue(std::int64_t n, std::int64_t d) { return UnityExp(Rational(n, d)); }

}  // namespace

TEST(QuantumBlocks, Sl2AtFifthRoot) {
  const auto chi = qchar("A1", 5, {}, {1});
  const auto blocks = q_blocks(chi);
  ASSERT_EQ(blocks.size(), 3u);
  std::multiset<std::uint64_t> d;
  for (const auto& b : blocks) d.insert(b.dim_d);
  EXPECT_EQ(d, (std::multiset<std::uint64_t>{1, 2, 2}));
  const auto c = q_regularity_and_counts(chi, blocks);
  EXPECT_TRUE(c.regular && c.fully_azumaya);
  EXPECT_EQ(c.matrix_size, std::optional<std::uint64_t>(5));
  EXPECT_EQ(c.dims, (std::optional<std::vector<std::uint64_t>>(std::vector<std::uint64_t>{1, 2, 2})));
  EXPECT_EQ(c.unramified_enumerated, 1u);
}

TEST(QuantumBlocks, Sl2BlockCountsForAllEps) {
  for (std::int64_t ell : {3, 5, 7, 9, 11}) {
    for (std::int64_t eps = 1; eps < ell; ++eps) {
      if (std::gcd(eps, ell) != 1) continue;
      const auto blocks = q_blocks(qchar("A1", ell, {}, {}, eps));
      EXPECT_EQ(blocks.size(), static_cast<std::size_t>((ell + 1) / 2));
    }
  }
}

TEST(QuantumBlocks, FiberAndComponentCoordinates) {
  const TorusElement chi_s{ue(1, 3), ue(2, 7)};
  for (std::int64_t ell : {3, 5, 7}) {
    const auto fiber = ell_fiber(chi_s, ell);
    EXPECT_EQ(fiber.size(), static_cast<std::size_t>(ell * ell));
    std::set<PointKey> distinct;
    for (const auto& t : fiber) {
      distinct.insert(encode(t));
      EXPECT_EQ(torus_scale(ell, t), torus_scale(2, chi_s));
      const auto u = component_coordinate(t, chi_s, ell);
      EXPECT_EQ(torus_scale(2, u), t);
      EXPECT_EQ(torus_scale(ell, u), chi_s);
    }
    EXPECT_EQ(distinct.size(), fiber.size());
  }
}

TEST(QuantumBlocks, HarishChandraShift) {
  const RootSystem a1(parse_cartan_type("A1"));
  EXPECT_EQ(hc_shift(a1, {ue(2, 5)}, 5, true), TorusElement{ue(0, 1)});
  EXPECT_EQ(hc_shift(a1, {ue(0, 1)}, 5, false), TorusElement{ue(2, 5)});
  const RootSystem g2(parse_cartan_type("G2"));
  for (std::int64_t eps : {1, 2, 3}) {
    const TorusElement t{ue(1, 7), ue(3, 7)};
    EXPECT_EQ(hc_shift(g2, hc_shift(g2, t, 7, true, eps), 7, false, eps), t);
  }
}

TEST(QuantumBlocks, RankIdentityAndCriteria) {
  for (auto [t, ell] : std::vector<std::pair<std::string, std::int64_t>>{
           {"A2", 5}, {"A2", 7}, {"B2", 3}, {"B2", 5}, {"G2", 5}, {"G2", 7}, {"A3", 3}, {"B3", 3}}) {
    const auto chi = qchar(t, ell);
    const RootSystem& rs = *chi.rs;
    std::uint64_t sum = 0, total = 1;
    for (const auto& b : q_blocks(chi)) {
      sum += b.dim_d;
      EXPECT_EQ(b.members.size(), b.dim_d);
      EXPECT_EQ(b.unramified, b.unramified_component) << t;
      for (const auto& m : b.members) {
        const auto hw = hc_shift(rs, component_coordinate(m, chi.chi_s, ell), ell, false);
        const auto test = q_unramified_highest_weight(rs, hw, ell);
        EXPECT_TRUE(test.conjugate_found);
        EXPECT_EQ(test.unramified, b.unramified) << t;
      }
    }
    for (int i = 0; i < rs.rank(); ++i) total *= static_cast<std::uint64_t>(ell);
    EXPECT_EQ(sum, total) << t << " ell=" << ell;
  }
}

TEST(QuantumBlocks, BurnsideCountsForCentralCharacters) {
  for (auto [t, ell] : std::vector<std::pair<std::string, std::int64_t>>{{"A2", 5}, {"B2", 7}, {"G2", 5}, {"A3", 3}}) {
    const auto chi = qchar(t, ell);
    const RootSystem& rs = *chi.rs;
    const auto n = burnside_count(*enumerate_group(rs), ell_fiber(chi.chi_s, ell),
                                  [&](const WeylElement& w, const TorusElement& x) { return act_torus(rs, w, x, false); });
    EXPECT_EQ(n, q_blocks(chi).size()) << t;
  }
}

TEST(QuantumCounts, UnramifiedCountAndCoprimality) {
  const auto a2 = qchar("A2", 3);
  const auto c = q_regularity_and_counts(a2, q_blocks(a2));
  EXPECT_EQ(c.index_of_connection, 3);
  EXPECT_FALSE(c.coprimality_ok);
  EXPECT_FALSE(c.unramified_predicted.has_value());

  const auto b2 = qchar("B2", 5);
  const auto d = q_regularity_and_counts(b2, q_blocks(b2));
  EXPECT_TRUE(d.coprimality_ok);
  EXPECT_EQ(d.s, 0);
  EXPECT_EQ(d.unramified_predicted, std::optional<std::uint64_t>(1));
  EXPECT_EQ(d.unramified_enumerated, 1u);

  // regular semisimple: every fiber point is its own unramified block
  // first point of order 11 on which no root of G2 is trivial
  std::optional<QChar> found;
  for (int a = 0; a < 11 && !found; ++a)
    for (int b = 0; b < 11 && !found; ++b) {
      auto chi = qchar("G2", 5, {ue(a, 11), ue(b, 11)});
      if (chi.phi_prime.rank() == 0) found = chi;
    }
  ASSERT_TRUE(found.has_value());
  const QChar& g2 = *found;
  const auto e = q_regularity_and_counts(g2, q_blocks(g2));
  EXPECT_EQ(e.unramified_predicted, std::optional<std::uint64_t>(25));
  EXPECT_EQ(e.unramified_enumerated, 25u);
}

TEST(QuantumCounts, LeviHull) {
  const RootSystem b2(parse_cartan_type("B2"));
  int longest = 0;
  for (int k = 0; k < b2.num_roots(); ++k) longest = std::max(longest, b2.half_norm(k));
  const auto longs = subsystem_where(b2, [&](int k) { return b2.half_norm(k) == longest; }, false);
  EXPECT_EQ(longs.type.str(), "A1xA1");
  EXPECT_EQ(levi_hull(b2, longs).type.str(), "B2");
  const RootSystem a3(parse_cartan_type("A3"));
  const auto one = subsystem_where(a3, [&](int k) { return k == 0 || k == a3.negate(0); });
  EXPECT_EQ(levi_hull(a3, one).type.str(), "A1");
}

TEST(QuantumChar, Validation) {
  EXPECT_THROW(qchar("A1", 4), Error);
  EXPECT_THROW(qchar("A1", 1), Error);
  try {
    qchar("G2", 9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
  }
  EXPECT_THROW(qchar("A1", 9, {}, {}, 3), Error);
  EXPECT_THROW(qchar("A2", 5, {ue(0, 1)}), Error);
  EXPECT_THROW(qchar("A2", 5, {}, {3}), Error);
}

TEST(QuantumChar, TorusLiterals) {
  EXPECT_EQ(parse_torus("1/5,2/5"), (TorusElement{ue(1, 5), ue(2, 5)}));
  EXPECT_EQ(parse_torus("0/1"), TorusElement{ue(0, 1)});
  EXPECT_EQ(parse_torus("-1/3"), TorusElement{ue(2, 3)});
  EXPECT_THROW(parse_torus("1/x"), Error);
}

TEST(Simplicity, NecessaryCondition) {
  const auto chi = qchar("A1", 5);
  // alpha(t)^2 must equal eps^{-2}: t = 2/5 gives alpha(t)^2 = eps^8 = eps^3
  EXPECT_TRUE(simplicity_necessary(chi, {ue(2, 5)}).holds);
  const auto bad = simplicity_necessary(chi, {ue(0, 1)});
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.failing_component, std::optional<std::string>("A1"));
  EXPECT_TRUE(simplicity_necessary(qchar("A1", 5, {}, {1}), {ue(0, 1)}).holds);
  int holds = 0;
  for (int k = 0; k < 5; ++k) holds += simplicity_necessary(chi, {ue(k, 5)}).holds;
  EXPECT_EQ(holds, 1);
}

TEST(Exceptional, G2Elements) {
  const RootSystem g2(parse_cartan_type("G2"));
  const auto elems = exceptional_elements(g2);
  ASSERT_EQ(elems.size(), 3u);
  EXPECT_EQ(elems[1].a_m, 3);
  EXPECT_EQ(elems[1].centralizer.type.str(), "A2");
  EXPECT_EQ(g2.root(*elems[1].beta_m), (RootVec{3, 1}));
  EXPECT_EQ(elems[2].a_m, 2);
  EXPECT_EQ(elems[2].centralizer.type.str(), "A1xA1");
  EXPECT_EQ(g2.root(*elems[2].beta_m), (RootVec{3, 2}));
  for (const auto& e : elems) {
    EXPECT_TRUE(e.values_match);
    EXPECT_TRUE(e.generated_matches);
    // s_m has order a_m
    EXPECT_TRUE(torus_scale(e.a_m, e.s) == trivial_torus(2));
  }
}

TEST(Exceptional, CentralizerTypes) {
  const std::map<std::string, std::vector<std::string>> expect{
      {"F4", {"F4", "A1xC3", "A2xA2", "A3xA1", "B4"}},
      {"E8", {"E8", "D8", "A8", "A7xA1", "A5xA2xA1", "A4xA4", "D5xA3", "E6xA2", "E7xA1"}},
  };
  for (const auto& [t, types] : expect) {
    const RootSystem rs(parse_cartan_type(t));
    const auto elems = exceptional_elements(rs);
    ASSERT_EQ(elems.size(), types.size());
    for (std::size_t m = 0; m < elems.size(); ++m) {
      auto got = elems[m].centralizer.type.components;
      auto want = parse_cartan_type(types[m]).components;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want) << t << " m=" << m;
      EXPECT_EQ(elems[m].centralizer.order, weyl_order(parse_cartan_type(types[m]))) << t << " m=" << m;
    }
  }
  EXPECT_THROW(exceptional_elements(RootSystem(parse_cartan_type("A1xA1"))), Error);
}
