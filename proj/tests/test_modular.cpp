#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lieram/modular.hpp"

using namespace lieram;

namespace {

PChar zero_char(const std::string& t, std::uint64_t p, std::vector<int> support = {}) {
  const auto rs = make_root_system(t);
  return make_pchar(rs, p, std::vector<FFElem>(rs->rank(), FFElem::zero(make_field(p, 1))), support);
}

std::multiset<std::uint64_t> dims(const std::vector<ModBlock>& blocks) {
  std::multiset<std::uint64_t> d;
  for (const auto& b : blocks) d.insert(b.dim_c);
  return d;
}

}  // namespace

TEST(ModularBlocks, Sl2BlockCounts) {
  // dot orbits on F_p: {lambda, -lambda-2}; (p-1)/2 pairs plus the fixed point -1
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const auto blocks = mod_blocks(zero_char("A1", p));
    EXPECT_EQ(blocks.size(), (p + 1) / 2) << p;
    EXPECT_EQ(std::count_if(blocks.begin(), blocks.end(), [](const ModBlock& b) { return b.dim_c == 1; }), 1);
  }
}

TEST(ModularBlocks, A2AtFive) {
  const auto blocks = mod_blocks(zero_char("A2", 5));
  EXPECT_EQ(blocks.size(), 7u);
  EXPECT_EQ(dims(blocks), (std::multiset<std::uint64_t>{1, 3, 3, 3, 3, 6, 6}));
  std::uint64_t sum = 0;
  for (const auto& b : blocks) sum += b.dim_c;
  EXPECT_EQ(sum, 25u);
}

TEST(ModularBlocks, RankIdentityAndBlockSizes) {
  for (auto [t, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"A1", 3}, {"A2", 5}, {"A2", 7}, {"A3", 5}, {"B2", 3}, {"B2", 5}, {"G2", 5}, {"G2", 7}, {"B3", 3}, {"C3", 5}}) {
    const auto chi = zero_char(t, p);
    std::uint64_t sum = 0, total = 1;
    for (const auto& b : mod_blocks(chi)) {
      sum += b.dim_c;
      EXPECT_EQ(b.members.size(), b.dim_c) << t;
    }
    for (int i = 0; i < chi.rs->rank(); ++i) total *= p;
    EXPECT_EQ(sum, total) << t << " p=" << p;
  }
}

TEST(ModularBlocks, SemisimpleCharactersSplitCompletely) {
  // c = (1, 1) on A2: every root pairs nonzero, so each lambda is its own block
  const auto rs = make_root_system("A2");
  const auto f = make_field(5, 1);
  const auto chi = make_pchar(rs, 5, {FFElem::one(f), FFElem::one(f)}, {});
  EXPECT_EQ(chi.phi_prime.rank(), 0);
  const auto blocks = mod_blocks(chi);
  EXPECT_EQ(blocks.size(), 25u);
  for (const auto& b : blocks) EXPECT_TRUE(b.unramified);
  const auto u = unramified_count(chi, blocks);
  EXPECT_EQ(u.predicted, 25u);
  EXPECT_TRUE(u.agree());
}

TEST(ModularBlocks, LambdaChiSolvesTheDefiningEquation) {
  const auto rs = make_root_system("A2");
  for (const std::string lit : {"1,2", "g^1,0", "AS(1),0", "g^3,g^5"}) {
    const auto c = parse_field_vector(lit, 3, 2);
    // A2 fails the trace form at p = 3; solve the equation directly
    PChar chi;
    chi.rs = rs;
    chi.p = 3;
    chi.c = c;
    chi.field = c[0].field();
    const auto lam = enumerate_lambda_chi(chi);
    EXPECT_EQ(lam.size(), 9u);
    for (const auto& l : lam)
      for (int i = 0; i < 2; ++i) {
        const auto common = to_common_field({l[i], c[i]});
        EXPECT_EQ(common[0].frobenius() - common[0], common[1].frobenius()) << lit;
      }
  }
}

TEST(ModularBlocks, LeviCharacterFibers) {
  // c_1 = 0 on B2 and alpha_2 pairing nonzero: Phi' is {+-alpha_1}
  const auto rs = make_root_system("B2");
  const auto f = make_field(5, 1);
  std::vector<FFElem> c{FFElem::zero(f), FFElem::one(f)};
  // find a value of c_2 making only +-alpha_1 vanish
  for (int v = 1; v < 5; ++v) {
    c[1] = FFElem::from_int(f, v);
    const auto chi = make_pchar(rs, 5, c, {1});
    if (chi.phi_prime.rank() != 1) continue;
    EXPECT_EQ(chi.phi_prime.type.str(), "A1");
    EXPECT_TRUE(chi.regular());
    const auto blocks = mod_blocks(chi);
    for (const auto& b : blocks) EXPECT_LE(b.dim_c, 2u);
    EXPECT_TRUE(unramified_count(chi, blocks).agree());
    EXPECT_EQ(unramified_count(chi, blocks).predicted, 5u);
    return;
  }
  FAIL() << "no Levi character found";
}

TEST(ModularBlocks, UnramifiedCriteriaAgree) {
  for (auto [t, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"A2", 5}, {"B2", 5}, {"G2", 7}, {"A3", 5}}) {
    const auto chi = zero_char(t, p);
    for (const auto& lam : enumerate_lambda_chi(chi))
      EXPECT_EQ(is_unramified(*chi.rs, lam, UnramifiedMode::SimpleRoot),
                is_unramified(*chi.rs, lam, UnramifiedMode::Definitional));
    const auto blocks = mod_blocks(chi);
    EXPECT_EQ(unramified_count(chi, blocks).enumerated, 1u) << t;
  }
}

TEST(ModularBlocks, SteinbergBlock) {
  for (auto [t, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"A2", 5}, {"B2", 7}, {"G2", 5}}) {
    const auto chi = zero_char(t, p);
    int found = 0;
    for (const auto& b : mod_blocks(chi)) {
      if (!b.steinberg) continue;
      ++found;
      EXPECT_EQ(b.dim_c, 1u);
      for (const auto& x : b.lambda) EXPECT_EQ(x, FFElem::from_int(chi.field, -1));
    }
    EXPECT_EQ(found, 1);
  }
}

TEST(Poincare, CosetPolynomials) {
  const auto rs = make_root_system("B2");
  const auto f = make_field(5, 1);
  auto series = [&](int a, int b) { return poincare_series(*rs, {FFElem::from_int(f, a), FFElem::from_int(f, b)}); };
  EXPECT_EQ(series(1, 1), (std::vector<std::uint64_t>{1, 2, 2, 2, 1}));  // regular: all of W
  EXPECT_EQ(series(0, 1), (std::vector<std::uint64_t>{1, 1, 1, 1}));     // W / <s_1>
  EXPECT_EQ(series(0, 0), (std::vector<std::uint64_t>{1}));
  // every weight of G2 at p = 7, conjugated to a standard parabolic stabilizer where needed
  const auto g2 = make_root_system("G2");
  const auto f7 = make_field(7, 1);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      const ModWeight eta{FFElem::from_int(f7, a), FFElem::from_int(f7, b)};
      const auto coeffs = poincare_series(*g2, eta);
      std::uint64_t total = 0;
      for (auto c : coeffs) total += c;
      EXPECT_EQ(total, 12u / stabilizer_of(*g2, eta).order);
      EXPECT_EQ(coeffs.back(), 1u);
    }
}

TEST(Poincare, NeedsLatticeWeight) {
  const auto rs = make_root_system("A1");
  try {
    poincare_series(*rs, {primitive_element(make_field(5, 2))});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNilpotentContext);
  }
}

TEST(FiniteType, Verdicts) {
  const auto rs = make_root_system("A2");
  const auto f = make_field(5, 1);
  auto verdict = [&](int a, int b, bool unique = false) {
    return finite_type_verdict(*rs, {FFElem::from_int(f, a), FFElem::from_int(f, b)}, unique).verdict;
  };
  EXPECT_EQ(verdict(0, 0), "semisimple");         // W(eta) = W
  EXPECT_EQ(verdict(0, 1), "unknown-boundary");   // (A2, A1)
  EXPECT_EQ(verdict(0, 1, true), "finite");
  EXPECT_EQ(verdict(1, 1), "infinite");           // (A2, trivial)
  const auto b3 = make_root_system("B3");
  const ModWeight eta{FFElem::zero(f), FFElem::zero(f), FFElem::one(f)};  // inner A2 inside B3
  EXPECT_EQ(finite_type_verdict(*b3, eta).verdict, "infinite");
}

TEST(Structure, RegularCharacters) {
  const auto chi = zero_char("A2", 5, {1, 2});
  const auto s = regularity_and_structure(chi);
  EXPECT_TRUE(s.regular && s.fully_azumaya);
  EXPECT_EQ(s.matrix_size, std::optional<std::uint64_t>(125));
  EXPECT_EQ(s.dims, (std::optional<std::vector<std::uint64_t>>(std::vector<std::uint64_t>{1, 3, 3, 3, 3, 6, 6})));
  EXPECT_FALSE(regularity_and_structure(zero_char("A2", 5)).regular);
}

TEST(Characters, HypothesisFailuresNameTheHypothesis) {
  try {
    zero_char("A2", 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
    EXPECT_NE(std::string(e.what()).find("trace-form"), std::string::npos);
  }
  try {
    zero_char("G2", 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("good-prime"), std::string::npos);
  }
  EXPECT_THROW(zero_char("A2", 5, {3}), Error);
  EXPECT_THROW(make_pchar(make_root_system("A2"), 5, {FFElem::zero(make_field(5, 1))}, {}), Error);
}

TEST(Characters, LiteralGrammar) {
  EXPECT_EQ(parse_field_literal("3", 5), FFElem::from_int(make_field(5, 1), 3));
  EXPECT_EQ(parse_field_literal("-1", 5), FFElem::from_int(make_field(5, 1), 4));
  EXPECT_EQ(parse_field_literal("g^2", 5, 2), primitive_element(make_field(5, 2)).pow(2));
  EXPECT_EQ(parse_field_literal("g^-1", 5, 2) * primitive_element(make_field(5, 2)), FFElem::one(make_field(5, 2)));
  const FFElem x = parse_field_literal("AS(2)", 5);
  EXPECT_EQ(x.frobenius() - x, FFElem::from_int(x.field(), 2));
  const auto v = parse_field_vector("1, g^1", 3, 2);
  EXPECT_EQ(v[0].field()->e, 2u);
  EXPECT_EQ(parse_index_list(""), std::vector<int>{});
  EXPECT_EQ(parse_index_list("2,1"), (std::vector<int>{2, 1}));
  EXPECT_THROW(parse_field_literal("h", 5), Error);
  EXPECT_THROW(parse_index_list("1,x"), Error);
}
