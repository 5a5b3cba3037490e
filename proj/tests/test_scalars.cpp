#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <tuple>
#include <set>
#include <vector>

#include "lieram/config.hpp"
#include "lieram/scalars.hpp"

using namespace lieram;

namespace {

using Poly = std::vector<std::uint64_t>;

// remainder of a by monic b over F_p, schoolbook
Poly naive_rem(Poly a, const Poly& b, std::uint64_t p) {
  while (a.size() >= b.size()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// irreducible iff no monic divisor of degree 1..deg/2
bool naive_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t rest = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      if (naive_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// lexicographically smallest monic irreducible, c_0 most significant
Poly naive_smallest(std::uint64_t p, std::size_t e) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f(e + 1, 0);
    f[e] = 1;
    std::uint64_t rest = n;
    for (std::size_t i = 0; i < e; ++i) {
      f[e - 1 - i] = rest % p;
      rest /= p;
    }
    if (naive_irreducible(f, p)) return f;
  }
  return {};
}

std::vector<FFElem> all_elements(const FieldPtr& f) {
  std::vector<FFElem> out;
  for (std::uint64_t i = 0; i < f->size; ++i) out.push_back(FFElem::from_index(f, i));
  return out;
}

}  // namespace

TEST(FiniteField, ModulusMatchesNaiveSearch) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}}) {
    EXPECT_EQ(make_field(p, e)->modulus, naive_smallest(p, e)) << "p=" << p << " e=" << e;
  }
}

TEST(FiniteField, KnownModuli) {
  EXPECT_EQ(make_field(3, 3)->modulus, (Poly{1, 0, 2, 1}));  // x^3 + 2x^2 + 1
  EXPECT_EQ(make_field(5, 2)->modulus, (Poly{1, 1, 1}));     // x^2 + x + 1
  EXPECT_EQ(make_field(2, 2)->modulus, (Poly{1, 1, 1}));
}

TEST(FiniteField, RabinAgreesWithTrialDivision) {
  // every monic polynomial of degree 4 over F_3 and degree 6 over F_2
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::size_t>>{{3, 4}, {2, 6}, {5, 3}}) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly f(e + 1, 0);
      f[e] = 1;
      std::uint64_t rest = n;
      for (std::size_t i = 0; i < e; ++i) {
        f[i] = rest % p;
        rest /= p;
      }
      ASSERT_EQ(detail::is_irreducible(f, p), naive_irreducible(f, p)) << "p=" << p << " n=" << n;
    }
  }
}

TEST(FiniteField, AxiomsExhaustive) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {3, 2}, {5, 2}, {3, 3}}) {
    const auto f = make_field(p, e);
    const auto xs = all_elements(f);
    const FFElem one = FFElem::one(f);
    for (const auto& x : xs) {
      EXPECT_EQ(x + FFElem::zero(f), x);
      EXPECT_EQ(x * one, x);
      EXPECT_EQ(x + (-x), FFElem::zero(f));
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), one);
      EXPECT_EQ(static_cast<std::int64_t>(p) * x, FFElem::zero(f));
      for (const auto& y : xs) {
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x + y).frobenius(), x.frobenius() + y.frobenius());
        EXPECT_EQ((x * y).frobenius(), x.frobenius() * y.frobenius());
        for (std::size_t k = 0; k < xs.size(); k += 3) EXPECT_EQ(x * (y + xs[k]), x * y + x * xs[k]);
      }
    }
  }
}

TEST(FiniteField, FrobeniusFixedPointsAndTrace) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    const auto f = make_field(p, e);
    std::uint64_t fixed = 0, trace_zero = 0;
    for (const auto& x : all_elements(f)) {
      FFElem y = x;
      for (std::uint32_t i = 0; i < e; ++i) y = y.frobenius();
      EXPECT_EQ(y, x);
      if (x.in_prime_field()) ++fixed;
      // trace as the sum of conjugates
      FFElem s = FFElem::zero(f), c = x;
      for (std::uint32_t i = 0; i < e; ++i) {
        s += c;
        c = c.frobenius();
      }
      EXPECT_TRUE(s.in_prime_field());
      EXPECT_EQ(FFElem::from_int(f, static_cast<std::int64_t>(x.trace())), s);
      if (x.trace() == 0) ++trace_zero;
    }
    EXPECT_EQ(fixed, p);
    EXPECT_EQ(trace_zero, f->size / p);
  }
}

TEST(FiniteField, PrimitiveElementGeneratesUnits) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 1}, {13, 1}}) {
    const auto f = make_field(p, e);
    const FFElem g = primitive_element(f);
    std::set<std::vector<std::uint64_t>> seen;
    FFElem x = FFElem::one(f);
    for (std::uint64_t k = 0; k + 1 < f->size; ++k) {
      seen.insert(x.coeffs());
      x *= g;
    }
    EXPECT_EQ(seen.size(), f->size - 1);
    EXPECT_EQ(x, FFElem::one(f));
  }
  EXPECT_EQ(primitive_element(make_field(7, 1)), FFElem::from_int(make_field(7, 1), 3));
}

TEST(FiniteField, EmbeddingIsInjectiveRingMap) {
  for (auto [p, a, b] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
           {2, 2, 4}, {3, 1, 3}, {3, 2, 4}, {2, 3, 6}, {5, 1, 2}}) {
    const auto small = make_field(p, a);
    const auto big = make_field(p, b);
    const auto xs = all_elements(small);
    std::set<std::vector<std::uint64_t>> images;
    for (const auto& x : xs) {
      images.insert(embed(x, big).coeffs());
      for (const auto& y : xs) {
        EXPECT_EQ(embed(x + y, big), embed(x, big) + embed(y, big));
        EXPECT_EQ(embed(x * y, big), embed(x, big) * embed(y, big));
      }
    }
    EXPECT_EQ(images.size(), xs.size());
    EXPECT_EQ(embed(FFElem::one(small), big), FFElem::one(big));
  }
}

TEST(FiniteField, EmbeddingRejectsNonSubfield) {
  EXPECT_THROW(embed(primitive_element(make_field(3, 2)), make_field(3, 3)), Error);
}

TEST(ArtinSchreier, SolutionsSatisfyEquationAndLandWherePredicted) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto f = make_field(p, e);
    for (const auto& c : all_elements(f)) {
      const auto sol = artin_schreier_solve(c);
      EXPECT_EQ(sol.x.frobenius() - sol.x, embed(c, sol.field));
      EXPECT_EQ(sol.field->e, c.trace() == 0 ? e : e * p);
    }
  }
  // x^5 - x = 2 has no root in F_5 and lands in F_{5^5}
  EXPECT_EQ(artin_schreier_solve(FFElem::from_int(make_field(5, 1), 2)).field->e, 5u);
}

TEST(FiniteField, Rendering) {
  const auto f = make_field(3, 3);
  EXPECT_EQ(FFElem(f, {2, 0, 1}).str(), "2+a^2");
  EXPECT_EQ(FFElem(f, {0, 1, 0}).str(), "a");
  EXPECT_EQ(FFElem::zero(f).str(), "0");
  EXPECT_EQ(FFElem(make_field(5, 4), {0, 0, 0, 3}).str(), "3*a^3");
}

TEST(FiniteField, Errors) {
  EXPECT_THROW(make_field(4, 1), Error);
  try {
    make_field(9, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPrime);
  }
  const auto old = config().field_bound.load();
  config().field_bound = 1000;
  try {
    make_field(11, 3);
    ADD_FAILURE() << "expected BoundExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
  config().field_bound = old;
}

TEST(Rational, Normalization) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(-3, 2).frac(), Rational(1, 2));
  EXPECT_EQ(Rational(7, 3).frac(), Rational(1, 3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational(3, 6).str(), "1/2");
  EXPECT_THROW(parse_rational("1/x"), Error);
}

TEST(UnityExp, ArithmeticModOne) {
  const UnityExp a(Rational(3, 4)), b(Rational(1, 2));
  EXPECT_EQ(a + b, UnityExp(Rational(1, 4)));
  EXPECT_EQ(b - a, UnityExp(Rational(3, 4)));
  EXPECT_TRUE((4 * a).is_identity());
  EXPECT_TRUE(UnityExp(Rational(5)).is_identity());
}

TEST(EpsPow, MatchesBruteForceInversion) {
  EXPECT_EQ(eps_pow(Rational(-1, 2), 5), UnityExp(Rational(2, 5)));
  EXPECT_EQ(eps_pow(Rational(3, 2), 3), UnityExp(Rational(0)));
  for (std::int64_t ell : {3, 5, 7, 9, 11}) {
    for (std::int64_t eps = 1; eps < ell; ++eps) {
      if (std::gcd(eps, ell) != 1) continue;
      for (std::int64_t num = -6; num <= 6; ++num) {
        for (std::int64_t den = 1; den <= 4; ++den) {
          const Rational q(num, den);
          if (std::gcd(q.den(), ell) != 1) {
            EXPECT_THROW(eps_pow(q, ell, eps), Error);
            continue;
          }
          // the k with den * k = eps * num (mod ell)
          std::int64_t k = 0;
          while (((q.den() * k - eps * q.num()) % ell + ell) % ell != 0) ++k;
          EXPECT_EQ(eps_pow(q, ell, eps), UnityExp(Rational(k, ell)));
        }
      }
    }
  }
}
