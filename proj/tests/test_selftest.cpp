#include <gtest/gtest.h>

#include "lieram/config.hpp"
#include "lieram/selftest.hpp"

using namespace lieram;

TEST(TestMatrix, Shape) {
  // A2 at p = 3 and G2 at p = 3 are skipped; G2 at ell = 3 is skipped
  EXPECT_EQ(modular_test_matrix().size(), (15u - 2u) * 4u);
  EXPECT_EQ(quantum_test_matrix().size(), (15u - 1u) * 4u);
  for (const auto& cell : modular_test_matrix()) {
    if (cell.label == "regular-semisimple") EXPECT_EQ(cell.chi.phi_prime.rank(), 0) << cell.name();
    if (cell.label == "mixed-levi") EXPECT_EQ(cell.chi.phi_prime.type.str(), "A1") << cell.name();
    if (cell.label == "regular-nilpotent") EXPECT_TRUE(cell.chi.regular() && cell.chi.nilpotent());
  }
  for (const auto& cell : quantum_test_matrix()) {
    if (cell.label == "regular-semisimple") EXPECT_EQ(cell.chi.phi_prime.rank(), 0) << cell.name();
    if (cell.label == "mixed-levi") EXPECT_EQ(cell.chi.phi_prime.type.str(), "A1") << cell.name();
  }
}

TEST(Suites, AllPass) {
  for (const auto& s : all_suites()) {
    const auto r = s.run();
    EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checks, 0u) << r.name;
  }
}

TEST(Suites, InjectedDotSignFaultIsCaught) {
  config().inject_dot_sign_fault = true;
  const auto r = suite_dot_compat();
  const auto burnside = suite_burnside();
  config().inject_dot_sign_fault = false;
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(suite_dot_compat().passed());
  (void)burnside;
}
