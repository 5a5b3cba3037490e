#ifndef LIERAM_CONFIG_HPP
#define LIERAM_CONFIG_HPP

#include <atomic>
#include <cstdint>

namespace lieram {

/// Process-wide limits. Defaults: Weyl group / orbit enumeration up to 10^6
/// elements, finite fields up to 10^9 elements.
struct Config {
  std::atomic<std::uint64_t> group_bound{1'000'000};
  std::atomic<std::uint64_t> field_bound{1'000'000'000};
  // Fault injection for mutation testing of the self-test suites: flips the
  // sign of the rho-shift in the modular dot action.
  std::atomic<bool> inject_dot_sign_fault{false};
};

inline Config& config() {
  static Config instance;
  return instance;
}

}  // namespace lieram

#endif  // LIERAM_CONFIG_HPP
