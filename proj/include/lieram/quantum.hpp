#ifndef LIERAM_QUANTUM_HPP
#define LIERAM_QUANTUM_HPP

// Root-of-unity combinatorics on the torsion torus: the l-fiber over chi_s^2,
// its W-orbit blocks, dimensions [W(t^l) : W(t)], the unramified criteria in
// component and highest-weight coordinates, exceptional elements and counts.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lieram/error.hpp"
#include "lieram/rational.hpp"
#include "lieram/rootdata.hpp"
#include "lieram/scalars.hpp"
#include "lieram/weyl.hpp"

namespace lieram {

inline TorusElement torus_scale(std::int64_t k, const TorusElement& t) {
  TorusElement out;
  for (const auto& x : t) out.push_back(k * x);
  return out;
}

inline TorusElement torus_mul(const TorusElement& a, const TorusElement& b) {
  TorusElement out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

inline TorusElement trivial_torus(int r) { return TorusElement(r); }

/// Phi_t = {beta : beta(t) = 1}.
inline Subsystem w_t(const RootSystem& rs, const TorusElement& t) {
  return reflection_stabilizer(rs, [&](int b) { return root_value(rs, t, b).is_identity(); });
}

/// Character chi = chi_u chi_s with chi_s in T and the unipotent part in
/// standard-Levi form (support: 1-based indices into the basis of Phi').
struct QChar {
  std::shared_ptr<const RootSystem> rs;
  std::int64_t ell = 0;
  std::int64_t eps_num = 1;
  TorusElement chi_s;
  std::vector<int> support;
  Subsystem phi_prime;  // {beta : beta(chi_s^2) = 1}

  bool regular() const { return static_cast<int>(support.size()) == phi_prime.rank(); }
};

inline void check_ell(const RootSystem& rs, std::int64_t ell, std::int64_t eps_num) {
  if (ell < 3 || ell % 2 == 0) throw Error(ErrorKind::HypothesisFailed, "ell must be odd and at least 3");
  for (const auto& c : rs.type().components)
    if (c.letter == 'G' && ell % 3 == 0)
      throw Error(ErrorKind::HypothesisFailed, "ell must be prime to 3 for G2 components");
  if (std::gcd(eps_num, ell) != 1)
    throw Error(ErrorKind::InvalidInput, "eps exponent " + std::to_string(eps_num) + " not prime to ell");
}

inline QChar make_qchar(std::shared_ptr<const RootSystem> rs, std::int64_t ell, TorusElement chi_s,
                        std::vector<int> support, std::int64_t eps_num = 1) {
  check_ell(*rs, ell, eps_num);
  if (static_cast<int>(chi_s.size()) != rs->rank())
    throw Error(ErrorKind::InvalidCharacter, "expected " + std::to_string(rs->rank()) + " torus exponents");
  QChar chi;
  chi.rs = std::move(rs);
  chi.ell = ell;
  chi.eps_num = ((eps_num % ell) + ell) % ell;
  chi.chi_s = std::move(chi_s);
  chi.phi_prime = w_t(*chi.rs, torus_scale(2, chi.chi_s));
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (int s : support)
    if (s < 1 || s > chi.phi_prime.rank())
      throw Error(ErrorKind::InvalidCharacter, "support index " + std::to_string(s) +
                                                   " outside the simple basis of the centralizer (size " +
                                                   std::to_string(chi.phi_prime.rank()) + ")");
  chi.support = std::move(support);
  return chi;
}

/// All t with t^ell = chi_s^2: exponents (2 q_i + k_i) / ell, k_1 fastest.
inline std::vector<TorusElement> ell_fiber(const TorusElement& chi_s, std::int64_t ell) {
  const std::size_t r = chi_s.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < r; ++i) count *= static_cast<std::uint64_t>(ell);
  std::vector<TorusElement> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    TorusElement t(r);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < r; ++i) {
      const auto k = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(ell));
      rest /= static_cast<std::uint64_t>(ell);
      t[i] = UnityExp((Rational(2) * chi_s[i].exponent() + Rational(k)) / Rational(ell));
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Coordinate change between baby-Verma highest weights and component
/// labels: forward adds eps^{(rho, varpi_i)} to each coordinate, backward
/// subtracts it. The dot action is the ordinary action conjugated by it.
inline TorusElement hc_shift(const RootSystem& rs, const TorusElement& t, std::int64_t ell, bool forward,
                             std::int64_t eps_num = 1) {
  TorusElement out = t;
  for (int i = 0; i < rs.rank(); ++i) {
    const UnityExp s = eps_pow(rs.rho_dot_fundamental(i), ell, eps_num);
    out[i] = forward ? out[i] + s : out[i] - s;
  }
  return out;
}

/// The component coordinate u of a fiber label t: u^2 = t and u^ell = chi_s,
/// namely u = t^{(ell+1)/2} chi_s^{-1}.
inline TorusElement component_coordinate(const TorusElement& t, const TorusElement& chi_s, std::int64_t ell) {
  TorusElement u = torus_scale((ell + 1) / 2, t);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = u[i] - chi_s[i];
  return u;
}

/// All-roots form: beta(u)^{2 ell} = 1 implies beta(u)^2 = 1 for every beta.
inline bool q_unramified_component(const RootSystem& rs, const TorusElement& u, std::int64_t ell) {
  for (int b = 0; b < rs.num_positive(); ++b) {
    const UnityExp v = root_value(rs, u, b);
    if ((2 * ell * v).is_identity() && !(2 * v).is_identity()) return false;
  }
  return true;
}

inline std::vector<int> extended_simple_roots(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back(i);
  for (int c = 0; c < rs.num_components(); ++c) out.push_back(rs.negate(rs.highest_root(c)));
  return out;
}

struct HighestWeightTest {
  bool unramified = false;
  bool conjugate_found = false;
  int conjugating_element = -1;  // index into the enumerated group
};

/// Criterion over the extended simple roots for a highest weight t: move the
/// component point into position where Phi_{u^{2 ell}} is generated by
/// extended simple roots, then test alpha(t)^{2 ell} = 1 implies
/// alpha(t)^2 = eps^{-(2 rho, alpha)} on those roots.
inline HighestWeightTest q_unramified_highest_weight(const RootSystem& rs, const TorusElement& t, std::int64_t ell,
                                                     std::int64_t eps_num = 1) {
  HighestWeightTest res;
  const auto group = enumerate_group(rs);
  const TorusElement u = hc_shift(rs, t, ell, true, eps_num);
  const auto tilde = extended_simple_roots(rs);
  for (std::size_t wi = 0; wi < group->size(); ++wi) {
    const TorusElement x = act_torus(rs, (*group)[wi], u, false);
    const Subsystem big = reflection_stabilizer(rs, [&](int b) { return (2 * ell * root_value(rs, x, b)).is_identity(); });
    std::vector<int> inside;
    for (int a : tilde)
      if (big.contains(a)) inside.push_back(a);
    const auto generated = reflection_closure(rs, inside);
    if (generated != big.roots) continue;
    res.conjugate_found = true;
    res.conjugating_element = static_cast<int>(wi);
    const TorusElement tp = hc_shift(rs, x, ell, false, eps_num);
    res.unramified = true;
    for (int a : tilde) {
      const UnityExp v = root_value(rs, tp, a);
      if (!(2 * ell * v).is_identity()) continue;
      const UnityExp target = eps_pow(Rational(-rs.two_rho_dot(a)), ell, eps_num);
      if (!(2 * v == target)) res.unramified = false;
    }
    return res;
  }
  return res;
}

struct QBlock {
  TorusElement t;  // representative label, t^ell = chi_s^2
  TorusElement u;  // component coordinate of t
  std::vector<TorusElement> members;
  std::uint64_t dim_d = 1;
  bool unramified = true;
  bool unramified_component = true;
  bool exceptional = false;
  bool steinberg = false;
  CartanType stabilizer;        // W(t)
  CartanType fiber_stabilizer;  // W(t^ell)
};

/// Blocks: W-orbits on the ell-fiber over chi_s^2.
inline std::vector<QBlock> q_blocks(const QChar& chi) {
  const RootSystem& rs = *chi.rs;
  const auto fiber = ell_fiber(chi.chi_s, chi.ell);
  std::vector<WeylElement> gens;
  for (int j = 1; j <= rs.rank(); ++j) gens.push_back(element_from_word(rs, {j}));
  const auto orbits = orbit_partition(
      fiber, rs.rank(), [&](int j, const TorusElement& x) { return act_torus(rs, gens[j], x, false); });
  const Subsystem big = w_t(rs, torus_scale(2, chi.chi_s));
  std::vector<QBlock> out;
  for (const auto& orb : orbits) {
    QBlock b;
    b.t = orb.representative;
    b.u = component_coordinate(b.t, chi.chi_s, chi.ell);
    b.members = orb.members;
    const Subsystem small = w_t(rs, b.t);
    b.dim_d = big.order / small.order;
    b.stabilizer = small.type;
    b.fiber_stabilizer = big.type;
    b.unramified = b.dim_d == 1;
    b.unramified_component = q_unramified_component(rs, b.u, chi.ell);
    b.exceptional = small.rank() == rs.rank();
    b.steinberg = std::any_of(orb.members.begin(), orb.members.end(), [&](const TorusElement& m) {
      return std::all_of(big.roots.begin(), big.roots.end(),
                         [&](int beta) { return root_value(rs, m, beta).is_identity(); });
    });
    out.push_back(std::move(b));
  }
  return out;
}

namespace detail {

inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == Rational(0)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == Rational(0)) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Phi intersected with the rational span of a subsystem.
inline Subsystem levi_hull(const RootSystem& rs, const Subsystem& sub) {
  std::vector<std::vector<Rational>> base;
  for (int b : sub.basis) base.emplace_back(rs.root(b).begin(), rs.root(b).end());
  const int k = static_cast<int>(base.size());
  return subsystem_where(rs, [&](int beta) {
    auto rows = base;
    rows.emplace_back(rs.root(beta).begin(), rs.root(beta).end());
    return detail::rational_rank(rows) == k;
  });
}

struct QCounts {
  bool regular = false;
  bool fully_azumaya = false;
  int s = 0;
  int index_of_connection = 1;
  bool coprimality_ok = true;
  std::optional<std::uint64_t> unramified_predicted;  // ell^s, only when coprime
  std::uint64_t unramified_enumerated = 0;
  std::optional<std::uint64_t> matrix_size;          // ell^N when regular
  std::optional<std::vector<std::uint64_t>> dims;    // dim D over blocks when regular
};

inline QCounts q_regularity_and_counts(const QChar& chi, const std::vector<QBlock>& blocks) {
  const RootSystem& rs = *chi.rs;
  QCounts c;
  c.regular = chi.regular();
  c.fully_azumaya = c.regular;
  c.s = rs.rank() - chi.phi_prime.rank();
  c.index_of_connection = index_of_connection(levi_hull(rs, chi.phi_prime).type);
  c.coprimality_ok = std::gcd(static_cast<std::int64_t>(c.index_of_connection), chi.ell) == 1;
  if (c.coprimality_ok) {
    std::uint64_t v = 1;
    for (int i = 0; i < c.s; ++i) v *= static_cast<std::uint64_t>(chi.ell);
    c.unramified_predicted = v;
  }
  for (const auto& b : blocks) c.unramified_enumerated += b.unramified ? 1 : 0;
  if (c.regular) {
    std::uint64_t m = 1;
    for (int i = 0; i < rs.num_positive(); ++i) m *= static_cast<std::uint64_t>(chi.ell);
    c.matrix_size = m;
    std::vector<std::uint64_t> d;
    for (const auto& b : blocks) d.push_back(b.dim_d);
    std::sort(d.begin(), d.end());
    c.dims = d;
  }
  return c;
}

struct SimplicityResult {
  bool holds = true;
  std::optional<std::string> failing_component;
};

/// Necessary condition for the baby Verma module of highest weight t to be
/// simple: on each component of Phi', either the unipotent part is regular
/// there or alpha(t)^2 = eps^{-(2 rho, alpha)} for every simple alpha of it.
inline SimplicityResult simplicity_necessary(const QChar& chi, const TorusElement& t) {
  const RootSystem& rs = *chi.rs;
  SimplicityResult res;
  for (const auto& comp : chi.phi_prime.components) {
    bool regular = true;
    for (int b : comp.basis) {
      const int pos = static_cast<int>(std::find(chi.phi_prime.basis.begin(), chi.phi_prime.basis.end(), b) -
                                       chi.phi_prime.basis.begin()) + 1;
      if (!std::binary_search(chi.support.begin(), chi.support.end(), pos)) regular = false;
    }
    if (regular) continue;
    for (int a : comp.basis) {
      const UnityExp v = root_value(rs, t, a);
      if (!(2 * v == eps_pow(Rational(-rs.two_rho_dot(a)), chi.ell, chi.eps_num))) {
        res.holds = false;
        res.failing_component = comp.type.str();
        return res;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exceptional elements

struct ExceptionalElement {
  int m = 0;  // 0 = identity
  int a_m = 1;
  TorusElement s;
  Subsystem centralizer;    // {beta : a_m | b_m}
  std::optional<int> beta_m;  // root index
  bool generated_matches = true;  // centralizer = closure of {alpha_i : i != m} + beta_m
  bool values_match = true;       // centralizer = {beta : beta(s_m) = 1}
};

/// The minimal positive root whose alpha_m-coefficient equals a_m.
inline int beta_m(const RootSystem& rs, int m) {
  const int hi = rs.highest_root(0);
  const int a = rs.root(hi)[m - 1];
  std::vector<int> cands;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.root(k)[m - 1] == a) cands.push_back(k);
  for (int k : cands) {
    bool minimal = true;
    for (int j : cands)
      if (j != k && rs.leq(rs.root(j), rs.root(k))) minimal = false;
    if (minimal) return k;
  }
  throw Error(ErrorKind::InvalidInput, "no minimal root");  // unreachable
}

inline std::vector<ExceptionalElement> exceptional_elements(const RootSystem& rs) {
  if (!rs.type().irreducible()) throw Error(ErrorKind::InvalidType, "exceptional elements need an irreducible type");
  const int r = rs.rank();
  const RootVec& a = rs.root(rs.highest_root(0));
  const auto& cinv = rs.cartan_inverse();
  std::vector<ExceptionalElement> out;
  for (int m = 0; m <= r; ++m) {
    ExceptionalElement e;
    e.m = m;
    e.a_m = m == 0 ? 1 : a[m - 1];
    e.s = TorusElement(r);
    if (m > 0) {
      // alpha_j(s) = delta_jm / a_m, and alpha_j(s) = sum_i C_ij q_i
      for (int i = 0; i < r; ++i) e.s[i] = UnityExp(cinv[m - 1][i] / Rational(e.a_m));
    }
    e.centralizer = subsystem_where(rs, [&](int b) { return m == 0 || rs.root(b)[m - 1] % e.a_m == 0; });
    const Subsystem by_value = w_t(rs, e.s);
    e.values_match = by_value.roots == e.centralizer.roots;
    if (m > 0) {
      e.beta_m = beta_m(rs, m);
      std::vector<int> gens;
      for (int i = 0; i < r; ++i)
        if (i != m - 1) gens.push_back(i);
      gens.push_back(*e.beta_m);
      e.generated_matches = reflection_closure(rs, gens) == e.centralizer.roots;
    }
    out.push_back(std::move(e));
  }
  return out;
}

/// Torus literal: comma-separated rational exponents on the fundamental weights.
inline TorusElement parse_torus(const std::string& text) {
  TorusElement t;
  for (const auto& item : detail::split_list(text)) t.emplace_back(parse_rational(item));
  return t;
}

}  // namespace lieram

#endif  // LIERAM_QUANTUM_HPP
