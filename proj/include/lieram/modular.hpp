#ifndef LIERAM_MODULAR_HPP
#define LIERAM_MODULAR_HPP

// Characteristic-p combinatorics: the solution coset Lambda_chi, its
// dot-orbit blocks, component dimensions as stabilizer indices, unramified
// tests, Poincare series and the finite-representation-type classifier.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lieram/error.hpp"
#include "lieram/rootdata.hpp"
#include "lieram/scalars.hpp"
#include "lieram/weyl.hpp"

namespace lieram {

/// Character chi = chi_s + chi_n: semisimple values c_i = chi(h_i) and the
/// nilpotent part in standard-Levi form, given by `support` (1-based indices
/// into the simple basis of the centralizer subsystem Phi').
struct PChar {
  std::shared_ptr<const RootSystem> rs;
  std::uint64_t p = 0;
  FieldPtr field;
  std::vector<FFElem> c;
  std::vector<int> support;
  Subsystem phi_prime;

  bool nilpotent() const {
    return std::all_of(c.begin(), c.end(), [](const FFElem& x) { return x.is_zero(); });
  }
  bool regular() const {
    std::vector<int> s = support;
    std::sort(s.begin(), s.end());
    return static_cast<int>(s.size()) == phi_prime.rank();
  }
};

/// Smallest field containing all the given elements; returns them embedded.
inline std::vector<FFElem> to_common_field(const std::vector<FFElem>& xs) {
  std::uint32_t n = 1;
  for (const auto& x : xs) n = std::lcm(n, x.field()->e);
  const FieldPtr f = make_field(xs.at(0).p(), n);
  std::vector<FFElem> out;
  for (const auto& x : xs) out.push_back(embed(x, f));
  return out;
}

inline PChar make_pchar(std::shared_ptr<const RootSystem> rs_ptr, std::uint64_t p, std::vector<FFElem> c,
                        std::vector<int> support) {
  const RootSystem& rs = *rs_ptr;
  const auto h = hypothesis_check(rs.type(), p);
  if (!h.good_prime) throw Error(ErrorKind::HypothesisFailed, "good-prime hypothesis fails for p = " + std::to_string(p));
  if (!h.trace_form_ok)
    throw Error(ErrorKind::HypothesisFailed, "trace-form hypothesis fails for p = " + std::to_string(p) + " (p | r+1)");
  if (static_cast<int>(c.size()) != rs.rank())
    throw Error(ErrorKind::InvalidCharacter, "expected " + std::to_string(rs.rank()) + " semisimple values");
  for (const auto& x : c)
    if (x.p() != p) throw Error(ErrorKind::InvalidCharacter, "semisimple value over the wrong characteristic");
  PChar chi;
  chi.rs = std::move(rs_ptr);
  chi.p = p;
  chi.c = to_common_field(c);
  chi.field = chi.c[0].field();
  chi.phi_prime = subsystem_where(*chi.rs, [&](int b) { return pair(*chi.rs, chi.c, b).is_zero(); });
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

/// Lambda_chi: all lambda with lambda(h_i)^p - lambda(h_i) = c_i^p, a coset
/// of F_p^r, listed as base + (j_1, ..., j_r) with j_1 varying fastest.
inline std::vector<ModWeight> enumerate_lambda_chi(const PChar& chi) {
  const int r = chi.rs->rank();
  std::vector<FFElem> rhs;
  std::uint32_t n = chi.field->e;
  for (const auto& ci : chi.c) {
    rhs.push_back(ci.pow(chi.p));
    n = std::lcm(n, artin_schreier_solve(rhs.back()).field->e);
  }
  const FieldPtr f = make_field(chi.p, n);
  ModWeight base;
  for (const auto& y : rhs) base.push_back(*artin_schreier_solve_in(y, f));
  std::uint64_t count = 1;
  for (int i = 0; i < r; ++i) count *= chi.p;
  std::vector<ModWeight> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    ModWeight lam = base;
    std::uint64_t rest = idx;
    for (int i = 0; i < r; ++i) {
      lam[i] += FFElem::from_int(f, static_cast<std::int64_t>(rest % chi.p));
      rest /= chi.p;
    }
    out.push_back(std::move(lam));
  }
  return out;
}

inline ModWeight rho_shift(const ModWeight& lambda, int sign = 1) {
  ModWeight out = lambda;
  for (auto& x : out) x += FFElem::from_int(x.field(), sign);
  return out;
}

/// Phi_eta = {alpha : eta(h_alpha) = 0}.
inline Subsystem stabilizer_of(const RootSystem& rs, const ModWeight& eta) {
  return reflection_stabilizer(rs, [&](int b) { return pair(rs, eta, b).is_zero(); });
}

/// Phi_{eta + Lambda} = {alpha : eta(h_alpha) in F_p}.
inline Subsystem lattice_stabilizer_of(const RootSystem& rs, const ModWeight& eta) {
  return reflection_stabilizer(rs, [&](int b) { return pair(rs, eta, b).in_prime_field(); });
}

/// dim C_eta = [W(eta + Lambda) : W(eta)].
inline std::uint64_t dim_C(const RootSystem& rs, const ModWeight& eta) {
  return lattice_stabilizer_of(rs, eta).order / stabilizer_of(rs, eta).order;
}

enum class UnramifiedMode { SimpleRoot, Definitional };

inline bool is_unramified(const RootSystem& rs, const ModWeight& lambda, UnramifiedMode mode) {
  const ModWeight eta = rho_shift(lambda);
  if (mode == UnramifiedMode::Definitional) return dim_C(rs, eta) == 1;
  for (int i = 0; i < rs.rank(); ++i)
    if (!eta[i].is_zero() && eta[i].in_prime_field()) return false;
  return true;
}

inline bool in_lattice(const ModWeight& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](const FFElem& x) { return x.in_prime_field(); });
}

/// Coefficients of sum_{w in W^eta} t^{l(w)}, where W^eta are the minimal
/// coset representatives modulo the stabilizer W(eta) of eta (eta in Lambda).
/// When W(eta) is not standard parabolic, eta is first moved inside its
/// W-orbit to a point whose stabilizer is.
inline std::vector<std::uint64_t> poincare_series(const RootSystem& rs, const ModWeight& eta) {
  if (!in_lattice(eta)) throw Error(ErrorKind::NotNilpotentContext, "Poincare series needs a weight in Lambda");
  auto group = enumerate_group(rs);
  auto standard_nodes = [&](const ModWeight& x) -> std::optional<std::vector<int>> {
    std::vector<int> nodes;
    for (int i = 0; i < rs.rank(); ++i)
      if (x[i].is_zero()) nodes.push_back(i);
    std::vector<int> simple_roots(nodes.begin(), nodes.end());
    const auto parabolic = subsystem_classify(rs, reflection_closure(rs, simple_roots), false);
    if (parabolic.order != stabilizer_of(rs, x).order) return std::nullopt;
    return nodes;
  };
  auto nodes = standard_nodes(eta);
  if (!nodes) {
    for (const auto& w : group->elements()) {
      nodes = standard_nodes(act_modular(w, eta, false));
      if (nodes) break;
    }
  }
  if (!nodes) throw Error(ErrorKind::NoParabolicConjugate, "stabilizer has no standard parabolic conjugate");
  const auto reps = min_coset_reps(rs, *group, *nodes);
  std::vector<std::uint64_t> coeffs;
  for (const auto& rep : reps) {
    if (static_cast<std::size_t>(rep.length) >= coeffs.size()) coeffs.resize(rep.length + 1, 0);
    ++coeffs[rep.length];
  }
  return coeffs;
}

struct FiniteTypeVerdict {
  std::string verdict;  // semisimple | finite | infinite | unknown-boundary
  CartanType outer;     // W(eta + Lambda)
  CartanType inner;     // W(eta)
  std::string differing_outer;
  std::string differing_inner;
};

namespace detail {

inline bool coxeter_pair_ok(const TypeComponent& outer, const CartanType& inner) {
  const int n = outer.rank;
  auto single = [&](char letter, int rank) {
    if (rank == 0) return inner.components.empty();
    return inner.components.size() == 1 && inner.components[0] == TypeComponent{letter, rank};
  };
  switch (outer.letter) {
    case 'A': return single('A', n - 1);
    case 'B': case 'C':
      if (n == 2) return single('A', 1);
      return single('B', n - 1) || single('C', n - 1);
    case 'G': return single('A', 1);
    default: return false;
  }
}

}  // namespace detail

/// Classify the stabilizer pair (W(eta), W(eta + Lambda)).
inline FiniteTypeVerdict finite_type_verdict(const RootSystem& rs, const ModWeight& eta, bool assert_unique = false) {
  const Subsystem outer = lattice_stabilizer_of(rs, eta);
  const Subsystem inner = stabilizer_of(rs, eta);
  FiniteTypeVerdict v;
  v.outer = outer.type;
  v.inner = inner.type;
  if (outer.order == inner.order) {
    v.verdict = "semisimple";
    return v;
  }
  if (outer.rank() - inner.rank() != 1) {
    v.verdict = "infinite";
    return v;
  }
  int differing = 0;
  for (const auto& comp : outer.components) {
    const auto comp_roots = reflection_closure(rs, comp.basis);
    std::vector<int> sub;
    for (int x : inner.roots)
      if (std::binary_search(comp_roots.begin(), comp_roots.end(), x)) sub.push_back(x);
    const Subsystem part = subsystem_classify(rs, sub, false);
    if (part.order == comp.order) continue;
    ++differing;
    v.differing_outer = comp.type.str();
    v.differing_inner = part.type.str();
    if (differing > 1 || !detail::coxeter_pair_ok(comp.type, part.type)) {
      v.verdict = "infinite";
      return v;
    }
  }
  v.verdict = assert_unique ? "finite" : "unknown-boundary";
  return v;
}

struct ModBlock {
  ModWeight lambda;  // representative, highest-weight coordinates
  ModWeight eta;     // lambda + rho
  std::vector<ModWeight> members;
  std::uint64_t dim_c = 1;
  bool unramified = true;
  bool unramified_simple_root = true;
  bool steinberg = false;
  CartanType stabilizer;          // W(eta)
  CartanType lattice_stabilizer;  // W(eta + Lambda)
  std::optional<std::vector<std::uint64_t>> poincare;
  FiniteTypeVerdict finite_type;
};

/// eta vanishes on the centralizer subsystem: the Steinberg-type point of
/// Lambda_chi (lambda = -rho when chi is nilpotent).
inline bool is_steinberg_point(const PChar& chi, const ModWeight& lambda) {
  const ModWeight eta = rho_shift(lambda);
  for (int b : chi.phi_prime.roots)
    if (!pair(*chi.rs, eta, b).is_zero()) return false;
  return true;
}

/// Blocks of U_chi: classes of Lambda_chi under lambda ~ w.lambda.
inline std::vector<ModBlock> mod_blocks(const PChar& chi, bool assert_unique = false) {
  const RootSystem& rs = *chi.rs;
  const auto points = enumerate_lambda_chi(chi);
  std::vector<WeylElement> gens;
  for (int j = 1; j <= rs.rank(); ++j) gens.push_back(element_from_word(rs, {j}));
  const auto orbits =
      orbit_partition(points, rs.rank(), [&](int j, const ModWeight& x) { return act_modular(gens[j], x, true); });
  const bool nil = chi.nilpotent();
  std::vector<ModBlock> out;
  for (const auto& orb : orbits) {
    ModBlock b;
    b.lambda = orb.representative;
    b.eta = rho_shift(b.lambda);
    b.members = orb.members;
    const Subsystem inner = stabilizer_of(rs, b.eta);
    const Subsystem outer = lattice_stabilizer_of(rs, b.eta);
    b.dim_c = outer.order / inner.order;
    b.stabilizer = inner.type;
    b.lattice_stabilizer = outer.type;
    b.unramified = b.dim_c == 1;
    b.unramified_simple_root = is_unramified(rs, b.lambda, UnramifiedMode::SimpleRoot);
    b.steinberg = std::any_of(orb.members.begin(), orb.members.end(),
                              [&](const ModWeight& m) { return is_steinberg_point(chi, m); });
    if (nil) b.poincare = poincare_series(rs, b.eta);
    b.finite_type = finite_type_verdict(rs, b.eta, assert_unique);
    out.push_back(std::move(b));
  }
  return out;
}

struct UnramifiedCount {
  std::uint64_t predicted = 0;  // p^{r - rank Phi'}
  std::uint64_t enumerated = 0;
  int s = 0;
  bool agree() const { return predicted == enumerated; }
};

inline UnramifiedCount unramified_count(const PChar& chi, const std::vector<ModBlock>& blocks) {
  UnramifiedCount u;
  u.s = chi.rs->rank() - chi.phi_prime.rank();
  u.predicted = 1;
  for (int i = 0; i < u.s; ++i) u.predicted *= chi.p;
  for (const auto& b : blocks) u.enumerated += b.unramified ? 1 : 0;
  return u;
}

inline UnramifiedCount unramified_count(const PChar& chi) { return unramified_count(chi, mod_blocks(chi)); }

struct ModStructure {
  bool regular = false;
  bool fully_azumaya = false;
  std::optional<std::uint64_t> matrix_size;         // p^N
  std::optional<std::vector<std::uint64_t>> dims;   // dim C over blocks, sorted
};

inline ModStructure regularity_and_structure(const PChar& chi, const std::vector<ModBlock>& blocks) {
  ModStructure s;
  s.regular = chi.regular();
  s.fully_azumaya = s.regular;
  if (s.regular) {
    std::uint64_t m = 1;
    for (int i = 0; i < chi.rs->num_positive(); ++i) m *= chi.p;
    s.matrix_size = m;
    std::vector<std::uint64_t> d;
    for (const auto& b : blocks) d.push_back(b.dim_c);
    std::sort(d.begin(), d.end());
    s.dims = d;
  }
  return s;
}

inline ModStructure regularity_and_structure(const PChar& chi) { return regularity_and_structure(chi, mod_blocks(chi)); }

// ---------------------------------------------------------------------------
// Input grammar

namespace detail {

inline std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto n = std::stoll(text, &used);
    if (used == text.size()) return n;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorKind::InvalidInput, "bad " + what + " '" + text + "'");
}

}  // namespace detail

/// Field-element literal: an integer (in F_p), `g^k` with g the primitive
/// element of F_{p^ext}, or `AS(c)` for a solution of x^p - x = c.
inline FFElem parse_field_literal(const std::string& text, std::uint64_t p, std::uint32_t ext = 1) {
  if (text.empty()) throw Error(ErrorKind::InvalidInput, "empty field literal");
  if (text.rfind("AS(", 0) == 0 && text.back() == ')')
    return artin_schreier_solve(parse_field_literal(text.substr(3, text.size() - 4), p, ext)).x;
  if (text.rfind("g^", 0) == 0) {
    const std::int64_t k = detail::parse_int(text.substr(2), "exponent");
    const FFElem g = primitive_element(make_field(p, ext));
    return k >= 0 ? g.pow(static_cast<std::uint64_t>(k)) : g.pow(static_cast<std::uint64_t>(-k)).inverse();
  }
  if (text == "g") return primitive_element(make_field(p, ext));
  return FFElem::from_int(make_field(p, 1), detail::parse_int(text, "field literal"));
}

/// Comma-separated field literals, embedded into a common field.
inline std::vector<FFElem> parse_field_vector(const std::string& text, std::uint64_t p, std::uint32_t ext = 1) {
  std::vector<FFElem> out;
  for (const auto& item : detail::split_list(text)) out.push_back(parse_field_literal(item, p, ext));
  if (out.empty()) return out;
  return to_common_field(out);
}

/// Comma-separated 1-based indices; empty text gives the empty list.
inline std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : detail::split_list(text)) out.push_back(static_cast<int>(detail::parse_int(item, "index")));
  return out;
}

}  // namespace lieram

#endif  // LIERAM_MODULAR_HPP
