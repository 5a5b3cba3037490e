#ifndef LIERAM_SELFTEST_HPP
#define LIERAM_SELFTEST_HPP

// The fixed test matrix of characters and the invariant suites run over it.
// Shared by `lieram selftest` and the acceptance binary.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieram/appendix.hpp"
#include "lieram/modular.hpp"
#include "lieram/quantum.hpp"
#include "lieram/rootdata.hpp"
#include "lieram/scalars.hpp"
#include "lieram/weyl.hpp"

namespace lieram {

struct ModCell {
  std::string type;
  std::uint64_t p = 0;
  std::string label;  // zero | regular-nilpotent | regular-semisimple | mixed-levi | nonsplit-semisimple
  PChar chi;
  std::string name() const { return type + "/p=" + std::to_string(p) + "/" + label; }
};

struct QCell {
  std::string type;
  std::int64_t ell = 0;
  std::string label;
  QChar chi;
  std::string name() const { return type + "/ell=" + std::to_string(ell) + "/" + label; }
};

namespace detail {

inline std::shared_ptr<const RootSystem> shared_system(const std::string& type) {
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  auto& slot = cache[type];
  if (!slot) slot = make_root_system(type);
  return slot;
}

/// First c (index order over F_{p^e}^r, with c_1 = 0 when `first_zero`) whose
/// zero set among the roots is exactly the wanted one.
inline std::optional<std::vector<FFElem>> search_semisimple(const RootSystem& rs, const FieldPtr& f, bool first_zero) {
  const int r = rs.rank();
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= f->size;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FFElem> c;
    std::uint64_t rest = idx;
    for (int i = 0; i < r; ++i) {
      c.push_back(FFElem::from_index(f, rest % f->size));
      rest /= f->size;
    }
    bool ok = true;
    for (int b = 0; b < rs.num_positive() && ok; ++b) {
      const bool zero = pair(rs, c, b).is_zero();
      const bool want_zero = first_zero && b == 0;
      if (zero != want_zero) ok = false;
    }
    if (ok) return c;
  }
  return std::nullopt;
}

/// Torus point with prescribed simple-root values x_j: q = C^{-T} x.
inline TorusElement torus_from_root_values(const RootSystem& rs, const std::vector<Rational>& x) {
  const auto& ci = rs.cartan_inverse();
  TorusElement t(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    Rational q(0);
    for (int j = 0; j < rs.rank(); ++j) q += ci[j][i] * x[j];
    t[i] = UnityExp(q);
  }
  return t;
}

/// Root values k_j / den with 2 beta(chi_s) != 0 off the wanted zero set.
inline std::optional<TorusElement> search_torus(const RootSystem& rs, bool first_zero) {
  const int r = rs.rank();
  for (std::int64_t den : {11, 13}) {
    std::uint64_t total = 1;
    for (int i = 0; i < r; ++i) total *= static_cast<std::uint64_t>(den);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Rational> x;
      std::uint64_t rest = idx;
      for (int i = 0; i < r; ++i) {
        x.emplace_back(static_cast<std::int64_t>(rest % den), den);
        rest /= den;
      }
      if (first_zero && !(x[0] == Rational(0))) continue;
      const TorusElement t = torus_from_root_values(rs, x);
      bool ok = true;
      for (int b = 0; b < rs.num_positive() && ok; ++b) {
        const bool trivial = (2 * root_value(rs, t, b)).is_identity();
        if (trivial != (first_zero && b == 0)) ok = false;
      }
      if (ok) return t;
    }
  }
  return std::nullopt;
}

inline std::vector<int> all_nodes(int n) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back(i);
  return s;
}

}  // namespace detail

inline const std::vector<std::string>& matrix_types() {
  static const std::vector<std::string> t{"A1", "A2", "A3", "B2", "G2"};
  return t;
}

/// Modular cells: types x p in {3,5,7} (hypothesis failures skipped) x four characters.
inline const std::vector<ModCell>& modular_test_matrix() {
  static const std::vector<ModCell> cells = [] {
    std::vector<ModCell> out;
    for (const auto& type : matrix_types()) {
      const auto rs = detail::shared_system(type);
      const int r = rs->rank();
      for (std::uint64_t p : {3, 5, 7}) {
        const auto h = hypothesis_check(rs->type(), p);
        if (!h.good_prime || !h.trace_form_ok) continue;
        const FieldPtr fp = make_field(p, 1);
        const std::vector<FFElem> zero(r, FFElem::zero(fp));
        out.push_back({type, p, "zero", make_pchar(rs, p, zero, {})});
        out.push_back({type, p, "regular-nilpotent", make_pchar(rs, p, zero, detail::all_nodes(r))});
        auto reg = detail::search_semisimple(*rs, fp, false);
        if (!reg) reg = detail::search_semisimple(*rs, make_field(p, 2), false);
        out.push_back({type, p, "regular-semisimple", make_pchar(rs, p, *reg, {})});
        if (r == 1) {
          // c = g^{(p+1)/2} in F_{p^2}: not in F_p, trace zero, so Lambda_chi stays in F_{p^2}
          const FieldPtr f2 = make_field(p, 2);
          const FFElem c = primitive_element(f2).pow((p + 1) / 2);
          out.push_back({type, p, "nonsplit-semisimple", make_pchar(rs, p, {c}, {})});
        } else {
          auto mixed = detail::search_semisimple(*rs, fp, true);
          if (!mixed) mixed = detail::search_semisimple(*rs, make_field(p, 2), true);
          out.push_back({type, p, "mixed-levi", make_pchar(rs, p, *mixed, {1})});
        }
      }
    }
    return out;
  }();
  return cells;
}

/// Quantum cells: types x ell in {3,5,7} (ell = 3 skipped for G2) x four characters.
inline const std::vector<QCell>& quantum_test_matrix() {
  static const std::vector<QCell> cells = [] {
    std::vector<QCell> out;
    for (const auto& type : matrix_types()) {
      const auto rs = detail::shared_system(type);
      const int r = rs->rank();
      for (std::int64_t ell : {3, 5, 7}) {
        if (type == "G2" && ell % 3 == 0) continue;
        const TorusElement one = trivial_torus(r);
        out.push_back({type, ell, "zero", make_qchar(rs, ell, one, {})});
        out.push_back({type, ell, "regular-nilpotent", make_qchar(rs, ell, one, detail::all_nodes(r))});
        out.push_back({type, ell, "regular-semisimple", make_qchar(rs, ell, *detail::search_torus(*rs, false), {})});
        if (r == 1) {
          // the central element -1 with a nonzero unipotent part
          out.push_back({type, ell, "central-unipotent", make_qchar(rs, ell, {UnityExp(Rational(1, 2))}, {1})});
        } else {
          out.push_back({type, ell, "mixed-levi", make_qchar(rs, ell, *detail::search_torus(*rs, true), {1})});
        }
      }
    }
    return out;
  }();
  return cells;
}

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

namespace detail {

struct Recorder {
  SuiteResult& res;
  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (!ok && res.failures.size() < 50) res.failures.push_back(what);
  }
};

inline std::string weight_str(const ModWeight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
  return s + ")";
}

inline std::string torus_str(const TorusElement& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].str();
  return s + ")";
}

inline const std::vector<ModBlock>& blocks_of(const ModCell& cell) {
  static std::map<std::string, std::vector<ModBlock>> cache;
  auto it = cache.find(cell.name());
  if (it == cache.end()) it = cache.emplace(cell.name(), mod_blocks(cell.chi)).first;
  return it->second;
}

inline const std::vector<QBlock>& blocks_of(const QCell& cell) {
  static std::map<std::string, std::vector<QBlock>> cache;
  auto it = cache.find(cell.name());
  if (it == cache.end()) it = cache.emplace(cell.name(), q_blocks(cell.chi)).first;
  return it->second;
}

template <class F>
SuiteResult timed(const std::string& name, F body) {
  SuiteResult res;
  res.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Recorder rec{res};
    body(rec, res);
  } catch (const std::exception& e) {
    res.failures.push_back(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

/// Type A1, ell = 5, chi_s = 1, regular unipotent: 3 blocks of dims 1, 2, 2,
/// and Mat_5 over local algebras of dimensions 1, 2, 2.
inline SuiteResult suite_sl2_example() {
  return detail::timed("sl2-example", [](detail::Recorder& rec, SuiteResult&) {
    const auto rs = detail::shared_system("A1");
    const QChar chi = make_qchar(rs, 5, trivial_torus(1), {1});
    const auto blocks = q_blocks(chi);
    rec.check(blocks.size() == 3, "expected 3 blocks, got " + std::to_string(blocks.size()));
    std::multiset<std::uint64_t> dims;
    for (const auto& b : blocks) dims.insert(b.dim_d);
    rec.check(dims == std::multiset<std::uint64_t>{1, 2, 2}, "dims are not {1,2,2}");
    const auto counts = q_regularity_and_counts(chi, blocks);
    rec.check(counts.regular && counts.fully_azumaya, "character should be regular");
    rec.check(counts.matrix_size == std::optional<std::uint64_t>(5), "matrix size should be 5");
    rec.check(counts.dims == std::optional<std::vector<std::uint64_t>>(std::vector<std::uint64_t>{1, 2, 2}),
              "descriptor dims should be 1,2,2");
    rec.check(counts.unramified_predicted == std::optional<std::uint64_t>(1) && counts.unramified_enumerated == 1,
              "exactly one unramified block expected");
  });
}

inline SuiteResult suite_appendix() {
  return detail::timed("appendix", [](detail::Recorder& rec, SuiteResult& res) {
    for (const auto& type : appendix_types()) {
      for (const auto& row : appendix_rows(type)) {
        const auto chk = verify_appendix_row(type, row.m);
        std::string msg = type + " m=" + std::to_string(row.m);
        for (const auto& d : chk.details) msg += "; " + d;
        rec.check(chk.ok(), msg);
        if (chk.ok() && (chk.convention != "bourbaki" || !chk.listed_alpha())) res.notes.push_back(msg);
      }
    }
  });
}

inline SuiteResult suite_rank_identity() {
  return detail::timed("rank-identity", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : modular_test_matrix()) {
      std::uint64_t sum = 0, total = 1;
      for (const auto& b : detail::blocks_of(cell)) {
        sum += b.dim_c;
        rec.check(b.members.size() == b.dim_c, cell.name() + ": block size differs from dim C at " +
                                                   detail::weight_str(b.lambda));
      }
      for (int i = 0; i < cell.chi.rs->rank(); ++i) total *= cell.p;
      rec.check(sum == total, cell.name() + ": sum dim C = " + std::to_string(sum));
    }
    for (const auto& cell : quantum_test_matrix()) {
      std::uint64_t sum = 0, total = 1;
      for (const auto& b : detail::blocks_of(cell)) {
        sum += b.dim_d;
        rec.check(b.members.size() == b.dim_d, cell.name() + ": orbit size differs from dim D at " +
                                                   detail::torus_str(b.t));
      }
      for (int i = 0; i < cell.chi.rs->rank(); ++i) total *= static_cast<std::uint64_t>(cell.ell);
      rec.check(sum == total, cell.name() + ": sum dim D = " + std::to_string(sum));
    }
  });
}

inline SuiteResult suite_burnside() {
  return detail::timed("burnside", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : modular_test_matrix()) {
      if (!cell.chi.nilpotent()) continue;
      const auto group = enumerate_group(*cell.chi.rs);
      const auto points = enumerate_lambda_chi(cell.chi);
      const auto n = burnside_count(*group, points, [](const WeylElement& w, const ModWeight& x) {
        return act_modular(w, x, true);
      });
      rec.check(n == detail::blocks_of(cell).size(), cell.name() + ": Burnside " + std::to_string(n) + " vs " +
                                                        std::to_string(detail::blocks_of(cell).size()) + " blocks");
    }
    for (const auto& cell : quantum_test_matrix()) {
      if (cell.label != "zero" && cell.label != "regular-nilpotent") continue;
      const RootSystem& rs = *cell.chi.rs;
      const auto group = enumerate_group(rs);
      const auto points = ell_fiber(cell.chi.chi_s, cell.ell);
      const auto n = burnside_count(*group, points, [&](const WeylElement& w, const TorusElement& x) {
        return act_torus(rs, w, x, false);
      });
      rec.check(n == detail::blocks_of(cell).size(), cell.name() + ": Burnside " + std::to_string(n) + " vs " +
                                                        std::to_string(detail::blocks_of(cell).size()) + " blocks");
    }
  });
}

inline SuiteResult suite_unramified_count() {
  return detail::timed("unramified-count", [](detail::Recorder& rec, SuiteResult& res) {
    for (const auto& cell : modular_test_matrix()) {
      const auto u = unramified_count(cell.chi, detail::blocks_of(cell));
      rec.check(u.agree(), cell.name() + ": predicted " + std::to_string(u.predicted) + ", enumerated " +
                               std::to_string(u.enumerated));
    }
    for (const auto& cell : quantum_test_matrix()) {
      const auto c = q_regularity_and_counts(cell.chi, detail::blocks_of(cell));
      if (!c.coprimality_ok) {
        res.notes.push_back(cell.name() + ": index of connection " + std::to_string(c.index_of_connection) +
                            " not prime to ell, enumerated " + std::to_string(c.unramified_enumerated));
        continue;
      }
      rec.check(c.unramified_predicted == c.unramified_enumerated,
                cell.name() + ": predicted " + std::to_string(*c.unramified_predicted) + ", enumerated " +
                    std::to_string(c.unramified_enumerated));
    }
  });
}

inline SuiteResult suite_criteria() {
  return detail::timed("criteria", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : modular_test_matrix()) {
      const RootSystem& rs = *cell.chi.rs;
      for (const auto& lam : enumerate_lambda_chi(cell.chi)) {
        const bool a = is_unramified(rs, lam, UnramifiedMode::SimpleRoot);
        const bool b = is_unramified(rs, lam, UnramifiedMode::Definitional);
        rec.check(a == b, cell.name() + ": simple-root vs definitional differ at " + detail::weight_str(lam));
      }
      for (const auto& b : detail::blocks_of(cell))
        rec.check(b.unramified == (b.dim_c == 1), cell.name() + ": unramified flag vs dim C");
    }
    for (const auto& cell : quantum_test_matrix()) {
      const RootSystem& rs = *cell.chi.rs;
      for (const auto& b : detail::blocks_of(cell)) {
        rec.check(b.unramified_component == (b.dim_d == 1), cell.name() + ": all-roots criterion vs dim D at " +
                                                               detail::torus_str(b.t));
        for (const auto& t : b.members) {
          const TorusElement u = component_coordinate(t, cell.chi.chi_s, cell.ell);
          const TorusElement hw = hc_shift(rs, u, cell.ell, false, cell.chi.eps_num);
          const bool all_roots = q_unramified_component(rs, u, cell.ell);
          const auto tilde = q_unramified_highest_weight(rs, hw, cell.ell, cell.chi.eps_num);
          rec.check(tilde.conjugate_found, cell.name() + ": no conjugate in extended-simple position for " +
                                               detail::torus_str(hw));
          rec.check(tilde.unramified == all_roots, cell.name() + ": extended-simple vs all-roots differ at " +
                                                       detail::torus_str(hw));
          rec.check(all_roots == (b.dim_d == 1), cell.name() + ": criterion vs dim D at " + detail::torus_str(t));
        }
      }
    }
  });
}

inline SuiteResult suite_poincare() {
  return detail::timed("poincare", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : modular_test_matrix()) {
      if (!cell.chi.nilpotent()) continue;
      const RootSystem& rs = *cell.chi.rs;
      const std::uint64_t order = weyl_order(rs.type());
      for (const auto& b : detail::blocks_of(cell)) {
        const auto& coeffs = *b.poincare;
        std::uint64_t total = 0;
        for (auto c : coeffs) total += c;
        const std::uint64_t index = order / stabilizer_of(rs, b.eta).order;
        const std::string at = cell.name() + " at " + detail::weight_str(b.lambda);
        rec.check(total == index, at + ": P(1) != [W : W(lambda)]");
        rec.check(total == b.dim_c, at + ": P(1) != dim C");
        rec.check(coeffs.back() == 1, at + ": top coefficient != 1");
        if (b.finite_type.verdict == "finite" || b.finite_type.verdict == "unknown-boundary")
          for (auto c : coeffs) rec.check(c <= 1, at + ": coefficient > 1 for a finite-type candidate");
      }
    }
  });
}

inline SuiteResult suite_steinberg() {
  return detail::timed("steinberg", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : modular_test_matrix()) {
      int found = 0;
      for (const auto& b : detail::blocks_of(cell)) {
        if (!b.steinberg) continue;
        ++found;
        rec.check(b.unramified && b.dim_c == 1, cell.name() + ": Steinberg block ramified");
      }
      rec.check(found >= 1, cell.name() + ": no Steinberg block");
      if (cell.chi.nilpotent()) {
        rec.check(found == 1, cell.name() + ": expected one Steinberg block, found " + std::to_string(found));
        ModWeight minus_rho(cell.chi.rs->rank(), FFElem::from_int(cell.chi.field, -1));
        rec.check(is_steinberg_point(cell.chi, minus_rho), cell.name() + ": -rho is not the Steinberg point");
      }
    }
    for (const auto& cell : quantum_test_matrix()) {
      int found = 0;
      for (const auto& b : detail::blocks_of(cell)) {
        if (!b.steinberg) continue;
        ++found;
        rec.check(b.unramified && b.dim_d == 1, cell.name() + ": Steinberg block ramified");
      }
      rec.check(found >= 1, cell.name() + ": no Steinberg block");
    }
  });
}

inline SuiteResult suite_stabilizer() {
  return detail::timed("stabilizer", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : quantum_test_matrix()) {
      const RootSystem& rs = *cell.chi.rs;
      if (weyl_order(rs.type()) > 10000) continue;
      const auto group = enumerate_group(rs);
      for (const auto& t : ell_fiber(cell.chi.chi_s, cell.ell)) {
        const auto brute = stabilizer_bruteforce(*group, std::vector<TorusElement>{t},
                                                 [&](const WeylElement& w, const TorusElement& x) {
                                                   return act_torus(rs, w, x, false);
                                                 });
        const Subsystem phi_t = w_t(rs, t);
        std::vector<int> pos;
        for (int b : phi_t.roots)
          if (rs.is_positive(b)) pos.push_back(b);
        const auto generated = generated_subgroup(rs, *group, pos);
        rec.check(brute == generated, cell.name() + ": stabilizer of " + detail::torus_str(t) +
                                          " is not generated by reflections");
        rec.check(generated.size() == phi_t.order, cell.name() + ": classified order mismatch");
      }
    }
  });
}

/// w.lambda + rho = w(lambda + rho) for all w and lambda in each modular cell.
inline SuiteResult suite_dot_compat() {
  return detail::timed("dot-compat", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : modular_test_matrix()) {
      if (cell.label == "regular-nilpotent") continue;
      const auto group = enumerate_group(*cell.chi.rs);
      for (const auto& lam : enumerate_lambda_chi(cell.chi))
        for (const auto& w : group->elements()) {
          const ModWeight lhs = rho_shift(act_modular(w, lam, true));
          const ModWeight rhs = act_modular(w, rho_shift(lam), false);
          rec.check(encode(lhs) == encode(rhs), cell.name() + ": dot/ordinary mismatch at " + detail::weight_str(lam));
        }
    }
    // torus: the dot action is the ordinary one conjugated by the coordinate shift
    for (const auto& cell : quantum_test_matrix()) {
      if (cell.label != "zero") continue;
      const RootSystem& rs = *cell.chi.rs;
      const auto group = enumerate_group(rs);
      for (const auto& t : ell_fiber(cell.chi.chi_s, cell.ell))
        for (const auto& w : group->elements()) {
          const auto lhs = act_torus(rs, w, t, true, cell.ell, cell.chi.eps_num);
          const auto rhs = hc_shift(rs, act_torus(rs, w, hc_shift(rs, t, cell.ell, true), false), cell.ell, false);
          rec.check(lhs == rhs, cell.name() + ": torus dot action is not the shifted ordinary action");
        }
    }
  });
}

/// W(eta + Lambda) = W(Phi') on all of Lambda_chi + rho.
inline SuiteResult suite_levi() {
  return detail::timed("levi", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : modular_test_matrix()) {
      for (const auto& lam : enumerate_lambda_chi(cell.chi)) {
        const auto outer = lattice_stabilizer_of(*cell.chi.rs, rho_shift(lam));
        rec.check(outer.roots == cell.chi.phi_prime.roots, cell.name() + ": W(eta + Lambda) differs from W(Phi') at " +
                                                               detail::weight_str(lam));
      }
    }
  });
}

/// Members of a quantum block are dot-conjugate in highest-weight coordinates.
inline SuiteResult suite_dot_linkage() {
  return detail::timed("dot-linkage", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& cell : quantum_test_matrix()) {
      const RootSystem& rs = *cell.chi.rs;
      const auto group = enumerate_group(rs);
      for (const auto& b : detail::blocks_of(cell)) {
        const TorusElement base = hc_shift(rs, b.u, cell.ell, false, cell.chi.eps_num);
        for (const auto& m : b.members) {
          const TorusElement target =
              hc_shift(rs, component_coordinate(m, cell.chi.chi_s, cell.ell), cell.ell, false, cell.chi.eps_num);
          bool linked = false;
          for (const auto& w : group->elements())
            if (act_torus(rs, w, base, true, cell.ell, cell.chi.eps_num) == target) {
              linked = true;
              break;
            }
          rec.check(linked, cell.name() + ": " + detail::torus_str(target) + " not dot-linked to " +
                                detail::torus_str(base));
        }
      }
    }
  });
}

/// Centralizers of exceptional elements, three ways, for every irreducible type up to rank 8.
inline SuiteResult suite_exceptional() {
  return detail::timed("exceptional", [](detail::Recorder& rec, SuiteResult&) {
    for (const auto& type : appendix_types()) {
      const RootSystem rs(parse_cartan_type(type));
      for (const auto& e : exceptional_elements(rs)) {
        const std::string at = type + " m=" + std::to_string(e.m);
        rec.check(e.values_match, at + ": coefficient filter differs from root values");
        rec.check(e.generated_matches, at + ": coefficient filter differs from generated subsystem");
      }
    }
  });
}

struct SuiteEntry {
  std::string name;
  std::function<SuiteResult()> run;
};

inline const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> s{
      {"sl2-example", suite_sl2_example},   {"appendix", suite_appendix},
      {"rank-identity", suite_rank_identity}, {"burnside", suite_burnside},
      {"unramified-count", suite_unramified_count}, {"criteria", suite_criteria},
      {"poincare", suite_poincare},         {"steinberg", suite_steinberg},
      {"stabilizer", suite_stabilizer},     {"dot-compat", suite_dot_compat},
      {"levi", suite_levi},                 {"dot-linkage", suite_dot_linkage},
      {"exceptional", suite_exceptional},
  };
  return s;
}

}  // namespace lieram

#endif  // LIERAM_SELFTEST_HPP
