#ifndef LIERAM_WEYL_HPP
#define LIERAM_WEYL_HPP

// Weyl group elements as integer matrices, enumeration by breadth-first
// closure, ordinary and dot actions on modular weights and torus points, and
// generic orbit/stabilizer machinery over an explicit point set.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lieram/config.hpp"
#include "lieram/error.hpp"
#include "lieram/rootdata.hpp"
#include "lieram/scalars.hpp"

namespace lieram {

using ModWeight = std::vector<FFElem>;       // values lambda(h_i)
using TorusElement = std::vector<UnityExp>;  // exponents of t(K_{varpi_i})
using WeylWord = std::vector<int>;           // 1-based simple reflection indices

namespace detail {

inline IntMatrix identity_matrix(int r) {
  IntMatrix m(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// s_j on simple-root coordinates: (s_j b)_i = b_i - delta_ij sum_k C_jk b_k.
inline IntMatrix simple_root_matrix(const RootSystem& rs, int j) {
  IntMatrix m = identity_matrix(rs.rank());
  for (int k = 0; k < rs.rank(); ++k) m[j][k] -= rs.cartan(j, k);
  return m;
}

/// s_j on weight coordinates lambda(h_i): (s_j lambda)_i = lambda_i - lambda_j C_ij.
inline IntMatrix simple_weight_matrix(const RootSystem& rs, int j) {
  IntMatrix m = identity_matrix(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) m[i][j] -= rs.cartan(i, j);
  return m;
}

inline std::vector<int> key_of(const IntMatrix& m) {
  std::vector<int> k;
  for (const auto& row : m) k.insert(k.end(), row.begin(), row.end());
  return k;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

/// A Weyl group element: a word for it plus its matrices on root coordinates,
/// on weight coordinates, and the weight-coordinate matrix of its inverse.
struct WeylElement {
  WeylWord word;
  IntMatrix on_roots;
  IntMatrix on_weights;
  IntMatrix inverse_on_weights;
  int length = 0;

  std::vector<int> key() const { return detail::key_of(on_roots); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.on_roots == b.on_roots; }
};

inline RootVec act_on_roots(const WeylElement& w, const RootVec& v) {
  RootVec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i] += w.on_roots[i][k] * v[k];
  return out;
}

inline int apply_root(const RootSystem& rs, const WeylElement& w, int root) { return *rs.index_of(act_on_roots(w, rs.root(root))); }

inline WeylElement identity_element(const RootSystem& rs) {
  const auto id = detail::identity_matrix(rs.rank());
  return {{}, id, id, id, 0};
}

/// Element for a word s_{i1} ... s_{it} (rightmost acts first). The length
/// is computed from the matrix, not the word.
inline WeylElement element_from_word(const RootSystem& rs, const WeylWord& word) {
  WeylElement w = identity_element(rs);
  w.word = word;
  for (int i : word) {
    if (i < 1 || i > rs.rank()) throw Error(ErrorKind::InvalidInput, "reflection index out of range");
    w.on_roots = detail::matmul(w.on_roots, detail::simple_root_matrix(rs, i - 1));
    w.on_weights = detail::matmul(w.on_weights, detail::simple_weight_matrix(rs, i - 1));
    w.inverse_on_weights = detail::matmul(detail::simple_weight_matrix(rs, i - 1), w.inverse_on_weights);
  }
  int len = 0;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (!rs.is_positive(apply_root(rs, w, k))) ++len;
  w.length = len;
  return w;
}

/// Reflection s_beta as an element (word left empty).
inline WeylElement reflection_element(const RootSystem& rs, int beta) {
  const int r = rs.rank();
  WeylElement w = identity_element(rs);
  for (int j = 0; j < r; ++j) {
    const RootVec img = rs.reflect(beta, rs.root(j));
    for (int i = 0; i < r; ++i) w.on_roots[i][j] = img[i];
  }
  // on weights: (s_beta lambda)_i = lambda_i - lambda(h_beta) alpha_beta(h_i)
  const auto& cv = rs.coroot(beta);
  const auto& b = rs.root(beta);
  for (int i = 0; i < r; ++i) {
    int beta_hi = 0;
    for (int k = 0; k < r; ++k) beta_hi += rs.cartan(i, k) * b[k];
    for (int k = 0; k < r; ++k) w.on_weights[i][k] -= beta_hi * cv[k];
  }
  w.inverse_on_weights = w.on_weights;
  int len = 0;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (!rs.is_positive(apply_root(rs, w, k))) ++len;
  w.length = len;
  return w;
}

struct InversionReport {
  std::vector<RootVec> gammas;  // gamma_k = s_{i1}...s_{i(k-1)}(alpha_{ik})
  bool reduced = true;
};

inline InversionReport inversion_set(const RootSystem& rs, const WeylWord& word) {
  InversionReport rep;
  WeylElement prefix = identity_element(rs);
  std::set<RootVec> seen;
  for (int i : word) {
    if (i < 1 || i > rs.rank()) throw Error(ErrorKind::InvalidInput, "reflection index out of range");
    const RootVec g = act_on_roots(prefix, rs.root(i - 1));
    const bool positive = rs.is_positive(*rs.index_of(g));
    if (!positive || !seen.insert(g).second) rep.reduced = false;
    rep.gammas.push_back(g);
    prefix.on_roots = detail::matmul(prefix.on_roots, detail::simple_root_matrix(rs, i - 1));
  }
  return rep;
}

/// The full group, enumerated breadth-first from the identity; words are
/// therefore reduced and ordered by length.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs) {
    const std::uint64_t order = weyl_order(rs.type());
    const std::uint64_t bound = config().group_bound.load();
    if (order > bound) {
      throw Error(ErrorKind::BoundExceeded,
                  "|W(" + rs.type().str() + ")| = " + std::to_string(order) + " exceeds bound " + std::to_string(bound));
    }
    std::vector<IntMatrix> sr, sw;
    for (int j = 0; j < rs.rank(); ++j) {
      sr.push_back(detail::simple_root_matrix(rs, j));
      sw.push_back(detail::simple_weight_matrix(rs, j));
    }
    elems_.push_back(identity_element(rs));
    index_[elems_[0].key()] = 0;
    for (std::size_t q = 0; q < elems_.size(); ++q) {
      for (int j = 0; j < rs.rank(); ++j) {
        WeylElement n;
        n.on_roots = detail::matmul(sr[j], elems_[q].on_roots);
        auto key = detail::key_of(n.on_roots);
        if (index_.count(key)) continue;
        n.word = {j + 1};
        n.word.insert(n.word.end(), elems_[q].word.begin(), elems_[q].word.end());
        n.on_weights = detail::matmul(sw[j], elems_[q].on_weights);
        n.inverse_on_weights = detail::matmul(elems_[q].inverse_on_weights, sw[j]);
        n.length = elems_[q].length + 1;
        index_[key] = static_cast<int>(elems_.size());
        elems_.push_back(std::move(n));
      }
    }
  }

  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  int index_of(const WeylElement& w) const {
    auto it = index_.find(w.key());
    return it == index_.end() ? -1 : it->second;
  }
  int multiply(int a, int b) const {
    return index_.at(detail::key_of(detail::matmul(elems_[a].on_roots, elems_[b].on_roots)));
  }

 private:
  std::vector<WeylElement> elems_;
  std::unordered_map<std::vector<int>, int, detail::VecHash> index_;
};

/// Cached enumeration keyed by Cartan type.
inline std::shared_ptr<const WeylGroup> enumerate_group(const RootSystem& rs) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const WeylGroup>> cache;
  const std::string key = rs.type().str();
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto g = std::make_shared<const WeylGroup>(rs);
  std::lock_guard lock(mutex);
  return cache.emplace(key, g).first->second;
}

// ---------------------------------------------------------------------------
// Actions

inline ModWeight apply_weight_matrix(const IntMatrix& m, const ModWeight& lambda) {
  const std::size_t r = lambda.size();
  ModWeight out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    FFElem acc = FFElem::zero(lambda[0].field());
    for (std::size_t k = 0; k < r; ++k)
      if (m[i][k]) acc += m[i][k] * lambda[k];
    out.push_back(std::move(acc));
  }
  return out;
}

/// w(lambda), or w.lambda = w(lambda + rho) - rho when `dot`.
inline ModWeight act_modular(const WeylElement& w, const ModWeight& lambda, bool dot) {
  if (!dot) return apply_weight_matrix(w.on_weights, lambda);
  const FieldPtr& f = lambda[0].field();
  // the fault hook shifts by -rho instead of +rho
  const FFElem shift = config().inject_dot_sign_fault.load() ? FFElem::from_int(f, -1) : FFElem::one(f);
  ModWeight eta = lambda;
  for (auto& x : eta) x += shift;
  ModWeight out = apply_weight_matrix(w.on_weights, eta);
  for (auto& x : out) x -= shift;
  return out;
}

/// (w t)(K_lambda) = t(K_{w^{-1} lambda}); with `dot`, additionally multiplied
/// by eps^{-(rho, lambda - w^{-1} lambda)} where eps = exp(2 pi i eps_num / ell).
inline TorusElement act_torus(const RootSystem& rs, const WeylElement& w, const TorusElement& t, bool dot,
                              std::int64_t ell = 0, std::int64_t eps_num = 1) {
  const int r = rs.rank();
  TorusElement out(r);
  for (int i = 0; i < r; ++i) {
    Rational acc(0);
    for (int k = 0; k < r; ++k)
      if (w.inverse_on_weights[k][i]) acc += Rational(w.inverse_on_weights[k][i]) * t[k].exponent();
    out[i] = UnityExp(acc);
  }
  if (dot) {
    if (ell <= 0) throw Error(ErrorKind::InvalidInput, "dot action on the torus needs ell");
    for (int i = 0; i < r; ++i) {
      // lambda - w^{-1} lambda for lambda = varpi_i lies in the root lattice
      Rational pairing(0);
      for (int k = 0; k < r; ++k) {
        const int coeff = (k == i ? 1 : 0) - w.inverse_on_weights[k][i];
        if (coeff) pairing += Rational(coeff) * rs.rho_dot_fundamental(k);
      }
      out[i] += eps_pow(-pairing, ell, eps_num);
    }
  }
  return out;
}

/// Exponent of beta(t) = sum_j b_j sum_i C_ij q_i mod 1.
inline UnityExp root_value(const RootSystem& rs, const TorusElement& t, const RootVec& beta) {
  Rational acc(0);
  for (int j = 0; j < rs.rank(); ++j) {
    if (!beta[j]) continue;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.cartan(i, j)) acc += Rational(beta[j] * rs.cartan(i, j)) * t[i].exponent();
  }
  return UnityExp(acc);
}

inline UnityExp root_value(const RootSystem& rs, const TorusElement& t, int beta) {
  return root_value(rs, t, rs.root(beta));
}

// ---------------------------------------------------------------------------
// Orbits and stabilizers over explicit point sets

/// Ordering key: modular weights as coefficient lists (low degree first,
/// coordinate-major); torus points as their exponents in [0, 1).
using PointKey = std::vector<Rational>;

inline PointKey encode(const ModWeight& lambda) {
  PointKey k;
  for (const auto& x : lambda)
    for (auto c : x.coeffs()) k.emplace_back(static_cast<std::int64_t>(c));
  return k;
}

inline PointKey encode(const TorusElement& t) {
  PointKey k;
  for (const auto& x : t) k.push_back(x.exponent());
  return k;
}

template <class P>
struct Orbit {
  P representative;
  std::vector<P> members;  // sorted by key
};

/// Partition `points` into classes of the group generated by the r maps
/// `step(j, x)` (j = 0..r-1): x ~ y iff y lies in the full orbit of x.
/// Orbits are listed by representative; representative = key-minimal member.
template <class P, class Step>
std::vector<Orbit<P>> orbit_partition(const std::vector<P>& points, int generators, Step step) {
  std::map<PointKey, std::size_t> where;
  for (std::size_t i = 0; i < points.size(); ++i) where.emplace(encode(points[i]), i);
  std::vector<bool> done(points.size(), false);
  const std::uint64_t bound = config().group_bound.load();
  std::vector<Orbit<P>> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (done[i]) continue;
    std::set<PointKey> seen{encode(points[i])};
    std::vector<P> queue{points[i]};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (int j = 0; j < generators; ++j) {
        P y = step(j, queue[q]);
        if (seen.insert(encode(y)).second) {
          if (seen.size() > bound) throw Error(ErrorKind::BoundExceeded, "orbit exceeds group bound");
          queue.push_back(std::move(y));
        }
      }
    }
    Orbit<P> orb;
    for (const auto& key : seen) {  // std::set iterates in key order
      auto it = where.find(key);
      if (it == where.end()) continue;
      done[it->second] = true;
      orb.members.push_back(points[it->second]);
    }
    orb.representative = orb.members.front();
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit<P>& a, const Orbit<P>& b) { return encode(a.representative) < encode(b.representative); });
  return out;
}

/// Number of orbits of an enumerated group on a stable point set, as the
/// average number of fixed points.
template <class P, class Act>
std::uint64_t burnside_count(const WeylGroup& group, const std::vector<P>& points, Act act) {
  std::uint64_t fixed = 0;
  for (const auto& w : group.elements())
    for (const auto& x : points)
      if (encode(act(w, x)) == encode(x)) ++fixed;
  if (fixed % group.size() != 0) throw Error(ErrorKind::InvalidInput, "point set is not stable under the group");
  return fixed / group.size();
}

/// Indices of the group elements fixing every point.
template <class P, class Act>
std::vector<int> stabilizer_bruteforce(const WeylGroup& group, const std::vector<P>& points, Act act) {
  std::vector<int> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    bool fixes = true;
    for (const auto& x : points) {
      if (encode(act(group[i], x)) != encode(x)) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// Subgroup generated by the reflections in the given roots, as sorted
/// element indices of an enumerated group.
inline std::vector<int> generated_subgroup(const RootSystem& rs, const WeylGroup& group, const std::vector<int>& roots) {
  std::vector<int> gens;
  for (int b : roots) {
    const int idx = group.index_of(reflection_element(rs, b));
    if (std::find(gens.begin(), gens.end(), idx) == gens.end()) gens.push_back(idx);
  }
  std::set<int> seen{0};
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int g : gens) {
      const int y = group.multiply(queue[q], g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  return {seen.begin(), seen.end()};
}

/// Reflection subgroup <s_beta : pred(beta)>, represented by the classified
/// root set {beta : pred(beta)}.
template <class Pred>
Subsystem reflection_stabilizer(const RootSystem& rs, Pred pred) {
  return subsystem_where(rs, pred, false);
}

struct CosetRep {
  int element = 0;  // index into the enumerated group
  int length = 0;
};

/// Minimal-length representatives of W / W_J for J a set of simple roots
/// (0-based node indices): the w with w(alpha_j) > 0 for all j in J.
inline std::vector<CosetRep> min_coset_reps(const RootSystem& rs, const WeylGroup& group, const std::vector<int>& simple_nodes) {
  for (int j : simple_nodes)
    if (j < 0 || j >= rs.rank()) throw Error(ErrorKind::NotParabolic, "generator is not a simple reflection");
  std::vector<CosetRep> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    bool minimal = true;
    for (int j : simple_nodes)
      if (!rs.is_positive(apply_root(rs, group[i], j))) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back({static_cast<int>(i), group[i].length});
  }
  return out;
}

}  // namespace lieram

#endif  // LIERAM_WEYL_HPP
