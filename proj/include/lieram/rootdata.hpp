#ifndef LIERAM_ROOTDATA_HPP
#define LIERAM_ROOTDATA_HPP

// Semisimple root systems in Bourbaki numbering, built by string closure from
// the Cartan matrix, plus extraction and classification of root subsystems.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieram/error.hpp"
#include "lieram/rational.hpp"

namespace lieram {

using IntMatrix = std::vector<std::vector<int>>;
using RootVec = std::vector<int>;  // coefficients on the simple roots

struct TypeComponent {
  char letter = 'A';
  int rank = 0;
  friend bool operator==(const TypeComponent&, const TypeComponent&) = default;
  friend auto operator<=>(const TypeComponent&, const TypeComponent&) = default;
  std::string str() const { return std::string(1, letter) + std::to_string(rank); }
};

struct CartanType {
  std::vector<TypeComponent> components;

  int rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
  }
  bool irreducible() const { return components.size() == 1; }
  std::string str() const {
    if (components.empty()) return "trivial";
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "x") + c.str();
    return s;
  }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

inline void validate_component(const TypeComponent& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.letter) {
    case 'A': case 'B': case 'C': ok = n >= 1; break;
    case 'D': ok = n >= 2; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw Error(ErrorKind::InvalidType, "invalid component " + c.str());
}

/// Parse e.g. "A2", "b3", "A1xG2". B1 and C1 become A1, D2 becomes A1xA1.
inline CartanType parse_cartan_type(const std::string& text) {
  CartanType t;
  if (text.empty()) throw Error(ErrorKind::InvalidType, "empty type string");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = pos;
    while (next < text.size() && text[next] != 'x' && text[next] != 'X') ++next;
    const std::string part = text.substr(pos, next - pos);
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
      throw Error(ErrorKind::InvalidType, "bad type token '" + part + "'");
    for (std::size_t i = 1; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error(ErrorKind::InvalidType, "bad type token '" + part + "'");
    TypeComponent c{static_cast<char>(std::toupper(static_cast<unsigned char>(part[0]))), std::stoi(part.substr(1))};
    validate_component(c);
    if ((c.letter == 'B' || c.letter == 'C') && c.rank == 1) c.letter = 'A';
    if (c.letter == 'D' && c.rank == 2) {
      t.components.push_back({'A', 1});
      t.components.push_back({'A', 1});
    } else {
      t.components.push_back(c);
    }
    if (next == text.size()) break;
    pos = next + 1;
  }
  return t;
}

namespace detail {

inline IntMatrix component_cartan(const TypeComponent& c) {
  const int n = c.rank;
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based, simple bond
    m[i - 1][j - 1] = -1;
    m[j - 1][i - 1] = -1;
  };
  switch (c.letter) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      m[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      m[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case 'E':
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      m[2][1] = -2;
      break;
    case 'G':
      bond(1, 2);
      m[0][1] = -3;
      break;
    default: break;
  }
  return m;
}

inline std::vector<int> component_symmetrizer(const TypeComponent& c) {
  const int n = c.rank;
  std::vector<int> d(n, 1);
  switch (c.letter) {
    case 'B': std::fill(d.begin(), d.end() - 1, 2); break;
    case 'C': d[n - 1] = 2; break;
    case 'F': d[0] = d[1] = 2; break;
    case 'G': d[1] = 3; break;
    default: break;
  }
  return d;
}

}  // namespace detail

/// Order of the Weyl group of an irreducible type (letter, rank); rank 0 gives 1.
inline std::uint64_t weyl_order(const TypeComponent& c) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = c.rank;
  if (n == 0) return 1;
  switch (c.letter) {
    case 'A': return fact(n + 1);
    case 'B': case 'C': return (std::uint64_t{1} << n) * fact(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 1;
  }
}

inline std::uint64_t weyl_order(const CartanType& t) {
  std::uint64_t o = 1;
  for (const auto& c : t.components) o *= weyl_order(c);
  return o;
}

/// |P/Q| for an irreducible type.
inline int index_of_connection(const TypeComponent& c) {
  switch (c.letter) {
    case 'A': return c.rank + 1;
    case 'B': case 'C': return 2;
    case 'D': return 4;
    case 'E': return c.rank == 6 ? 3 : c.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

inline int index_of_connection(const CartanType& t) {
  int i = 1;
  for (const auto& c : t.components) i *= index_of_connection(c);
  return i;
}

struct HypothesisReport {
  bool good_prime = true;
  bool trace_form_ok = true;
};

/// Good-prime and trace-form conditions for p.
inline HypothesisReport hypothesis_check(const CartanType& t, std::uint64_t p) {
  HypothesisReport h;
  for (const auto& c : t.components) {
    std::vector<std::uint64_t> bad;
    switch (c.letter) {
      case 'B': case 'C': case 'D': bad = {2}; break;
      case 'E': bad = c.rank == 8 ? std::vector<std::uint64_t>{2, 3, 5} : std::vector<std::uint64_t>{2, 3}; break;
      case 'F': case 'G': bad = {2, 3}; break;
      default: break;
    }
    if (std::find(bad.begin(), bad.end(), p) != bad.end()) h.good_prime = false;
    if (c.letter == 'A' && static_cast<std::uint64_t>(c.rank + 1) % p == 0) h.trace_form_ok = false;
  }
  return h;
}

struct SubComponent {
  TypeComponent type;
  std::vector<int> basis;  // root indices
  std::uint64_t order = 1;
};

/// A root subsystem: all its roots (both signs), a simple basis inside Phi+,
/// and its classification.
struct Subsystem {
  std::vector<int> roots;  // sorted root indices
  std::vector<int> basis;
  std::vector<SubComponent> components;
  CartanType type;
  std::uint64_t order = 1;
  int rank() const { return static_cast<int>(basis.size()); }
  bool contains(int root) const { return std::binary_search(roots.begin(), roots.end(), root); }
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type) : type_(std::move(type)) {
    if (type_.components.empty()) throw Error(ErrorKind::InvalidType, "empty type");
    r_ = type_.rank();
    cartan_.assign(r_, std::vector<int>(r_, 0));
    d_.assign(r_, 1);
    int off = 0;
    for (const auto& c : type_.components) {
      validate_component(c);
      const auto m = detail::component_cartan(c);
      const auto d = detail::component_symmetrizer(c);
      for (int i = 0; i < c.rank; ++i) {
        d_[off + i] = d[i];
        comp_of_node_.push_back(static_cast<int>(offsets_.size()));
        for (int j = 0; j < c.rank; ++j) cartan_[off + i][off + j] = m[i][j];
      }
      offsets_.push_back(off);
      off += c.rank;
    }
    build_roots();
  }

  const CartanType& type() const { return type_; }
  int rank() const { return r_; }
  const IntMatrix& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<int>& symmetrizers() const { return d_; }
  int num_positive() const { return n_pos_; }
  int num_roots() const { return 2 * n_pos_; }
  const RootVec& root(int idx) const { return roots_[idx]; }
  const RootVec& coroot(int idx) const { return coroots_[idx]; }
  bool is_positive(int idx) const { return idx < n_pos_; }
  int negate(int idx) const { return idx < n_pos_ ? idx + n_pos_ : idx - n_pos_; }
  int simple(int i) const { return i; }  // simple roots come first
  std::optional<int> index_of(const RootVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int num_components() const { return static_cast<int>(offsets_.size()); }
  int component_offset(int c) const { return offsets_[c]; }
  int component_of_node(int i) const { return comp_of_node_[i]; }
  /// Component containing a root (roots never straddle components).
  int component_of_root(int idx) const {
    const auto& v = roots_[idx];
    for (int i = 0; i < r_; ++i)
      if (v[i] != 0) return comp_of_node_[i];
    return 0;
  }
  /// Highest root of component c, as root index.
  int highest_root(int c) const { return highest_[c]; }

  /// (beta, gamma) with (alpha_i, alpha_j) = d_i C_ij.
  int inner(const RootVec& b, const RootVec& g) const {
    int s = 0;
    for (int i = 0; i < r_; ++i) {
      if (!b[i]) continue;
      for (int j = 0; j < r_; ++j) s += b[i] * g[j] * d_[i] * cartan_[i][j];
    }
    return s;
  }
  /// d_beta = (beta, beta) / 2.
  int half_norm(int idx) const { return inner(roots_[idx], roots_[idx]) / 2; }
  /// <gamma, beta^vee> for a root beta.
  int cartan_integer(const RootVec& g, int beta) const { return inner(g, roots_[beta]) / half_norm(beta); }
  /// s_beta(v) on root coordinates.
  RootVec reflect(int beta, const RootVec& v) const {
    const int k = cartan_integer(v, beta);
    RootVec out = v;
    for (int i = 0; i < r_; ++i) out[i] -= k * roots_[beta][i];
    return out;
  }
  int reflect_root(int beta, int gamma) const { return *index_of(reflect(beta, roots_[gamma])); }

  /// (2 rho, beta) = sum_i b_i 2 d_i.
  int two_rho_dot(const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < r_; ++i) s += b[i] * 2 * d_[i];
    return s;
  }
  int two_rho_dot(int idx) const { return two_rho_dot(roots_[idx]); }

  /// beta <= gamma: gamma - beta has nonnegative coefficients.
  bool leq(const RootVec& b, const RootVec& g) const {
    for (int i = 0; i < r_; ++i)
      if (g[i] - b[i] < 0) return false;
    return true;
  }

  /// C^{-1} over Q.
  const std::vector<std::vector<Rational>>& cartan_inverse() const {
    if (cinv_.empty()) cinv_ = invert(cartan_);
    return cinv_;
  }
  /// (rho, varpi_i) = sum_j (C^{-1})_{ji} d_j.
  Rational rho_dot_fundamental(int i) const {
    const auto& ci = cartan_inverse();
    Rational s(0);
    for (int j = 0; j < r_; ++j) s += ci[j][i] * Rational(d_[j]);
    return s;
  }

 private:
  static std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
      a[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (a[piv][col] == Rational(0)) ++piv;
      std::swap(a[piv], a[col]);
      const Rational inv = Rational(1) / a[col][col];
      for (auto& v : a[col]) v *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == Rational(0)) continue;
        const Rational f = a[r][col];
        for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
  }

  void build_roots() {
    std::vector<RootVec> pos;
    std::set<RootVec> seen;
    for (int i = 0; i < r_; ++i) {
      RootVec v(r_, 0);
      v[i] = 1;
      pos.push_back(v);
      seen.insert(v);
    }
    // extend by simple roots via alpha_i-strings: beta + alpha_i is a root iff
    // q > 0 where q = p - <beta, alpha_i^vee> and p is the downward string length
    for (std::size_t k = 0; k < pos.size(); ++k) {
      const RootVec beta = pos[k];
      for (int i = 0; i < r_; ++i) {
        int pairing = 0;
        for (int j = 0; j < r_; ++j) pairing += beta[j] * cartan_[i][j];
        int p = 0;
        RootVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          RootVec up = beta;
          up[i] += 1;
          if (seen.insert(up).second) pos.push_back(up);
        }
      }
    }
    std::stable_sort(pos.begin() + r_, pos.end(), [](const RootVec& a, const RootVec& b) {
      const int ha = std::accumulate(a.begin(), a.end(), 0);
      const int hb = std::accumulate(b.begin(), b.end(), 0);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    n_pos_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (const auto& v : pos) {
      RootVec m = v;
      for (auto& x : m) x = -x;
      roots_.push_back(m);
    }
    for (int k = 0; k < static_cast<int>(roots_.size()); ++k) index_[roots_[k]] = k;
    for (int k = 0; k < static_cast<int>(roots_.size()); ++k) {
      const int db = inner(roots_[k], roots_[k]) / 2;
      RootVec cv(r_);
      for (int i = 0; i < r_; ++i) cv[i] = roots_[k][i] * d_[i] / db;
      coroots_.push_back(cv);
    }
    highest_.assign(offsets_.size(), -1);
    for (int k = 0; k < n_pos_; ++k) {
      const int c = component_of_root(k);
      bool maximal = true;
      for (int i = 0; i < r_ && maximal; ++i) {
        RootVec up = roots_[k];
        up[i] += 1;
        if (index_.count(up)) maximal = false;
      }
      if (maximal) highest_[c] = k;
    }
  }

  CartanType type_;
  int r_ = 0;
  IntMatrix cartan_;
  std::vector<int> d_;
  std::vector<int> offsets_;
  std::vector<int> comp_of_node_;
  int n_pos_ = 0;
  std::vector<RootVec> roots_;
  std::vector<RootVec> coroots_;
  std::map<RootVec, int> index_;
  std::vector<int> highest_;
  mutable std::vector<std::vector<Rational>> cinv_;
};

inline RootSystem build_root_system(const std::string& type) { return RootSystem(parse_cartan_type(type)); }

inline std::shared_ptr<const RootSystem> make_root_system(const std::string& type) {
  return std::make_shared<const RootSystem>(parse_cartan_type(type));
}

/// lambda(h_beta) for lambda given by its values on h_1..h_r.
template <class T>
T pair(const RootSystem& rs, const std::vector<T>& lambda, int beta) {
  const auto& cv = rs.coroot(beta);
  T acc = 0 * lambda[0];
  for (int i = 0; i < rs.rank(); ++i)
    if (cv[i] != 0) acc = acc + cv[i] * lambda[i];
  return acc;
}

namespace detail {

/// Type of a connected Cartan matrix (indices into `nodes`), Bourbaki letters.
inline TypeComponent classify_connected(const IntMatrix& c, const std::vector<int>& nodes,
                                        const std::vector<int>& lengths) {
  const int n = static_cast<int>(nodes.size());
  int max_bond = 1;
  std::vector<int> degree(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || c[nodes[a]][nodes[b]] == 0) continue;
      ++degree[a];
      max_bond = std::max(max_bond, c[nodes[a]][nodes[b]] * c[nodes[b]][nodes[a]]);
    }
  }
  if (max_bond == 3) return {'G', 2};
  if (max_bond == 2) {
    if (n == 2) return {'B', 2};
    const int longest = *std::max_element(lengths.begin(), lengths.end());
    int shorts = 0;
    for (int a = 0; a < n; ++a) shorts += lengths[nodes[a]] < longest;
    if (n == 4 && shorts == 2) {
      // F4 has the double bond in the middle; B4/C4 have one or three short nodes
      return {'F', 4};
    }
    return {shorts == 1 ? 'B' : 'C', n};
  }
  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (degree[a] == 3) branch = a;
  if (branch < 0) return {'A', n};
  std::vector<int> arms;
  for (int a = 0; a < n; ++a) {
    if (a == branch || c[nodes[a]][nodes[branch]] == 0) continue;
    int len = 1, prev = branch, cur = a;
    while (true) {
      int nxt = -1;
      for (int b = 0; b < n; ++b)
        if (b != cur && b != prev && c[nodes[cur]][nodes[b]] != 0) nxt = b;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  return {'E', n};
}

}  // namespace detail

/// Classify a set of roots (root indices). With `require_closed`, the set must
/// be closed under negation and under sums that are roots (NotClosed otherwise);
/// without it only negation-closure is required (reflection-closed sets).
inline Subsystem subsystem_classify(const RootSystem& rs, std::vector<int> roots, bool require_closed = true) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::set<int> in(roots.begin(), roots.end());
  for (int x : roots)
    if (!in.count(rs.negate(x))) throw Error(ErrorKind::NotClosed, "root set not closed under negation");
  if (require_closed) {
    for (int a : roots) {
      for (int b : roots) {
        RootVec s = rs.root(a);
        for (int i = 0; i < rs.rank(); ++i) s[i] += rs.root(b)[i];
        auto idx = rs.index_of(s);
        if (idx && !in.count(*idx)) throw Error(ErrorKind::NotClosed, "root set not closed under addition");
      }
    }
  }
  Subsystem sub;
  sub.roots = roots;
  std::vector<int> pos;
  for (int x : roots)
    if (rs.is_positive(x)) pos.push_back(x);
  std::set<RootVec> pos_set;
  for (int x : pos) pos_set.insert(rs.root(x));
  for (int x : pos) {
    bool decomposable = false;
    for (int y : pos) {
      RootVec diff = rs.root(x);
      for (int i = 0; i < rs.rank(); ++i) diff[i] -= rs.root(y)[i];
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.basis.push_back(x);
  }
  const int k = static_cast<int>(sub.basis.size());
  IntMatrix c(k, std::vector<int>(k, 0));
  std::vector<int> lengths(k);
  for (int a = 0; a < k; ++a) {
    lengths[a] = rs.half_norm(sub.basis[a]);
    for (int b = 0; b < k; ++b) c[a][b] = rs.cartan_integer(rs.root(sub.basis[b]), sub.basis[a]);
  }
  std::vector<int> comp(k, -1);
  for (int start = 0; start < k; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> nodes{start};
    comp[start] = start;
    for (std::size_t q = 0; q < nodes.size(); ++q)
      for (int b = 0; b < k; ++b)
        if (comp[b] < 0 && c[nodes[q]][b] != 0) {
          comp[b] = start;
          nodes.push_back(b);
        }
    std::sort(nodes.begin(), nodes.end());
    SubComponent sc;
    sc.type = detail::classify_connected(c, nodes, lengths);
    for (int a : nodes) sc.basis.push_back(sub.basis[a]);
    sc.order = weyl_order(sc.type);
    sub.order *= sc.order;
    sub.components.push_back(sc);
  }
  std::stable_sort(sub.components.begin(), sub.components.end(),
                   [](const SubComponent& a, const SubComponent& b) { return a.type < b.type; });
  for (const auto& sc : sub.components) sub.type.components.push_back(sc.type);
  return sub;
}

template <class Pred>
Subsystem subsystem_where(const RootSystem& rs, Pred pred, bool require_closed = true) {
  std::vector<int> roots;
  for (int k = 0; k < rs.num_roots(); ++k)
    if (pred(k)) roots.push_back(k);
  return subsystem_classify(rs, roots, require_closed);
}

/// Root set of the reflection subgroup generated by s_beta for the given roots.
inline std::vector<int> reflection_closure(const RootSystem& rs, const std::vector<int>& generators) {
  std::set<int> set;
  std::vector<int> queue;
  for (int g : generators)
    for (int x : {g, rs.negate(g)})
      if (set.insert(x).second) queue.push_back(x);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int x = queue[q];
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int y : {rs.reflect_root(queue[k], x), rs.reflect_root(x, queue[k])})
        if (set.insert(y).second) queue.push_back(y);
    }
  }
  return {set.begin(), set.end()};
}

}  // namespace lieram

#endif  // LIERAM_ROOTDATA_HPP
