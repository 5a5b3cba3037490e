#ifndef LIERAM_SCALARS_HPP
#define LIERAM_SCALARS_HPP

// Exact scalar domains: finite fields F_{p^e} realised as F_p[a]/(f) for a
// deterministic irreducible f, and roots of unity stored as rationals mod 1.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieram/config.hpp"
#include "lieram/error.hpp"
#include "lieram/rational.hpp"

namespace lieram {

namespace detail {

using Poly = std::vector<std::uint64_t>;  // coefficients over F_p, low degree first

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

/// Inverse of a modulo m (m need not be prime); nullopt when gcd(a, m) != 1.
inline std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return std::nullopt;
  return ((old_s % m) + m) % m;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(factor, m[i], p)) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint64_t p) {
  Poly r = poly_mod(Poly{1}, m, p);
  base = poly_mod(std::move(base), m, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test: f of degree e is irreducible over F_p iff x^{p^e} = x mod f
/// and gcd(x^{p^{e/q}} - x, f) = 1 for every prime q | e.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 1) return true;
  auto x_pow_p_pow = [&](std::size_t d) {
    Poly h{0, 1};
    for (std::size_t i = 0; i < d; ++i) h = poly_powmod(h, p, f, p);
    return h;
  };
  auto minus_x = [&](Poly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(x_pow_p_pow(e)).empty()) return false;
  for (const auto q : prime_factors(e)) {
    const Poly g = poly_gcd(minus_x(x_pow_p_pow(e / q)), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

/// Gaussian elimination over F_p. `a` is row-major (rows x cols).
/// Returns one solution of a*x = b with free variables set to zero.
inline std::optional<std::vector<std::uint64_t>> solve_mod_p(std::vector<std::vector<std::uint64_t>> a,
                                                             std::vector<std::uint64_t> b, std::uint64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    const std::uint64_t inv = invmod(a[row][col], p);
    for (auto& v : a[row]) v = mulmod(v, inv, p);
    b[row] = mulmod(b[row], inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = (a[r][c] + p - mulmod(f, a[row][c], p)) % p;
      b[r] = (b[r] + p - mulmod(f, b[row], p)) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<std::uint64_t> x(cols, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
  return x;
}

/// Basis of the null space of a (row-major) over F_p.
inline std::vector<std::vector<std::uint64_t>> nullspace_mod_p(std::vector<std::vector<std::uint64_t>> a,
                                                              std::uint64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    const std::uint64_t inv = invmod(a[row][col], p);
    for (auto& v : a[row]) v = mulmod(v, inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = (a[r][c] + p - mulmod(f, a[row][c], p)) % p;
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Finite fields

/// F_{p^e} = F_p[a]/(modulus). The modulus is the lexicographically smallest
/// monic irreducible of degree e, coefficients compared from degree 0 upward.
struct FieldDescriptor {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  detail::Poly modulus;  // length e + 1, monic
  std::uint64_t size = 0;

  bool operator==(const FieldDescriptor& o) const { return p == o.p && e == o.e; }
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

namespace detail {

inline detail::Poly smallest_irreducible(std::uint64_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f(e + 1, 0);
    f[e] = 1;
    std::uint64_t rest = n;
    for (std::uint32_t i = 0; i < e; ++i) {  // c_{e-1} varies fastest, c_0 slowest
      f[e - 1 - i] = rest % p;
      rest /= p;
    }
    if (e > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::InvalidInput, "no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace detail

/// Deterministic descriptor for F_{p^e}; cached, so repeated calls return the
/// same object.
inline FieldPtr make_field(std::uint64_t p, std::uint32_t e) {
  if (!detail::is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::InvalidInput, "extension degree must be >= 1");
  const std::uint64_t bound = config().field_bound.load();
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (size > bound / p) {
      throw Error(ErrorKind::BoundExceeded,
                  "F_" + std::to_string(p) + "^" + std::to_string(e) + " exceeds field bound " + std::to_string(bound));
    }
    size *= p;
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, e}];
  if (!slot) {
    auto f = std::make_shared<FieldDescriptor>();
    f->p = p;
    f->e = e;
    f->modulus = detail::smallest_irreducible(p, e);
    f->size = size;
    slot = std::move(f);
  }
  return slot;
}

/// Element of a finite field: coefficient vector of length e over F_p.
class FFElem {
 public:
  FFElem() = default;
  FFElem(FieldPtr field, std::vector<std::uint64_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    c_.resize(field_->e, 0);
    for (auto& v : c_) v %= field_->p;
  }

  static FFElem zero(const FieldPtr& f) { return FFElem(f, {}); }
  static FFElem one(const FieldPtr& f) { return FFElem(f, {1}); }
  static FFElem from_int(const FieldPtr& f, std::int64_t n) {
    const auto p = static_cast<std::int64_t>(f->p);
    return FFElem(f, {static_cast<std::uint64_t>(((n % p) + p) % p)});
  }
  /// Element with index n = sum c_i p^i.
  static FFElem from_index(const FieldPtr& f, std::uint64_t n) {
    std::vector<std::uint64_t> c(f->e);
    for (auto& v : c) {
      v = n % f->p;
      n /= f->p;
    }
    return FFElem(f, std::move(c));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t p() const { return field_->p; }

  bool is_zero() const {
    for (auto v : c_)
      if (v) return false;
    return true;
  }

  FFElem operator-() const {
    FFElem r = *this;
    for (auto& v : r.c_) v = (field_->p - v) % field_->p;
    return r;
  }
  FFElem& operator+=(const FFElem& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % field_->p;
    return *this;
  }
  FFElem& operator-=(const FFElem& o) { return *this += -o; }
  FFElem& operator*=(const FFElem& o) {
    check_same(o);
    detail::Poly prod = detail::poly_mulmod(c_, o.c_, field_->modulus, field_->p);
    prod.resize(field_->e, 0);
    c_ = std::move(prod);
    return *this;
  }
  friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
  friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
  friend FFElem operator*(FFElem a, const FFElem& b) { return a *= b; }
  friend FFElem operator*(std::int64_t k, FFElem a) {
    const auto p = static_cast<std::int64_t>(a.field_->p);
    const auto kk = static_cast<std::uint64_t>(((k % p) + p) % p);
    for (auto& v : a.c_) v = detail::mulmod(v, kk, a.field_->p);
    return a;
  }

  FFElem pow(std::uint64_t k) const {
    FFElem r = one(field_), b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }
  FFElem inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidInput, "inverse of zero");
    return pow(field_->size - 2);
  }
  FFElem frobenius() const { return pow(field_->p); }

  /// Membership in the prime subfield, decided by x^p == x.
  bool in_prime_field() const { return frobenius() == *this; }

  /// Absolute trace to F_p.
  std::uint64_t trace() const {
    FFElem acc = zero(field_), y = *this;
    for (std::uint32_t i = 0; i < field_->e; ++i) {
      acc += y;
      y = y.frobenius();
    }
    return acc.c_[0];
  }

  friend bool operator==(const FFElem& a, const FFElem& b) {
    return a.field_ && b.field_ && *a.field_ == *b.field_ && a.c_ == b.c_;
  }

  /// Rendering as a polynomial in the class `a` of x, e.g. "2+a^2".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c_[i]);
      } else {
        if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
        out += i == 1 ? "a" : "a^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const FFElem& o) const {
    if (!(*field_ == *o.field_)) throw Error(ErrorKind::InvalidInput, "mixed-field arithmetic");
  }

  FieldPtr field_;
  std::vector<std::uint64_t> c_;
};

/// First element, in index order 1, 2, ..., p-1, a, 1+a, ..., of full
/// multiplicative order p^e - 1.
inline FFElem primitive_element(const FieldPtr& f) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint64_t> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({f->p, f->e});
    if (it != cache.end()) return FFElem::from_index(f, it->second);
  }
  const std::uint64_t order = f->size - 1;
  const auto factors = detail::prime_factors(order);
  for (std::uint64_t n = 1; n < f->size; ++n) {
    const FFElem g = FFElem::from_index(f, n);
    bool primitive = true;
    for (auto q : factors) {
      if (g.pow(order / q) == FFElem::one(f)) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      std::lock_guard lock(mutex);
      cache[{f->p, f->e}] = n;
      return g;
    }
  }
  return FFElem::one(f);  // F_2: the only unit
}

namespace detail {

/// A root of `small`'s modulus inside `big`, i.e. the image of the generator
/// `a` under the (chosen, deterministic) embedding small -> big.
inline FFElem embedding_root(const FieldPtr& small, const FieldPtr& big) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>, std::vector<std::uint64_t>> cache;
  const auto key = std::tuple{small->p, small->e, big->e};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return FFElem(big, it->second);
  }
  const std::uint64_t p = big->p;
  const std::uint32_t n = big->e;
  // subfield F_{p^e} inside big = kernel of Frob^e - id, as an F_p-linear map
  std::vector<std::vector<std::uint64_t>> mat(n, std::vector<std::uint64_t>(n, 0));
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::uint64_t> unit(n, 0);
    unit[j] = 1;
    FFElem y(big, unit);
    FFElem z = y;
    for (std::uint32_t k = 0; k < small->e; ++k) z = z.frobenius();
    z -= y;
    for (std::uint32_t i = 0; i < n; ++i) mat[i][j] = z.coeffs()[i];
  }
  const auto basis = nullspace_mod_p(mat, p);
  const std::uint64_t count = small->size;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::vector<std::uint64_t> y(n, 0);
    std::uint64_t rest = idx;
    for (const auto& b : basis) {
      const std::uint64_t digit = rest % p;
      rest /= p;
      for (std::uint32_t i = 0; i < n; ++i) y[i] = (y[i] + mulmod(digit, b[i], p)) % p;
    }
    const FFElem cand(big, y);
    FFElem val = FFElem::zero(big);
    for (std::size_t k = small->modulus.size(); k-- > 0;)
      val = val * cand + FFElem::from_int(big, static_cast<std::int64_t>(small->modulus[k]));
    if (val.is_zero()) {
      std::lock_guard lock(mutex);
      cache[key] = cand.coeffs();
      return cand;
    }
  }
  throw Error(ErrorKind::InvalidInput, "no embedding found");
}

}  // namespace detail

/// Image of x under the canonical embedding F_{p^e} -> F_{p^n} (e | n).
inline FFElem embed(const FFElem& x, const FieldPtr& target) {
  const FieldPtr& src = x.field();
  if (*src == *target) return x;
  if (src->p != target->p || target->e % src->e != 0)
    throw Error(ErrorKind::InvalidInput, "no embedding F_" + std::to_string(src->p) + "^" + std::to_string(src->e) +
                                             " -> F_" + std::to_string(target->p) + "^" + std::to_string(target->e));
  if (src->e == 1) return FFElem(target, {x.coeffs()[0]});
  const FFElem theta = detail::embedding_root(src, target);
  FFElem acc = FFElem::zero(target);
  for (std::size_t k = x.coeffs().size(); k-- > 0;)
    acc = acc * theta + FFElem::from_int(target, static_cast<std::int64_t>(x.coeffs()[k]));
  return acc;
}

/// Solution of x^p - x = c inside a given field (which must contain c).
inline std::optional<FFElem> artin_schreier_solve_in(const FFElem& c, const FieldPtr& field) {
  const FFElem target = embed(c, field);
  const std::uint32_t n = field->e;
  std::vector<std::vector<std::uint64_t>> mat(n, std::vector<std::uint64_t>(n, 0));
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::uint64_t> unit(n, 0);
    unit[j] = 1;
    const FFElem y(field, unit);
    const FFElem z = y.frobenius() - y;
    for (std::uint32_t i = 0; i < n; ++i) mat[i][j] = z.coeffs()[i];
  }
  auto sol = detail::solve_mod_p(mat, target.coeffs(), field->p);
  if (!sol) return std::nullopt;
  return FFElem(field, *sol);
}

struct ArtinSchreierSolution {
  FFElem x;
  FieldPtr field;
};

/// One solution of x^p - x = c in the smallest extension containing one: the
/// field of c itself when its absolute trace vanishes, else its degree-p
/// extension. The full solution set is x + F_p.
inline ArtinSchreierSolution artin_schreier_solve(const FFElem& c) {
  const FieldPtr& k = c.field();
  FieldPtr target = k;
  if (c.trace() != 0) target = make_field(k->p, k->e * static_cast<std::uint32_t>(k->p));
  auto x = artin_schreier_solve_in(c, target);
  if (!x) throw Error(ErrorKind::InvalidInput, "Artin-Schreier equation unsolvable");  // unreachable
  return {*x, target};
}

// ---------------------------------------------------------------------------
// Roots of unity

/// The complex number exp(2 pi i q), stored as the exact rational q in [0, 1).
class UnityExp {
 public:
  UnityExp() = default;
  explicit UnityExp(const Rational& q) : q_(q.frac()) {}

  const Rational& exponent() const { return q_; }
  bool is_identity() const { return q_.num() == 0; }

  UnityExp& operator+=(const UnityExp& o) {
    q_ = (q_ + o.q_).frac();
    return *this;
  }
  friend UnityExp operator+(UnityExp a, const UnityExp& b) { return a += b; }
  UnityExp operator-() const { return UnityExp(-q_); }
  friend UnityExp operator-(const UnityExp& a, const UnityExp& b) { return a + (-b); }
  /// k-th power.
  friend UnityExp operator*(std::int64_t k, const UnityExp& a) { return UnityExp(Rational(k) * a.q_); }

  friend bool operator==(const UnityExp& a, const UnityExp& b) = default;
  friend auto operator<=>(const UnityExp& a, const UnityExp& b) { return a.q_ <=> b.q_; }

  std::string str() const { return q_.num() == 0 ? "0" : q_.str(); }

 private:
  Rational q_;
};

/// eps^q for eps = exp(2 pi i eps_num / ell), where the denominator of q is
/// inverted modulo ell: the result is (eps_num * num * den^{-1} mod ell) / ell.
inline UnityExp eps_pow(const Rational& q, std::int64_t ell, std::int64_t eps_num = 1) {
  const auto inv = detail::inverse_mod(q.den(), ell);
  if (!inv) {
    throw Error(ErrorKind::NonInvertibleDenominator,
                "denominator " + std::to_string(q.den()) + " not invertible mod " + std::to_string(ell));
  }
  const std::int64_t k = ((eps_num % ell) * ((q.num() % ell) * *inv % ell)) % ell;
  return UnityExp(Rational(k, ell));
}

}  // namespace lieram

#endif  // LIERAM_SCALARS_HPP
