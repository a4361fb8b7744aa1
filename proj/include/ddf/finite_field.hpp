#ifndef DDF_FINITE_FIELD_HPP
#define DDF_FINITE_FIELD_HPP

// Exact arithmetic in GF(p^r) through a primitive element and full log/exp
// tables, plus cyclotomic classes and cyclotomic numbers.

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace ddf {

/// Field element in the power basis of the primitive root, packed as
/// code = sum_i c_i * p^i with c_0 the constant coordinate.
struct FieldElem {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

namespace detail {

using Poly = std::vector<std::uint64_t>;  // constant term first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  poly_trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
  Poly out = poly_mod({1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1U) out = poly_mulmod(out, base, f, p);
    exp >>= 1U;
    if (exp > 0) base = poly_mulmod(base, base, f, p);
  }
  return out;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t out = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1U) out = out * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return out;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic, then a <- a mod b
    const std::uint64_t inv = inv_mod(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test over GF(p).
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  if (r == 1) return true;
  std::vector<Poly> frob(r + 1);  // frob[k] = x^(p^k) mod f
  frob[0] = poly_mod({0, 1}, f, p);
  for (std::size_t k = 1; k <= r; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  if (frob[r] != frob[0]) return false;
  for (const auto ell : prime_divisors(r)) {
    Poly h = frob[r / ell];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    const Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

inline bool x_is_primitive(const Poly& f, std::uint64_t p, std::uint64_t q) {
  const Poly x{0, 1};
  const Poly one = poly_mod({1}, f, p);
  if (poly_powmod(x, q - 1, f, p) != one) return false;
  for (const auto ell : prime_divisors(q - 1))
    if (poly_powmod(x, (q - 1) / ell, f, p) == one) return false;
  return true;
}

}  // namespace detail

/// GF(p^r) with a fixed primitive element alpha (the class of x modulo the
/// modulus) and bijective log/exp tables. Immutable after construction.
class FieldCtx {
 public:
  static constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t p() const noexcept { return p_; }
  unsigned r() const noexcept { return r_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic primitive modulus, constant term first (r + 1 entries).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  const std::vector<std::uint32_t>& exp_table() const noexcept { return exp_; }
  const std::vector<std::uint32_t>& log_table() const noexcept { return log_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem alpha() const noexcept { return exp(1); }
  /// alpha^t for any integer t.
  FieldElem exp(std::int64_t t) const noexcept {
    return {exp_[static_cast<std::size_t>(mod_floor(t, q_ - 1))]};
  }

  bool contains(FieldElem a) const noexcept { return a.code < q_; }

  std::vector<std::uint32_t> coeffs(FieldElem a) const {
    std::vector<std::uint32_t> c(r_);
    for (unsigned i = 0; i < r_; ++i) {
      c[i] = a.code % p_;
      a.code /= p_;
    }
    return c;
  }

  FieldElem from_coeffs(std::span<const std::uint32_t> c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
    return {code};
  }

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    if (p_ == 2) return {a.code ^ b.code};
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += ((a.code % p_ + b.code % p_) % p_) * scale;
      a.code /= p_;
      b.code /= p_;
      scale *= p_;
    }
    return {out};
  }

  FieldElem neg(FieldElem a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += ((p_ - a.code % p_) % p_) * scale;
      a.code /= p_;
      scale *= p_;
    }
    return {out};
  }

  FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    if (a.code == 0 || b.code == 0) return zero();
    return {exp_[(log_[a.code] + static_cast<std::uint64_t>(log_[b.code])) % (q_ - 1)]};
  }

  /// a^k; negative k requires a != 0.
  FieldElem pow(FieldElem a, std::int64_t k) const {
    if (a.code == 0) {
      if (k < 0) throw Error(ErrorKind::DlogOfZero, "negative power of zero");
      return k == 0 ? one() : zero();
    }
    return exp(mod_floor(static_cast<std::int64_t>(log_[a.code]) * mod_floor(k, q_ - 1), q_ - 1));
  }

  FieldElem inv(FieldElem a) const { return pow(a, -1); }

  /// Discrete logarithm to base alpha, in [0, q - 1).
  std::uint32_t dlog(FieldElem a) const {
    if (a.code == 0) throw Error(ErrorKind::DlogOfZero, "dlog of zero");
    return log_[a.code];
  }

 private:
  friend FieldCtx make_field(std::uint32_t p, unsigned r, std::uint64_t bound);

  std::uint32_t p_ = 0;
  unsigned r_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Builds GF(p^r) over the lexicographically smallest monic primitive
/// polynomial (coefficients compared from the constant term upward).
inline FieldCtx make_field(std::uint32_t p, unsigned r, std::uint64_t bound = kDefaultSizeBound) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (r == 0) throw Error(ErrorKind::DegenerateParameters, "extension degree must be positive");
  const std::uint64_t q = checked_pow(p, r, bound);

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.r_ = r;
  ctx.q_ = static_cast<std::uint32_t>(q);

  // Lexicographic order with c_0 most significant: digit i of t (from the
  // least significant end) is coefficient c_{r-1-i}.
  bool found = false;
  detail::Poly f(r + 1, 0);
  for (std::uint64_t t = 0; t < q && !found; ++t) {
    std::uint64_t rest = t;
    for (unsigned i = 0; i < r; ++i) {
      f[r - 1 - i] = rest % p;
      rest /= p;
    }
    f[r] = 1;
    if (f[0] == 0) continue;
    if (detail::is_irreducible(f, p) && detail::x_is_primitive(f, p, q)) found = true;
  }
  if (!found) throw Error(ErrorKind::ConditionsNotMet, "no primitive polynomial found");
  ctx.modulus_.assign(f.begin(), f.end());

  ctx.exp_.resize(q - 1);
  ctx.log_.assign(q, FieldCtx::kNoLog);
  std::vector<std::uint32_t> cur(r, 0);
  cur[0] = 1;
  for (std::uint64_t t = 0; t + 1 < q; ++t) {
    const FieldElem e = ctx.from_coeffs(cur);
    ctx.exp_[t] = e.code;
    ctx.log_[e.code] = static_cast<std::uint32_t>(t);
    // multiply by x and reduce with the monic modulus
    const std::uint64_t top = cur[r - 1];
    for (unsigned i = r - 1; i > 0; --i)
      cur[i] = static_cast<std::uint32_t>((cur[i - 1] + (p - top) * f[i]) % p);
    cur[0] = static_cast<std::uint32_t>(((p - top) * f[0]) % p);
  }
  return ctx;
}

/// C_i = { alpha^t : t = i mod e }, i = 0..e-1, each listed in increasing t.
inline std::vector<std::vector<FieldElem>> cyclotomic_classes(const FieldCtx& ctx, std::uint32_t e) {
  if (e == 0 || (ctx.q() - 1) % e != 0)
    throw Error(ErrorKind::DoesNotDivide, std::to_string(e) + " does not divide q - 1");
  const std::uint32_t f = (ctx.q() - 1) / e;
  std::vector<std::vector<FieldElem>> classes(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    classes[i].reserve(f);
    for (std::uint32_t t = 0; t < f; ++t) classes[i].push_back(ctx.exp(i + static_cast<std::int64_t>(t) * e));
  }
  return classes;
}

/// (i, j)_e = |(C_i + 1) cap C_j| by enumeration of C_i.
inline std::uint64_t cyclotomic_number(const FieldCtx& ctx, std::uint32_t e, std::uint32_t i, std::uint32_t j) {
  if (e == 0 || (ctx.q() - 1) % e != 0)
    throw Error(ErrorKind::DoesNotDivide, std::to_string(e) + " does not divide q - 1");
  if (i >= e || j >= e) throw Error(ErrorKind::IndexOutOfRange, "class index must be below e");
  const std::uint32_t f = (ctx.q() - 1) / e;
  std::uint64_t count = 0;
  for (std::uint32_t t = 0; t < f; ++t) {
    const FieldElem shifted = ctx.add(ctx.exp(i + static_cast<std::int64_t>(t) * e), ctx.one());
    if (shifted.code != 0 && ctx.dlog(shifted) % e == j) ++count;
  }
  return count;
}

/// True when p^k = -1 (mod e) for some k >= 1.
inline bool minus_one_is_power_mod(std::uint64_t p, std::uint64_t e) {
  if (e < 2) return false;
  std::uint64_t acc = p % e;
  for (std::uint64_t k = 1; k <= e; ++k) {
    if (acc == e - 1) return true;
    acc = acc * (p % e) % e;
  }
  return false;
}

/// Closed-form cyclotomic numbers in the uniform case. The square root s of
/// p^m is taken with the sign that makes s = 1 (mod e); eta = (s - 1) / e.
inline std::int64_t uniform_cyclotomic_number(std::uint64_t p, unsigned m, std::int64_t e, std::int64_t i,
                                              std::int64_t j) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 3) throw Error(ErrorKind::ConditionsNotMet, "uniform cyclotomy needs e >= 3");
  const std::uint64_t q = checked_pow(p, m);
  if ((q - 1) % static_cast<std::uint64_t>(e) != 0)
    throw Error(ErrorKind::ConditionsNotMet, "e does not divide p^m - 1");
  if (!minus_one_is_power_mod(p, static_cast<std::uint64_t>(e)))
    throw Error(ErrorKind::ConditionsNotMet, "-1 is not a power of p modulo e");
  if (m % 2 != 0) throw Error(ErrorKind::ConditionsNotMet, "p^m is not a perfect square");
  if (i < 0 || j < 0 || i >= e || j >= e) throw Error(ErrorKind::IndexOutOfRange, "class index must be below e");

  const auto root = static_cast<std::int64_t>(checked_pow(p, m / 2));
  std::int64_t s = 0;
  if (mod_floor(root, e) == 1 % e) {
    s = root;
  } else if (mod_floor(-root, e) == 1 % e) {
    s = -root;
  } else {
    throw Error(ErrorKind::ConditionsNotMet, "neither square root of p^m is 1 mod e");
  }
  const std::int64_t eta = (s - 1) / e;
  if (i == 0 && j == 0) return eta * eta - (e - 3) * eta - 1;
  if (i == 0 || j == 0 || i == j) return eta * eta + eta;
  return eta * eta;
}

}  // namespace ddf

#endif  // DDF_FINITE_FIELD_HPP
