#ifndef DDF_GALOIS_RING_HPP
#define DDF_GALOIS_RING_HPP

// Arithmetic in the Galois ring GR(p^2, r): Teichmueller set, maximal ideal,
// unit decomposition, p-adic digits, and the subring GR(p^2, n) of GR(p^2, 2n).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "finite_field.hpp"

namespace ddf {

/// Ring element packed as code = sum_i c_i * (p^2)^i, each c_i in [0, p^2).
/// The code doubles as the element's index in the additive group.
struct RingElem {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(RingElem, RingElem) = default;
};

/// a = a0 + p * a1 with a0, a1 Teichmueller.
struct PadicDigits {
  RingElem a0;
  RingElem a1;
};

/// u = alpha0 * (1 + p * alpha1), alpha0 a nonzero Teichmueller element.
struct UnitParts {
  RingElem alpha0;
  RingElem alpha1;
};

class RingCtx {
 public:
  std::uint32_t p() const noexcept { return p_; }
  unsigned r() const noexcept { return r_; }
  std::uint32_t char_modulus() const noexcept { return pp_; }
  std::uint32_t order() const noexcept { return order_; }
  /// p^r, the size of the residue field and of the Teichmueller set.
  std::uint32_t residue_size() const noexcept { return residue_size_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  RingElem zero() const noexcept { return {0}; }
  RingElem one() const noexcept { return {1}; }
  RingElem xi() const noexcept { return teich_[std::min<std::size_t>(2, teich_.size() - 1)]; }
  /// [0, 1, xi, xi^2, ..., xi^(p^r - 2)]
  const std::vector<RingElem>& teichmuller() const noexcept { return teich_; }
  /// xi^k for any integer k.
  RingElem xi_pow(std::int64_t k) const noexcept {
    return teich_[1 + static_cast<std::size_t>(mod_floor(k, residue_size_ - 1))];
  }
  /// Position in teichmuller(), if a is Teichmueller.
  std::optional<std::uint32_t> teich_index(RingElem a) const noexcept {
    const auto idx = teich_index_[a.code];
    if (idx < 0) return std::nullopt;
    return static_cast<std::uint32_t>(idx);
  }
  /// Exponent k with a = xi^k, for nonzero Teichmueller a.
  std::optional<std::uint32_t> teich_log(RingElem a) const noexcept {
    const auto idx = teich_index_[a.code];
    if (idx <= 0) return std::nullopt;
    return static_cast<std::uint32_t>(idx - 1);
  }
  bool is_teichmuller(RingElem a) const noexcept { return teich_index_[a.code] >= 0; }

  std::vector<std::uint32_t> coeffs(RingElem a) const {
    std::vector<std::uint32_t> c(r_);
    for (unsigned i = 0; i < r_; ++i) {
      c[i] = a.code % pp_;
      a.code /= pp_;
    }
    return c;
  }

  RingElem from_coeffs(std::span<const std::uint32_t> c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * pp_ + c[i] % pp_;
    return {code};
  }

  /// The image of the integer n.
  RingElem from_int(std::int64_t n) const noexcept { return {static_cast<std::uint32_t>(mod_floor(n, pp_))}; }

  RingElem add(RingElem a, RingElem b) const noexcept {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += ((a.code % pp_ + b.code % pp_) % pp_) * scale;
      a.code /= pp_;
      b.code /= pp_;
      scale *= pp_;
    }
    return {out};
  }

  RingElem neg(RingElem a) const noexcept {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += ((pp_ - a.code % pp_) % pp_) * scale;
      a.code /= pp_;
      scale *= pp_;
    }
    return {out};
  }

  RingElem sub(RingElem a, RingElem b) const noexcept { return add(a, neg(b)); }

  RingElem mul(RingElem a, RingElem b) const {
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i)
      for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % pp_;
    for (std::size_t d = prod.size(); d-- > r_;) {
      const std::uint64_t lead = prod[d];
      if (lead == 0) continue;
      for (unsigned i = 0; i < r_; ++i) prod[d - r_ + i] = (prod[d - r_ + i] + (pp_ - lead) * modulus_[i]) % pp_;
      prod[d] = 0;
    }
    std::uint32_t code = 0;
    for (unsigned i = r_; i-- > 0;) code = code * pp_ + static_cast<std::uint32_t>(prod[i]);
    return {code};
  }

  RingElem pow(RingElem a, std::uint64_t k) const {
    RingElem out = one();
    while (k > 0) {
      if (k & 1U) out = mul(out, a);
      k >>= 1U;
      if (k > 0) a = mul(a, a);
    }
    return out;
  }

  RingElem times_p(RingElem a) const noexcept {
    RingElem out = zero();
    for (std::uint32_t i = 0; i < p_; ++i) out = add(out, a);
    return out;
  }

  /// a mod p as a base-p code, i.e. the image in the residue field.
  std::uint32_t residue(RingElem a) const noexcept {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += (a.code % pp_) % p_ * scale;
      a.code /= pp_;
      scale *= p_;
    }
    return out;
  }

  bool is_unit(RingElem a) const noexcept { return residue(a) != 0; }

  /// Unique a = a0 + p * a1 with Teichmueller digits.
  PadicDigits padic(RingElem a) const {
    const RingElem a0 = teich_[teich_of_residue_[residue(a)]];
    const RingElem rest = sub(a, a0);  // every coordinate divisible by p
    std::uint32_t code = 0, scale = 1, c = rest.code;
    for (unsigned i = 0; i < r_; ++i) {
      code += ((c % pp_) / p_) * scale;
      c /= pp_;
      scale *= pp_;
    }
    const RingElem a1 = teich_[teich_of_residue_[residue(RingElem{code})]];
    return {a0, a1};
  }

  UnitParts unit_decompose(RingElem u) const {
    if (!is_unit(u)) throw Error(ErrorKind::NotAUnit, "element lies in the maximal ideal");
    const RingElem alpha0 = teich_[teich_of_residue_[residue(u)]];
    const RingElem principal = mul(u, xi_pow(-static_cast<std::int64_t>(*teich_log(alpha0))));
    return {alpha0, padic(principal).a1};
  }

  /// I = pR, listed as p * t over t in teichmuller() order.
  std::vector<RingElem> ideal_elements() const {
    std::vector<RingElem> out;
    out.reserve(teich_.size());
    for (const auto t : teich_) out.push_back(times_p(t));
    return out;
  }

  /// P = 1 + I.
  std::vector<RingElem> principal_units() const {
    std::vector<RingElem> out;
    for (const auto i : ideal_elements()) out.push_back(add(one(), i));
    return out;
  }

  /// R* in increasing code order.
  std::vector<RingElem> units() const {
    std::vector<RingElem> out;
    for (std::uint32_t c = 0; c < order_; ++c)
      if (is_unit({c})) out.push_back({c});
    return out;
  }

 private:
  friend RingCtx make_ring(std::uint32_t p, unsigned r, std::uint64_t bound);

  std::uint32_t p_ = 0;
  unsigned r_ = 0;
  std::uint32_t pp_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t residue_size_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<RingElem> teich_;
  std::vector<std::int32_t> teich_index_;
  std::vector<std::uint32_t> teich_of_residue_;
};

/// GR(p^2, r) over the field modulus of make_field(p, r) read modulo p^2.
/// xi = x^(p^r): raising a unit to the p^r kills its principal part.
inline RingCtx make_ring(std::uint32_t p, unsigned r, std::uint64_t bound = kDefaultSizeBound) {
  const FieldCtx field = make_field(p, r, bound);
  RingCtx ctx;
  ctx.p_ = p;
  ctx.r_ = r;
  ctx.pp_ = p * p;
  ctx.order_ = static_cast<std::uint32_t>(checked_pow(p, 2 * r, bound));
  ctx.residue_size_ = field.q();
  ctx.modulus_ = field.modulus();

  // x reduced modulo the (monic) modulus
  std::vector<std::uint32_t> x(r, 0);
  if (r == 1) {
    x[0] = (ctx.pp_ - ctx.modulus_[0]) % ctx.pp_;
  } else {
    x[1] = 1;
  }
  // teich_ must exist for xi() before it is filled; pow() does not touch it.
  const RingElem xi = ctx.pow(ctx.from_coeffs(x), field.q());

  const std::uint32_t tsize = field.q();
  ctx.teich_.reserve(tsize);
  ctx.teich_.push_back(ctx.zero());
  RingElem cur = ctx.one();
  for (std::uint32_t k = 0; k + 1 < tsize; ++k) {
    ctx.teich_.push_back(cur);
    cur = ctx.mul(cur, xi);
  }
  if (cur != ctx.one()) throw std::logic_error("Teichmueller generator has wrong order");

  ctx.teich_index_.assign(ctx.order_, -1);
  ctx.teich_of_residue_.assign(tsize, tsize);
  for (std::uint32_t idx = 0; idx < tsize; ++idx) {
    const RingElem t = ctx.teich_[idx];
    if (ctx.teich_index_[t.code] != -1) throw std::logic_error("Teichmueller generator has wrong order");
    ctx.teich_index_[t.code] = static_cast<std::int32_t>(idx);
    const auto res = ctx.residue(t);
    if (ctx.teich_of_residue_[res] != tsize) throw std::logic_error("Teichmueller set is not a transversal");
    ctx.teich_of_residue_[res] = idx;
  }
  return ctx;
}

/// The unique GR(p^2, n) inside GR(p^2, 2n) together with the coset data the
/// ring-side difference family needs.
struct SubringEmbedding {
  unsigned n = 0;
  /// T_n = {0} followed by xi^(j (p^n + 1)), j = 0..p^n - 2.
  std::vector<RingElem> teich_sub;
  /// R_n in increasing code order.
  std::vector<RingElem> elements;
  /// R_n^* in increasing code order.
  std::vector<RingElem> units;
  /// x_0 .. x_{p^n - 1}: Teichmueller elements with {p x_j} a transversal of I_2n / I_n.
  std::vector<RingElem> reps_S;

  bool contains(RingElem a) const { return std::binary_search(elements.begin(), elements.end(), a); }
  bool contains_unit(RingElem a) const { return std::binary_search(units.begin(), units.end(), a); }
};

inline SubringEmbedding subring(const RingCtx& ctx) {
  if (ctx.r() % 2 != 0) throw Error(ErrorKind::OddDegree, "subring needs an even extension degree");
  SubringEmbedding emb;
  emb.n = ctx.r() / 2;
  const std::uint64_t pn = checked_pow(ctx.p(), emb.n);

  emb.teich_sub.push_back(ctx.zero());
  for (std::uint64_t j = 0; j + 1 < pn; ++j) emb.teich_sub.push_back(ctx.xi_pow(static_cast<std::int64_t>(j * (pn + 1))));

  for (const auto a0 : emb.teich_sub) {
    for (const auto a1 : emb.teich_sub) {
      const RingElem a = ctx.add(a0, ctx.times_p(a1));
      emb.elements.push_back(a);
      if (a0 != ctx.zero()) emb.units.push_back(a);
    }
  }
  std::sort(emb.elements.begin(), emb.elements.end());
  std::sort(emb.units.begin(), emb.units.end());

  // I_n = p T_n; greedily pick x with p x in an uncovered coset of I_n.
  std::vector<RingElem> ideal_sub;
  for (const auto t : emb.teich_sub) ideal_sub.push_back(ctx.times_p(t));
  std::vector<bool> covered(ctx.order(), false);
  for (const auto x : ctx.teichmuller()) {
    if (emb.reps_S.size() == pn) break;
    const RingElem px = ctx.times_p(x);
    if (covered[px.code]) continue;
    emb.reps_S.push_back(x);
    for (const auto i : ideal_sub) covered[ctx.add(px, i).code] = true;
  }
  return emb;
}

/// P = p xi^(p^n) T_n^*, a coset of I_n inside I_2n not meeting R_n.
inline std::vector<RingElem> coset_P(const RingCtx& ctx, const SubringEmbedding& emb) {
  const std::uint64_t pn = checked_pow(ctx.p(), emb.n);
  const RingElem shift = ctx.times_p(ctx.xi_pow(static_cast<std::int64_t>(pn)));
  std::vector<RingElem> out;
  for (std::size_t j = 1; j < emb.teich_sub.size(); ++j) out.push_back(ctx.mul(shift, emb.teich_sub[j]));
  return out;
}

}  // namespace ddf

#endif  // DDF_GALOIS_RING_HPP
