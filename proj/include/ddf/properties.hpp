#ifndef DDF_PROPERTIES_HPP
#define DDF_PROPERTIES_HPP

// Structural laws of Galois rings and difference families, checked
// exhaustively for a given context.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "designs.hpp"
#include "galois_ring.hpp"
#include "iso.hpp"
#include "verification.hpp"

namespace ddf {

struct LawReport {
  bool holds = true;
  std::uint64_t cases = 0;
  std::string counterexample;

  void fail(std::string what) {
    if (holds) counterexample = std::move(what);
    holds = false;
  }
  LawReport& operator+=(const LawReport& o) {
    if (!o.holds) fail(o.counterexample);
    cases += o.cases;
    return *this;
  }
};

namespace detail {

inline std::vector<RingElem> teich_star(const RingCtx& ring) {
  return {ring.teichmuller().begin() + 1, ring.teichmuller().end()};
}

inline std::string code_str(RingElem a) { return std::to_string(a.code); }

/// Multiset Delta A in the ring, indexed by code.
inline std::vector<std::uint32_t> ring_delta(const RingCtx& ring, const std::vector<RingElem>& a) {
  std::vector<std::uint32_t> ms(ring.order(), 0);
  for (const auto x : a)
    for (const auto y : a)
      if (x != y) ++ms[ring.sub(x, y).code];
  return ms;
}

}  // namespace detail

/// u - u' is a unit iff the Teichmueller parts of the distinct units differ.
inline LawReport unit_difference_law(const RingCtx& ring) {
  LawReport rep;
  const auto units = ring.units();
  for (const auto u : units) {
    const auto pu = ring.unit_decompose(u);
    for (const auto w : units) {
      if (u == w) continue;
      ++rep.cases;
      const bool unit = ring.is_unit(ring.sub(u, w));
      if (unit != (pu.alpha0 != ring.unit_decompose(w).alpha0))
        rep.fail("u=" + detail::code_str(u) + " u'=" + detail::code_str(w));
    }
  }
  return rep;
}

/// Delta T* consists of units and is a union of T*-cosets, constant in
/// multiplicity on each coset.
inline LawReport teich_delta_coset_law(const RingCtx& ring) {
  LawReport rep;
  const auto ts = detail::teich_star(ring);
  const auto ms = detail::ring_delta(ring, ts);
  for (std::uint32_t c = 0; c < ring.order(); ++c) {
    if (ms[c] == 0) continue;
    const RingElem d{c};
    ++rep.cases;
    if (!ring.is_unit(d)) rep.fail("non-unit difference " + std::to_string(c));
    for (const auto t : ts)
      if (ms[ring.mul(d, t).code] != ms[c]) rep.fail("coset of " + std::to_string(c) + " not uniform");
  }
  return rep;
}

/// T* = -T* for odd p.
inline LawReport teich_symmetric_law(const RingCtx& ring) {
  LawReport rep;
  for (const auto t : detail::teich_star(ring)) {
    ++rep.cases;
    if (!ring.is_teichmuller(ring.neg(t))) rep.fail("-" + detail::code_str(t) + " not Teichmueller");
  }
  return rep;
}

/// For odd p: a difference has odd multiplicity in Delta T* iff it lies in 2T*.
inline LawReport odd_multiplicity_law(const RingCtx& ring) {
  LawReport rep;
  const auto ts = detail::teich_star(ring);
  const auto ms = detail::ring_delta(ring, ts);
  std::vector<bool> in_2t(ring.order(), false);
  const RingElem two = ring.from_int(2);
  for (const auto t : ts) in_2t[ring.mul(two, t).code] = true;
  for (std::uint32_t c = 0; c < ring.order(); ++c) {
    if (ms[c] == 0) continue;
    ++rep.cases;
    if ((ms[c] % 2 == 1) != in_2t[c]) rep.fail("difference " + std::to_string(c) + " multiplicity " + std::to_string(ms[c]));
  }
  return rep;
}

/// R_n^* + xi^a (1 + p b) R_n^* = R_2n^* \ (V u xi^a V) in GR(p^2, 2n), for
/// 0 <= a <= p^n - 2 and b in R_2n with xi^a (1 + p b) outside R_n^* and xi^a
/// outside T_n. cases counts the (a, b) pairs to which the identity applies.
inline LawReport momihara_sumset_law(const RingCtx& ring) {
  LawReport rep;
  const SubringEmbedding emb = subring(ring);
  const auto pn = static_cast<std::int64_t>(checked_pow(ring.p(), emb.n));
  std::vector<bool> in_v(ring.order(), false);
  for (const auto x : emb.reps_S) {
    const RingElem lead = ring.add(ring.one(), ring.times_p(x));
    for (const auto u : emb.units) in_v[ring.mul(lead, u).code] = true;
  }
  std::vector<bool> in_tn(ring.order(), false);
  for (const auto t : emb.teich_sub) in_tn[t.code] = true;

  for (std::int64_t a = 0; a <= pn - 2; ++a) {
    const RingElem xa = ring.xi_pow(a);
    if (in_tn[xa.code]) continue;
    std::vector<bool> target(ring.order(), false);
    for (std::uint32_t c = 0; c < ring.order(); ++c) {
      const RingElem y{c};
      if (!ring.is_unit(y) || in_v[c]) continue;
      // y in xi^a V iff xi^-a y in V
      if (in_v[ring.mul(ring.xi_pow(-a), y).code]) continue;
      target[c] = true;
    }
    for (std::uint32_t bc = 0; bc < ring.order(); ++bc) {
      const RingElem lead = ring.mul(xa, ring.add(ring.one(), ring.times_p(RingElem{bc})));
      if (emb.contains_unit(lead)) continue;
      ++rep.cases;
      std::vector<bool> sums(ring.order(), false);
      for (const auto u : emb.units) {
        const RingElem lu = ring.mul(lead, u);
        for (const auto w : emb.units) sums[ring.add(w, lu).code] = true;
      }
      if (sums != target) rep.fail("a=" + std::to_string(a) + " b=" + std::to_string(bc));
    }
  }
  return rep;
}

/// Delta(A + g) = Delta A for every block A and every g.
inline LawReport translation_invariance_law(const BlockFamily& fam) {
  LawReport rep;
  for (const auto& block : fam.blocks) {
    const DiffMultiset base = delta_set(fam.group, block);
    for (Index g = 0; g < fam.v(); ++g) {
      ElementSet moved;
      moved.reserve(block.size());
      for (const auto x : block) moved.push_back(fam.group.add(x, g));
      ++rep.cases;
      if (!(delta_set(fam.group, moved) == base)) rep.fail(fam.label + " shifted by " + std::to_string(g));
    }
  }
  return rep;
}

/// The certificate of d equals that of `trials` random relabelings with shuffled
/// block order.
inline LawReport certificate_invariance_law(const Design& d, unsigned trials, std::uint64_t seed,
                                            const SearchBudget& budget) {
  LawReport rep;
  const Certificate reference = canonical_form(d, budget);
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    ++rep.cases;
    if (canonical_form(random_relabel(d, rng), budget) != reference) rep.fail(d.origin + " trial " + std::to_string(t));
  }
  return rep;
}

}  // namespace ddf

#endif  // DDF_PROPERTIES_HPP
