#ifndef DDF_CONSTRUCTIONS_HPP
#define DDF_CONSTRUCTIONS_HPP

// The three near-complete disjoint difference families: cyclotomic classes in
// GF(p^m), the two-level coset family in GR(p^2, 2n), and the Teichmueller
// coset family in GR(p^2, r).

#include <algorithm>
#include <string>
#include <vector>

#include "finite_field.hpp"
#include "galois_ring.hpp"
#include "group_view.hpp"

namespace ddf {

struct BlockFamily {
  GroupView group;
  std::vector<ElementSet> blocks;
  std::string label;

  std::uint32_t v() const noexcept { return group.order(); }
  /// Size of the first block (all blocks share it for constructed families).
  std::size_t k() const noexcept { return blocks.empty() ? 0 : blocks.front().size(); }
};

inline ElementSet sorted_set(ElementSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

inline BlockFamily wilson_family(const FieldCtx& ctx, std::uint32_t e) {
  const auto classes = cyclotomic_classes(ctx, e);
  const std::uint32_t f = (ctx.q() - 1) / e;
  if (e < 2 || f < 2) throw Error(ErrorKind::DegenerateParameters, "need e >= 2 and f >= 2");
  BlockFamily fam{GroupView::of_field(ctx), {}, {}};
  for (const auto& cls : classes) {
    ElementSet block;
    for (const auto x : cls) block.push_back(fam.group.index_of(x.code));
    fam.blocks.push_back(sorted_set(std::move(block)));
  }
  fam.label = "wilson(p=" + std::to_string(ctx.p()) + ",m=" + std::to_string(ctx.r()) + ",e=" + std::to_string(e) + ")";
  return fam;
}

/// Cyclotomic classes of order e in GF(p^m).
inline BlockFamily wilson_family(std::uint32_t p, unsigned m, std::uint32_t e, std::uint64_t bound = kDefaultSizeBound) {
  return wilson_family(make_field(p, m, bound), e);
}

inline BlockFamily momihara_family(const RingCtx& ring) {
  const SubringEmbedding emb = subring(ring);
  const auto pn = static_cast<std::int64_t>(checked_pow(ring.p(), emb.n));
  const auto coset = coset_P(ring, emb);

  std::vector<RingElem> base(coset.begin(), coset.end());
  for (std::int64_t j = 0; j < pn; ++j) {
    const RingElem factor =
        ring.mul(ring.xi_pow(j), ring.add(ring.one(), ring.times_p(emb.reps_S[static_cast<std::size_t>(j)])));
    for (const auto u : emb.units) base.push_back(ring.mul(factor, u));
  }

  BlockFamily fam{GroupView::of_ring(ring), {}, {}};
  for (std::int64_t i = 0; i <= pn; ++i) {
    const RingElem scale = ring.xi_pow(i);
    ElementSet block;
    block.reserve(base.size());
    for (const auto x : base) block.push_back(ring.mul(scale, x).code);
    fam.blocks.push_back(sorted_set(std::move(block)));
  }
  fam.label = "momihara(p=" + std::to_string(ring.p()) + ",n=" + std::to_string(emb.n) + ")";
  return fam;
}

/// p^n + 1 blocks xi^i (P u U) in GR(p^2, 2n).
inline BlockFamily momihara_family(std::uint32_t p, unsigned n, std::uint64_t bound = kDefaultSizeBound) {
  if (n == 0) throw Error(ErrorKind::DegenerateParameters, "n must be positive");
  return momihara_family(make_ring(p, 2 * n, bound));
}

inline BlockFamily davis_family(const RingCtx& ring) {
  if (ring.residue_size() == 2) throw Error(ErrorKind::DegenerateParameters, "p^r = 2 gives blocks of size 1");
  const auto& teich = ring.teichmuller();
  BlockFamily fam{GroupView::of_ring(ring), {}, {}};
  for (const auto alpha : teich) {
    const RingElem factor = ring.add(ring.one(), ring.times_p(alpha));
    ElementSet block;
    for (std::size_t t = 1; t < teich.size(); ++t) block.push_back(ring.mul(factor, teich[t]).code);
    fam.blocks.push_back(sorted_set(std::move(block)));
  }
  ElementSet ideal;
  for (std::size_t t = 1; t < teich.size(); ++t) ideal.push_back(ring.times_p(teich[t]).code);
  fam.blocks.push_back(sorted_set(std::move(ideal)));
  fam.label = "davis(p=" + std::to_string(ring.p()) + ",r=" + std::to_string(ring.r()) + ")";
  return fam;
}

/// {(1 + p alpha) T^* : alpha in T} followed by p T^*, in GR(p^2, r).
inline BlockFamily davis_family(std::uint32_t p, unsigned r, std::uint64_t bound = kDefaultSizeBound) {
  if (is_prime(p) && r >= 1 && checked_pow(p, r) == 2)
    throw Error(ErrorKind::DegenerateParameters, "p^r = 2 gives blocks of size 1");
  return davis_family(make_ring(p, r, bound));
}

}  // namespace ddf

#endif  // DDF_CONSTRUCTIONS_HPP
