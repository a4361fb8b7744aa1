#ifndef DDF_DESIGNS_HPP
#define DDF_DESIGNS_HPP

// Developments of block families into 2-designs and the invariants used to
// tell designs apart: block intersection profiles and incidence ranks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "constructions.hpp"
#include "group_view.hpp"

namespace ddf {

using Block = std::vector<Index>;

struct Design {
  std::uint32_t v = 0;
  std::size_t k = 0;
  std::vector<Block> blocks;  // each sorted
  std::string origin;
  /// Present when the points are the elements of a known group.
  std::optional<GroupDescription> group;
  /// Automorphisms known in advance (translations for developments).
  std::vector<Permutation> known_automorphisms;

  std::size_t b() const noexcept { return blocks.size(); }
};

/// Builds a design from raw blocks, sorting each block and checking ranges.
inline Design make_design(std::uint32_t v, std::vector<Block> blocks, std::string origin = {}) {
  Design d;
  d.v = v;
  d.origin = std::move(origin);
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw Error(ErrorKind::Parse, "block repeats a point");
    if (!block.empty() && block.back() >= v) throw Error(ErrorKind::IndexOutOfRange, "point index out of range");
    if (!d.blocks.empty() && block.size() != d.k) throw Error(ErrorKind::UnequalBlockSizes, "blocks differ in size");
    d.k = block.size();
    d.blocks.push_back(std::move(block));
  }
  return d;
}

/// All translates D_i + g, outer loop over blocks, inner loop over g.
inline Design develop(const BlockFamily& fam) {
  std::vector<Block> blocks;
  blocks.reserve(fam.blocks.size() * fam.v());
  for (const auto& base : fam.blocks) {
    for (Index g = 0; g < fam.v(); ++g) {
      Block b;
      b.reserve(base.size());
      for (const auto x : base) b.push_back(fam.group.add(x, g));
      blocks.push_back(std::move(b));
    }
  }
  Design d = make_design(fam.v(), std::move(blocks), "dev " + fam.label);
  d.group = fam.group.description();
  d.known_automorphisms = fam.group.translation_generators();
  return d;
}

inline bool has_repeated_blocks(const Design& d) {
  auto sorted = d.blocks;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

struct PairBalance {
  bool holds = false;
  std::uint64_t lambda = 0;
  std::optional<std::pair<Index, Index>> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Every 2-subset of points lies in the same number of blocks.
inline PairBalance verify_2design(const Design& d) {
  PairBalance out;
  const std::size_t v = d.v;
  std::vector<std::uint64_t> cover(v * v, 0);
  for (const auto& block : d.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) ++cover[block[i] * v + block[j]];
  bool first = true;
  for (Index x = 0; x < v; ++x) {
    for (Index y = x + 1; y < v; ++y) {
      const auto c = cover[x * v + y];
      if (first) {
        out.lambda = c;
        first = false;
      } else if (c != out.lambda) {
        out.witness = {x, y};
        return out;
      }
    }
  }
  out.holds = true;
  return out;
}

inline std::vector<PointSet> block_bitsets(const Design& d) {
  std::vector<PointSet> sets;
  sets.reserve(d.b());
  for (const auto& block : d.blocks) {
    PointSet s(d.v);
    for (const auto x : block) s.set(x);
    sets.push_back(std::move(s));
  }
  return sets;
}

struct IntersectionProfile {
  /// |B_i cap B_j| -> number of unordered pairs i < j.
  std::map<std::size_t, std::uint64_t> histogram;

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (const auto& [size, count] : histogram)
      if (count > 0) out.push_back(size);
    return out;
  }
  bool contains(std::size_t size) const { return histogram.count(size) != 0; }
  std::uint64_t pairs() const {
    std::uint64_t s = 0;
    for (const auto& [size, count] : histogram) s += count;
    return s;
  }
  friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;
};

/// Histogram of the off-diagonal entries of M^T M over unordered block pairs.
inline IntersectionProfile intersection_profile(const Design& d, unsigned threads = 1) {
  const auto sets = block_bitsets(d);
  const std::size_t b = sets.size();
  threads = std::max(1U, threads);
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(d.k + 1, 0));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < b; i += threads)
      for (std::size_t j = i + 1; j < b; ++j) ++partial[w][sets[i].intersection_count(sets[j])];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  IntersectionProfile prof;
  for (std::size_t s = 0; s <= d.k; ++s) {
    std::uint64_t total = 0;
    for (const auto& part : partial) total += part[s];
    if (total > 0) prof.histogram[s] = total;
  }
  return prof;
}

inline std::vector<std::size_t> profile_support(const Design& d, unsigned threads = 1) {
  return intersection_profile(d, threads).support();
}

/// Rank over GF(ell) of the v x b point-block incidence matrix.
inline std::size_t incidence_p_rank(const Design& d, std::uint32_t ell) {
  if (!is_prime(ell)) throw Error(ErrorKind::NotPrime, std::to_string(ell) + " is not prime");
  const std::size_t rows = d.v, cols = d.b();
  std::vector<std::vector<std::uint32_t>> m(rows, std::vector<std::uint32_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto x : d.blocks[c]) m[x][c] = 1 % ell;

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = detail::inv_mod(m[rank][c], ell);
    for (auto& x : m[rank]) x = static_cast<std::uint32_t>(x * inv % ell);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] = static_cast<std::uint32_t>((m[r][j] + (ell - factor) * m[rank][j]) % ell);
    }
    ++rank;
  }
  return rank;
}

/// Image of the design under a point permutation (block order kept).
inline Design relabel_points(const Design& d, const Permutation& perm) {
  Design out = d;
  for (auto& block : out.blocks) {
    for (auto& x : block) x = perm[x];
    std::sort(block.begin(), block.end());
  }
  // conjugate known automorphisms: perm * g * perm^-1
  Permutation inv(perm.size());
  for (Index i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  for (auto& g : out.known_automorphisms) {
    Permutation h(g.size());
    for (Index x = 0; x < g.size(); ++x) h[x] = perm[g[inv[x]]];
    g = std::move(h);
  }
  out.group.reset();
  return out;
}

/// A random point relabeling together with a random block order.
template <class Rng>
Design random_relabel(const Design& d, Rng& rng, Permutation* applied = nullptr) {
  Permutation perm(d.v);
  for (Index i = 0; i < d.v; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Design out = relabel_points(d, perm);
  std::shuffle(out.blocks.begin(), out.blocks.end(), rng);
  if (applied != nullptr) *applied = perm;
  return out;
}

}  // namespace ddf

#endif  // DDF_DESIGNS_HPP
