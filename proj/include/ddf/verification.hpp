#ifndef DDF_VERIFICATION_HPP
#define DDF_VERIFICATION_HPP

// Difference and sum multisets, and certification of difference families,
// external difference families, difference sets and relative difference sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "constructions.hpp"
#include "group_view.hpp"

namespace ddf {

/// Dense multiplicity table over group indices.
struct DiffMultiset {
  std::vector<std::uint64_t> counts;

  explicit DiffMultiset(std::size_t order = 0) : counts(order, 0) {}

  std::uint64_t operator[](Index i) const { return counts[i]; }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto c : counts) s += c;
    return s;
  }
  DiffMultiset& operator+=(const DiffMultiset& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    return *this;
  }
  friend bool operator==(const DiffMultiset&, const DiffMultiset&) = default;
};

/// Outcome of a "every nonzero element occurs lambda times" check. On failure
/// `witness` is the smallest index whose multiplicity differs from that of
/// the first nonzero index.
struct Uniformity {
  bool holds = false;
  std::uint64_t lambda = 0;
  std::optional<Index> witness;
  std::uint64_t witness_multiplicity = 0;

  explicit operator bool() const noexcept { return holds; }
};

/// Multiset {a - a' : a, a' in A, a != a'}.
inline DiffMultiset delta_set(const GroupView& g, const ElementSet& a) {
  DiffMultiset out(g.order());
  for (const auto x : a)
    for (const auto y : a)
      if (x != y) ++out.counts[g.sub(x, y)];
  return out;
}

/// Multiset {a + a' : a, a' in A, a != -a'}; doubled elements 2a are included.
inline DiffMultiset delta_plus_set(const GroupView& g, const ElementSet& a) {
  DiffMultiset out(g.order());
  for (const auto x : a)
    for (const auto y : a)
      if (x != g.neg(y)) ++out.counts[g.add(x, y)];
  return out;
}

/// Multiset {a - b : a in A, b in B, a != b}.
inline DiffMultiset cross_difference(const GroupView& g, const ElementSet& a, const ElementSet& b) {
  DiffMultiset out(g.order());
  for (const auto x : a)
    for (const auto y : b)
      if (x != y) ++out.counts[g.sub(x, y)];
  return out;
}

inline void require_disjoint(const BlockFamily& fam) {
  std::vector<bool> seen(fam.v(), false);
  for (const auto& block : fam.blocks) {
    for (const auto x : block) {
      if (x >= fam.v()) throw Error(ErrorKind::IndexOutOfRange, "block element outside the group");
      if (seen[x]) throw Error(ErrorKind::NotDisjoint, "element " + std::to_string(x) + " lies in two blocks");
      seen[x] = true;
    }
  }
}

inline void require_equal_sizes(const BlockFamily& fam) {
  for (const auto& block : fam.blocks)
    if (block.size() != fam.k()) throw Error(ErrorKind::UnequalBlockSizes, "blocks have different sizes");
}

/// Union of Delta D_i over the blocks.
inline DiffMultiset internal_delta(const BlockFamily& fam) {
  DiffMultiset out(fam.v());
  for (const auto& block : fam.blocks) out += delta_set(fam.group, block);
  return out;
}

/// Union of D_i - D_j over ordered pairs of distinct blocks.
inline DiffMultiset external_delta(const BlockFamily& fam) {
  require_disjoint(fam);
  DiffMultiset out(fam.v());
  for (std::size_t i = 0; i < fam.blocks.size(); ++i)
    for (std::size_t j = 0; j < fam.blocks.size(); ++j)
      if (i != j) out += cross_difference(fam.group, fam.blocks[i], fam.blocks[j]);
  return out;
}

/// Checks that every index of `domain` other than zero has the same count.
inline Uniformity uniform_over(const DiffMultiset& ms, const ElementSet& domain, Index zero) {
  Uniformity u;
  bool first = true;
  for (const auto x : domain) {
    if (x == zero) continue;
    if (first) {
      u.lambda = ms[x];
      first = false;
    } else if (ms[x] != u.lambda) {
      u.witness = x;
      u.witness_multiplicity = ms[x];
      return u;
    }
  }
  u.holds = true;
  return u;
}

inline ElementSet all_indices(std::uint32_t order) {
  ElementSet out(order);
  for (Index i = 0; i < order; ++i) out[i] = i;
  return out;
}

inline Uniformity is_ddf(const BlockFamily& fam) {
  require_disjoint(fam);
  require_equal_sizes(fam);
  return uniform_over(internal_delta(fam), all_indices(fam.v()), fam.group.zero());
}

inline Uniformity is_edf(const BlockFamily& fam) {
  require_equal_sizes(fam);
  return uniform_over(external_delta(fam), all_indices(fam.v()), fam.group.zero());
}

inline Uniformity is_difference_set(const GroupView& g, const ElementSet& a) {
  return uniform_over(delta_set(g, a), all_indices(g.order()), g.zero());
}

inline bool is_subgroup(const GroupView& g, const ElementSet& n) {
  std::vector<bool> in(g.order(), false);
  for (const auto x : n) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[g.zero()]) return false;
  for (const auto x : n)
    for (const auto y : n)
      if (!in[g.add(x, y)]) return false;
  return true;
}

/// Difference-set check inside a subgroup N containing A: the differences of
/// A must cover N \ {0} uniformly.
inline Uniformity is_difference_set_in(const GroupView& g, const ElementSet& a, const ElementSet& n) {
  if (!is_subgroup(g, n)) throw Error(ErrorKind::NotASubgroup, "ambient set is not a subgroup");
  return uniform_over(delta_set(g, a), n, g.zero());
}

struct RdsReport {
  bool holds = false;
  std::uint64_t m = 0;  // |G| / |N|
  std::uint64_t n = 0;  // |N|
  std::uint64_t k = 0;  // |A|
  std::uint64_t lambda = 0;
  std::optional<Index> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// A is an (m, n, k, lambda) relative difference set relative to N when its
/// differences cover G \ N exactly lambda times and never hit N \ {0}.
inline RdsReport is_relative_difference_set(const GroupView& g, const ElementSet& a, const ElementSet& n) {
  if (!is_subgroup(g, n)) throw Error(ErrorKind::NotASubgroup, "forbidden set is not a subgroup");
  RdsReport rep;
  rep.n = n.size();
  rep.m = g.order() / n.size();
  rep.k = a.size();
  const DiffMultiset ms = delta_set(g, a);
  std::vector<bool> in_n(g.order(), false);
  for (const auto x : n) in_n[x] = true;
  bool first = true;
  for (Index x = 0; x < g.order(); ++x) {
    if (x == g.zero()) continue;
    if (in_n[x]) {
      if (ms[x] != 0) {
        rep.witness = x;
        return rep;
      }
      continue;
    }
    if (first) {
      rep.lambda = ms[x];
      first = false;
    } else if (ms[x] != rep.lambda) {
      rep.witness = x;
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

struct BridgeReport {
  Uniformity ddf;
  Uniformity edf;
  Uniformity ds;  // the union of the blocks as a difference set
  bool holds = false;
};

/// The external parameter of a disjoint family must equal the difference-set
/// parameter of the union minus the internal parameter.
inline BridgeReport check_edf_ddf_bridge(const BlockFamily& fam) {
  BridgeReport rep;
  rep.ddf = is_ddf(fam);
  rep.edf = is_edf(fam);
  ElementSet all;
  for (const auto& block : fam.blocks) all.insert(all.end(), block.begin(), block.end());
  rep.ds = is_difference_set(fam.group, sorted_set(std::move(all)));
  rep.holds = rep.ddf.holds && rep.edf.holds && rep.ds.holds && rep.ds.lambda >= rep.ddf.lambda &&
              rep.edf.lambda == rep.ds.lambda - rep.ddf.lambda;
  return rep;
}

}  // namespace ddf

#endif  // DDF_VERIFICATION_HPP
