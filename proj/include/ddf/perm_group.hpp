#ifndef DDF_PERM_GROUP_HPP
#define DDF_PERM_GROUP_HPP

// Order of a permutation group from generators (Knuth's variant of the
// Schreier-Sims algorithm).

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "group_view.hpp"

namespace ddf {

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (Index i = 0; i < n; ++i) p[i] = i;
  return p;
}

/// (a o b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (Index x = 0; x < a.size(); ++x) out[a[x]] = x;
  return out;
}

inline bool is_permutation(const Permutation& a, std::size_t n) {
  if (a.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto x : a) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline bool is_identity(const Permutation& a) {
  for (Index x = 0; x < a.size(); ++x)
    if (a[x] != x) return false;
  return true;
}

/// Sims table: level k holds, for each j <= k in the orbit of k under the
/// subgroup fixing every point above k, one element sending k to j.
class SimsTable {
 public:
  explicit SimsTable(std::size_t degree) : n_(degree), sigma_(degree), sigma_inv_(degree), gens_(degree) {
    for (std::size_t k = 0; k < n_; ++k) {
      sigma_[k].resize(k + 1);
      sigma_inv_[k].resize(k + 1);
      sigma_[k][k] = sigma_inv_[k][k] = identity_permutation(n_);
    }
  }

  std::size_t degree() const noexcept { return n_; }

  /// False when g was already in the group.
  bool add_generator(const Permutation& g) {
    if (n_ == 0 || contains(g)) return false;
    enter(static_cast<std::ptrdiff_t>(n_) - 1, g);
    return true;
  }

  bool contains(const Permutation& g) const { return member(static_cast<std::ptrdiff_t>(n_) - 1, g); }

  /// Level k: entry j is empty or sends k to j and fixes every point above k.
  const std::vector<Permutation>& transversal(std::size_t k) const { return sigma_[k]; }

  /// Bumped whenever the table grows.
  std::uint64_t version() const noexcept { return version_; }

  /// Exact group order; throws SizeExceeded past 2^64 - 1.
  std::uint64_t order() const {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < n_; ++k) {
      std::uint64_t orbit = 0;
      for (const auto& s : sigma_[k]) orbit += s.empty() ? 0 : 1;
      if (out > UINT64_MAX / orbit) throw Error(ErrorKind::SizeExceeded, "group order exceeds 64 bits");
      out *= orbit;
    }
    return out;
  }

 private:
  bool member(std::ptrdiff_t k, Permutation g) const {
    for (std::ptrdiff_t l = k; l >= 0; --l) {
      const Index j = g[static_cast<std::size_t>(l)];
      if (j > static_cast<Index>(l) || sigma_[l][j].empty()) return false;
      if (j != static_cast<Index>(l)) g = compose(sigma_inv_[l][j], g);
    }
    return true;
  }

  void enter(std::ptrdiff_t k, const Permutation& g) {
    if (k < 0 || member(k, g)) return;
    gens_[k].push_back(g);
    for (std::size_t j = 0; j < sigma_[k].size(); ++j)
      if (!sigma_[k][j].empty()) extend(k, compose(g, sigma_[k][j]));
  }

  void extend(std::ptrdiff_t k, const Permutation& g) {
    const Index j = g[static_cast<std::size_t>(k)];
    if (sigma_[k][j].empty()) {
      sigma_[k][j] = g;
      sigma_inv_[k][j] = inverse(g);
      ++version_;
      for (std::size_t t = 0; t < gens_[k].size(); ++t) {
        const Permutation next = compose(gens_[k][t], g);
        extend(k, next);
      }
    } else {
      enter(k - 1, compose(sigma_inv_[k][j], g));
    }
  }

  std::size_t n_;
  std::vector<std::vector<Permutation>> sigma_;
  std::vector<std::vector<Permutation>> sigma_inv_;
  std::vector<std::vector<Permutation>> gens_;
  std::uint64_t version_ = 0;
};

inline std::uint64_t permutation_group_order(const std::vector<Permutation>& gens, std::size_t degree) {
  SimsTable table(degree);
  for (const auto& g : gens) table.add_generator(g);
  return table.order();
}

}  // namespace ddf

#endif  // DDF_PERM_GROUP_HPP
