#ifndef DDF_ISO_HPP
#define DDF_ISO_HPP

// Canonical labeling of designs by individualization-refinement on the
// point-block incidence graph, with automorphism pruning. Yields certificates,
// isomorphisms and automorphism group orders.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bitset.hpp"
#include "designs.hpp"
#include "error.hpp"
#include "perm_group.hpp"

namespace ddf {

struct SearchBudget {
  std::uint32_t max_points = 128;
  std::size_t max_blocks = 512;
  std::uint64_t max_nodes = 2'000'000;
};

/// Which non-singleton point cell to individualize. Certificates are only
/// comparable between searches using the same rule.
enum class TargetCell { FirstLargest, FirstSmallest };

/// Byte encoding of the canonically relabeled block multiset: v, b, k as
/// little-endian 32-bit words, then each block's labels as 16-bit words, blocks
/// in canonical order.
struct Certificate {
  std::vector<std::uint8_t> bytes;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct CanonicalResult {
  Certificate certificate;
  /// point -> canonical label
  Permutation labeling;
  /// Generators of the full automorphism group (found during search plus any
  /// seeded known automorphisms).
  std::vector<Permutation> generators;
  std::uint64_t group_order = 1;
  std::uint64_t nodes = 0;
};

/// True iff mapping every block of `d1` through `bijection` gives exactly the
/// block multiset of `d2`.
inline bool verify_isomorphism(const Design& d1, const Design& d2, const Permutation& bijection) {
  if (!is_permutation(bijection, d1.v)) throw Error(ErrorKind::NotAPermutation, "bijection is not a permutation of the points");
  if (d1.v != d2.v || d1.b() != d2.b() || d1.k != d2.k) return false;
  std::vector<Block> mapped;
  mapped.reserve(d1.b());
  for (const auto& block : d1.blocks) {
    Block m;
    m.reserve(block.size());
    for (const auto x : block) m.push_back(bijection[x]);
    std::sort(m.begin(), m.end());
    mapped.push_back(std::move(m));
  }
  auto target = d2.blocks;
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  return mapped == target;
}

namespace detail {

using Trace = std::vector<std::uint32_t>;

/// Collects a refinement trace while comparing it against the traces of the
/// first and best paths, so a hopeless child can be abandoned early.
struct TraceSink {
  Trace out;
  const Trace* first = nullptr;  // set while the path still matches the first path
  const Trace* best = nullptr;   // set while the path ties the best path
  int best_cmp = 1;              // used when best is null

  /// Appends x; true when the child is now known to be prunable.
  bool push(std::uint32_t x) {
    const std::size_t i = out.size();
    out.push_back(x);
    if (first != nullptr && (i >= first->size() || (*first)[i] != x)) first = nullptr;
    if (best != nullptr) {
      if (i >= best->size() || (*best)[i] < x) {
        best = nullptr;
        best_cmp = 1;
      } else if (x < (*best)[i]) {
        best = nullptr;
        best_cmp = -1;
      }
    }
    return first == nullptr && best == nullptr && best_cmp < 0;
  }
};

/// Ordered partition of the n = v + b vertices; points occupy positions [0, v).
struct Partition {
  std::vector<std::uint32_t> lab;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
  std::vector<std::uint32_t> cell_end;  // start -> one past the end
};

class IncidenceGraph {
 public:
  explicit IncidenceGraph(const Design& d) : v_(d.v), n_(d.v + static_cast<std::uint32_t>(d.b())) {
    std::vector<std::vector<std::uint32_t>> adj(n_);
    for (std::uint32_t bi = 0; bi < d.b(); ++bi) {
      for (const auto x : d.blocks[bi]) {
        adj[x].push_back(v_ + bi);
        adj[v_ + bi].push_back(x);
      }
    }
    offsets_.assign(n_ + 1, 0);
    for (std::uint32_t x = 0; x < n_; ++x) offsets_[x + 1] = offsets_[x] + static_cast<std::uint32_t>(adj[x].size());
    targets_.reserve(offsets_[n_]);
    for (const auto& a : adj) targets_.insert(targets_.end(), a.begin(), a.end());
    count_.assign(n_, 0);
  }

  std::uint32_t points() const noexcept { return v_; }
  std::uint32_t vertices() const noexcept { return n_; }

  Partition initial_partition(TraceSink& trace) {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0U);
    p.pos = p.lab;
    p.cell_of.assign(n_, 0);
    p.cell_end.assign(n_ + 1, 0);
    std::deque<std::uint32_t> queue;
    if (v_ > 0) {
      p.cell_end[0] = v_;
      queue.push_back(0);
    }
    if (n_ > v_) {
      for (std::uint32_t x = v_; x < n_; ++x) p.cell_of[x] = v_;
      p.cell_end[v_] = n_;
      queue.push_back(v_);
    }
    refine(p, queue, trace);
    return p;
  }

  /// Splits w off the front of its cell and refines to an equitable partition.
  /// False when the sink asked to abandon the child part way.
  bool individualize(Partition& p, std::uint32_t w, TraceSink& trace) {
    const std::uint32_t cs = p.cell_of[w];
    const std::uint32_t ce = p.cell_end[cs];
    const std::uint32_t other = p.lab[cs];
    const std::uint32_t wp = p.pos[w];
    p.lab[wp] = other;
    p.pos[other] = wp;
    p.lab[cs] = w;
    p.pos[w] = cs;
    p.cell_end[cs] = cs + 1;
    if (cs + 1 < ce) {
      p.cell_end[cs + 1] = ce;
      for (std::uint32_t i = cs + 1; i < ce; ++i) p.cell_of[p.lab[i]] = cs + 1;
    }
    if (trace.push(cs)) return false;
    std::deque<std::uint32_t> queue{cs};
    return refine(p, queue, trace);
  }

 private:
  bool refine(Partition& p, std::deque<std::uint32_t>& queue, TraceSink& trace) {
    std::vector<char> queued(n_ + 1, 0);
    for (const auto s : queue) queued[s] = 1;
    std::vector<std::uint32_t> touched, starts;
    while (!queue.empty()) {
      const std::uint32_t ws = queue.front();
      queue.pop_front();
      queued[ws] = 0;
      const std::uint32_t we = p.cell_end[ws];
      touched.clear();
      for (std::uint32_t i = ws; i < we; ++i) {
        const std::uint32_t x = p.lab[i];
        for (std::uint32_t e = offsets_[x]; e < offsets_[x + 1]; ++e) {
          const std::uint32_t y = targets_[e];
          if (count_[y]++ == 0) touched.push_back(y);
        }
      }
      std::sort(touched.begin(), touched.end(), [&](std::uint32_t a, std::uint32_t b) {
        return p.cell_of[a] != p.cell_of[b] ? p.cell_of[a] < p.cell_of[b] : count_[a] < count_[b];
      });

      for (std::size_t g = 0; g < touched.size();) {
        const std::uint32_t cs = p.cell_of[touched[g]];
        std::size_t h = g;
        while (h < touched.size() && p.cell_of[touched[h]] == cs) ++h;
        const std::uint32_t ce = p.cell_end[cs];
        const std::size_t hit = h - g;
        if (hit == ce - cs && count_[touched[g]] == count_[touched[h - 1]]) {
          g = h;
          continue;
        }
        // untouched members (count 0) stay in front, touched ones go to the
        // back in increasing count
        std::uint32_t back = ce;
        for (std::size_t t = h; t-- > g;) {
          const std::uint32_t y = touched[t];
          --back;
          const std::uint32_t other = p.lab[back];
          const std::uint32_t py = p.pos[y];
          p.lab[py] = other;
          p.pos[other] = py;
          p.lab[back] = y;
          p.pos[y] = back;
        }
        starts.clear();
        if (back > cs) starts.push_back(cs);
        for (std::size_t t = g; t < h; ++t)
          if (t == g || count_[touched[t]] != count_[touched[t - 1]]) starts.push_back(back + static_cast<std::uint32_t>(t - g));

        bool hopeless = trace.push(cs) || trace.push(static_cast<std::uint32_t>(starts.size()));
        std::uint32_t largest = cs, largest_size = 0;
        for (std::size_t f = 0; f < starts.size(); ++f) {
          const std::uint32_t fs = starts[f];
          const std::uint32_t fe = f + 1 < starts.size() ? starts[f + 1] : ce;
          p.cell_end[fs] = fe;
          for (std::uint32_t i = fs; i < fe; ++i) p.cell_of[p.lab[i]] = fs;
          if (!hopeless) hopeless = trace.push(count_[p.lab[fs]]) || trace.push(fe - fs);
          if (fe - fs > largest_size) {
            largest = fs;
            largest_size = fe - fs;
          }
        }
        if (hopeless) {
          for (const auto y : touched) count_[y] = 0;
          return false;
        }
        const bool was_queued = queued[cs] != 0;
        for (const auto fs : starts) {
          if (queued[fs]) continue;
          if (!was_queued && fs == largest) continue;
          queued[fs] = 1;
          queue.push_back(fs);
        }
        g = h;
      }
      for (const auto y : touched) count_[y] = 0;
    }
    return true;
  }

  std::uint32_t v_;
  std::uint32_t n_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> count_;
};

using CertKey = std::vector<PointSet>;

class CanonicalSearch {
 public:
  CanonicalSearch(const Design& d, const SearchBudget& budget, TargetCell rule)
      : design_(d), graph_(d), budget_(budget), rule_(rule) {
    for (const auto& g : d.known_automorphisms) {
      if (!verify_isomorphism(d, d, g)) throw std::invalid_argument("seeded permutation is not an automorphism");
      if (!is_identity(g)) gens_.push_back(g);
    }
  }

  CanonicalResult run() {
    TraceSink root_trace;
    Partition root = graph_.initial_partition(root_trace);
    cmp_.assign(1, 0);
    explore(root, 0, true);

    CanonicalResult out;
    out.labeling = best_lab_;
    out.certificate = encode(best_cert_);
    out.generators = gens_;
    out.group_order = table_ ? table_->order() : permutation_group_order(gens_, design_.v);
    out.nodes = nodes_;
    return out;
  }

 private:
  // Returns the depth at which the search resumes.
  std::size_t explore(const Partition& p, std::size_t depth, bool eq_first) {
    if (++nodes_ > budget_.max_nodes) throw Error(ErrorKind::BudgetExceeded, "search node budget exhausted");

    std::uint32_t target = kNone, target_size = 0;
    for (std::uint32_t s = 0; s < graph_.points(); s = p.cell_end[s]) {
      const std::uint32_t size = p.cell_end[s] - s;
      const bool better = rule_ == TargetCell::FirstLargest ? size > target_size : size < target_size;
      if (size > 1 && (target == kNone || better)) {
        target = s;
        target_size = size;
      }
    }
    if (target == kNone) return leaf(p, depth, eq_first);

    std::vector<std::uint32_t> children(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
    std::sort(children.begin(), children.end());
    std::vector<std::uint32_t> explored;
    OrbitCache orbits;

    for (const auto w : children) {
      if (!explored.empty() && in_explored_orbit(orbits, w, explored)) continue;
      explored.push_back(w);

      Partition child = p;
      TraceSink sink;
      if (have_first_) {
        if (eq_first && depth < first_traces_.size()) sink.first = &first_traces_[depth];
        if (cmp_[depth] == 0 && depth < best_traces_.size()) sink.best = &best_traces_[depth];
        sink.best_cmp = cmp_[depth] == 0 ? 1 : cmp_[depth];
      }
      if (!graph_.individualize(child, w, sink)) continue;

      path_.push_back(w);
      traces_.push_back(std::move(sink.out));
      bool child_eq_first = false;
      int child_cmp = 0;
      if (have_first_) {
        child_eq_first = eq_first && depth < first_traces_.size() && traces_.back() == first_traces_[depth];
        child_cmp = cmp_[depth];
        if (child_cmp == 0) {
          if (depth >= best_traces_.size()) {
            child_cmp = 1;
          } else {
            const auto& bt = best_traces_[depth];
            child_cmp = traces_.back() < bt ? -1 : (bt < traces_.back() ? 1 : 0);
          }
        }
      } else {
        child_eq_first = true;
      }
      cmp_.resize(depth + 2);
      cmp_[depth + 1] = child_cmp;

      std::size_t resume = depth + 1;
      if (child_eq_first || child_cmp >= 0) resume = explore(child, depth + 1, child_eq_first);

      path_.pop_back();
      traces_.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  std::size_t leaf(const Partition& p, std::size_t depth, bool eq_first) {
    const std::uint32_t v = graph_.points();
    Permutation lab(v);
    for (std::uint32_t x = 0; x < v; ++x) lab[x] = p.pos[x];
    CertKey cert = relabeled(lab);

    if (!have_first_) {
      have_first_ = true;
      first_path_ = best_path_ = path_;
      first_traces_ = best_traces_ = traces_;
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      build_table();
      return depth;
    }
    if (eq_first && cert == first_cert_) {
      record(compose(inverse(first_lab_), lab));
      return common_prefix(path_, first_path_);
    }
    const int cmp = cmp_[depth];
    if (cmp == 0 && cert == best_cert_) {
      record(compose(inverse(best_lab_), lab));
      return common_prefix(path_, best_path_);
    }
    if (cmp > 0 || (cmp == 0 && best_cert_ < cert)) {
      best_path_ = path_;
      best_traces_ = traces_;
      best_lab_ = lab;
      best_cert_ = std::move(cert);
      std::fill(cmp_.begin(), cmp_.end(), 0);
    }
    return depth;
  }

  CertKey relabeled(const Permutation& lab) const {
    CertKey out;
    out.reserve(design_.b());
    for (const auto& block : design_.blocks) {
      PointSet s(design_.v);
      for (const auto x : block) s.set(lab[x]);
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Certificate encode(const CertKey& key) const {
    Certificate c;
    auto put32 = [&](std::uint32_t x) {
      for (int i = 0; i < 4; ++i) c.bytes.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
    };
    put32(design_.v);
    put32(static_cast<std::uint32_t>(design_.b()));
    put32(static_cast<std::uint32_t>(design_.k));
    for (const auto& s : key) {
      for (std::uint32_t x = 0; x < design_.v; ++x) {
        if (!s.test(x)) continue;
        c.bytes.push_back(static_cast<std::uint8_t>(x & 0xFFU));
        c.bytes.push_back(static_cast<std::uint8_t>(x >> 8));
      }
    }
    return c;
  }

  void record(Permutation g) {
    if (is_identity(g)) return;
    if (!table_ || table_->add_generator(conjugate(g))) gens_.push_back(std::move(g));
  }

  // Stabilizer chain along the first path: first_path_[i] becomes point v-1-i.
  void build_table() {
    const std::uint32_t v = design_.v;
    conj_.assign(v, kNone);
    std::uint32_t next = v;
    for (const auto w : first_path_) conj_[w] = --next;
    for (std::uint32_t x = 0; x < v; ++x)
      if (conj_[x] == kNone) conj_[x] = --next;
    conj_inv_ = inverse(conj_);
    table_ = std::make_unique<SimsTable>(v);
    for (const auto& g : gens_) table_->add_generator(conjugate(g));
  }

  Permutation conjugate(const Permutation& g) const {
    Permutation h(g.size());
    for (std::uint32_t x = 0; x < g.size(); ++x) h[conj_[x]] = conj_[g[x]];
    return h;
  }

  static std::size_t common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  struct OrbitCache {
    std::uint64_t key = UINT64_MAX;
    std::vector<std::uint32_t> parent;
  };

  static std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool on_first_path() const {
    return path_.size() <= first_path_.size() && std::equal(path_.begin(), path_.end(), first_path_.begin());
  }

  // On the first path: orbits of the full pointwise stabilizer of the path,
  // read off the Sims table. Elsewhere: orbits of the known automorphisms
  // that happen to fix the path pointwise.
  bool in_explored_orbit(OrbitCache& cache, std::uint32_t w, const std::vector<std::uint32_t>& explored) {
    const bool chain = table_ && on_first_path();
    const std::uint64_t key = chain ? (table_->version() << 1) | 1U : static_cast<std::uint64_t>(gens_.size()) << 1;
    if (cache.key != key) {
      cache.key = key;
      cache.parent.resize(design_.v);
      std::iota(cache.parent.begin(), cache.parent.end(), 0U);
      auto unite = [&](const Permutation& g) {
        for (std::uint32_t x = 0; x < design_.v; ++x) {
          const auto a = find(cache.parent, x), b = find(cache.parent, g[x]);
          if (a != b) cache.parent[std::max(a, b)] = std::min(a, b);
        }
      };
      if (chain) {
        // in conjugated labels the stabilizer of the path fixes every point
        // above v-1-depth
        const std::size_t top = design_.v - 1 - path_.size();
        for (std::size_t k = 0; k <= top && k < design_.v; ++k)
          for (std::size_t j = 0; j < k; ++j)
            if (!table_->transversal(k)[j].empty()) unite(table_->transversal(k)[j]);
      } else {
        for (const auto& g : gens_) {
          if (std::all_of(path_.begin(), path_.end(), [&](std::uint32_t u) { return g[u] == u; })) unite(g);
        }
      }
    }
    const auto label = [&](std::uint32_t x) { return chain ? conj_[x] : x; };
    const auto rw = find(cache.parent, label(w));
    for (const auto e : explored)
      if (find(cache.parent, label(e)) == rw) return true;
    return false;
  }

  static constexpr std::uint32_t kNone = UINT32_MAX;

  const Design& design_;
  IncidenceGraph graph_;
  SearchBudget budget_;
  TargetCell rule_;
  std::vector<Permutation> gens_;
  std::unique_ptr<SimsTable> table_;
  Permutation conj_, conj_inv_;
  std::uint64_t nodes_ = 0;

  std::vector<std::uint32_t> path_;
  std::vector<Trace> traces_;
  std::vector<int> cmp_;  // cmp_[d]: path prefix of depth d against the best path

  bool have_first_ = false;
  std::vector<std::uint32_t> first_path_, best_path_;
  std::vector<Trace> first_traces_, best_traces_;
  Permutation first_lab_, best_lab_;
  CertKey first_cert_, best_cert_;
};

inline void check_budget(const Design& d, const SearchBudget& budget) {
  if (d.v > budget.max_points || d.b() > budget.max_blocks)
    throw Error(ErrorKind::BudgetExceeded, "design with v=" + std::to_string(d.v) + ", b=" + std::to_string(d.b()) +
                                               " exceeds the search budget");
}

}  // namespace detail

/// Full canonical search: certificate, canonical labeling, automorphism group.
inline CanonicalResult canonical_search(const Design& d, const SearchBudget& budget = {},
                                        TargetCell rule = TargetCell::FirstLargest) {
  detail::check_budget(d, budget);
  return detail::CanonicalSearch(d, budget, rule).run();
}

inline Certificate canonical_form(const Design& d, const SearchBudget& budget = {},
                                  TargetCell rule = TargetCell::FirstLargest) {
  return canonical_search(d, budget, rule).certificate;
}

inline std::uint64_t automorphism_group_order(const Design& d, const SearchBudget& budget = {},
                                              TargetCell rule = TargetCell::FirstLargest) {
  return canonical_search(d, budget, rule).group_order;
}

struct IsoVerdict {
  bool isomorphic = false;
  /// point of d1 -> point of d2, present when isomorphic
  std::optional<Permutation> bijection;

  explicit operator bool() const noexcept { return isomorphic; }
};

inline IsoVerdict are_isomorphic(const Design& d1, const Design& d2, const SearchBudget& budget = {}) {
  detail::check_budget(d1, budget);
  detail::check_budget(d2, budget);
  if (d1.v != d2.v || d1.b() != d2.b() || d1.k != d2.k) return {};
  const CanonicalResult c1 = canonical_search(d1, budget);
  const CanonicalResult c2 = canonical_search(d2, budget);
  if (c1.certificate != c2.certificate) return {};
  Permutation bij = compose(inverse(c2.labeling), c1.labeling);
  if (!verify_isomorphism(d1, d2, bij)) throw std::logic_error("canonical labelings disagree with certificates");
  return {true, std::move(bij)};
}

}  // namespace ddf

#endif  // DDF_ISO_HPP
