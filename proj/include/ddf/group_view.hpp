#ifndef DDF_GROUP_VIEW_HPP
#define DDF_GROUP_VIEW_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "finite_field.hpp"
#include "galois_ring.hpp"

namespace ddf {

using Index = std::uint32_t;
/// A set of group elements by index. Sorted unless stated otherwise.
using ElementSet = std::vector<Index>;
/// A permutation of {0, ..., n - 1} as its image vector.
using Permutation = std::vector<Index>;

enum class GroupKind { Field, Ring };

/// What is needed to rebuild the group: GF(p^degree) or GR(p^2, degree).
struct GroupDescription {
  GroupKind kind = GroupKind::Field;
  std::uint32_t p = 0;
  unsigned degree = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> xi;  // ring only: coordinates of the Teichmueller generator
};

/// Indexed additive group of a field or Galois ring.
///
/// Field indexing: 0 is zero and index t + 1 is alpha^t.
/// Ring indexing: index = sum_i c_i (p^2)^i over the coordinates c_i.
class GroupView {
 public:
  static GroupView of_field(const FieldCtx& ctx) {
    GroupView g;
    g.desc_ = {GroupKind::Field, ctx.p(), ctx.r(), ctx.modulus(), {}};
    g.base_ = ctx.p();
    g.digits_ = ctx.r();
    g.order_ = ctx.q();
    auto code_of = std::make_shared<std::vector<std::uint32_t>>(ctx.q());
    auto index_of = std::make_shared<std::vector<std::uint32_t>>(ctx.q());
    (*code_of)[0] = 0;
    (*index_of)[0] = 0;
    for (std::uint32_t t = 0; t + 1 < ctx.q(); ++t) {
      (*code_of)[t + 1] = ctx.exp_table()[t];
      (*index_of)[ctx.exp_table()[t]] = t + 1;
    }
    g.code_of_ = std::move(code_of);
    g.index_of_ = std::move(index_of);
    g.build_table();
    return g;
  }

  static GroupView of_ring(const RingCtx& ctx) {
    GroupView g;
    g.desc_ = {GroupKind::Ring, ctx.p(), ctx.r(), ctx.modulus(), ctx.coeffs(ctx.xi())};
    g.base_ = ctx.char_modulus();
    g.digits_ = ctx.r();
    g.order_ = ctx.order();
    g.build_table();
    return g;
  }

  std::uint32_t order() const noexcept { return order_; }
  Index zero() const noexcept { return 0; }
  const GroupDescription& description() const noexcept { return desc_; }

  std::uint32_t code_of(Index i) const noexcept { return code_of_ ? (*code_of_)[i] : i; }
  Index index_of(std::uint32_t code) const noexcept { return index_of_ ? (*index_of_)[code] : code; }

  Index add(Index a, Index b) const noexcept {
    if (table_) return (*table_)[static_cast<std::size_t>(a) * order_ + b];
    return index_of(add_codes(code_of(a), code_of(b)));
  }

  Index neg(Index a) const noexcept {
    std::uint32_t c = code_of(a), out = 0, scale = 1;
    for (unsigned i = 0; i < digits_; ++i) {
      out += ((base_ - c % base_) % base_) * scale;
      c /= base_;
      scale *= base_;
    }
    return index_of(out);
  }

  Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

  /// x -> x + g for each generator g of a generating set of the group.
  std::vector<Permutation> translation_generators() const {
    std::vector<Permutation> out;
    std::uint32_t unit = 1;
    for (unsigned i = 0; i < digits_; ++i, unit *= base_) {
      const Index g = index_of(unit);
      Permutation perm(order_);
      for (Index x = 0; x < order_; ++x) perm[x] = add(x, g);
      out.push_back(std::move(perm));
    }
    return out;
  }

  std::string describe() const {
    const std::string deg = std::to_string(desc_.degree);
    const std::string p = std::to_string(desc_.p);
    return desc_.kind == GroupKind::Field ? "GF(" + p + "^" + deg + ")" : "GR(" + p + "^2," + deg + ")";
  }

 private:
  std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const noexcept {
    if (base_ == 2) return a ^ b;
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < digits_; ++i) {
      out += ((a % base_ + b % base_) % base_) * scale;
      a /= base_;
      b /= base_;
      scale *= base_;
    }
    return out;
  }

  void build_table() {
    if (order_ > kTableLimit) return;
    auto table = std::make_shared<std::vector<Index>>(static_cast<std::size_t>(order_) * order_);
    for (Index a = 0; a < order_; ++a)
      for (Index b = 0; b < order_; ++b)
        (*table)[static_cast<std::size_t>(a) * order_ + b] = index_of(add_codes(code_of(a), code_of(b)));
    table_ = std::move(table);
  }

  static constexpr std::uint32_t kTableLimit = 1024;

  GroupDescription desc_;
  std::uint32_t base_ = 0;
  unsigned digits_ = 0;
  std::uint32_t order_ = 0;
  std::shared_ptr<const std::vector<std::uint32_t>> code_of_;
  std::shared_ptr<const std::vector<std::uint32_t>> index_of_;
  std::shared_ptr<const std::vector<Index>> table_;
};

/// Rebuilds the group a description refers to, checking the modulus matches.
inline GroupView group_from_description(const GroupDescription& d, std::uint64_t bound = kDefaultSizeBound) {
  if (d.kind == GroupKind::Field) {
    const FieldCtx ctx = make_field(d.p, d.degree, bound);
    if (!d.modulus.empty() && d.modulus != ctx.modulus())
      throw Error(ErrorKind::Parse, "field modulus differs from the canonical choice");
    return GroupView::of_field(ctx);
  }
  const RingCtx ctx = make_ring(d.p, d.degree, bound);
  if (!d.modulus.empty() && d.modulus != ctx.modulus())
    throw Error(ErrorKind::Parse, "ring modulus differs from the canonical choice");
  return GroupView::of_ring(ctx);
}

}  // namespace ddf

#endif  // DDF_GROUP_VIEW_HPP
