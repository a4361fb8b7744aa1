#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ddf/finite_field.hpp"

using namespace ddf;

namespace {

// Schoolbook polynomial product mod (f, p), independent of the table code.
std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t r = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t d = 2 * r - 1; d >= r; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= r; ++k) prod[d - r + k] = (prod[d - r + k] + p * p - c * f[k] % p) % p;
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(r)};
}

std::uint64_t order_of(const FieldCtx& f, FieldElem a) {
  FieldElem x = a;
  std::uint64_t k = 1;
  while (x != f.one()) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace

TEST(FiniteField, SizesAndOrder) {
  const auto f16 = make_field(2, 4);
  EXPECT_EQ(f16.q(), 16u);
  EXPECT_EQ(order_of(f16, f16.alpha()), 15u);
  const auto f81 = make_field(3, 4);
  EXPECT_EQ(f81.q(), 81u);
  EXPECT_EQ(order_of(f81, f81.alpha()), 80u);
}

TEST(FiniteField, RejectsNonPrime) {
  try {
    make_field(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(FiniteField, RejectsOversize) {
  try {
    make_field(2, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeExceeded);
  }
  EXPECT_THROW(make_field(3, 4, 80), Error);
}

TEST(FiniteField, ModulusIsSmallestPrimitive) {
  // x^4 + x^3 + 1 over GF(2); x^2 + x + 2 over GF(3)
  EXPECT_EQ(make_field(2, 4).modulus(), (std::vector<std::uint32_t>{1, 0, 0, 1, 1}));
  EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
  // prime field: x + c with -c primitive; -2 = 5 mod 7
  EXPECT_EQ(make_field(7, 1).modulus(), (std::vector<std::uint32_t>{2, 1}));
}

TEST(FiniteField, SmallestPrimitiveBruteForce) {
  for (const auto& [p, r] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 5u}, {3u, 3u}}) {
    const auto f = make_field(p, r);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= p;
    // enumerate monic polys lexicographically (constant term first, varying fastest on the highest coeff)
    std::vector<std::uint32_t> best;
    for (std::uint64_t t = 0; t < q && best.empty(); ++t) {
      std::vector<std::uint32_t> m(r + 1, 0);
      std::uint64_t x = t;
      for (unsigned i = r; i-- > 0;) {
        m[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      m[r] = 1;
      if (m[0] == 0) continue;
      // x has order q-1 in GF(p)[x]/(m)?
      std::vector<std::uint32_t> xpoly(r, 0), cur(r, 0);
      if (r == 1) {
        xpoly[0] = (p - m[0]) % p;
      } else {
        xpoly[1] = 1;
      }
      cur[0] = 1;
      std::uint64_t ord = 0;
      std::vector<std::uint32_t> unit(r, 0);
      unit[0] = 1;
      for (std::uint64_t k = 1; k < q; ++k) {
        cur = slow_mul(cur, xpoly, m, p);
        if (cur == unit) {
          ord = k;
          break;
        }
      }
      if (ord == q - 1) best = m;
    }
    EXPECT_EQ(f.modulus(), best) << p << "^" << r;
  }
}

TEST(FiniteField, MulMatchesPolynomialProduct) {
  for (const auto& [p, r] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    const auto f = make_field(p, r);
    for (std::uint32_t a = 0; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        const auto want = slow_mul(f.coeffs({a}), f.coeffs({b}), f.modulus(), p);
        ASSERT_EQ(f.coeffs(f.mul({a}, {b})), want);
      }
  }
}

TEST(FiniteField, AddIsCoordinatewise) {
  const auto f = make_field(5, 2);
  for (std::uint32_t a = 0; a < f.q(); ++a)
    for (std::uint32_t b = 0; b < f.q(); ++b) {
      const auto ca = f.coeffs({a}), cb = f.coeffs({b}), cs = f.coeffs(f.add({a}, {b}));
      for (std::size_t i = 0; i < ca.size(); ++i) ASSERT_EQ(cs[i], (ca[i] + cb[i]) % 5);
    }
}

TEST(FiniteField, ExponentArithmetic) {
  const auto f = make_field(2, 4);
  EXPECT_EQ(f.mul(f.exp(3), f.exp(13)), f.exp(1));
  EXPECT_EQ(f.dlog(f.one()), 0u);
  EXPECT_EQ(f.exp_table()[0], 1u);
  for (std::uint32_t x = 0; x < f.q(); ++x) EXPECT_EQ(f.add({x}, f.neg({x})), f.zero());
}

TEST(FiniteField, DlogOfZeroThrows) {
  const auto f = make_field(3, 2);
  try {
    f.dlog(f.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DlogOfZero);
  }
}

TEST(FiniteField, DlogRoundTrip) {
  for (const auto& [p, r] : {std::pair{2u, 6u}, {3u, 4u}, {13u, 1u}, {5u, 3u}}) {
    const auto f = make_field(p, r);
    for (std::uint32_t t = 0; t + 1 < f.q(); ++t) ASSERT_EQ(f.dlog(f.exp(t)), t);
    for (std::uint32_t c = 1; c < f.q(); ++c) ASSERT_EQ(f.exp(f.dlog({c})), FieldElem{c});
  }
}

TEST(FiniteField, RandomFieldAxioms) {
  std::mt19937_64 rng(7);
  for (const auto& [p, r] : {std::pair{2u, 8u}, {3u, 5u}, {11u, 2u}, {31u, 1u}}) {
    const auto f = make_field(p, r);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const FieldElem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
      ASSERT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
      if (a != f.zero()) {
        ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
      }
      const std::int64_t k = static_cast<std::int64_t>(pick(rng));
      FieldElem slow = f.one();
      for (std::int64_t i = 0; i < k; ++i) slow = f.mul(slow, a);
      ASSERT_EQ(f.pow(a, k), slow);
    }
  }
}

TEST(FiniteField, CoeffsRoundTrip) {
  const auto f = make_field(3, 3);
  for (std::uint32_t c = 0; c < f.q(); ++c) {
    const auto v = f.coeffs({c});
    ASSERT_EQ(v.size(), 3u);
    for (const auto x : v) ASSERT_LT(x, 3u);
    ASSERT_EQ(f.from_coeffs(v), FieldElem{c});
  }
}

TEST(Cyclotomy, ClassesPartition) {
  const auto f = make_field(2, 4);
  const auto cls = cyclotomic_classes(f, 3);
  ASSERT_EQ(cls.size(), 3u);
  std::set<FieldElem> all;
  for (const auto& c : cls) {
    EXPECT_EQ(c.size(), 5u);
    all.insert(c.begin(), c.end());
  }
  EXPECT_EQ(all.size(), 15u);
  EXPECT_FALSE(all.count(f.zero()));

  const auto singletons = cyclotomic_classes(f, 15);
  ASSERT_EQ(singletons.size(), 15u);
  for (const auto& c : singletons) EXPECT_EQ(c.size(), 1u);
}

TEST(Cyclotomy, ClassZeroIsSubgroup) {
  const auto f = make_field(2, 4);
  const auto c0 = cyclotomic_classes(f, 3)[0];
  const std::set<FieldElem> s(c0.begin(), c0.end());
  for (const auto a : c0)
    for (const auto b : c0) EXPECT_TRUE(s.count(f.mul(a, b)));
}

TEST(Cyclotomy, ClassMembershipByLog) {
  const auto f = make_field(3, 4);
  const auto cls = cyclotomic_classes(f, 10);
  for (std::uint32_t i = 0; i < 10; ++i)
    for (const auto a : cls[i]) ASSERT_EQ(f.dlog(a) % 10, i);
}

TEST(Cyclotomy, NotDividing) {
  const auto f = make_field(2, 4);
  try {
    cyclotomic_classes(f, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DoesNotDivide);
  }
  try {
    cyclotomic_number(f, 3, 3, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Cyclotomy, KnownNumbers) {
  const auto f16 = make_field(2, 4);
  EXPECT_EQ(cyclotomic_number(f16, 3, 0, 0), 0u);
  EXPECT_EQ(cyclotomic_number(f16, 3, 0, 1), 2u);
  EXPECT_EQ(cyclotomic_number(f16, 3, 1, 2), 1u);
  const auto f81 = make_field(3, 4);
  EXPECT_EQ(cyclotomic_number(f81, 10, 0, 0), 7u);
  EXPECT_EQ(cyclotomic_number(f81, 10, 0, 1), 0u);
  EXPECT_EQ(cyclotomic_number(f81, 10, 1, 2), 1u);
}

TEST(Cyclotomy, TotalCount) {
  for (const auto& [p, r, e] : {std::tuple{2u, 4u, 3u}, {2u, 4u, 5u}, {3u, 4u, 10u}, {3u, 4u, 8u}, {7u, 2u, 6u},
                               {13u, 1u, 4u}}) {
    const auto f = make_field(p, r);
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j) total += cyclotomic_number(f, e, i, j);
    // every c + 1 lands in some class except c = -1
    EXPECT_EQ(total, f.q() - 2);
  }
}

TEST(Cyclotomy, PairEnumerationOracle) {
  // |{(c, c') in C_i x C_j : c + 1 = c'}| over all pairs
  const auto f = make_field(5, 2);
  const std::uint32_t e = 4;
  const auto cls = cyclotomic_classes(f, e);
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) {
      std::uint64_t n = 0;
      for (const auto a : cls[i])
        for (const auto b : cls[j]) n += (f.add(a, f.one()) == b);
      EXPECT_EQ(cyclotomic_number(f, e, i, j), n);
    }
}

TEST(Cyclotomy, MinusOnePower) {
  EXPECT_TRUE(minus_one_is_power_mod(2, 3));
  EXPECT_TRUE(minus_one_is_power_mod(3, 10));
  EXPECT_TRUE(minus_one_is_power_mod(2, 5));
  EXPECT_FALSE(minus_one_is_power_mod(2, 7));
  EXPECT_FALSE(minus_one_is_power_mod(3, 13));
}

TEST(UniformCyclotomy, KnownValues) {
  EXPECT_EQ(uniform_cyclotomic_number(2, 4, 3, 0, 0), 0);
  EXPECT_EQ(uniform_cyclotomic_number(2, 4, 3, 0, 1), 2);
  EXPECT_EQ(uniform_cyclotomic_number(2, 4, 3, 1, 2), 1);
  EXPECT_EQ(uniform_cyclotomic_number(3, 4, 10, 0, 0), 7);
  EXPECT_EQ(uniform_cyclotomic_number(3, 4, 10, 0, 1), 0);
  EXPECT_EQ(uniform_cyclotomic_number(3, 4, 10, 1, 2), 1);
}

TEST(UniformCyclotomy, RejectsBadHypotheses) {
  try {
    uniform_cyclotomic_number(2, 6, 7, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConditionsNotMet);
  }
}

TEST(UniformCyclotomy, AgreesWithEnumeration) {
  for (const auto& [p, m] : {std::pair{2u, 4u}, {3u, 4u}, {2u, 8u}}) {
    const auto f = make_field(p, m);
    std::uint32_t s = 1;
    while (s * s < f.q()) ++s;
    const std::uint32_t e = s + 1;
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j)
        ASSERT_EQ(uniform_cyclotomic_number(p, m, e, i, j), static_cast<std::int64_t>(cyclotomic_number(f, e, i, j)))
            << p << "^" << m << " (" << i << "," << j << ")";
  }
}

TEST(UniformCyclotomy, SweepAgreesWhereApplicable) {
  int checked = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned m = 2; m <= 12; m += 2) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < m; ++i) q *= p;
      if (q > 10000) break;
      const auto f = make_field(p, m);
      for (std::uint32_t e = 3; e <= q - 1; ++e) {
        if ((q - 1) % e != 0 || !minus_one_is_power_mod(p, e)) continue;
        if ((q - 1) / e < 2) continue;
        for (std::uint32_t i = 0; i < e; ++i)
          for (std::uint32_t j = 0; j < e; ++j)
            ASSERT_EQ(uniform_cyclotomic_number(p, m, e, i, j), static_cast<std::int64_t>(cyclotomic_number(f, e, i, j)));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 5);
}
