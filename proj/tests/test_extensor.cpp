#include <gtest/gtest.h>

#include <random>

#include "extensor/codes.hpp"
#include "extensor/extensor.hpp"
#include "extensor/truncated_poly.hpp"

using namespace extensor;

namespace {

Gf2mRing field_ring(unsigned d = 16) { return Gf2mRing(std::make_shared<const Gf2mField>(d)); }

Extensor<Gf2mRing> random_gf(const Gf2mRing& ring, unsigned dims, std::mt19937_64& rng) {
  Extensor<Gf2mRing> x(ring, dims);
  for (auto& c : x.coeffs()) c = ring.field->element(rng() & (ring.field->size() - 1));
  return x;
}

Extensor<IntegerRing> random_int(unsigned dims, std::mt19937_64& rng, int sparsity = 1) {
  Extensor<IntegerRing> x(IntegerRing{}, dims);
  for (auto& c : x.coeffs()) {
    if (rng() % sparsity == 0) c = BigInt(static_cast<std::int64_t>(rng() % 19) - 9);
  }
  return x;
}

CodeVector<IntegerRing> int_vector(std::initializer_list<std::int64_t> xs) {
  CodeVector<IntegerRing> v;
  for (auto x : xs) v.entries.emplace_back(x);
  return v;
}

std::uint32_t mask(std::initializer_list<unsigned> generators) {
  std::uint32_t m = 0;
  for (unsigned g : generators) m |= 1U << (g - 1);
  return m;
}

/// Laplace expansion along the first row.
BigInt cofactor_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return BigInt(m[0][0]);
  BigInt acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(row);
    }
    const BigInt term = BigInt(m[0][c]) * cofactor_det(minor);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

TEST(Wedge, Char2TransformMatchesNaive) {
  std::mt19937_64 rng(11);
  const auto ring = field_ring();
  for (unsigned D = 1; D <= 9; ++D) {
    for (int t = 0; t < 30; ++t) {
      const auto x = random_gf(ring, D, rng);
      const auto y = random_gf(ring, D, rng);
      EXPECT_EQ(wedge_char2(x, y), wedge_naive(x, y)) << "D=" << D;
    }
  }
}

TEST(Wedge, CoefficientMatchesFullProduct) {
  std::mt19937_64 rng(12);
  for (unsigned D = 1; D <= 6; ++D) {
    const auto x = random_int(D, rng);
    const auto y = random_int(D, rng);
    const auto xy = wedge_naive(x, y);
    for (std::uint32_t K = 0; K < xy.size(); ++K) EXPECT_EQ(wedge_coefficient(x, y, K), xy[K]);
  }
}

TEST(Wedge, NaiveSparsePathsAgree) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_int(7, rng, 9);
    const auto sparse_y = random_int(7, rng, 20);
    const auto dense_y = random_int(7, rng);
    // Reference: straightforward double loop.
    for (const auto* y : {&sparse_y, &dense_y}) {
      Extensor<IntegerRing> ref(IntegerRing{}, 7);
      for (std::uint32_t I = 0; I < 128; ++I) {
        for (std::uint32_t J = 0; J < 128; ++J) {
          if ((I & J) != 0) continue;
          const BigInt p = x[I] * (*y)[J];
          if (merge_sign_odd(I, J)) {
            ref[I | J] -= p;
          } else {
            ref[I | J] += p;
          }
        }
      }
      EXPECT_EQ(wedge_naive(x, *y), ref);
    }
  }
}

TEST(Wedge, AssociativeAndUnital) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_int(5, rng), y = random_int(5, rng), z = random_int(5, rng);
    EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
    const auto one = Extensor<IntegerRing>::one(IntegerRing{}, 5);
    EXPECT_EQ(wedge(one, x), x);
    EXPECT_EQ(wedge(x, one), x);
  }
}

TEST(Wedge, VectorsAnticommuteAndSquareToZero) {
  std::mt19937_64 rng(15);
  IntegerRing ring;
  for (int t = 0; t < 50; ++t) {
    CodeVector<IntegerRing> u, v;
    for (int i = 0; i < 6; ++i) {
      u.entries.emplace_back(static_cast<std::int64_t>(rng() % 11) - 5);
      v.entries.emplace_back(static_cast<std::int64_t>(rng() % 11) - 5);
    }
    const auto U = to_extensor(ring, u), V = to_extensor(ring, v);
    EXPECT_EQ(wedge(U, V), Extensor<IntegerRing>(ring, 6) - wedge(V, U));
    EXPECT_TRUE(wedge(U, U).is_zero());
    EXPECT_TRUE(skew_mul(skew_mul(Extensor<IntegerRing>::one(ring, 6), u), u).is_zero());
  }
}

TEST(Wedge, SkewProductMatchesGeneralProduct) {
  std::mt19937_64 rng(16);
  IntegerRing ring;
  for (int t = 0; t < 50; ++t) {
    const auto x = random_int(6, rng);
    CodeVector<IntegerRing> v;
    for (int i = 0; i < 6; ++i) v.entries.emplace_back(static_cast<std::int64_t>(rng() % 7) - 3);
    EXPECT_EQ(skew_mul(x, v), wedge(x, to_extensor(ring, v)));
  }
}

TEST(Wedge, WorkedExpansion) {
  IntegerRing ring;
  const unsigned D = 5;
  const auto e1 = Extensor<IntegerRing>::basis(ring, D, mask({1}));
  const auto e3 = Extensor<IntegerRing>::basis(ring, D, mask({3}));
  auto middle = Extensor<IntegerRing>::basis(ring, D, mask({5})) - Extensor<IntegerRing>::basis(ring, D, mask({2}));
  middle[0] = BigInt(3);
  const auto got = wedge(wedge(e1, middle), e3);
  Extensor<IntegerRing> want(ring, D);
  want[mask({1, 3, 5})] = BigInt(-1);
  want[mask({1, 2, 3})] = BigInt(-1);
  want[mask({1, 3})] = BigInt(3);
  EXPECT_EQ(got, want);
}

TEST(Wedge, SquareOfMixedDegreeElement) {
  IntegerRing ring;
  auto x = Extensor<IntegerRing>::basis(ring, 3, mask({1})) + Extensor<IntegerRing>::basis(ring, 3, mask({2, 3}));
  Extensor<IntegerRing> want(ring, 3);
  want[mask({1, 2, 3})] = BigInt(2);
  EXPECT_EQ(wedge(x, x), want);
  // Over GF(2^d) the same square vanishes.
  const auto f = field_ring(8);
  auto y = Extensor<Gf2mRing>::basis(f, 3, mask({1})) + Extensor<Gf2mRing>::basis(f, 3, mask({2, 3}));
  EXPECT_TRUE(wedge(y, y).is_zero());
}

TEST(Wedge, TopCoefficientIsDeterminant) {
  std::mt19937_64 rng(17);
  IntegerRing ring;
  for (unsigned D = 1; D <= 6; ++D) {
    for (int t = 0; t < 100; ++t) {
      std::vector<std::vector<std::int64_t>> cols(D, std::vector<std::int64_t>(D));
      std::vector<CodeVector<IntegerRing>> vs(D);
      for (unsigned c = 0; c < D; ++c) {
        for (unsigned r = 0; r < D; ++r) {
          cols[c][r] = static_cast<std::int64_t>(rng() % 21) - 10;
          vs[c].entries.emplace_back(cols[c][r]);
        }
      }
      std::vector<std::vector<std::int64_t>> rows(D, std::vector<std::int64_t>(D));
      for (unsigned r = 0; r < D; ++r) {
        for (unsigned c = 0; c < D; ++c) rows[r][c] = cols[c][r];
      }
      const auto w = wedge_vectors(ring, D, vs);
      EXPECT_EQ(w.top(), cofactor_det(rows));
      for (std::uint32_t I = 0; I + 1 < w.size(); ++I) EXPECT_TRUE(w[I].is_zero());
    }
  }
}

TEST(Codes, VandermondeEntriesAndIndependence) {
  IntegerRing ring;
  EXPECT_EQ(vandermonde(ring, 2, 3), int_vector({1, 2, 4}));
  std::vector<CodeVector<IntegerRing>> vs;
  for (std::uint64_t j = 1; j <= 4; ++j) vs.push_back(vandermonde(ring, j, 4));
  // prod_{i<j} (j - i) for 1..4 = 12.
  EXPECT_EQ(wedge_vectors(ring, 4, vs).top(), BigInt(12));

  const auto f = field_ring(8);
  std::vector<CodeVector<Gf2mRing>> gs;
  for (std::uint64_t j = 1; j <= 5; ++j) gs.push_back(vandermonde(f, j, 5));
  EXPECT_FALSE(Gf2mRing::is_zero(wedge_vectors(f, 5, gs).top()));
}

TEST(Codes, LiftSquaresTheDeterminant) {
  IntegerRing ring;
  std::vector<CodeVector<IntegerRing>> vs = {int_vector({1, 2, 0}), int_vector({0, 1, 3}), int_vector({2, 0, 1})};
  const auto det = wedge_vectors(ring, 3, vs).top();
  auto acc = Extensor<IntegerRing>::one(ring, 6);
  for (const auto& v : vs) acc = wedge(acc, lift(ring, v));
  // Moving the three back-half factors past the front-half ones gives (-1)^{C(3,2)}.
  EXPECT_EQ(acc.top(), -(det * det));
  const auto l = lift(ring, int_vector({1, 2}));
  EXPECT_EQ(l, FactoredCode<IntegerRing>::lifted(ring, int_vector({1, 2})).to_extensor(ring, 4));
}

TEST(Codes, ApplyRawMatchesApply) {
  std::mt19937_64 rng(18);
  IntegerRing ring;
  for (unsigned r = 0; r <= 3; ++r) {
    FactoredCode<IntegerRing> code{BigInt(static_cast<std::int64_t>(r) + 2), {}};
    for (unsigned i = 0; i < r; ++i) code.factors.push_back(vandermonde(ring, i + 2, 5));
    const auto x = random_int(5, rng);
    std::vector<BigInt> out(32), scratch(32);
    code.apply_raw(ring, 5, x.data(), out.data(), scratch.data());
    EXPECT_EQ(out, code.apply(x).coeffs()) << "r=" << r;
  }
}

TEST(Codes, SubspaceMembersSpanExactlyMu) {
  IntegerRing ring;
  std::vector<CodeVector<IntegerRing>> basis;
  for (std::uint64_t t = 1; t <= 3; ++t) basis.push_back(vandermonde(ring, t + 10, 6));
  SubspaceCode<IntegerRing> code(ring, basis);
  std::vector<CodeVector<IntegerRing>> three = {code.member(1), code.member(4), code.member(7)};
  EXPECT_FALSE(wedge_vectors(ring, 6, three).is_zero());
  three.push_back(code.member(2));
  EXPECT_TRUE(wedge_vectors(ring, 6, three).is_zero());
  EXPECT_THROW(code.member(0), DomainError);
}

TEST(Extensor, DimensionCap) {
  EXPECT_THROW(Extensor<IntegerRing>(IntegerRing{}, kMaxDims + 1), CapabilityError);
  Extensor<IntegerRing> a(IntegerRing{}, 3), b(IntegerRing{}, 4);
  EXPECT_THROW(wedge(a, b), DomainError);
  EXPECT_THROW(a.at(8), DomainError);
}

TEST(TruncatedPoly, ProductTruncatesAndShifts) {
  IntegerRing ring;
  auto p = TruncatedPoly<IntegerRing>::one(ring, 2, 2);
  p[1] = Extensor<IntegerRing>::basis(ring, 2, 1);
  auto q = TruncatedPoly<IntegerRing>::one(ring, 2, 2);
  q[1] = Extensor<IntegerRing>::basis(ring, 2, 2);
  const auto pq = p.times(q);
  EXPECT_EQ(pq[0], Extensor<IntegerRing>::one(ring, 2));
  EXPECT_EQ(pq[1], p[1] + q[1]);
  EXPECT_EQ(pq[2], Extensor<IntegerRing>::basis(ring, 2, 3));
  EXPECT_EQ(pq.degree(), 2);
  const auto s = pq.shifted().shifted();
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s[2], Extensor<IntegerRing>::one(ring, 2));
  EXPECT_TRUE(TruncatedPoly<IntegerRing>(ring, 2, 2).is_zero());
}
