#include <gtest/gtest.h>

#include "oqecc/error.hpp"
#include "oqecc/galois.hpp"

using namespace oqecc;

namespace {

// Evaluates a polynomial over F_p at a prime-field point.
unsigned eval_prime(const std::vector<unsigned>& poly, unsigned x, unsigned p) {
  unsigned acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
  return acc;
}

}  // namespace

TEST(GaloisMake, PrimeFieldTwo) {
  const auto ctx = GfContext::make(2, 1);
  EXPECT_EQ(ctx->q(), 2u);
  EXPECT_EQ(ctx->base().modulus(), (std::vector<unsigned>{0, 1}));  // x
  EXPECT_EQ(ctx->ext().size(), 4u);
  const Elem beta = ctx->beta();
  EXPECT_NE(beta, 0u);
  EXPECT_NE(beta, 1u);
  EXPECT_NE(beta, ctx->ext().mul(beta, beta));
}

TEST(GaloisMake, GF4ModulusIsIrreducibleByRootCheck) {
  const auto ctx = GfContext::make(2, 2);
  EXPECT_EQ(ctx->q(), 4u);
  const auto& mod = ctx->base().modulus();
  EXPECT_EQ(mod, (std::vector<unsigned>{1, 1, 1}));  // x^2 + x + 1
  // A quadratic is irreducible iff it has no root in F_2.
  for (unsigned x = 0; x < 2; ++x) EXPECT_NE(eval_prime(mod, x, 2), 0u);
}

TEST(GaloisMake, CubicAndQuadraticModuliHaveNoRoots) {
  for (auto [p, m] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{7u, 2u}, std::pair{3u, 3u}}) {
    const auto ctx = GfContext::make(p, m);
    for (unsigned x = 0; x < p; ++x) EXPECT_NE(eval_prime(ctx->base().modulus(), x, p), 0u) << p << "^" << m;
  }
}

TEST(GaloisMake, ModuliPassTrialDivision) {
  for (auto [p, m] : {std::pair{2u, 1u}, std::pair{2u, 6u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{61u, 1u}}) {
    const auto ctx = GfContext::make(p, m);
    EXPECT_TRUE(is_irreducible(p, ctx->base().modulus()));
    EXPECT_TRUE(is_irreducible(p, ctx->ext().modulus()));
    EXPECT_EQ(ctx->ext().modulus().size(), 2 * m + 1);
  }
}

TEST(GaloisMake, LeastIrreducibleIsLeast) {
  // x^3 + x + 1 precedes x^3 + x^2 + 1.
  EXPECT_EQ(least_irreducible(2, 3), (std::vector<unsigned>{1, 1, 0, 1}));
  EXPECT_EQ(least_irreducible(2, 4), (std::vector<unsigned>{1, 1, 0, 0, 1}));
  EXPECT_EQ(least_irreducible(3, 2), (std::vector<unsigned>{1, 0, 1}));
  EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));  // (x+1)^2
}

TEST(GaloisMake, RejectsCompositeAndLargeFields) {
  try {
    GfContext::make(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
  try {
    GfContext::make(2, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
  EXPECT_THROW(GfContext::make(67, 1), Error);
  EXPECT_NO_THROW(GfContext::make(2, 6));
  EXPECT_NO_THROW(GfContext::make(61, 1));
}

TEST(GaloisMake, Deterministic) {
  const auto a = GfContext::make(3, 2);
  const auto b = GfContext::make(3, 2);
  EXPECT_EQ(a->beta(), b->beta());
  EXPECT_EQ(a->embedding_root(), b->embedding_root());
  EXPECT_EQ(a->ext().modulus(), b->ext().modulus());
}

TEST(GaloisMul, Examples) {
  const auto gf4 = GfContext::make(2, 2);
  EXPECT_EQ(gf4->mul(2, 2), 3u);  // x*x = x+1
  for (auto [p, m] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 1u}}) {
    const auto ctx = GfContext::make(p, m);
    for (Elem x = 0; x < ctx->q(); ++x) {
      EXPECT_EQ(ctx->mul(x, 1), x);
      EXPECT_EQ(ctx->mul(x, 0), 0u);
    }
  }
  EXPECT_THROW(gf4->mul(4, 1), Error);
  EXPECT_THROW(gf4->trace(4), Error);
}

TEST(GaloisMul, FieldAxiomsExhaustive) {
  for (auto [p, m] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 1u}}) {
    const auto ctx = GfContext::make(p, m);
    const FiniteField& f = ctx->base();
    for (Elem x = 0; x < f.size(); ++x) {
      if (x != 0) EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
      if (x != 0) EXPECT_EQ(f.inv(x), f.pow(x, f.size() - 2));
      EXPECT_EQ(f.add(x, f.neg(x)), 0u);
      for (Elem y = 0; y < f.size(); ++y) {
        EXPECT_EQ(f.mul(x, y), f.mul(y, x));
        // Frobenius is a ring homomorphism.
        EXPECT_EQ(f.pow(f.add(x, y), p), f.add(f.pow(x, p), f.pow(y, p)));
        EXPECT_EQ(f.pow(f.mul(x, y), p), f.mul(f.pow(x, p), f.pow(y, p)));
        for (Elem z = 0; z < f.size(); ++z) {
          EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
          EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        }
      }
    }
  }
}

TEST(GaloisTrace, Examples) {
  EXPECT_EQ(GfContext::make(2, 1)->trace(1), 1u);
  const auto gf4 = GfContext::make(2, 2);
  EXPECT_EQ(gf4->trace(0), 0u);
  EXPECT_EQ(gf4->trace(2), 1u);  // x + x^2 = 1
}

TEST(GaloisTrace, OntoAndLinear) {
  for (auto [p, m] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
    const auto ctx = GfContext::make(p, m);
    std::vector<bool> hit(p, false);
    for (Elem x = 0; x < ctx->q(); ++x) {
      const Elem t = ctx->trace(x);
      ASSERT_LT(t, p);
      hit[t] = true;
      for (Elem y = 0; y < ctx->q(); ++y) EXPECT_EQ(ctx->trace(ctx->add(x, y)), (t + ctx->trace(y)) % p);
      for (unsigned c = 0; c < p; ++c) EXPECT_EQ(ctx->trace(ctx->base().scale(x, c)), (c * t) % p);
    }
    for (bool h : hit) EXPECT_TRUE(h);
  }
}

TEST(GaloisEmbed, HomomorphismExhaustive) {
  for (auto [p, m] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 1u}, std::pair{7u, 1u}}) {
    const auto ctx = GfContext::make(p, m);
    const FiniteField& e = ctx->ext();
    for (Elem x = 0; x < ctx->q(); ++x) {
      for (Elem y = 0; y < ctx->q(); ++y) {
        EXPECT_EQ(ctx->embed(ctx->mul(x, y)), e.mul(ctx->embed(x), ctx->embed(y)));
        EXPECT_EQ(ctx->embed(ctx->add(x, y)), e.add(ctx->embed(x), ctx->embed(y)));
      }
      EXPECT_EQ(ctx->pull_back(ctx->embed(x)), x);
    }
    // The image is exactly the fixed field of z -> z^q.
    for (Elem z = 0; z < e.size(); ++z) EXPECT_EQ(ctx->pull_back(z).has_value(), e.pow(z, ctx->q()) == z);
  }
}

TEST(GaloisExtTrace, Examples) {
  for (unsigned m = 1; m <= 3; ++m) {
    const auto ctx = GfContext::make(2, m);
    EXPECT_EQ(ctx->ext_trace_to_base(ctx->embed(0)), 0u);
    EXPECT_EQ(ctx->ext_trace_to_base(ctx->embed(1)), m % 2);
  }
  const auto ctx = GfContext::make(3, 1);
  EXPECT_EQ(ctx->ext_trace_to_base(ctx->embed(1)), 1u);
  try {
    ctx->ext_trace_to_base(ctx->beta());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInSubfield);
  }
}

namespace {

// beta is normal iff beta != 0 and beta^{q-1} lies outside the embedded GF(q).
Elem normal_oracle(const GfContext& ctx) {
  const FiniteField& e = ctx.ext();
  for (Elem b = 1; b < e.size(); ++b) {
    if (!ctx.pull_back(e.pow(b, ctx.q() - 1)).has_value()) return b;
  }
  return 0;
}

}  // namespace

TEST(GaloisBeta, LeastNormalElement) {
  // Values fixed by an exhaustive scan of GF(4), GF(9) and GF(16) by hand:
  // GF(9) = F_3[i], beta = 1 + i; GF(16) = F_2[x]/(x^4+x+1), beta = x.
  const std::vector<std::pair<std::pair<unsigned, unsigned>, Elem>> expected{
      {{2, 1}, 2}, {{3, 1}, 4}, {{2, 2}, 2}};
  for (const auto& [pm, beta] : expected) {
    const auto ctx = GfContext::make(pm.first, pm.second);
    EXPECT_EQ(ctx->beta(), beta);
    EXPECT_EQ(find_normal_beta(*ctx), beta);
    EXPECT_EQ(normal_oracle(*ctx), beta);
  }
  for (auto [p, m] : {std::pair{5u, 1u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{7u, 2u}, std::pair{2u, 6u}}) {
    const auto ctx = GfContext::make(p, m);
    EXPECT_EQ(ctx->beta(), normal_oracle(*ctx)) << p << "^" << m;
    EXPECT_EQ(ctx->beta_q(), ctx->ext().pow(ctx->beta(), ctx->q()));
  }
}

TEST(GaloisBeta, EmbeddingRootForGF4InGF16) {
  // x^5 = x^2 + x (encoding 6) and x^10 = x^2 + x + 1 (7) are the roots of
  // x^2 + x + 1 in GF(16); the least is used.
  const auto ctx = GfContext::make(2, 2);
  EXPECT_EQ(ctx->embedding_root(), 6u);
  EXPECT_EQ(ctx->embed(2), 6u);
  EXPECT_EQ(ctx->embed(3), 7u);
}
