#include <gtest/gtest.h>

#include <random>

#include "holweitz/decomp.hpp"
#include "holweitz/errors.hpp"
#include "holweitz/holctx.hpp"

using namespace holweitz;

namespace {

std::map<Labels, std::int64_t> as_multiset(const Decomposition& d) {
  std::map<Labels, std::int64_t> out;
  for (const auto& e : d.entries()) out[e.irrep.highest_weight()] = e.multiplicity;
  return out;
}

std::map<Labels, std::int64_t> ones(std::initializer_list<Labels> ws) {
  std::map<Labels, std::int64_t> out;
  for (const auto& w : ws) out[w] += 1;
  return out;
}

Labels random_weight(std::mt19937& rng, int rank, int max) {
  std::uniform_int_distribution<int> d(0, max);
  Labels l(rank);
  for (auto& x : l) x = d(rng);
  return l;
}

}  // namespace

TEST(Tensor, Examples) {
  const auto g2 = build_root_system(Family::G, 2);
  EXPECT_EQ(as_multiset(tensor(Irrep(g2, {1, 0}), Irrep(g2, {0, 1}))), ones({{1, 0}, {2, 0}, {1, 1}}));
  EXPECT_EQ(as_multiset(tensor(Irrep(g2, {1, 0}), Irrep(g2, {0, 0}))), ones({{1, 0}}));
  const auto b3 = build_root_system(Family::B, 3);
  EXPECT_EQ(as_multiset(tensor(Irrep(b3, {0, 0, 1}), Irrep(b3, {0, 0, 2}))),
            ones({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 3}}));
}

TEST(Tensor, CanonicalOrder) {
  const auto b3 = build_root_system(Family::B, 3);
  const Decomposition d = tensor(Irrep(b3, {0, 0, 1}), Irrep(b3, {0, 0, 2}));
  std::vector<Labels> order;
  for (const auto& e : d.entries()) order.push_back(e.irrep.highest_weight());
  EXPECT_EQ(order, (std::vector<Labels>{{0, 0, 1}, {1, 0, 1}, {0, 0, 3}, {0, 1, 1}}));
}

TEST(Tensor, MixedRootSystems) {
  try {
    tensor(Irrep(build_root_system(Family::G, 2), {1, 0}), Irrep(build_root_system(Family::B, 3), {1, 0, 0}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedRootSystems);
  }
}

TEST(Tensor, ConservationAndCommutativity) {
  const std::vector<std::pair<Family, int>> types{{Family::A, 2}, {Family::B, 3}, {Family::C, 3},
                                                  {Family::D, 4}, {Family::G, 2}};
  std::mt19937 rng(31);
  for (auto [f, r] : types) {
    const auto rs = build_root_system(f, r);
    for (int i = 0; i < 50; ++i) {
      const Irrep a(rs, random_weight(rng, r, r <= 2 ? 2 : 1));
      const Irrep b(rs, random_weight(rng, r, r <= 2 ? 2 : 1));
      const Decomposition ab = tensor(a, b);
      EXPECT_EQ(ab.total_dimension(), dimension(a) * dimension(b)) << to_string(a) << " x " << to_string(b);
      EXPECT_EQ(ab, tensor(b, a));
    }
  }
}

TEST(Tensor, KlimykAgreesWithProductCharacter) {
  const auto g2 = build_root_system(Family::G, 2);
  const auto b3 = build_root_system(Family::B, 3);
  const std::vector<std::pair<Irrep, Irrep>> pairs{
      {Irrep(g2, {1, 0}), Irrep(g2, {1, 0})}, {Irrep(g2, {1, 0}), Irrep(g2, {2, 0})},
      {Irrep(g2, {0, 1}), Irrep(g2, {1, 1})}, {Irrep(b3, {0, 0, 1}), Irrep(b3, {1, 0, 1})},
      {Irrep(b3, {1, 0, 0}), Irrep(b3, {0, 1, 1})}};
  for (const auto& [a, b] : pairs)
    EXPECT_EQ(tensor(a, b), decompose_character(a.root_system_ptr(), product_character(a, b)));
}

TEST(DecomposeCharacter, Examples) {
  const auto g2 = build_root_system(Family::G, 2);
  const Irrep t(g2, {1, 0});
  EXPECT_EQ(as_multiset(decompose_character(g2, weight_system(Irrep(g2, {1, 1})))), ones({{1, 1}}));

  Character two = weight_system(Irrep(g2, {2, 0}));
  for (const auto& [mu, m] : weight_system(Irrep(g2, {0, 1}))) two[mu] += m;
  EXPECT_EQ(as_multiset(decompose_character(g2, two)), ones({{0, 1}, {2, 0}}));

  const Decomposition tt = decompose_character(g2, product_character(t, t));
  EXPECT_EQ(as_multiset(tt), ones({{0, 0}, {1, 0}, {0, 1}, {2, 0}}));
  EXPECT_EQ(tt.total_dimension(), 49);
  EXPECT_EQ(tt, tensor(t, t));

  Character bad = weight_system(Irrep(g2, {1, 0}));
  bad[{0, 0}] = 0;
  try {
    decompose_character(g2, bad);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACharacter);
  }
}

TEST(Exterior, Examples) {
  const auto g2 = build_root_system(Family::G, 2);
  EXPECT_EQ(as_multiset(exterior_power(Irrep(g2, {1, 0}), 3)), ones({{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(as_multiset(exterior_power(Irrep(g2, {1, 0}), 0)), ones({{0, 0}}));
  const auto b3 = build_root_system(Family::B, 3);
  const Decomposition l4 = exterior_power(Irrep(b3, {0, 0, 1}), 4);
  EXPECT_EQ(as_multiset(l4), ones({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 0, 2}}));
  EXPECT_EQ(l4.total_dimension(), 70);
  try {
    exterior_power(Irrep(g2, {1, 0}), 8);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeOutOfRange);
  }
  try {
    exterior_power(Irrep(g2, {1, 0}), -1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeOutOfRange);
  }
}

TEST(Exterior, VectorRepresentationOfSoN) {
  // Lambda^p of the vector representation of so(2r+1) is irreducible for p <= r.
  const auto b4 = build_root_system(Family::B, 4);
  const Irrep v(b4, {1, 0, 0, 0});
  EXPECT_EQ(as_multiset(exterior_power(v, 2)), ones({{0, 1, 0, 0}}));
  EXPECT_EQ(as_multiset(exterior_power(v, 3)), ones({{0, 0, 1, 0}}));
  EXPECT_EQ(as_multiset(exterior_power(v, 4)), ones({{0, 0, 0, 2}}));
  // so(8): the middle degree splits into self-dual and anti-self-dual parts.
  const auto d4 = build_root_system(Family::D, 4);
  EXPECT_EQ(as_multiset(exterior_power(Irrep(d4, {1, 0, 0, 0}), 4)), ones({{0, 0, 2, 0}, {0, 0, 0, 2}}));
}

TEST(Exterior, DimensionAndHodgeSymmetry) {
  auto binom = [](int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (const char* id : {"g2", "spin7"}) {
    const auto ctx = make_context(id);
    const Irrep& t = ctx->holonomy_rep();
    for (int p = 0; p <= ctx->n(); ++p) {
      const Decomposition d = exterior_power(t, p);
      EXPECT_EQ(d.total_dimension(), binom(ctx->n(), p));
      EXPECT_EQ(d, exterior_power(t, ctx->n() - p));
    }
  }
}

TEST(Decomposition, Accessors) {
  const auto g2 = build_root_system(Family::G, 2);
  const Decomposition d = tensor(Irrep(g2, {1, 0}), Irrep(g2, {1, 0}));
  EXPECT_EQ(d.size(), 4u);
  EXPECT_FALSE(d.empty());
  EXPECT_TRUE(d.multiplicity_free());
  EXPECT_EQ(d.multiplicity({0, 1}), 1);
  EXPECT_EQ(d.multiplicity({3, 0}), 0);
  EXPECT_FALSE(tensor(Irrep(g2, {0, 1}), Irrep(g2, {0, 1})).multiplicity_free() &&
               tensor(Irrep(g2, {1, 1}), Irrep(g2, {1, 1})).multiplicity_free());
}
