#include <gtest/gtest.h>

#include "dtopo/error.hpp"
#include "dtopo/generators.hpp"
#include "dtopo/simplicial.hpp"

using dtopo::GeneratorSpec;
using dtopo::SimplicialComplex;

namespace {

SimplicialComplex complex(const GeneratorSpec& spec) {
  return std::get<SimplicialComplex>(dtopo::generate(spec));
}

}  // namespace

TEST(Generators, FaceCounts) {
  EXPECT_EQ(dtopo::sphere(2).size(), 14u);
  EXPECT_EQ(dtopo::sphere(2).f_vector(), (std::vector<std::size_t>{4, 6, 4}));
  EXPECT_EQ(dtopo::full_simplex(3).size(), 15u);
  EXPECT_EQ(dtopo::sphere(0).f_vector(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(dtopo::full_simplex(0).size(), 1u);
  EXPECT_EQ(dtopo::disk(6).f_vector(), (std::vector<std::size_t>{7, 12, 6}));
  EXPECT_EQ(dtopo::annulus(5).f_vector(), (std::vector<std::size_t>{10, 20, 10}));
  EXPECT_EQ(dtopo::pinched_sphere().f_vector(), (std::vector<std::size_t>{11, 30, 20}));
  EXPECT_EQ(dtopo::pinched_box(4).dimension(), 3);
  EXPECT_EQ(dtopo::bowtie().f_vector(), (std::vector<std::size_t>{5, 6, 2}));
  const auto k = dtopo::khalimsky_block(3, 2);
  EXPECT_EQ(k.size(), 7u * 5u);
  EXPECT_EQ(k.rank(), 2);
  EXPECT_EQ(k.label(0), "(0,0)");
}

TEST(Generators, DispatchByName) {
  EXPECT_EQ(complex({"sphere", {3}}), dtopo::sphere(3));
  EXPECT_EQ(complex({"pinched-sphere", {}}), dtopo::pinched_sphere());
  EXPECT_EQ(complex({"random-pure", {2, 8, 10, 5}}), dtopo::random_pure(2, 8, 10, 5));
  EXPECT_TRUE(std::holds_alternative<dtopo::Poset>(dtopo::generate({"khalimsky", {2, 2}})));
  EXPECT_NE(dtopo::generator_usage().find("random-pure"), std::string::npos);
}

TEST(Generators, RejectsBadRequests) {
  for (const GeneratorSpec& bad : std::vector<GeneratorSpec>{{"torus", {}},
                                                            {"sphere", {}},
                                                            {"sphere", {1, 2}},
                                                            {"sphere", {-1}},
                                                            {"sphere", {10}},
                                                            {"disk", {2}},
                                                            {"annulus", {3}},
                                                            {"khalimsky", {0, 3}},
                                                            {"random-pure", {5, 8, 4, 1}},
                                                            {"random-pure", {2, 2, 4, 1}},
                                                            {"random-pure", {2, 8, 0, 1}},
                                                            {"random-pure", {2, 8, 4, -1}}})
    EXPECT_THROW(dtopo::generate(bad), dtopo::DomainError) << bad.name;
}

TEST(Generators, RandomPureIsDeterministicAndPure) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int d = 1 + static_cast<int>(seed % 3);
    const auto a = dtopo::random_pure(d, 9, 8, seed);
    EXPECT_EQ(a, dtopo::random_pure(d, 9, 8, seed));
    EXPECT_TRUE(dtopo::is_pure(a)) << seed;
    EXPECT_EQ(a.dimension(), d);
    for (int v : a.vertices()) EXPECT_LT(v, 9);
  }
  EXPECT_NE(dtopo::random_pure(2, 10, 12, 1), dtopo::random_pure(2, 10, 12, 2));
}

TEST(Generators, Corpora) {
  const auto corpus = dtopo::generator_corpus();
  EXPECT_GE(corpus.size(), 10u);
  const auto random = dtopo::random_corpus(30, 7);
  ASSERT_EQ(random.size(), 30u);
  EXPECT_EQ(random[0].name.rfind("random-pure ", 0), 0u);
  EXPECT_EQ(dtopo::random_corpus(30, 7)[29].complex, random[29].complex);
}
