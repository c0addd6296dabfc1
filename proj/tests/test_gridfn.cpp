/*
 * Copyright 2026 The semibv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "semibv/error.hpp"
#include "semibv/gridfn.hpp"

namespace semibv {
namespace {

constexpr const char* kTwoByTwo = R"({
  "grid_t": [0, 1], "grid_s": [0, 1],
  "semigroup": {"kind": "real-vector", "dim": 1},
  "values": [[[0], [1]], [[2], [3]]]
})";

TEST(Grid1D, Invariants) {
  EXPECT_NO_THROW(Grid1D({0.0, 1.0}));
  EXPECT_THROW(Grid1D({0.0}), GridEndpointError);
  EXPECT_THROW(Grid1D({0.1, 1.0}), GridEndpointError);
  EXPECT_THROW(Grid1D({0.0, 0.9}), GridEndpointError);
  EXPECT_THROW(Grid1D({0.0, 0.5, 0.5, 1.0}), NonMonotoneGrid);
  EXPECT_THROW(Grid1D({0.0, 0.7, 0.3, 1.0}), NonMonotoneGrid);
  const Grid1D u = Grid1D::uniform(4);
  ASSERT_EQ(u.size(), 5u);
  EXPECT_EQ(u[2], 0.5);
}

TEST(LoadFunction, WellFormed) {
  const GridFunction2D f = load_function(kTwoByTwo);
  EXPECT_EQ(f.values().size(), 4u);
  EXPECT_EQ(f(1, 0), Element::vector({2}));
  EXPECT_EQ(f(0, 1), Element::vector({1}));
}

TEST(LoadFunction, Errors) {
  EXPECT_THROW(load_function("{not json"), ParseError);
  EXPECT_THROW(load_function(R"({"grid_t":[0,0.5,0.5,1],"grid_s":[0,1],
    "semigroup":{"kind":"nonneg-real"},"values":[[0,0],[0,0],[0,0],[0,0]]})"),
               NonMonotoneGrid);
  EXPECT_THROW(load_function(R"({"grid_t":[0,0.5,1],"grid_s":[0,0.5,1],
    "semigroup":{"kind":"nonneg-real"},"values":[[0,0,0],[0,0,0]]})"),
               DimensionMismatch);
  EXPECT_THROW(load_function(R"({"grid_t":[0,0.5],"grid_s":[0,1],
    "semigroup":{"kind":"nonneg-real"},"values":[[0,0],[0,0]]})"),
               GridEndpointError);
  EXPECT_THROW(load_function(R"({"grid_t":[0,1],"grid_s":[0,1],
    "semigroup":{"kind":"nonneg-real"},"values":[[0,-1],[0,0]]})"),
               InvalidElement);
  EXPECT_THROW(load_function(R"({"grid_t":[0,1],"grid_s":[0,1],"values":[[0,0],[0,0]]})"),
               ParseError);
}

TEST(SaveFunction, RoundTripEveryInstance) {
  const Grid1D t({0.0, 0.3, 1.0});
  const Grid1D s({0.0, 0.25, 0.6, 1.0});
  std::uint64_t seed = 1;
  for (const auto& inst : {Instance::nonneg_real(), Instance::real_vector(3), Instance::interval(),
                           Instance::box(2)}) {
    const GridFunction2D f = synth_function(Generator::random_walk(0.37), t, s, inst, seed++);
    const std::string bytes = save_function(f);
    const GridFunction2D g = load_function(bytes);
    EXPECT_EQ(f, g);
    EXPECT_EQ(save_function(g), bytes);
  }
}

TEST(SaveFunction, CanonicalisesInput) {
  const std::string once = save_function(load_function(kTwoByTwo));
  EXPECT_EQ(save_function(load_function(once)), once);
  EXPECT_EQ(once.find(' '), std::string::npos);
  EXPECT_LT(once.find("\"grid_s\""), once.find("\"grid_t\""));
}

TEST(SaveFunction, ConstantHasOneDistinctValue) {
  const GridFunction2D f = synth_function(Generator::constant_value(Element::scalar(2.5)),
                                          Grid1D::uniform(3), Grid1D::uniform(2),
                                          Instance::nonneg_real(), 0);
  const Json doc = parse_json(save_function(f));
  std::set<std::string> distinct;
  for (const auto& row : doc["values"])
    for (const auto& v : row) distinct.insert(v.dump());
  EXPECT_EQ(distinct.size(), 1u);
}

TEST(SaveFunction, IntervalsAsPairs) {
  const GridFunction2D f = synth_function(Generator::constant_value(Element::interval(1, 2)),
                                          Grid1D::uniform(1), Grid1D::uniform(1),
                                          Instance::interval(), 0);
  const Json doc = parse_json(save_function(f));
  EXPECT_EQ(doc["values"][0][0], Json::array({1, 2}));
}

TEST(Synth, Constant) {
  const Element c = Element::vector({1, -1});
  const GridFunction2D f = synth_function(Generator::constant_value(c), Grid1D::uniform(3),
                                          Grid1D::uniform(4), Instance::real_vector(2), 3);
  for (const auto& v : f.values()) EXPECT_EQ(v, c);
  EXPECT_THROW(synth_function(Generator::constant_value(c), Grid1D::uniform(1), Grid1D::uniform(1),
                              Instance::interval(), 0),
               GeneratorError);
}

TEST(Synth, Product) {
  const GridFunction2D f = synth_function(Generator::product(), Grid1D::uniform(1),
                                          Grid1D::uniform(1), Instance::nonneg_real(), 0);
  EXPECT_EQ(f(0, 0), Element::scalar(0));
  EXPECT_EQ(f(0, 1), Element::scalar(0));
  EXPECT_EQ(f(1, 0), Element::scalar(0));
  EXPECT_EQ(f(1, 1), Element::scalar(1));
  EXPECT_THROW(synth_function(Generator::product(), Grid1D::uniform(1), Grid1D::uniform(1),
                              Instance::interval(), 0),
               GeneratorError);
}

TEST(Synth, SeparableAdditive) {
  const GridFunction2D f = synth_function(Generator::separable_additive(1, 2), Grid1D::uniform(2),
                                          Grid1D::uniform(2), Instance::real_vector(1), 0);
  EXPECT_EQ(f(1, 2)[0], 0.5 + 2.0);
  const GridFunction2D g = synth_function(Generator::separable_additive(1, 2), Grid1D::uniform(2),
                                          Grid1D::uniform(2), Instance::interval(), 0);
  EXPECT_EQ(g(1, 2), Element::interval(0.5, 2.5));
  EXPECT_THROW(synth_function(Generator::separable_additive(-1, 0), Grid1D::uniform(1),
                              Grid1D::uniform(1), Instance::nonneg_real(), 0),
               GeneratorError);
}

TEST(Synth, RandomWalkIsPure) {
  const Grid1D t = Grid1D::uniform(5), s = Grid1D::uniform(4);
  for (const auto& inst : {Instance::nonneg_real(), Instance::interval(), Instance::box(2)}) {
    const auto a = synth_function(Generator::random_walk(0.1), t, s, inst, 42);
    const auto b = synth_function(Generator::random_walk(0.1), t, s, inst, 42);
    const auto c = synth_function(Generator::random_walk(0.1), t, s, inst, 43);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
  }
}

TEST(Partition, FullMinimalAndValidation) {
  const PartitionPair full = PartitionPair::full(4, 3);
  EXPECT_EQ(full.pi, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(full.pi_star, (std::vector<std::size_t>{0, 1, 2}));
  const PartitionPair minimal = PartitionPair::minimal(4, 3);
  EXPECT_EQ(minimal.pi, (std::vector<std::size_t>{0, 3}));
  EXPECT_NO_THROW(full.validate(4, 3));
  EXPECT_THROW(full.validate(3, 3), PartitionError);
  EXPECT_THROW((PartitionPair{{0, 2, 1, 3}, {0, 2}}.validate(4, 3)), PartitionError);
  EXPECT_THROW((PartitionPair{{1, 3}, {0, 2}}.validate(4, 3)), PartitionError);
  EXPECT_THROW((PartitionPair{{0, 2}, {0, 2}}.validate(4, 3)), PartitionError);
}

TEST(Partition, Order) {
  using V = std::vector<std::size_t>;
  const V minimal{0, 4}, only3{0, 3, 4}, only1{0, 1, 4}, full{0, 1, 2, 3, 4};
  EXPECT_TRUE(partition_less(minimal, only3));
  EXPECT_TRUE(partition_less(only3, only1));
  EXPECT_TRUE(partition_less(only1, full));
  EXPECT_FALSE(partition_less(full, full));
  EXPECT_TRUE(partition_pair_less({minimal, full}, {only3, minimal}));
  EXPECT_TRUE(partition_pair_less({only3, minimal}, {only3, only1}));
}

TEST(GridFunction, DomainChecks) {
  const auto f = oracle::real_fn({0, 1}, {0, 1}, {{0, 0}, {0, 0}});
  const auto g = oracle::real_fn({0, 0.5, 1}, {0, 1}, {{0, 0}, {0, 0}, {0, 0}});
  const auto h = oracle::scalar_fn({0, 1}, {0, 1}, {{0, 0}, {0, 0}});
  EXPECT_THROW(require_same_domain(f, g), GridMismatch);
  EXPECT_THROW(require_same_domain(f, h), InstanceMismatch);
  EXPECT_NO_THROW(require_same_domain(f, f));
  EXPECT_THROW(GridFunction2D(Grid1D::uniform(1), Grid1D::uniform(1), Instance::nonneg_real(),
                              {Element::scalar(0), Element::scalar(0), Element::scalar(0),
                               Element::interval(0, 1)}),
               InstanceMismatch);
}

} // namespace
} // namespace semibv
