#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "refocus/harness.hpp"
#include "refocus/semantics.hpp"

using namespace refocus;

TEST(Semantics, NamesRoundTrip) {
  std::set<std::string_view> names;
  for (SemanticsChoice s : kAllSemantics) {
    EXPECT_EQ(semantics_from_name(name(s)), s);
    names.insert(name(s));
  }
  EXPECT_EQ(names.size(), 9u);
  EXPECT_EQ(semantics_from_name("kc-rf"), SemanticsChoice::KcRf);
  EXPECT_EQ(semantics_from_name("nonsense"), std::nullopt);
}

TEST(Semantics, EveryNormalizerMatchesTheOracle) {
  const std::vector<Term> terms = enumerate_terms({.max_ops = 2, .max_lit = 3});
  for (SemanticsChoice s : kAllSemantics) {
    for (const Term& t : terms) {
      EXPECT_EQ(normalize_with(s, t), oracle::evaluate(print(t))) << name(s) << " " << print(t);
    }
  }
}

TEST(Semantics, RandomTermsMatchTheOracle) {
  for (const Term& t : random_terms({.seed = 7, .count = 200, .max_ops = 8, .max_lit = 50})) {
    const NormalResult want = oracle::evaluate(print(t));
    for (SemanticsChoice s : kAllSemantics) {
      EXPECT_EQ(normalize_with(s, t), want) << name(s) << " " << print(t);
    }
  }
}

TEST(Semantics, BenchChainClosedForms) {
  // Reduction-based: decomposing a chain of m operators from the root enters
  // m + 2 nodes, for m = k..1, plus the final literal; recomposition plugs
  // m - 1 frames. Reduction-free: the first descent enters k + 2 nodes, then
  // two per remaining redex and one for the last contractum.
  for (std::size_t k : {1u, 2u, 3u, 16u, 32u, 64u}) {
    const BenchRow r = bench_chain(k);
    EXPECT_EQ(r.k, k);
    EXPECT_EQ(r.rb_visits, k * (k + 1) / 2 + 2 * k + 1) << k;
    EXPECT_EQ(r.rf_visits, 3 * k + 1) << k;
    EXPECT_EQ(r.rb_recompose, k * (k - 1) / 2) << k;
    EXPECT_EQ(r.rf_recompose, 0u) << k;
    EXPECT_EQ(r.machine_steps, 4 * k + 2) << k;
  }
}
