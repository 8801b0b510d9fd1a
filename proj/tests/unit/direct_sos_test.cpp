#include <gtest/gtest.h>

#include "oracles.hpp"
#include "refocus/direct_sos.hpp"
#include "refocus/harness.hpp"

using namespace refocus;

namespace {

std::vector<std::string> printed(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  for (const Term& t : ts) out.push_back(print(t));
  return out;
}

}  // namespace

TEST(DirectSos, OneStepExamples) {
  EXPECT_EQ(reduce_d(parse("(1 + 10) + (2 + 20)")), ValueOrTermOrStuck{Next{parse("11 + (2 + 20)")}});
  EXPECT_EQ(reduce_d(parse("11 + (2 + 20)")), ValueOrTermOrStuck{Next{parse("11 + 22")}});
  EXPECT_EQ(reduce_d(parse("7")), ValueOrTermOrStuck{Value{7}});
  EXPECT_EQ(reduce_d(parse("(1 - 10) - (2 - 20)")), ValueOrTermOrStuck{Stuck{"numerical underflow: -9"}});
}

TEST(DirectSos, ReductionSequences) {
  const Trace sum = trace_d(parse("(1 + 10) + (2 + 20)"));
  EXPECT_EQ(printed(sum.reducts), (std::vector<std::string>{"11 + (2 + 20)", "11 + 22", "33"}));
  EXPECT_EQ(sum.result, NormalResult{Value{33}});

  const Trace stuck = trace_d(parse("(1 - (5 + 5)) - (2 - 20)"));
  EXPECT_EQ(printed(stuck.reducts), (std::vector<std::string>{"(1 - 10) - (2 - 20)"}));
  EXPECT_EQ(stuck.result, NormalResult{Wrong{"numerical underflow: -9"}});
}

TEST(DirectSos, NormalizeMatchesOracles) {
  for (const Term& t : enumerate_terms({.max_ops = 2, .max_lit = 3})) {
    const NormalResult r = normalize_d(t);
    EXPECT_EQ(r, oracle::normalize(t)) << print(t);
    EXPECT_EQ(r, oracle::evaluate(print(t))) << print(t);
  }
}

TEST(DirectSos, OneStepMatchesRewritingOracle) {
  for (const Term& t : enumerate_terms({.max_ops = 3, .max_lit = 2})) {
    const ValueOrTermOrStuck got = reduce_d(t);
    const auto want = oracle::step(t);
    if (const auto* v = std::get_if<Value>(&want)) {
      EXPECT_EQ(got, ValueOrTermOrStuck{*v}) << print(t);
    } else if (const auto* n = std::get_if<Term>(&want)) {
      EXPECT_EQ(got, ValueOrTermOrStuck{Next{*n}}) << print(t);
    } else {
      EXPECT_EQ(got, ValueOrTermOrStuck{Stuck{std::get<oracle::Stuck>(want).message}}) << print(t);
    }
  }
}

TEST(DirectSos, FuelOfOpCountPlusOneIsExact) {
  const Term t = parse("(1 + 10) + (2 + 20)");
  EXPECT_EQ(initial_fuel(t).remaining, 4u);
  EXPECT_EQ(normalize_d(t, Fuel{4}), NormalResult{Value{33}});
  EXPECT_THROW(normalize_d(t, Fuel{3}), FuelExhausted);
  EXPECT_THROW(normalize_d(parse("5"), Fuel{0}), FuelExhausted);
  EXPECT_EQ(normalize_d(parse("5"), Fuel{1}), NormalResult{Value{5}});
}

TEST(DirectSos, StuckOnlyOnUnderflowingSubtraction) {
  for (const Term& t : enumerate_terms({.max_ops = 2, .max_lit = 2})) {
    const ValueOrTermOrStuck r = reduce_d(t);
    if (const auto* s = std::get_if<Stuck>(&r)) {
      EXPECT_EQ(s->message.rfind("numerical underflow: -", 0), 0u) << print(t);
    }
  }
  EXPECT_EQ(to_normal_result(Stuck{"x"}), NormalResult{Wrong{"x"}});
  EXPECT_EQ(to_normal_result(Value{2}), NormalResult{Value{2}});
  EXPECT_THROW(to_normal_result(Next{parse("1 + 1")}), std::logic_error);
}
