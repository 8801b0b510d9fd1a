#include <gtest/gtest.h>

#include "oracles.hpp"
#include "refocus/harness.hpp"
#include "refocus/machine.hpp"

using namespace refocus;

TEST(Machine, StepExamples) {
  EXPECT_EQ(machine_step(EvalMode{Term::lit(5), Context{}}), MachineState(ContinueMode{Context{}, Value{5}}));
  EXPECT_EQ(machine_step(ContinueMode{Context{RightOf{Value{11}, Operator::Add}}, Value{22}}),
            MachineState(ContinueMode{Context{}, Value{33}}));
  EXPECT_EQ(machine_step(ContinueMode{Context{RightOf{Value{1}, Operator::Sub}}, Value{10}}),
            MachineState(FinalWrong{"numerical underflow: -9"}));
  EXPECT_EQ(machine_step(ContinueMode{Context{}, Value{4}}), MachineState(FinalVal{Value{4}}));
  EXPECT_EQ(machine_step(EvalMode{parse("1 + 2"), Context{}}),
            MachineState(EvalMode{Term::lit(1), Context{LeftOf{Operator::Add, Term::lit(2)}}}));
  EXPECT_EQ(machine_step(ContinueMode{Context{LeftOf{Operator::Add, Term::lit(2)}}, Value{1}}),
            MachineState(EvalMode{Term::lit(2), Context{RightOf{Value{1}, Operator::Add}}}));
}

TEST(Machine, FinalStatesDoNotStep) {
  EXPECT_THROW(machine_step(FinalVal{Value{1}}), MachineFault);
  EXPECT_THROW(machine_step(FinalWrong{"x"}), MachineFault);
  EXPECT_TRUE(is_final(FinalVal{Value{1}}));
  EXPECT_FALSE(is_final(ContinueMode{Context{}, Value{1}}));
}

TEST(Machine, RunExamples) {
  const MachineRun nine = machine_run(Term::lit(9));
  EXPECT_EQ(nine.result, NormalResult{Value{9}});
  EXPECT_EQ(nine.steps, 2u);
  EXPECT_EQ(machine_run(parse("(1 + 10) + (2 + 20)")).result, NormalResult{Value{33}});
  EXPECT_EQ(machine_run(parse("(1 - (5 + 5)) - (2 - 20)")).result, NormalResult{Wrong{"numerical underflow: -9"}});
}

TEST(Machine, ChainTakesFourStepsPerOperator) {
  // Per operator: eval the node, switch to the right operand, eval the right
  // literal, add. Plus one step for the leftmost literal and one to finish.
  for (std::size_t k : {1u, 2u, 5u, 16u, 64u}) {
    const MachineRun r = machine_run(chain(k));
    EXPECT_EQ(r.steps, 4 * k + 2) << k;
    EXPECT_EQ(r.result, NormalResult{Value{k + 1}});
  }
}

TEST(Machine, TraceEndsInFinalState) {
  const std::vector<MachineState> states = machine_trace(parse("1 + 2"));
  ASSERT_EQ(states.size(), 7u);
  EXPECT_EQ(print(states.front()), "eval 1 + 2 @ []");
  EXPECT_EQ(print(states[3]), "eval 2 @ 1 + []");
  EXPECT_EQ(print(states[4]), "continue 2 @ 1 + []");
  EXPECT_EQ(states.back(), MachineState(FinalVal{Value{3}}));
  EXPECT_EQ(print(states.back()), "= 3");
}

TEST(Machine, RedexesAlongARun) {
  const std::vector<PotentialRedex> rs = machine_redexes(parse("(1 - (5 + 5)) - (2 - 20)"));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0], (PotentialRedex{Operator::Add, Value{5}, Value{5}}));
  EXPECT_EQ(rs[1], (PotentialRedex{Operator::Sub, Value{1}, Value{10}}));
}

TEST(Machine, BigStepExamples) {
  EXPECT_EQ(big_step_eval(Term::lit(4)), NormalResult{Value{4}});
  EXPECT_EQ(big_step_eval(parse("(1 - (5 + 5)) - (2 - 20)")), NormalResult{Wrong{"numerical underflow: -9"}});
}

TEST(Machine, AgreesWithRecursiveOracle) {
  for (const Term& t : enumerate_terms({.max_ops = 3, .max_lit = 2})) {
    const NormalResult want = oracle::evaluate(print(t));
    EXPECT_EQ(machine_run(t).result, want) << print(t);
    EXPECT_EQ(big_step_eval(t), want) << print(t);
  }
}
