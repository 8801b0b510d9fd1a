#include <gtest/gtest.h>

#include "refocus/syntax.hpp"

using namespace refocus;

namespace {

Term op(Term l, Operator o, Term r) { return Term::opr(std::move(l), o, std::move(r)); }
Term L(Nat n) { return Term::lit(n); }
constexpr Operator Add = Operator::Add;
constexpr Operator Sub = Operator::Sub;

std::size_t parse_error_offset(std::string_view src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for '" << src << "'";
  return 0;
}

}  // namespace

TEST(Syntax, ParsesIntoLeftAssociativeTree) {
  EXPECT_EQ(parse("(1 + 10) + (2 + 20)"), op(op(L(1), Add, L(10)), Add, op(L(2), Add, L(20))));
  EXPECT_EQ(parse("1 - 2 - 3"), op(op(L(1), Sub, L(2)), Sub, L(3)));
  EXPECT_EQ(parse("  7 "), L(7));
  EXPECT_EQ(parse("1+(2-3)"), op(L(1), Add, op(L(2), Sub, L(3))));
}

TEST(Syntax, PrintsWithMinimalParentheses) {
  EXPECT_EQ(print(op(op(L(1), Add, L(10)), Add, op(L(2), Add, L(20)))), "(1 + 10) + (2 + 20)");
  EXPECT_EQ(print(parse("1 - 2 - 3")), "(1 - 2) - 3");
  EXPECT_EQ(print(L(0)), "0");
  EXPECT_EQ(print(Value{42}), "42");
  EXPECT_EQ(print(PotentialRedex{Sub, Value{1}, Value{10}}), "1 - 10");
  EXPECT_EQ(print(NormalResult{Value{33}}), "= 33");
  EXPECT_EQ(print(NormalResult{Wrong{"numerical underflow: -9"}}), "numerical underflow: -9");
}

TEST(Syntax, ParseErrorsReportOffsets) {
  EXPECT_EQ(parse_error_offset("((("), 3u);
  EXPECT_EQ(parse_error_offset("1 + "), 4u);
  EXPECT_EQ(parse_error_offset(""), 0u);
  EXPECT_EQ(parse_error_offset("1 )"), 2u);
  EXPECT_EQ(parse_error_offset("1 * 2"), 2u);
  EXPECT_EQ(parse_error_offset("(1 + 2"), 6u);
  EXPECT_EQ(parse_error_offset("1 + 4294967296"), 4u);
  EXPECT_NO_THROW(parse("4294967295"));
}

TEST(Syntax, OperatorCount) {
  EXPECT_EQ(op_count(parse("(1 - (5 + 5)) - (2 - 20)")), 4u);
  EXPECT_EQ(op_count(L(3)), 0u);
}

TEST(Syntax, ContractAddAndSub) {
  EXPECT_EQ(contract({Add, Value{1}, Value{10}}), ContractumOrError{Contractum{L(11)}});
  EXPECT_EQ(contract({Sub, Value{20}, Value{2}}), ContractumOrError{Contractum{L(18)}});
  EXPECT_EQ(contract({Sub, Value{3}, Value{3}}), ContractumOrError{Contractum{L(0)}});
  EXPECT_EQ(contract({Sub, Value{1}, Value{10}}), ContractumOrError{ContractError{"numerical underflow: -9"}});
  EXPECT_EQ(contract({Sub, Value{2}, Value{20}}), ContractumOrError{ContractError{"numerical underflow: -18"}});
  EXPECT_EQ(contract({Sub, Value{0}, Value{1}}), ContractumOrError{ContractError{"numerical underflow: -1"}});
}

TEST(Syntax, AdditionOverflowIsAnError) {
  EXPECT_THROW(checked_add(~Nat{0}, 1), std::overflow_error);
  EXPECT_EQ(checked_add(~Nat{0} - 1, 1), ~Nat{0});
}

TEST(Syntax, TermOfPotentialRedex) {
  EXPECT_EQ(term_of_potential_redex({Sub, Value{5}, Value{5}}), parse("5 - 5"));
  EXPECT_EQ(term_of_value(Value{9}), L(9));
}

TEST(Syntax, EqualityIsStructural) {
  const Term a = parse("(1 + 2) - 3");
  const Term b = parse("(1 + 2) - 3");
  EXPECT_EQ(a, b);
  EXPECT_NE(a, parse("(1 + 2) + 3"));
  EXPECT_NE(a, parse("1 + (2 - 3)"));
  EXPECT_NE(L(1), parse("0 + 1"));
  const Term copy = a;
  EXPECT_EQ(copy, a);
}

TEST(Syntax, CopiesShareAndOutliveOriginals) {
  Term inner = parse("4 - 1");
  Term outer = Term::opr(inner, Add, inner);
  inner = L(0);
  EXPECT_EQ(print(outer), "(4 - 1) + (4 - 1)");
  Term moved = std::move(outer);
  EXPECT_EQ(print(moved), "(4 - 1) + (4 - 1)");
}
