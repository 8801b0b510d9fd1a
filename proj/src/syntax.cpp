#include "refocus/syntax.hpp"

#include <cctype>
#include <limits>

#include "refocus/detail/pool.hpp"

namespace refocus {

char symbol(Operator op) noexcept { return op == Operator::Add ? '+' : '-'; }

namespace detail {

void destroy(const OperationNode* n) noexcept {
  n->~OperationNode();
  BlockPool::deallocate(const_cast<OperationNode*>(n), sizeof(OperationNode));
}

}  // namespace detail

Term Term::opr(Term left, Operator op, Term right) {
  void* mem = detail::BlockPool::allocate(sizeof(detail::OperationNode));
  return Term(new (mem) detail::OperationNode{{1}, Operation{std::move(left), op, std::move(right)}});
}

bool Term::equal_operations(const Term& a, const Term& b) noexcept {
  const Operation& x = a.node_->operation;
  const Operation& y = b.node_->operation;
  return x.op == y.op && x.left == y.left && x.right == y.right;
}

std::string underflow_message(Nat minuend, Nat subtrahend) {
  return "numerical underflow: -" + std::to_string(subtrahend - minuend);
}

Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) {
    throw std::overflow_error("natural-number addition overflow");
  }
  return a + b;
}

ContractumOrError contract(const PotentialRedex& pr) {
  const Nat n1 = pr.v1.n;
  const Nat n2 = pr.v2.n;
  switch (pr.op) {
    case Operator::Add:
      return Contractum{Term::lit(checked_add(n1, n2))};
    case Operator::Sub:
      if (n1 < n2) {
        return ContractError{underflow_message(n1, n2)};
      }
      return Contractum{Term::lit(n1 - n2)};
  }
  throw std::logic_error("contract: unknown operator");
}

Term term_of_potential_redex(const PotentialRedex& pr) {
  return Term::opr(term_of_value(pr.v1), pr.op, term_of_value(pr.v2));
}

std::size_t op_count(const Term& t) noexcept {
  if (t.is_literal()) {
    return 0;
  }
  const Operation& o = t.operation();
  return 1 + op_count(o.left) + op_count(o.right);
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  Term parse_all() {
    skip_ws();
    if (at_end()) {
      throw ParseError(pos_, "empty input");
    }
    Term t = expr();
    skip_ws();
    if (!at_end()) {
      if (src_[pos_] == ')') {
        throw ParseError(pos_, "unbalanced parenthesis");
      }
      throw ParseError(pos_, std::string("unexpected character '") + src_[pos_] + "'");
    }
    return t;
  }

private:
  bool at_end() const { return pos_ >= src_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  Term expr() {
    Term acc = operand();
    for (;;) {
      skip_ws();
      if (at_end() || (src_[pos_] != '+' && src_[pos_] != '-')) {
        return acc;
      }
      const Operator op = src_[pos_] == '+' ? Operator::Add : Operator::Sub;
      ++pos_;
      acc = Term::opr(std::move(acc), op, operand());
    }
  }

  Term operand() {
    skip_ws();
    if (at_end()) {
      throw ParseError(pos_, "unexpected end of input");
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return literal();
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      Term t = expr();
      skip_ws();
      if (at_end()) {
        throw ParseError(pos_, "unbalanced parenthesis (opened at offset " + std::to_string(open) + ")");
      }
      if (src_[pos_] != ')') {
        throw ParseError(pos_, std::string("unexpected character '") + src_[pos_] + "'");
      }
      ++pos_;
      return t;
    }
    if (c == ')') {
      throw ParseError(pos_, "unbalanced parenthesis");
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  Term literal() {
    const std::size_t start = pos_;
    Nat n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      n = n * 10 + static_cast<Nat>(src_[pos_] - '0');
      if (n > kMaxLiteral) {
        throw ParseError(start, "literal exceeds " + std::to_string(kMaxLiteral));
      }
      ++pos_;
    }
    return Term::lit(n);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print_into(std::string& out, const Term& t);

void print_operand(std::string& out, const Term& t) {
  if (t.is_literal()) {
    out += std::to_string(t.literal());
    return;
  }
  out += '(';
  print_into(out, t);
  out += ')';
}

void print_into(std::string& out, const Term& t) {
  if (t.is_literal()) {
    out += std::to_string(t.literal());
    return;
  }
  const Operation& o = t.operation();
  print_operand(out, o.left);
  out += ' ';
  out += symbol(o.op);
  out += ' ';
  print_operand(out, o.right);
}

}  // namespace

Term parse(std::string_view src) { return Parser(src).parse_all(); }

std::string print(const Term& t) {
  std::string out;
  print_into(out, t);
  return out;
}

std::string print(const Value& v) { return std::to_string(v.n); }

std::string print(const PotentialRedex& pr) { return print(term_of_potential_redex(pr)); }

std::string print(const NormalResult& r) {
  if (const auto* v = std::get_if<Value>(&r)) {
    return "= " + std::to_string(v->n);
  }
  return std::get<Wrong>(r).message;
}

}  // namespace refocus
