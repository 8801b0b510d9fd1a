#include "oracles.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

namespace oracle {

using refocus::NormalResult;
using refocus::Term;
using refocus::Value;
using refocus::Wrong;

std::variant<Value, Term, Stuck> step(const Term& t) {
  const std::string s = refocus::print(t);
  static const std::regex redex(R"((\d+) ([+-]) (\d+))");
  std::smatch m;
  if (!std::regex_search(s, m, redex)) {
    return Value{std::stoull(s)};
  }
  const unsigned long long a = std::stoull(m[1].str());
  const unsigned long long b = std::stoull(m[3].str());
  std::string replacement;
  if (m[2].str() == "+") {
    replacement = std::to_string(a + b);
  } else if (a < b) {
    return Stuck{"numerical underflow: -" + std::to_string(b - a)};
  } else {
    replacement = std::to_string(a - b);
  }
  return refocus::parse(m.prefix().str() + replacement + m.suffix().str());
}

NormalResult normalize(const Term& t) {
  Term current = t;
  for (;;) {
    auto r = step(current);
    if (auto* v = std::get_if<Value>(&r)) {
      return *v;
    }
    if (auto* s = std::get_if<Stuck>(&r)) {
      return Wrong{s->message};
    }
    current = std::get<Term>(r);
  }
}

namespace {

struct Evaluator {
  const std::string& src;
  std::size_t pos = 0;

  void ws() {
    while (pos < src.size() && src[pos] == ' ') ++pos;
  }

  // Returns the value or throws the error message as a std::string.
  unsigned long long operand() {
    ws();
    if (src[pos] == '(') {
      ++pos;
      const unsigned long long v = expr();
      ws();
      ++pos;  // ')'
      return v;
    }
    unsigned long long n = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      n = n * 10 + static_cast<unsigned long long>(src[pos++] - '0');
    }
    return n;
  }

  unsigned long long expr() {
    unsigned long long acc = operand();
    for (;;) {
      ws();
      if (pos >= src.size() || (src[pos] != '+' && src[pos] != '-')) {
        return acc;
      }
      const char op = src[pos++];
      const unsigned long long rhs = operand();
      if (op == '+') {
        acc += rhs;
      } else if (acc < rhs) {
        throw std::string("numerical underflow: -" + std::to_string(rhs - acc));
      } else {
        acc -= rhs;
      }
    }
  }
};

}  // namespace

NormalResult evaluate(const std::string& src) {
  Evaluator e{src};
  try {
    return Value{e.expr()};
  } catch (const std::string& message) {
    return Wrong{message};
  }
}

std::size_t terms_with_ops(std::size_t n, std::size_t lits) {
  if (n == 0) {
    return lits;
  }
  std::size_t total = 0;
  for (std::size_t left = 0; left < n; ++left) {
    total += 2 * terms_with_ops(left, lits) * terms_with_ops(n - 1 - left, lits);
  }
  return total;
}

std::size_t terms_up_to(std::size_t max_ops, std::size_t lits) {
  std::size_t total = 0;
  for (std::size_t n = 0; n <= max_ops; ++n) {
    total += terms_with_ops(n, lits);
  }
  return total;
}

std::size_t frame_count(std::size_t lits) { return 2 * terms_up_to(1, lits) + 2 * lits; }

std::size_t contexts_up_to(std::size_t max_frames, std::size_t lits) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t n = 0; n <= max_frames; ++n) {
    total += layer;
    layer *= frame_count(lits);
  }
  return total;
}

}  // namespace oracle
