#include "refocus/harness.hpp"

#include <random>
#include <stdexcept>

namespace refocus {

std::vector<Term> enumerate_terms(const EnumSpec& spec) {
  // by_ops[n] holds all terms with exactly n operators, in order.
  std::vector<std::vector<Term>> by_ops(spec.max_ops + 1);
  for (Nat n = 0; n <= spec.max_lit; ++n) {
    by_ops[0].push_back(Term::lit(n));
  }
  for (std::size_t n = 1; n <= spec.max_ops; ++n) {
    for (std::size_t left_ops = 0; left_ops < n; ++left_ops) {
      for (const Term& l : by_ops[left_ops]) {
        for (Operator op : kOperators) {
          for (const Term& r : by_ops[n - 1 - left_ops]) {
            by_ops[n].push_back(Term::opr(l, op, r));
          }
        }
      }
    }
  }
  std::vector<Term> out;
  for (auto& level : by_ops) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<ControlFrame> enumerate_frames(Nat max_lit) {
  std::vector<ControlFrame> frames;
  const std::vector<Term> operands = enumerate_terms(EnumSpec{.max_ops = 1, .max_lit = max_lit});
  for (Operator op : kOperators) {
    for (const Term& r : operands) {
      frames.emplace_back(LeftOf{op, r});
    }
  }
  for (Nat v = 0; v <= max_lit; ++v) {
    for (Operator op : kOperators) {
      frames.emplace_back(RightOf{Value{v}, op});
    }
  }
  return frames;
}

namespace {

void extend(const std::vector<ControlFrame>& frames, std::size_t remaining, std::vector<ControlFrame>& prefix,
            std::vector<Context>& out) {
  if (remaining == 0) {
    // prefix is head first; Context wants tail-first pushes.
    Context c;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
      c.push(*it);
    }
    out.push_back(std::move(c));
    return;
  }
  for (const ControlFrame& f : frames) {
    prefix.push_back(f);
    extend(frames, remaining - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Context> enumerate_contexts(const EnumSpec& spec) {
  const std::vector<ControlFrame> frames = enumerate_frames(spec.max_lit);
  std::vector<Context> out;
  out.reserve(context_count(spec));
  std::vector<ControlFrame> prefix;
  for (std::size_t len = 0; len <= spec.max_frames; ++len) {
    extend(frames, len, prefix, out);
  }
  return out;
}

std::size_t context_count(const EnumSpec& spec) {
  const std::size_t f = enumerate_frames(spec.max_lit).size();
  std::size_t total = 0;
  std::size_t power = 1;
  for (std::size_t len = 0; len <= spec.max_frames; ++len) {
    total += power;
    power *= f;
  }
  return total;
}

namespace {

// Draws only from the raw engine output, which the standard fixes for
// mt19937_64, so sequences are identical across standard libraries.
class TermGenerator {
public:
  TermGenerator(std::uint64_t seed, Nat max_lit) : engine_(seed), max_lit_(max_lit) {}

  Term generate(std::size_t budget) {
    if (budget == 0 || coin()) {
      return Term::lit(engine_() % (max_lit_ + 1));
    }
    const Operator op = coin() ? Operator::Add : Operator::Sub;
    std::size_t left_budget = 0;
    for (std::size_t i = 0; i + 1 < budget; ++i) {
      left_budget += coin() ? 1 : 0;
    }
    Term left = generate(left_budget);
    Term right = generate(budget - 1 - left_budget);
    return Term::opr(std::move(left), op, std::move(right));
  }

private:
  bool coin() { return (engine_() >> 63) != 0; }

  std::mt19937_64 engine_;
  Nat max_lit_;
};

}  // namespace

std::vector<Term> random_terms(const RandSpec& spec) {
  TermGenerator gen(spec.seed, spec.max_lit);
  std::vector<Term> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    out.push_back(gen.generate(spec.max_ops));
  }
  return out;
}

Term chain(std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("chain: k must be at least 1");
  }
  Term t = Term::lit(1);
  for (std::size_t i = 0; i < k; ++i) {
    t = Term::opr(std::move(t), Operator::Add, Term::lit(1));
  }
  return t;
}

}  // namespace refocus
