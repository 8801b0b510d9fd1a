#include "refocus/machine.hpp"

namespace refocus {

bool is_final(const MachineState& s) noexcept {
  return std::holds_alternative<FinalVal>(s) || std::holds_alternative<FinalWrong>(s);
}

MachineState machine_step(MachineState s) {
  if (auto* e = std::get_if<EvalMode>(&s)) {
    if (e->term.is_literal()) {
      return ContinueMode{std::move(e->context), Value{e->term.literal()}};
    }
    const Operation& o = e->term.operation();
    e->context.push_left_of(o.op, o.right);
    Term left = o.left;
    return EvalMode{std::move(left), std::move(e->context)};
  }
  if (auto* k = std::get_if<ContinueMode>(&s)) {
    Context& c = k->context;
    if (c.empty()) {
      return FinalVal{k->value};
    }
    if (c.head().is_left_of()) {
      Term right = c.resume_right(k->value);
      return EvalMode{std::move(right), std::move(c)};
    }
    const RightOf r = c.head().right_of();
    c.pop();
    const Nat n1 = r.left.n;
    const Nat n2 = k->value.n;
    if (r.op == Operator::Add) {
      return ContinueMode{std::move(c), Value{checked_add(n1, n2)}};
    }
    if (n1 < n2) {
      return FinalWrong{underflow_message(n1, n2)};
    }
    return ContinueMode{std::move(c), Value{n1 - n2}};
  }
  throw MachineFault("machine_step: final state has no successor");
}

namespace {

template <typename OnState>
MachineRun drive(const Term& t, OnState&& on_state) {
  const std::size_t budget = machine_step_budget(t);
  MachineState s = EvalMode{t, Context{}};
  on_state(s);
  std::size_t steps = 0;
  while (!is_final(s)) {
    if (steps == budget) {
      throw MachineFault("machine_run: step budget exhausted");
    }
    s = machine_step(std::move(s));
    ++steps;
    on_state(s);
  }
  if (auto* v = std::get_if<FinalVal>(&s)) {
    return MachineRun{v->value, steps};
  }
  return MachineRun{Wrong{std::get<FinalWrong>(s).message}, steps};
}

}  // namespace

MachineRun machine_run(const Term& t) {
  return drive(t, [](const MachineState&) {});
}

std::vector<MachineState> machine_trace(const Term& t) {
  std::vector<MachineState> states;
  drive(t, [&](const MachineState& s) { states.push_back(s); });
  return states;
}

std::vector<PotentialRedex> machine_redexes(const Term& t) {
  std::vector<PotentialRedex> out;
  drive(t, [&](const MachineState& s) {
    const auto* k = std::get_if<ContinueMode>(&s);
    if (k == nullptr || k->context.empty()) {
      return;
    }
    if (const ControlFrame& f = k->context.head(); !f.is_left_of()) {
      out.push_back(PotentialRedex{f.op(), f.left(), k->value});
    }
  });
  return out;
}

std::string print(const MachineState& s) {
  if (const auto* e = std::get_if<EvalMode>(&s)) {
    return "eval " + print(e->term) + " @ " + print_context(e->context);
  }
  if (const auto* k = std::get_if<ContinueMode>(&s)) {
    return "continue " + print(k->value) + " @ " + print_context(k->context);
  }
  if (const auto* v = std::get_if<FinalVal>(&s)) {
    return print(NormalResult{v->value});
  }
  return std::get<FinalWrong>(s).message;
}

NormalResult big_step_eval(const Term& t) {
  if (t.is_literal()) {
    return Value{t.literal()};
  }
  const Operation& o = t.operation();
  NormalResult left = big_step_eval(o.left);
  if (std::holds_alternative<Wrong>(left)) {
    return left;
  }
  NormalResult right = big_step_eval(o.right);
  if (std::holds_alternative<Wrong>(right)) {
    return right;
  }
  const Nat n1 = std::get<Value>(left).n;
  const Nat n2 = std::get<Value>(right).n;
  if (o.op == Operator::Add) {
    return Value{checked_add(n1, n2)};
  }
  if (n1 < n2) {
    return Wrong{underflow_message(n1, n2)};
  }
  return Value{n1 - n2};
}

}  // namespace refocus
