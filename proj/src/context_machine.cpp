#include "refocus/context_machine.hpp"

#include "refocus/decompose_kk.hpp"
#include "refocus/harness.hpp"

namespace refocus {

Term recompose_io(const Context& inside_out, Term t, VisitCounter& counter) {
  for (const ControlFrame& f : inside_out) {
    t = plug(f, std::move(t));
    ++counter.recompose_steps;
  }
  return t;
}

Term recompose_io(const Context& inside_out, Term t) {
  VisitCounter unused;
  return recompose_io(inside_out, std::move(t), unused);
}

namespace {

Term recompose_oi_from(Context::const_iterator it, Context::const_iterator end, Term t) {
  if (it == end) {
    return t;
  }
  const ControlFrame& f = *it;
  return plug(f, recompose_oi_from(std::next(it), end, std::move(t)));
}

}  // namespace

Term recompose_oi(const Context& outside_in, Term t) {
  return recompose_oi_from(outside_in.begin(), outside_in.end(), std::move(t));
}

namespace {

// Decomposes `t` in the context held by `out`, which the caller initializes
// as a decomposition so that the context is never moved.
ValueOrDecompositionKC& decompose_in(const Term& t, ValueOrDecompositionKC& out, VisitCounter& counter) {
  DecompositionKC& d = std::get<DecompositionKC>(out);
  Context& c = d.context;
  // `current` points into `t` or into `owner`, which holds the right operand
  // taken from the most recently consumed LeftOf frame.
  Term owner = Term::lit(0);
  const Term* current = &t;
  for (;;) {
    // Term mode.
    ++counter.decompose_visits;
    if (!current->is_literal()) {
      const Operation& o = current->operation();
      c.push_left_of(o.op, o.right);
      current = &o.left;
      continue;
    }
    const Value v{current->literal()};
    // Context mode.
    if (c.empty()) {
      out = v;
      return out;
    }
    if (const ControlFrame& h = c.head(); !h.is_left_of()) {
      d.pr = PotentialRedex{h.op(), h.left(), v};
      c.pop();
      return out;
    }
    owner = c.resume_right(v);
    current = &owner;
  }
}

template <typename C>
ValueOrDecompositionKC decompose_from(const Term& t, C&& inside_out, VisitCounter& counter) {
  ValueOrDecompositionKC out(std::in_place_type<DecompositionKC>, PotentialRedex{}, std::forward<C>(inside_out));
  decompose_in(t, out, counter);
  return out;
}

}  // namespace

ValueOrDecompositionKC decompose_term_kc(const Term& t, const Context& inside_out, VisitCounter& counter) {
  return decompose_from(t, inside_out, counter);
}

ValueOrDecompositionKC decompose_term_kc(const Term& t, Context&& inside_out, VisitCounter& counter) {
  return decompose_from(t, std::move(inside_out), counter);
}

ValueOrDecompositionKC decompose_term_kc(const Term& t, const Context& inside_out) {
  VisitCounter unused;
  return decompose_from(t, inside_out, unused);
}

ValueOrDecompositionKC decompose_term_kc(const Term& t, Context&& inside_out) {
  VisitCounter unused;
  return decompose_from(t, std::move(inside_out), unused);
}

ValueOrDecompositionKC decompose_kc(const Term& t) {
  VisitCounter unused;
  return decompose_from(t, Context{}, unused);
}

ValueOrTermOrStuck reduce_kc(const Term& t) {
  ValueOrDecompositionKC d = decompose_kc(t);
  if (const auto* v = std::get_if<Value>(&d)) {
    return *v;
  }
  const auto& dec = std::get<DecompositionKC>(d);
  ContractumOrError c = contract(dec.pr);
  if (auto* ok = std::get_if<Contractum>(&c)) {
    return Next{recompose_io(dec.context, std::move(ok->term))};
  }
  return Stuck{std::get<ContractError>(c).message};
}

namespace {

void spend(Fuel& fuel) {
  if (fuel.remaining == 0) {
    throw FuelExhausted("iterate_kc: out of fuel");
  }
  --fuel.remaining;
}

// Shared driver of both loops. `next` maps a contractum and the context of its
// redex to the following decomposition.
template <typename Next, typename OnDecomposition>
NormalResult iterate_kc(ValueOrDecompositionKC d, Fuel fuel, Next&& next, OnDecomposition&& on_dec) {
  for (;;) {
    spend(fuel);
    if (const auto* v = std::get_if<Value>(&d)) {
      return *v;
    }
    auto& dec = std::get<DecompositionKC>(d);
    on_dec(dec);
    ContractumOrError c = contract(dec.pr);
    if (auto* err = std::get_if<ContractError>(&c)) {
      return Wrong{err->message};
    }
    ValueOrDecompositionKC following = next(std::move(std::get<Contractum>(c).term), std::move(dec.context));
    d = std::move(following);
  }
}

template <typename OnReduct, typename OnDecomposition>
NormalResult run_kc_rb(ValueOrDecompositionKC d, Fuel fuel, VisitCounter& counter, OnReduct&& on_reduct,
                       OnDecomposition&& on_dec) {
  return iterate_kc(
      std::move(d), fuel,
      [&](Term contractum, Context c) {
        Term reduct = recompose_io(c, std::move(contractum), counter);
        on_reduct(reduct);
        return decompose_term_kc(reduct, Context{}, counter);
      },
      on_dec);
}

template <typename OnDecomposition>
NormalResult run_kc_rf(ValueOrDecompositionKC d, Fuel fuel, VisitCounter& counter, OnDecomposition&& on_dec) {
  return iterate_kc(
      std::move(d), fuel,
      [&](Term contractum, Context c) { return decompose_term_kc(contractum, std::move(c), counter); }, on_dec);
}

constexpr auto ignore = [](const auto&) {};

}  // namespace

NormalResult iterate_kc_rb(ValueOrDecompositionKC d, Fuel fuel, VisitCounter& counter) {
  return run_kc_rb(std::move(d), fuel, counter, ignore, ignore);
}

NormalResult iterate_kc_rf(ValueOrDecompositionKC d, Fuel fuel, VisitCounter& counter) {
  return run_kc_rf(std::move(d), fuel, counter, ignore);
}

CountedResult normalize_kc_rb_counted(const Term& t) {
  VisitCounter counter;
  ValueOrDecompositionKC d = decompose_term_kc(t, Context{}, counter);
  NormalResult r = iterate_kc_rb(std::move(d), initial_fuel(t), counter);
  return CountedResult{std::move(r), counter};
}

CountedResult normalize_kc_rf_counted(const Term& t) {
  VisitCounter counter;
  ValueOrDecompositionKC d = decompose_term_kc(t, Context{}, counter);
  NormalResult r = iterate_kc_rf(std::move(d), initial_fuel(t), counter);
  return CountedResult{std::move(r), counter};
}

NormalResult normalize_kc_rb(const Term& t) { return normalize_kc_rb_counted(t).result; }

NormalResult normalize_kc_rf(const Term& t) { return normalize_kc_rf_counted(t).result; }

Trace trace_kc_rb(const Term& t) {
  VisitCounter counter;
  std::vector<Term> reducts;
  NormalResult r = run_kc_rb(
      decompose_kc(t), initial_fuel(t), counter, [&](const Term& u) { reducts.push_back(u); },
      ignore);
  return Trace{std::move(reducts), std::move(r)};
}

RefocusTrace trace_kc_rf(const Term& t) {
  VisitCounter counter;
  std::vector<DecompositionKC> decs;
  NormalResult r =
      run_kc_rf(decompose_kc(t), initial_fuel(t), counter, [&](const DecompositionKC& d) { decs.push_back(d); });
  return RefocusTrace{std::move(decs), std::move(r)};
}

bool refocus_property(const Context& inside_out, const Term& t) {
  return decompose_kc(recompose_io(inside_out, t)) == decompose_term_kc(t, inside_out);
}

const std::vector<Term>& corr_probe_terms() {
  static const std::vector<Term> probes = enumerate_terms(EnumSpec{.max_ops = 1, .max_lit = 2});
  return probes;
}

bool probe_corr(const Term& t) {
  const ValueOrDecompositionKK kk = decompose_kk(t);
  const ValueOrDecompositionKC kc = decompose_kc(t);
  if (kk.is_value() || std::holds_alternative<Value>(kc)) {
    return false;
  }
  const DecompositionKK& higher = kk.decomposition();
  const DecompositionKC& first = std::get<DecompositionKC>(kc);
  if (!(higher.pr == first.pr)) {
    return false;
  }
  for (const Term& p : corr_probe_terms()) {
    if (!(higher.kr(p) == recompose_io(first.context, p))) {
      return false;
    }
  }
  return true;
}

}  // namespace refocus
