#include "refocus/decompose_kk.hpp"

namespace refocus {

ValueOrDecompositionKK decompose_term_kk(const Term& t, const DecomposingK& kd, const RecomposingK& kr) {
  if (t.is_literal()) {
    return kd(Value{t.literal()});
  }
  // Copy the node handle: the continuations below outlive this call.
  const Term self = t;
  const Operation& o = self.operation();
  const Operator op = o.op;
  const Term t2 = o.right;
  RecomposingK kr_left = [kr, op, t2](Term hole) { return kr(Term::opr(std::move(hole), op, t2)); };
  DecomposingK kd_left = [kd, kr, op, t2](Value v1) -> ValueOrDecompositionKK {
    RecomposingK kr_right = [kr, op, v1](Term hole) { return kr(Term::opr(term_of_value(v1), op, std::move(hole))); };
    DecomposingK kd_right = [kd, kr, op, v1](Value v2) -> ValueOrDecompositionKK {
      return {DecompositionKK{PotentialRedex{op, v1, v2}, kd, kr}};
    };
    return decompose_term_kk(t2, kd_right, kr_right);
  };
  return decompose_term_kk(o.left, kd_left, kr_left);
}

ValueOrDecompositionKK decompose_kk(const Term& t) {
  static const DecomposingK kd = [](Value v) { return ValueOrDecompositionKK{v}; };
  static const RecomposingK kr = [](Term u) { return u; };
  return decompose_term_kk(t, kd, kr);
}

ValueOrTermOrStuck reduce_kk(const Term& t) {
  ValueOrDecompositionKK d = decompose_kk(t);
  if (d.is_value()) {
    return d.value();
  }
  const DecompositionKK& dec = d.decomposition();
  ContractumOrError c = contract(dec.pr);
  if (auto* ok = std::get_if<Contractum>(&c)) {
    return Next{dec.kr(std::move(ok->term))};
  }
  return Stuck{std::get<ContractError>(c).message};
}

namespace {

void spend(Fuel& fuel) {
  if (fuel.remaining == 0) {
    throw FuelExhausted("iterate_kk: out of fuel");
  }
  --fuel.remaining;
}

}  // namespace

NormalResult iterate_kk_rb(ValueOrDecompositionKK d, Fuel fuel) {
  for (;;) {
    spend(fuel);
    if (d.is_value()) {
      return d.value();
    }
    const DecompositionKK& dec = d.decomposition();
    ContractumOrError c = contract(dec.pr);
    if (auto* err = std::get_if<ContractError>(&c)) {
      return Wrong{err->message};
    }
    Term reduct = dec.kr(std::get<Contractum>(c).term);
    d = decompose_kk(reduct);
  }
}

NormalResult iterate_kk_rf(ValueOrDecompositionKK d, Fuel fuel) {
  for (;;) {
    spend(fuel);
    if (d.is_value()) {
      return d.value();
    }
    const DecompositionKK& dec = d.decomposition();
    ContractumOrError c = contract(dec.pr);
    if (auto* err = std::get_if<ContractError>(&c)) {
      return Wrong{err->message};
    }
    d = decompose_term_kk(std::get<Contractum>(c).term, dec.kd, dec.kr);
  }
}

NormalResult normalize_kk_rb(const Term& t) { return iterate_kk_rb(decompose_kk(t), initial_fuel(t)); }

NormalResult normalize_kk_rf(const Term& t) { return iterate_kk_rf(decompose_kk(t), initial_fuel(t)); }

}  // namespace refocus
