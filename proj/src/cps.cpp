#include "refocus/cps.hpp"

namespace refocus {

ValueOrTermOrStuck reduce3(const Term& t) {
  return reduce3_c(t, [](ValueOrTermOrStuck r) { return r; });
}

ValueOrTermOrStuck reduce2_c(const Term& t, const DelimitedK& k) {
  if (t.is_literal()) {
    return k(Value{t.literal()});
  }
  const Operation& o = t.operation();
  return reduce2_c(o.left, [&o, k](ValueOrTerm r1) -> ValueOrTermOrStuck {
    if (auto* n1 = std::get_if<Next>(&r1)) {
      return k(Next{Term::opr(std::move(n1->term), o.op, o.right)});
    }
    const Value v1 = std::get<Value>(r1);
    return reduce2_c(o.right, [&o, k, v1](ValueOrTerm r2) -> ValueOrTermOrStuck {
      if (auto* n2 = std::get_if<Next>(&r2)) {
        return k(Next{Term::opr(term_of_value(v1), o.op, std::move(n2->term))});
      }
      ContractumOrError c = contract(PotentialRedex{o.op, v1, std::get<Value>(r2)});
      if (auto* ok = std::get_if<Contractum>(&c)) {
        return k(Next{std::move(ok->term)});
      }
      // Discontinuity: k is dropped.
      return Stuck{std::get<ContractError>(c).message};
    });
  });
}

ValueOrTermOrStuck reduce2(const Term& t) {
  return reduce2_c(t, [](ValueOrTerm r) -> ValueOrTermOrStuck {
    return std::visit([](auto&& x) -> ValueOrTermOrStuck { return std::move(x); }, std::move(r));
  });
}

namespace {

template <typename Reduce>
NormalResult iterate(Term t, Reduce reduce) {
  Fuel fuel = initial_fuel(t);
  for (;;) {
    if (fuel.remaining == 0) {
      throw FuelExhausted("CPS normalizer: out of fuel");
    }
    --fuel.remaining;
    ValueOrTermOrStuck r = reduce(t);
    if (auto* n = std::get_if<Next>(&r)) {
      t = std::move(n->term);
      continue;
    }
    return to_normal_result(r);
  }
}

}  // namespace

NormalResult normalize_cps3(const Term& t) { return iterate(t, [](const Term& u) { return reduce3(u); }); }

NormalResult normalize_cps2(const Term& t) { return iterate(t, [](const Term& u) { return reduce2(u); }); }

}  // namespace refocus
