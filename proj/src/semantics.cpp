#include "refocus/semantics.hpp"

#include <stdexcept>

#include "refocus/context_machine.hpp"
#include "refocus/cps.hpp"
#include "refocus/decompose_kk.hpp"
#include "refocus/direct_sos.hpp"
#include "refocus/harness.hpp"
#include "refocus/machine.hpp"

namespace refocus {

std::string_view name(SemanticsChoice s) noexcept {
  switch (s) {
    case SemanticsChoice::Direct: return "direct";
    case SemanticsChoice::Cps3: return "cps3";
    case SemanticsChoice::Cps2: return "cps2";
    case SemanticsChoice::KkRb: return "kk-rb";
    case SemanticsChoice::KkRf: return "kk-rf";
    case SemanticsChoice::KcRb: return "kc-rb";
    case SemanticsChoice::KcRf: return "kc-rf";
    case SemanticsChoice::Machine: return "machine";
    case SemanticsChoice::BigStep: return "bigstep";
  }
  return "?";
}

std::optional<SemanticsChoice> semantics_from_name(std::string_view n) noexcept {
  for (SemanticsChoice s : kAllSemantics) {
    if (name(s) == n) {
      return s;
    }
  }
  return std::nullopt;
}

NormalResult normalize_with(SemanticsChoice s, const Term& t) {
  switch (s) {
    case SemanticsChoice::Direct: return normalize_d(t);
    case SemanticsChoice::Cps3: return normalize_cps3(t);
    case SemanticsChoice::Cps2: return normalize_cps2(t);
    case SemanticsChoice::KkRb: return normalize_kk_rb(t);
    case SemanticsChoice::KkRf: return normalize_kk_rf(t);
    case SemanticsChoice::KcRb: return normalize_kc_rb(t);
    case SemanticsChoice::KcRf: return normalize_kc_rf(t);
    case SemanticsChoice::Machine: return machine_run(t).result;
    case SemanticsChoice::BigStep: return big_step_eval(t);
  }
  throw std::invalid_argument("normalize_with: unknown semantics");
}

BenchRow bench_chain(std::size_t k) {
  const Term t = chain(k);
  const CountedResult rb = normalize_kc_rb_counted(t);
  const CountedResult rf = normalize_kc_rf_counted(t);
  return BenchRow{k,
                  rb.counter.decompose_visits,
                  rf.counter.decompose_visits,
                  rb.counter.recompose_steps,
                  rf.counter.recompose_steps,
                  machine_run(t).steps};
}

}  // namespace refocus
