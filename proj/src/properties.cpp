#include "refocus/properties.hpp"

#include <chrono>
#include <exception>
#include <optional>

#include "refocus/context_machine.hpp"
#include "refocus/cps.hpp"
#include "refocus/decompose_kk.hpp"
#include "refocus/direct_sos.hpp"
#include "refocus/machine.hpp"
#include "refocus/semantics.hpp"

namespace refocus {

namespace {

class Recorder {
public:
  explicit Recorder(std::string name) : start_(std::chrono::steady_clock::now()) { report_.name = std::move(name); }

  // Runs one instance; `check` returns true on success.
  template <typename Check, typename Describe>
  void run(Check&& check, Describe&& describe) {
    ++report_.checked;
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = std::string(" (threw: ") + e.what() + ")";
    }
    if (!ok) {
      if (report_.failures == 0) {
        report_.first_failure = describe() + error;
      }
      ++report_.failures;
    }
  }

  PropertyReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

private:
  PropertyReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::optional<PotentialRedex> contracted_redex(const Term& before, const Term& after) {
  if (before.is_literal()) {
    return std::nullopt;
  }
  const Operation& o = before.operation();
  if (after.is_literal()) {
    if (o.left.is_literal() && o.right.is_literal()) {
      return PotentialRedex{o.op, Value{o.left.literal()}, Value{o.right.literal()}};
    }
    return std::nullopt;
  }
  const Operation& a = after.operation();
  if (!(o.left == a.left)) {
    return contracted_redex(o.left, a.left);
  }
  return contracted_redex(o.right, a.right);
}

}  // namespace

std::vector<Term> standard_terms() {
  std::vector<Term> terms = enumerate_terms(kExhaustiveTerms);
  std::vector<Term> random = random_terms(kRandomTerms);
  terms.insert(terms.end(), random.begin(), random.end());
  return terms;
}

PropertyReport check_reduction_sequences() {
  struct Expected {
    const char* source;
    std::vector<const char*> reducts;
    const char* outcome;
  };
  const Expected cases[] = {
      {"(1 + 10) + (2 + 20)", {"11 + (2 + 20)", "11 + 22", "33"}, "= 33"},
      {"(1 - (5 + 5)) - (2 - 20)", {"(1 - 10) - (2 - 20)"}, "numerical underflow: -9"},
  };
  Recorder rec("reduction sequences");
  for (const Expected& e : cases) {
    for (auto trace : {trace_d, trace_kc_rb}) {
      rec.run(
          [&] {
            const Trace tr = trace(parse(e.source));
            if (tr.reducts.size() != e.reducts.size() || print(tr.result) != e.outcome) {
              return false;
            }
            for (std::size_t i = 0; i < tr.reducts.size(); ++i) {
              if (print(tr.reducts[i]) != e.reducts[i]) {
                return false;
              }
            }
            return true;
          },
          [&] { return std::string(e.source); });
    }
  }
  return rec.finish();
}

PropertyReport check_tower_agreement(const std::vector<Term>& terms) {
  Recorder rec("tower agreement (nine normalizers)");
  for (const Term& t : terms) {
    rec.run(
        [&] {
          const NormalResult reference = normalize_d(t);
          for (SemanticsChoice s : kAllSemantics) {
            if (!(normalize_with(s, t) == reference)) {
              return false;
            }
          }
          return reduce3(t) == reduce_d(t) && reduce2(t) == reduce_d(t) && reduce_kk(t) == reduce_d(t) &&
                 reduce_kc(t) == reduce_d(t);
        },
        [&] { return print(t); });
  }
  return rec.finish();
}

PropertyReport check_there_and_back(const std::vector<Term>& terms) {
  Recorder rec("there and back");
  for (const Term& t : terms) {
    const ValueOrDecompositionKC kc = decompose_kc(t);
    if (std::holds_alternative<Value>(kc)) {
      continue;
    }
    rec.run(
        [&] {
          const auto& d = std::get<DecompositionKC>(kc);
          const ValueOrDecompositionKK kk = decompose_kk(t);
          const Term redex = term_of_potential_redex(d.pr);
          return recompose_io(d.context, redex) == t && !kk.is_value() &&
                 kk.decomposition().kr(term_of_potential_redex(kk.decomposition().pr)) == t;
        },
        [&] { return print(t); });
  }
  return rec.finish();
}

PropertyReport check_refocusing(const EnumSpec& contexts, const EnumSpec& terms) {
  Recorder rec("refocusing");
  const std::vector<Context> cs = enumerate_contexts(contexts);
  const std::vector<Term> ts = enumerate_terms(terms);
  for (const Context& c : cs) {
    for (const Term& t : ts) {
      rec.run([&] { return refocus_property(c, t); },
              [&] { return "context " + print_context(c) + ", term " + print(t); });
    }
  }
  return rec.finish();
}

PropertyReport check_io_oi_reversal(const EnumSpec& contexts) {
  Recorder rec("io/oi reversal");
  const std::vector<Context> cs = enumerate_contexts(contexts);
  for (const Context& c : cs) {
    const Context reversed = c.reversed();
    for (const Term& p : corr_probe_terms()) {
      rec.run([&] { return recompose_oi(c, p) == recompose_io(reversed, p); },
              [&] { return "context " + print_context(reversed) + " (outside-in), term " + print(p); });
    }
  }
  return rec.finish();
}

PropertyReport check_corr(const std::vector<Term>& terms) {
  Recorder rec("defunctionalization correspondence");
  for (const Term& t : terms) {
    if (std::holds_alternative<Value>(decompose_kc(t))) {
      continue;
    }
    rec.run([&] { return probe_corr(t); }, [&] { return print(t); });
  }
  return rec.finish();
}

PropertyReport check_deforestation() {
  Recorder rec("deforestation");
  std::vector<BenchRow> rows;
  for (std::size_t k : kDeforestationSizes) {
    rows.push_back(bench_chain(k));
  }
  for (const BenchRow& r : rows) {
    rec.run([&] { return r.rf_recompose == 0; }, [&] { return "rf_recompose != 0 at k=" + std::to_string(r.k); });
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double rb = static_cast<double>(rows[i].rb_visits) / static_cast<double>(rows[i - 1].rb_visits);
    const double rf = static_cast<double>(rows[i].rf_visits) / static_cast<double>(rows[i - 1].rf_visits);
    rec.run([&] { return rb >= kRbGrowthMin && rb <= kRbGrowthMax; },
            [&] { return "rb growth " + std::to_string(rb) + " at k=" + std::to_string(rows[i].k); });
    rec.run([&] { return rf >= kRfGrowthMin && rf <= kRfGrowthMax; },
            [&] { return "rf growth " + std::to_string(rf) + " at k=" + std::to_string(rows[i].k); });
  }
  const BenchRow& last = rows.back();
  const double ratio = static_cast<double>(last.rb_visits) / static_cast<double>(last.rf_visits);
  rec.run([&] { return ratio >= kMinVisitRatioAt64; },
          [&] { return "rb/rf visits " + std::to_string(ratio) + " at k=" + std::to_string(last.k); });
  return rec.finish();
}

PropertyReport check_fuel_and_budget(const std::vector<Term>& terms) {
  Recorder rec("fuel and machine step budget");
  for (const Term& t : terms) {
    rec.run(
        [&] {
          const NormalResult r = normalize_d(t, initial_fuel(t));
          const NormalResult more = normalize_d(t, Fuel{op_count(t) + 2});
          const MachineRun m = machine_run(t);
          return r == more && m.steps <= machine_step_budget(t) && m.result == r;
        },
        [&] { return print(t); });
  }
  return rec.finish();
}

PropertyReport check_round_trip(const std::vector<Term>& terms) {
  Recorder rec("parse/print round trip");
  for (const Term& t : terms) {
    rec.run([&] { return parse(print(t)) == t; }, [&] { return print(t); });
  }
  return rec.finish();
}

PropertyReport check_step_decrease(const std::vector<Term>& terms) {
  Recorder rec("one operator per step");
  for (const Term& t : terms) {
    const ValueOrTermOrStuck r = reduce_d(t);
    if (const auto* n = std::get_if<Next>(&r)) {
      rec.run([&] { return op_count(n->term) + 1 == op_count(t); }, [&] { return print(t); });
    }
  }
  return rec.finish();
}

PropertyReport check_leftmost_innermost(const std::vector<Term>& terms) {
  Recorder rec("leftmost-innermost redex");
  for (const Term& t : terms) {
    const ValueOrDecompositionKK kk = decompose_kk(t);
    if (kk.is_value()) {
      continue;
    }
    rec.run(
        [&] {
          const PotentialRedex& pr = kk.decomposition().pr;
          const ValueOrTermOrStuck r = reduce_d(t);
          if (const auto* n = std::get_if<Next>(&r)) {
            const std::optional<PotentialRedex> contracted = contracted_redex(t, n->term);
            return contracted.has_value() && *contracted == pr;
          }
          return std::holds_alternative<Stuck>(r) && pr.op == Operator::Sub && pr.v1 < pr.v2;
        },
        [&] { return print(t); });
  }
  return rec.finish();
}

PropertyReport check_fusion_fidelity(const std::vector<Term>& terms) {
  Recorder rec("fusion fidelity");
  for (const Term& t : terms) {
    rec.run(
        [&] {
          const RefocusTrace tr = trace_kc_rf(t);
          const std::vector<PotentialRedex> fused = machine_redexes(t);
          if (fused.size() != tr.decompositions.size()) {
            return false;
          }
          for (std::size_t i = 0; i < fused.size(); ++i) {
            if (!(fused[i] == tr.decompositions[i].pr)) {
              return false;
            }
          }
          return true;
        },
        [&] { return print(t); });
  }
  return rec.finish();
}

PropertyReport check_discontinuity(const std::vector<Term>& terms) {
  Recorder rec("discontinuity");
  for (const Term& t : terms) {
    if (!std::holds_alternative<Stuck>(reduce_d(t))) {
      continue;
    }
    rec.run(
        [&] {
          std::size_t delimited = 0;
          std::size_t undelimited = 0;
          const ValueOrTermOrStuck r2 = reduce2_c(t, [&](ValueOrTerm r) -> ValueOrTermOrStuck {
            ++delimited;
            return std::visit([](auto&& x) -> ValueOrTermOrStuck { return x; }, r);
          });
          const ValueOrTermOrStuck r3 = reduce3_c(t, [&](ValueOrTermOrStuck r) {
            ++undelimited;
            return r;
          });
          return delimited < undelimited && undelimited == 1 && r2 == r3;
        },
        [&] { return print(t); });
  }
  return rec.finish();
}

std::vector<PropertyReport> run_all_properties() {
  const std::vector<Term> terms = standard_terms();
  std::vector<PropertyReport> out;
  out.push_back(check_reduction_sequences());
  out.push_back(check_tower_agreement(terms));
  out.push_back(check_there_and_back(terms));
  out.push_back(check_refocusing(kRefocusContexts, kRefocusTerms));
  out.push_back(check_io_oi_reversal(kRefocusContexts));
  out.push_back(check_corr(terms));
  out.push_back(check_deforestation());
  out.push_back(check_fuel_and_budget(terms));
  out.push_back(check_round_trip(terms));
  out.push_back(check_step_decrease(terms));
  out.push_back(check_leftmost_innermost(terms));
  out.push_back(check_fusion_fidelity(terms));
  out.push_back(check_discontinuity(terms));
  return out;
}

}  // namespace refocus
