#include "refocus/cli.hpp"

#include <exception>
#include <iomanip>
#include <ostream>
#include <string>

#include "refocus/context_machine.hpp"
#include "refocus/machine.hpp"
#include "refocus/properties.hpp"

namespace refocus::cli {

namespace {

int exit_code(const NormalResult& r) { return std::holds_alternative<Value>(r) ? kExitValue : kExitStuck; }

// Parses `expr` and runs `body` on the term, mapping failures to exit codes.
template <typename Body>
int with_term(std::string_view expr, std::ostream& err, Body&& body) {
  Term t = Term::lit(0);
  try {
    t = parse(expr);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }
  try {
    return body(t);
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << '\n';
    return kExitFault;
  }
}

}  // namespace

std::optional<TraceMode> trace_mode_from_name(std::string_view name) noexcept {
  if (name == "rb") return TraceMode::Rb;
  if (name == "rf") return TraceMode::Rf;
  if (name == "machine") return TraceMode::Machine;
  return std::nullopt;
}

int cmd_eval(std::string_view expr, SemanticsChoice s, std::ostream& out, std::ostream& err) {
  return with_term(expr, err, [&](const Term& t) {
    const NormalResult r = normalize_with(s, t);
    out << print(r) << '\n';
    return exit_code(r);
  });
}

int cmd_trace(std::string_view expr, TraceMode mode, std::ostream& out, std::ostream& err) {
  return with_term(expr, err, [&](const Term& t) {
    switch (mode) {
      case TraceMode::Rb: {
        const Trace tr = trace_kc_rb(t);
        for (const Term& reduct : tr.reducts) {
          out << print(reduct) << '\n';
        }
        out << print(tr.result) << '\n';
        return exit_code(tr.result);
      }
      case TraceMode::Rf: {
        const RefocusTrace tr = trace_kc_rf(t);
        for (const DecompositionKC& d : tr.decompositions) {
          out << print(d.pr) << " @ " << print_context(d.context) << '\n';
        }
        out << print(tr.result) << '\n';
        return exit_code(tr.result);
      }
      case TraceMode::Machine: {
        const std::vector<MachineState> states = machine_trace(t);
        for (const MachineState& s : states) {
          out << print(s) << '\n';
        }
        return std::holds_alternative<FinalVal>(states.back()) ? kExitValue : kExitStuck;
      }
    }
    return kExitFault;
  });
}

int cmd_compare(std::string_view expr, std::ostream& out, std::ostream& err) {
  return with_term(expr, err, [&](const Term& t) {
    std::optional<NormalResult> first;
    bool agree = true;
    for (SemanticsChoice s : kAllSemantics) {
      const NormalResult r = normalize_with(s, t);
      out << std::left << std::setw(9) << name(s) << print(r) << '\n';
      if (!first) {
        first = r;
      } else if (!(r == *first)) {
        agree = false;
      }
    }
    out << (agree ? "AGREE" : "DISAGREE") << '\n';
    return agree ? kExitValue : kExitDisagree;
  });
}

int cmd_bench(std::span<const std::size_t> sizes, std::ostream& out, std::ostream& err) {
  if (sizes.empty()) {
    err << "bench: no sizes given\n";
    return kExitParse;
  }
  out << "k\trb_visits\trf_visits\trb_recompose\trf_recompose\tmachine_steps\n";
  for (std::size_t k : sizes) {
    if (k == 0) {
      err << "bench: sizes must be at least 1\n";
      return kExitParse;
    }
    const BenchRow r = bench_chain(k);
    out << r.k << '\t' << r.rb_visits << '\t' << r.rf_visits << '\t' << r.rb_recompose << '\t' << r.rf_recompose
        << '\t' << r.machine_steps << '\n';
  }
  return kExitValue;
}

int cmd_selftest(std::ostream& out) {
  bool all = true;
  for (const PropertyReport& r : run_all_properties()) {
    out << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(38) << r.name << std::right
        << std::setw(11) << r.checked << " checked  " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    if (!r.passed()) {
      all = false;
      out << "      " << r.failures << " failure(s); first: " << r.first_failure << '\n';
    }
  }
  out << (all ? "ALL PASS" : "FAILURES") << '\n';
  return all ? 0 : 1;
}

}  // namespace refocus::cli
