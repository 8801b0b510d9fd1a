// Command-line front end: eval, trace, compare, bench, selftest.

#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "refocus/cli.hpp"

namespace {

std::string read_expression(const std::string& arg) {
  if (arg != "-") {
    return arg;
  }
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace refocus;

  CLI::App app{"Arithmetic-expression semantics workbench: every rung from the structural one-step\n"
               "reducer to the eval/continue abstract machine.\n\n"
               "Exit status: 0 value, 1 stuck (numerical underflow), 2 parse or usage error,\n"
               "3 semantics disagree (compare), 4 internal fault."};
  app.require_subcommand(1);

  std::map<std::string, SemanticsChoice> semantics_map;
  for (SemanticsChoice s : kAllSemantics) {
    semantics_map.emplace(std::string(name(s)), s);
  }
  const std::map<std::string, cli::TraceMode> mode_map = {
      {"rb", cli::TraceMode::Rb}, {"rf", cli::TraceMode::Rf}, {"machine", cli::TraceMode::Machine}};

  std::string expr;
  SemanticsChoice semantics = SemanticsChoice::Direct;
  cli::TraceMode mode = cli::TraceMode::Rb;
  std::string shape = "chain";
  std::vector<std::size_t> sizes = {16, 32, 64};

  auto* eval = app.add_subcommand("eval", "Normalize an expression and print '= <n>' or the error message");
  eval->add_option("expr", expr, "Expression, or '-' to read stdin")->required();
  eval->add_option("--semantics", semantics, "direct|cps3|cps2|kk-rb|kk-rf|kc-rb|kc-rf|machine|bigstep")
      ->transform(CLI::CheckedTransformer(semantics_map, CLI::ignore_case));

  auto* trace = app.add_subcommand("trace", "Print the reducts (rb), decompositions (rf) or machine states");
  trace->add_option("expr", expr, "Expression, or '-' to read stdin")->required();
  trace->add_option("--mode", mode, "rb|rf|machine")->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));

  auto* compare = app.add_subcommand("compare", "Run all nine semantics and check that they agree");
  compare->add_option("expr", expr, "Expression, or '-' to read stdin")->required();

  auto* bench = app.add_subcommand("bench", "Count decomposition visits and recompositions on chain(k)");
  bench->add_option("--shape", shape, "Benchmark shape")->check(CLI::IsMember({"chain"}));
  bench->add_option("--sizes", sizes, "Comma-separated operator counts")->delimiter(',')->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the exhaustive property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitParse;
  }

  if (*eval) {
    return cli::cmd_eval(read_expression(expr), semantics, std::cout, std::cerr);
  }
  if (*trace) {
    return cli::cmd_trace(read_expression(expr), mode, std::cout, std::cerr);
  }
  if (*compare) {
    return cli::cmd_compare(read_expression(expr), std::cout, std::cerr);
  }
  if (*bench) {
    return cli::cmd_bench(sizes, std::cout, std::cerr);
  }
  if (*selftest) {
    return cli::cmd_selftest(std::cout);
  }
  return cli::kExitParse;
}
