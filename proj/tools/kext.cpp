// kext: certify k-extendibility of graphs and check the structural results
// on k-extendible graphs over small-graph corpora.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kext/cli.hpp"
#include "kext/parallel.hpp"
#include "kext/version.hpp"

namespace {

int run_on_input(const std::string& path, const std::function<int(std::istream&)>& body) {
  if (path.empty() || path == "-") return body(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "kext: cannot read '" << path << "'\n";
    return kext::cli::kExitUsage;
  }
  return body(in);
}

kext::cli::Format format_of(const std::string& name) { return *kext::cli::parse_format(name); }

}  // namespace

int main(int argc, char** argv) {
  using namespace kext::cli;
  CLI::App app{"Certify k-extendibility of graphs and verify its structural theorems on graph corpora"};
  app.set_version_flag("--version", std::string(kext::kVersion));
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"g6", "graph6", "edges"});

  std::string analyze_input;
  std::string analyze_format = "g6";
  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Emit one JSON record per input graph");
  analyze_cmd->add_option("input", analyze_input, "Input file (default: stdin)");
  analyze_cmd->add_option("--format", analyze_format, "Input format")->check(formats);
  analyze_cmd->add_option("--kmax", analyze.kmax, "Highest k to certify")->check(CLI::NonNegativeNumber);

  VerifyOptions verify;
  std::size_t verify_n = 0;
  std::vector<std::uint64_t> verify_random;
  std::string verify_input;
  std::string verify_props;
  auto* verify_cmd = app.add_subcommand("verify", "Check every property over a corpus and print a JSON report");
  auto* v_ex = verify_cmd->add_option("--exhaustive", verify_n, "All labeled graphs on n <= 7 vertices");
  auto* v_rand = verify_cmd->add_option("--random", verify_random, "G(n, 1/2) sample: n count seed")->expected(3);
  auto* v_in = verify_cmd->add_option("--input", verify_input, "graph6 file, one graph per line");
  verify_cmd->add_option("--properties", verify_props, "Comma-separated subset of P21,P22,P23,T31,T32,KO,MONO-EXT");
  verify_cmd->add_option("--kmax", verify.kmax, "Highest k checked")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--strict", verify.strict, "Abort on the first malformed input line");

  GenOptions gen;
  std::size_t gen_n = 0;
  std::vector<std::uint64_t> gen_random;
  auto* gen_cmd = app.add_subcommand("gen", "Write a corpus as graph6 lines");
  auto* g_ex = gen_cmd->add_option("--exhaustive", gen_n, "All labeled graphs on n <= 7 vertices");
  auto* g_rand = gen_cmd->add_option("--random", gen_random, "G(n, 1/2) sample: n count seed")->expected(3);

  std::string convert_from = "g6";
  std::string convert_to = "edges";
  std::string convert_input;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph6 and edge-list text");
  convert_cmd->add_option("input", convert_input, "Input file (default: stdin)");
  convert_cmd->add_option("--from", convert_from, "Input format")->check(formats);
  convert_cmd->add_option("--to", convert_to, "Output format")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::size_t workers = kext::default_workers();
  if (*analyze_cmd) {
    analyze.format = format_of(analyze_format);
    analyze.workers = workers;
    return run_on_input(analyze_input, [&](std::istream& in) { return cmd_analyze(analyze, in, std::cout, std::cerr); });
  }
  if (*verify_cmd) {
    if (*v_ex) verify.exhaustive = verify_n;
    if (*v_rand) verify.random = verify_random;
    if (*v_in) verify.input = verify_input;
    if (!verify_props.empty()) verify.properties = CLI::detail::split(verify_props, ',');
    verify.workers = workers;
    if (const char* inject = std::getenv("KEXT_INJECT_VIOLATION"); inject && *inject) {
      verify.inject_violation = kext::parse_property(inject);
      if (!verify.inject_violation) {
        std::cerr << "kext: KEXT_INJECT_VIOLATION names unknown property '" << inject << "'\n";
        return kExitUsage;
      }
    }
    return cmd_verify(verify, std::cout, std::cerr);
  }
  if (*gen_cmd) {
    if (*g_ex) gen.exhaustive = gen_n;
    if (*g_rand) gen.random = gen_random;
    return cmd_gen(gen, std::cout, std::cerr);
  }
  ConvertOptions convert{format_of(convert_from), format_of(convert_to)};
  return run_on_input(convert_input, [&](std::istream& in) { return cmd_convert(convert, in, std::cout, std::cerr); });
}
