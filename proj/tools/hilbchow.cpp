// hilbchow: command-line front end for the hilbert_chow library.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hilbert_chow/error.hpp"
#include "hilbert_chow/io.hpp"

using namespace hilbert_chow;

int main(int argc, char** argv) {
  CLI::App app{"Hilbert and Chow stability computations for projective schemes"};
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string subcommand;
  std::string input_path;
  std::string output_path;
  std::string format = "json";
  JobOptions opts;
  std::vector<std::string> names(std::begin(kSubcommands), std::end(kSubcommands));

  app.add_option("subcommand", subcommand, "one of: hilbert weight futaki cgkm-verify chow-eval chow-interp scan selftest")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--input", input_path, "ideal JSON file");
  app.add_option("--output", output_path, "write the report here instead of stdout");
  app.add_option("--m-start", opts.m_start, "first degree of the weight window");
  app.add_option("--m-len", opts.m_len, "number of degrees in the window");
  app.add_option("--mu", opts.mu, "mu convention")->check(CLI::IsMember({"literal", "normalized"}));
  app.add_option("--order", opts.order, "Futaki truncation order");
  app.add_option("--seed", opts.seed, "seed for random forms");
  app.add_flag("--allow-gl", opts.allow_gl, "accept weight vectors with nonzero sum");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache", opts.cache_dir, "directory for cached graded pieces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorKind::input);
  }

  Report report;
  try {
    std::optional<ParsedInput> parsed;
    if (!input_path.empty()) {
      parsed = parse_input(input_path, opts);
    } else if (subcommand != "selftest") {
      throw input_error("missing_input", subcommand + " needs --input");
    }
    report = run(subcommand, parsed ? &*parsed : nullptr);
  } catch (const Error& e) {
    report.doc = {{"tool", std::string(kToolName)},
                  {"version", std::string(kToolVersion)},
                  {"subcommand", subcommand},
                  {"result", nullptr},
                  {"error", {{"code", e.code()}, {"exit_code", e.exit_code()}, {"message", e.what()}}}};
    report.exit_code = e.exit_code();
  }

  const std::string text = render(report.doc, format);
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "hilbchow: cannot write " << output_path << "\n";
      return static_cast<int>(ErrorKind::input);
    }
    out << text;
  }
  if (report.doc.contains("error")) {
    std::cerr << "hilbchow: " << report.doc["error"]["code"].get<std::string>() << ": "
              << report.doc["error"]["message"].get<std::string>() << "\n";
  }
  return report.exit_code;
}
