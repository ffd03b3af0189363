#include "hirsch/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int exit_code(hirsch::cli::Outcome o) { return static_cast<int>(o); }

}  // namespace

int main(int argc, char** argv) {
  using namespace hirsch::cli;
  CLI::App app{"hirsch: multiplicative resolutions, cup-1 calculus and twisting elements"};
  std::string input, command, format = "text";
  Options opts;
  app.add_option("--input", input, "workspace document (JSON)");
  app.add_option("--command", command, "command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--n", opts.n, "permutohedron size");
  app.add_option("--cga", opts.cga, "cga name");
  app.add_option("--m", opts.m, "range m for resolutions");
  app.add_option("--a", opts.a, "twisting element, or a group for tor");
  app.add_option("--b", opts.b, "second twisting element, or a group for tor");
  app.add_option("--p", opts.p, "gauge element for orbit");
  app.add_option("--hom", opts.hom, "hom name for rh-map");
  app.add_option("--dga", opts.dga, "dga name for d-x");
  app.add_option("--hypotheses", opts.hypotheses, "hypotheses instance");
  app.add_option("--bundle", opts.bundle, "cup-1 bundle as comma separated generators");
  app.add_option("--truncation", opts.truncation, "truncation level");
  app.add_option("--budget", opts.budget, "search budget for gauge")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Workspace w;
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw InputError("cannot read '" + input + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      w = parse_input(ss.str());
    }
    const Report r = run_command(w, command, opts);
    std::cout << (format == "machine" ? render_machine(r) : render_text(r));
    return exit_code(r.outcome);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
