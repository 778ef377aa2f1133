// xmodkit — verification toolkit for finite crossed modules, strict
// 2-groups, and quotients of groupoids by 2-group actions.
//
//   xmodkit check <file|@catalog> --suite <name> [--witnesses]
//   xmodkit invariants <file|@catalog>
//   xmodkit print <file|@catalog>
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xmodkit/catalog.hpp"
#include "xmodkit/instance.hpp"
#include "xmodkit/suites.hpp"

namespace {

xmodkit::Instance load_input(const std::string& input) {
  if (input == "@catalog") return xmodkit::catalog();
  std::ifstream in(input, std::ios::binary);
  if (!in)
    throw xmodkit::ValidationError("InputError",
                                   "cannot open file '" + input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return xmodkit::parse_instance(buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for finite crossed modules and "
               "2-group quotients"};
  app.require_subcommand(1);

  std::string check_input, suite = "all", inv_input, print_input;
  bool witnesses = false;

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("input", check_input, "instance file or @catalog")
      ->required();
  std::string suite_help = "one of:";
  for (const auto& s : xmodkit::suite_names()) suite_help += " " + s;
  suite_help += " all";
  check->add_option("--suite", suite, suite_help);
  check->add_flag("--witnesses", witnesses, "print failure witnesses");

  CLI::App* inv = app.add_subcommand("invariants", "print invariant table");
  inv->add_option("input", inv_input, "instance file or @catalog")
      ->required();

  CLI::App* pr = app.add_subcommand("print", "parse and reprint an instance "
                                             "file");
  pr->add_option("input", print_input, "instance file or @catalog")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      xmodkit::Instance ins = load_input(check_input);
      bool known = suite == "all";
      for (const auto& s : xmodkit::suite_names()) known = known || s == suite;
      if (!known)
        throw xmodkit::ValidationError("UnknownSuite", suite);
      xmodkit::SuiteReport report = xmodkit::run_suite(ins, suite, witnesses);
      std::cout << report.text;
      std::cout << (report.all_pass ? "RESULT: all checks passed\n"
                                    : "RESULT: verification failure\n");
      return report.all_pass ? 0 : 1;
    }
    if (inv->parsed()) {
      std::cout << xmodkit::report_invariants(load_input(inv_input));
      return 0;
    }
    if (pr->parsed()) {
      std::cout << xmodkit::print_instance(load_input(print_input));
      return 0;
    }
  } catch (const xmodkit::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
