#include "binomeso/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace binomeso;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mesoprimary and primary decomposition of binomial ideals"};
  std::string cmd, file, sigma, nu, witness, json_path, dot_path, field;
  std::optional<long> bound;
  bool from_components = false, timing = false;
  app.add_option("command", cmd, "Command")->required()->check(CLI::IsMember(command_names()));
  app.add_option("file", file, "Problem file")->required();
  app.add_option("--bound", bound, "Degree bound (region bound for diagram)");
  app.add_option("--sigma", sigma, "Comma separated variable names or 1-based indices");
  app.add_option("--witness-monomial", witness, "Monomial cogenerating a coprincipal component");
  app.add_option("--nu", nu, "Comma separated values for the sigma variables");
  app.add_option("--json", json_path, "Write the JSON report here");
  app.add_option("--dot", dot_path, "Write the DOT diagram here");
  app.add_option("--field", field, "Coefficient field overriding the ring line, e.g. QQ(zeta_3)");
  app.add_flag("--from-components", from_components, "toral-part: use the component: lines of the file");
  app.add_flag("--timing", timing, "Include wall-clock time in the JSON report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CommandOptions opts;
  opts.bound = bound;
  if (!sigma.empty()) opts.sigma = split_commas(sigma);
  if (!nu.empty()) opts.nu = split_commas(nu);
  if (!witness.empty()) opts.witness_monomial = witness;
  opts.from_components = from_components;
  opts.timing = timing;

  try {
    ProblemFile problem;
    if (field.empty()) {
      problem = read_problem_file(file);
    } else {
      std::ifstream in(file);
      if (!in) throw InputError("cannot open '" + file + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      parse_field(field);
      std::regex ring_line(R"((^|\n)(\s*ring\s+[^\n]*?\s+over\s+)[^\n#]*)");
      problem = parse_problem(std::regex_replace(ss.str(), ring_line, "$1$2" + field,
                                                 std::regex_constants::format_first_only));
    }
    CommandResult r = run_command(cmd, problem, opts);
    std::cout << r.text;
    if (!json_path.empty()) write_file(json_path, r.report.dump(2) + "\n");
    if (cmd == "diagram") {
      if (dot_path.empty())
        std::cout << r.dot;
      else
        write_file(dot_path, r.dot);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "binomeso: " << e.what() << "\n";
    if (auto* m = dynamic_cast<const MissingRootsError*>(&e))
      std::cerr << "binomeso: re-run over QQ(zeta_" << m->required_order() << ")\n";
    if (!json_path.empty()) {
      try {
        write_file(json_path, error_json(cmd, e).dump(2) + "\n");
      } catch (const std::exception&) {
      }
    }
    return exit_code_for(e);
  }
}
