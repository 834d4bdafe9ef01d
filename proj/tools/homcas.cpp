#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "homcas/homcas.h"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;

struct StructureDeleter {
  void operator()(homcas_structure* s) const { homcas_structure_free(s); }
};
struct ReportDeleter {
  void operator()(homcas_report* r) const { homcas_report_free(r); }
};
using StructurePtr = std::unique_ptr<homcas_structure, StructureDeleter>;
using ReportPtr = std::unique_ptr<homcas_report, ReportDeleter>;

struct Failure {
  int code;
};

struct Options {
  std::string format = "text";
  bool verbose = false;
};

void ok(homcas_status s, const std::string& what) {
  if (s == HOMCAS_OK) return;
  std::cerr << "homcas: " << what << ": " << homcas_status_name(s) << ": " << homcas_last_error() << "\n";
  throw Failure{exit_error};
}

std::string take(char* text) {
  std::string out(text ? text : "");
  homcas_string_free(text);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "homcas: cannot open " << path << "\n";
    throw Failure{exit_error};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructurePtr load(const std::string& path) {
  homcas_structure* s = nullptr;
  ok(homcas_structure_read(path.c_str(), &s), path);
  return StructurePtr(s);
}

void store(const homcas_structure* s, const std::string& path) {
  if (path.empty() || path == "-") {
    char* text = nullptr;
    ok(homcas_structure_serialize(s, &text), "serialize");
    std::cout << take(text);
  } else {
    ok(homcas_structure_write(s, path.c_str()), path);
  }
}

// Prints the report and returns the exit code it implies.
int show(homcas_report* raw, const Options& opt, std::ostream& os) {
  ReportPtr r(raw);
  char* text = nullptr;
  ok(opt.format == "jsonl" ? homcas_report_jsonl(r.get(), &text) : homcas_report_text(r.get(), &text), "report");
  os << take(text);
  if (opt.verbose) std::cerr << "elapsed_ms " << homcas_report_elapsed_ms(r.get()) << "\n";
  return homcas_report_passed(r.get()) ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of monoidal Hom-structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "jsonl"}));
  app.add_flag("-v,--verbose", opt.verbose, "Print timing to stderr");

  std::string file, second, output, matrix_file;
  std::size_t order = 0, leaves = 0, max_degree = 0;
  long aut_exp = 1;
  bool verify = false, regular = false;

  auto* check = app.add_subcommand("check", "Run the axiom checker for a structure file");
  check->add_option("file", file, "Structure file")->required();

  auto* group = app.add_subcommand("group-algebra", "Emit the Hom-group bialgebra of C_n with g -> g^k");
  group->add_option("--order", order, "Group order n")->required();
  group->add_option("--aut-exp", aut_exp, "Exponent k of the automorphism")->required();
  group->add_option("-o,--output", output, "Output file (default stdout)");

  auto* twist = app.add_subcommand("twist", "Twist a classical structure by an automorphism");
  twist->add_option("file", file, "Classical structure file")->required();
  twist->add_option("--auto", matrix_file, "Matrix file of the automorphism")->required();
  twist->add_option("-o,--output", output, "Output file (default stdout)");

  auto* env = app.add_subcommand("enveloping", "Truncated enveloping algebra of a Hom-Lie algebra");
  env->add_option("file", file, "hom_lie file")->required();
  env->add_option("--max-degree", max_degree, "Truncation degree N")->required();

  auto* anti = app.add_subcommand("antipode", "Solve for the antipode; emits a hom_hopf file");
  anti->add_option("file", file, "hom_bialgebra file")->required();
  anti->add_option("-o,--output", output, "Output file (default stdout, report on stderr)");

  auto* coh = app.add_subcommand("coherence", "Binary trees and coherence path checks");
  coh->add_option("--leaves", leaves, "Number of leaves")->required();
  coh->add_flag("--verify-paths", verify, "Check that rewrite paths agree");

  auto* hmod = app.add_subcommand("hopfmod", "Verify a Hom-Hopf module, or emit the regular or a free one");
  hmod->add_option("hopf", file, "hom_hopf file")->required();
  hmod->add_option("module", second, "hopf_module file to verify");
  auto* reg_flag = hmod->add_flag("--regular", regular, "Emit H as a Hopf module over itself");
  auto* free_opt = hmod->add_option("--free", matrix_file, "Emit F(N) for N = (Q^d, matrix file)");
  hmod->add_option("-o,--output", output, "Output file for --regular/--free (default stdout)");
  reg_flag->excludes(free_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (check->parsed()) {
      StructurePtr s = load(file);
      homcas_report* r = nullptr;
      ok(homcas_check(s.get(), &r), "check");
      return show(r, opt, std::cout);
    }
    if (group->parsed()) {
      homcas_structure* s = nullptr;
      ok(homcas_group_algebra(order, aut_exp, &s), "group-algebra");
      store(StructurePtr(s).get(), output);
      return exit_pass;
    }
    if (twist->parsed()) {
      StructurePtr s = load(file);
      const std::string m = slurp(matrix_file);
      homcas_structure* t = nullptr;
      ok(homcas_twist(s.get(), m.c_str(), &t), "twist");
      store(StructurePtr(t).get(), output);
      return exit_pass;
    }
    if (env->parsed()) {
      StructurePtr s = load(file);
      homcas_report* r = nullptr;
      ok(homcas_enveloping(s.get(), max_degree, &r), "enveloping");
      return show(r, opt, std::cout);
    }
    if (anti->parsed()) {
      StructurePtr s = load(file);
      homcas_structure* h = nullptr;
      homcas_report* r = nullptr;
      ok(homcas_antipode(s.get(), &h, &r), "antipode");
      StructurePtr hopf(h);
      const bool to_stdout = output.empty() || output == "-";
      const int code = show(r, opt, to_stdout ? std::cerr : std::cout);
      if (hopf) store(hopf.get(), output);
      return code;
    }
    if (coh->parsed()) {
      homcas_report* r = nullptr;
      ok(homcas_coherence(leaves, verify ? 1 : 0, &r), "coherence");
      return show(r, opt, std::cout);
    }
    if (hmod->parsed()) {
      StructurePtr h = load(file);
      if (regular || !matrix_file.empty()) {
        if (!second.empty()) {
          std::cerr << "homcas: hopfmod takes a module file or --regular/--free, not both\n";
          return exit_error;
        }
        homcas_structure* m = nullptr;
        if (regular) {
          ok(homcas_regular_hopf_module(h.get(), &m), "hopfmod");
        } else {
          const std::string text = slurp(matrix_file);
          ok(homcas_free_hopf_module(h.get(), text.c_str(), &m), "hopfmod");
        }
        store(StructurePtr(m).get(), output);
        return exit_pass;
      }
      if (second.empty()) {
        std::cerr << "homcas: hopfmod needs a module file, --regular or --free\n";
        return exit_error;
      }
      StructurePtr m = load(second);
      homcas_report* r = nullptr;
      ok(homcas_hopfmod(h.get(), m.get(), &r), "hopfmod");
      return show(r, opt, std::cout);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return exit_error;
}
