#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "raney/raney.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kStrictSkip = 3 };

struct Options {
  std::string format = "text";
  std::size_t max_homset = 0;
  std::size_t max_autodual = 0;
  std::string checks;
  bool strict = false;
  bool timing = false;
};

int report_error(raney_status status) {
  std::cerr << "error: " << raney_last_error() << "\n";
  return status == RANEY_ERR_INTERNAL ? kCheckFailed : kInputError;
}

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

int emit(raney_report* report, const Options& opt, bool gate) {
  char* out = nullptr;
  const raney_status st = opt.format == "json" ? raney_report_json(report, &out) : raney_report_text(report, &out);
  if (st != RANEY_OK) {
    raney_report_free(report);
    return report_error(st);
  }
  std::cout << out;
  raney_string_free(out);
  const std::size_t failed = raney_report_failed(report);
  const std::size_t skipped = raney_report_skipped(report);
  raney_report_free(report);
  if (!gate) return kOk;
  if (failed > 0) return kCheckFailed;
  if (opt.strict && skipped > 0) return kStrictSkip;
  return kOk;
}

int load_lattice(const std::string& path, raney_lattice** lattice) {
  std::string text;
  if (!read_input(path, text)) return kInputError;
  const raney_status st = raney_lattice_parse(text.c_str(), 64, lattice);
  return st == RANEY_OK ? kOk : report_error(st);
}

std::string stem(const std::string& path) {
  return path == "-" ? std::string("stdin") : std::filesystem::path(path).stem().string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattice and quantale verifier"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  raney_config defaults;
  raney_config_init(&defaults);
  opt.max_homset = defaults.max_homset;
  opt.max_autodual = defaults.max_autodual;

  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-homset", opt.max_homset, "Cap on |Q(L,L)|");
  app.add_option("--max-autodual", opt.max_autodual, "Cap on |Q| for the anti-automorphism search");
  app.add_option("--checks", opt.checks, "Comma-separated check ids to run");
  app.add_flag("--strict", opt.strict, "Exit 3 when a check was skipped");
  app.add_flag("--timing", opt.timing, "Report per-check elapsed time");

  std::string family;
  std::size_t param = 0;
  auto* gen = app.add_subcommand("gen", "Print a lattice file for a standard family");
  gen->add_option("family", family, "chain | boolean | M | N5")->required();
  gen->add_option("param", param, "Size parameter");

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Print summary flags for a lattice file");
  analyze->add_option("file", analyze_path, "Lattice file ('-' for stdin)")->required();

  std::string verify_path;
  bool corpus = false;
  auto* verify = app.add_subcommand("verify", "Run the check suite on a lattice file or the corpus");
  verify->add_option("file", verify_path, "Lattice file ('-' for stdin)");
  verify->add_flag("--corpus", corpus, "Run on the built-in corpus");

  auto* m5 = app.add_subcommand("m5", "Run the checks on the abstract M5 quantale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  raney_config config = defaults;
  config.max_homset = opt.max_homset;
  config.max_autodual = opt.max_autodual;
  config.checks = opt.checks.empty() ? nullptr : opt.checks.c_str();
  config.timing = opt.timing ? 1 : 0;
  if (raney_validate_checks(config.checks) != RANEY_OK) return report_error(RANEY_ERR_INVALID_ARGUMENT);

  if (gen->parsed()) {
    if (family != "N5" && gen->count("param") == 0) {
      std::cerr << "error: family '" << family << "' needs a size parameter\n";
      return kInputError;
    }
    raney_lattice* lattice = nullptr;
    raney_status st = raney_lattice_generate(family.c_str(), param, &lattice);
    if (st != RANEY_OK) return report_error(st);
    char* out = nullptr;
    st = raney_lattice_to_json(lattice, &out);
    raney_lattice_free(lattice);
    if (st != RANEY_OK) return report_error(st);
    std::cout << out;
    raney_string_free(out);
    return kOk;
  }

  if (analyze->parsed()) {
    raney_lattice* lattice = nullptr;
    if (int rc = load_lattice(analyze_path, &lattice)) return rc;
    raney_report* report = nullptr;
    const raney_status st = raney_analyze(lattice, stem(analyze_path).c_str(), &config, &report);
    raney_lattice_free(lattice);
    if (st != RANEY_OK) return report_error(st);
    return emit(report, opt, false);
  }

  if (verify->parsed()) {
    if (corpus == !verify_path.empty()) {
      std::cerr << "error: give either a lattice file or --corpus\n";
      return kInputError;
    }
    raney_report* report = nullptr;
    raney_status st;
    if (corpus) {
      st = raney_verify_corpus(&config, &report);
    } else {
      raney_lattice* lattice = nullptr;
      if (int rc = load_lattice(verify_path, &lattice)) return rc;
      st = raney_verify(lattice, stem(verify_path).c_str(), &config, &report);
      raney_lattice_free(lattice);
    }
    if (st != RANEY_OK) return report_error(st);
    return emit(report, opt, true);
  }

  if (m5->parsed()) {
    raney_report* report = nullptr;
    const raney_status st = raney_verify_m5(&config, &report);
    if (st != RANEY_OK) return report_error(st);
    return emit(report, opt, true);
  }
  return kInputError;
}
