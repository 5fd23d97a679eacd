// nehari: command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nehari/nehari.h"

namespace {

// 0 ok; 2 invalid input / inadmissible request; 1 anything the library
// itself should have been able to do.
int exitCodeFor(nehari_status s) {
  switch (s) {
    case NEHARI_OK:
      return 0;
    case NEHARI_INVALID_INPUT:
    case NEHARI_NOT_INVERTIBLE_ON_CIRCLE:
    case NEHARI_NOT_K_ADMISSIBLE:
    case NEHARI_DEGENERATE_LEVEL:
    case NEHARI_ILL_CONDITIONED:
      return 2;
    default:
      return 1;
  }
}

struct Handles {
  nehari_config* config = nullptr;
  nehari_symbol* phi = nullptr;
  nehari_symbol* q = nullptr;
  nehari_report* report = nullptr;
  ~Handles() {
    nehari_report_destroy(report);
    nehari_symbol_destroy(q);
    nehari_symbol_destroy(phi);
    nehari_config_destroy(config);
  }
};

int reportFailure(nehari_status s) {
  std::cerr << "nehari: " << nehari_status_name(s) << ": " << nehari_last_error() << "\n";
  return exitCodeFor(s);
}

bool writeOut(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix Nehari-Takagi approximation: Hankel spectra, superoptimal certificates, Toeplitz index audits"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("--output,-o", output, "write the JSON report to this file instead of stdout");

  std::string phiPath, qPath, exampleName;
  int k = 0;
  int count = 50;
  std::uint64_t seed = 0;
  int maxDegree = 6;

  auto* analyze = app.add_subcommand("analyze", "Hankel singular values, multiplicities and rank");
  analyze->add_option("phi", phiPath, "symbol JSON file")->required();

  auto* aak = app.add_subcommand("aak", "scalar best approximation with at most k poles and its index report");
  aak->add_option("phi", phiPath, "scalar symbol JSON file")->required();
  aak->add_option("--k", k, "pole budget")->required();

  auto* verify = app.add_subcommand("verify-superopt", "superoptimality certificate for a candidate Q");
  verify->add_option("--phi", phiPath, "symbol JSON file")->required();
  verify->add_option("--q", qPath, "candidate JSON file")->required();
  verify->add_option("--k", k, "pole budget")->required();

  auto* construct = app.add_subcommand("superopt-2x2", "construct the superoptimal approximant of a 2x2 symbol");
  construct->add_option("--phi", phiPath, "2x2 symbol JSON file")->required();
  construct->add_option("--k", k, "pole budget")->required();

  auto* audit = app.add_subcommand("index-audit", "Toeplitz index and E-space audit of Phi - Q");
  audit->add_option("--phi", phiPath, "symbol JSON file")->required();
  audit->add_option("--q", qPath, "candidate JSON file")->required();
  audit->add_option("--k", k, "pole budget")->required();

  auto* example = app.add_subcommand("example", "run the full pipeline on built-in data");
  example->add_option("name", exampleName, "example name (nehari-takagi-2x2)")->required();

  auto* suite = app.add_subcommand("scalar-suite", "randomized scalar index suite");
  suite->add_option("--count", count, "number of random symbols")->capture_default_str();
  suite->add_option("--seed", seed, "random seed")->capture_default_str();
  suite->add_option("--max-degree", maxDegree, "largest antianalytic degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Handles h;
  nehari_status s = nehari_config_create(&h.config);
  if (s == NEHARI_OK) s = nehari_config_set_seed(h.config, seed);
  if (s == NEHARI_OK) s = nehari_config_set_output(h.config, output.c_str());
  if (s != NEHARI_OK) return reportFailure(s);

  auto load = [&](const std::string& path, nehari_symbol** out) { return nehari_symbol_from_file(path.c_str(), out); };

  if (*analyze) {
    s = load(phiPath, &h.phi);
    if (s == NEHARI_OK) s = nehari_analyze(h.config, h.phi, &h.report);
  } else if (*aak) {
    s = load(phiPath, &h.phi);
    if (s == NEHARI_OK) s = nehari_aak(h.config, h.phi, k, &h.report);
  } else if (*verify) {
    s = load(phiPath, &h.phi);
    if (s == NEHARI_OK) s = load(qPath, &h.q);
    if (s == NEHARI_OK) s = nehari_verify_superopt(h.config, h.phi, h.q, k, &h.report);
  } else if (*construct) {
    s = load(phiPath, &h.phi);
    if (s == NEHARI_OK) s = nehari_superopt_2x2(h.config, h.phi, k, &h.report);
  } else if (*audit) {
    s = load(phiPath, &h.phi);
    if (s == NEHARI_OK) s = load(qPath, &h.q);
    if (s == NEHARI_OK) s = nehari_index_audit(h.config, h.phi, h.q, k, &h.report);
  } else if (*example) {
    s = nehari_example(h.config, exampleName.c_str(), &h.report);
  } else if (*suite) {
    s = nehari_scalar_suite(h.config, count, maxDegree, &h.report);
    if (s == NEHARI_OK) {
      std::fputs(nehari_report_text(h.report), stdout);
      if (!output.empty() && !writeOut(output, nehari_report_json(h.report))) {
        std::cerr << "nehari: cannot write " << output << "\n";
        return 2;
      }
      return 0;
    }
  }
  if (s != NEHARI_OK) return reportFailure(s);

  if (!writeOut(output, nehari_report_json(h.report))) {
    std::cerr << "nehari: cannot write " << output << "\n";
    return 2;
  }
  return 0;
}
