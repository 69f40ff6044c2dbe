#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <string>
#include <vector>

#include "unimodal/errors.hpp"
#include "unimodal/reports.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCrossCheck = 4;
constexpr int kExitUnsupported = 5;
constexpr int kExitInternal = 1;

void print_spec_error(const std::string& spec, const unimodal::SyntaxError& e) {
  std::cerr << "error: " << e.what() << "\n  " << spec << "\n  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare polynomials of semisimple singularities and certified unit-circle root counts"};
  app.require_subcommand(1);

  std::string spec_text;
  std::vector<int> weights;
  std::string format_name = "text";
  bool with_phi = false;
  bool timing = false;
  int k_min = 2;
  int k_max = 16;
  int k_cap = 64;
  unsigned precision = 128;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_text, "Singularity spec, e.g. \"A8+E7\" or \"2*E7+D10\"")->required();
    cmd->add_option("--weights", weights, "Per-summand weights in the order written")->delimiter(',');
  };

  auto* poly = app.add_subcommand("poly", "Print P(S) and P_L(S)");
  add_spec(poly);
  add_format(poly);

  auto* check = app.add_subcommand("check", "Certified unit-circle census of P_L(S)");
  add_spec(check);
  add_format(check);
  check->add_flag("--with-phi", with_phi, "Attach the phi pole/zero analysis");
  check->add_option("--precision", precision, "Starting precision (bits) of the numeric cross-check")
      ->check(CLI::Range(64u, 1u << 20));
  check->add_flag("--timing", timing, "Include elapsed time in the report");

  auto* table = app.add_subcommand("table", "Roots off the circle for A_k+E7, D_2k+E7, D_2k+1+E7");
  add_format(table);
  table->add_option("--k-min", k_min, "First k (>= 2)");
  table->add_option("--k-max", k_max, "Last k");
  table->add_option("--k-cap", k_cap, "Largest accepted k");

  auto* phi = app.add_subcommand("phi", "Poles, residue signs and zero bounds of phi on (0, pi/2)");
  add_spec(phi);
  add_format(phi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  const auto format = unimodal::parse_format(format_name);
  try {
    if (*table) {
      unimodal::TableOptions options;
      options.k_cap = k_cap;
      std::mutex progress_mutex;
      if (isatty(STDERR_FILENO)) {
        options.on_row_done = [&](int k) {
          std::lock_guard lock(progress_mutex);
          std::cerr << "table: k = " << k << " done\n";
        };
      }
      std::vector<unimodal::TableRow> rows;
      try {
        rows = unimodal::run_table(k_min, k_max, options);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
      }
      std::cout << unimodal::render(rows, format);
      return 0;
    }

    unimodal::SingularitySpec spec = unimodal::spec_with_weights(spec_text, weights);

    if (*poly) {
      std::cout << unimodal::render(unimodal::run_poly(spec), format);
      return 0;
    }
    if (*check) {
      unimodal::CheckOptions options;
      options.with_phi = with_phi;
      options.cross = unimodal::cross_check_options_from_env();
      options.cross.initial_precision = precision;
      const auto report = unimodal::run_check(spec, options);
      std::cout << unimodal::render(report, format, timing);
      return unimodal::exit_code(report);
    }
    if (*phi) {
      unimodal::PhiCommandReport report{spec.to_string(), unimodal::zero_bound_report(spec)};
      std::cout << unimodal::render(report, format);
      return 0;
    }
  } catch (const unimodal::SyntaxError& e) {
    print_spec_error(spec_text, e);
    return kExitParse;
  } catch (const unimodal::ParameterOutOfRange& e) {
    std::cerr << "error: ParameterOutOfRange: " << e.what() << '\n';
    return kExitParse;
  } catch (const unimodal::UnsupportedSummand& e) {
    std::cerr << "error: UnsupportedSummand: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const unimodal::PrecisionExhausted& e) {
    std::cerr << "error: PrecisionExhausted: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
