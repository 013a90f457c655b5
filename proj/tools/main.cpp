#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "localh/cli.hpp"
#include "localh/rational.hpp"

namespace {

using localh::cli::RunConfig;

void add_output_flags(CLI::App* cmd, RunConfig& cfg, std::string& format) {
  cmd->add_option("--format", format, "Output format: json-lines | csv | pretty");
  cmd->add_option("--out", cfg.out_path, "Write output to a file instead of stdout");
  cmd->add_flag("--timings", cfg.timings,
                "Fill runtime_ms with measured times (breaks byte-for-byte "
                "reproducibility across runs)");
}

void add_selector_flags(CLI::App* cmd, RunConfig& cfg, std::string& ranks) {
  cmd->add_option("--type", cfg.type,
                  "Root-system type: A | B | D | I2 | H3 | H4 | F4 | E6 | E7 | E8");
  cmd->add_option("--rank", cfg.rank, "Single rank n");
  cmd->add_option("--ranks", ranks, "Rank range A..B (parameter range for I2)");
  cmd->add_option("--param", cfg.param, "Parameter m for I2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "localh: exact local h-polynomials of cluster subdivisions and "
      "machine certificates of their real-rootedness"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "pretty";
  std::string ranks;
  std::string explicit_list;

  CLI::App* xi = app.add_subcommand("xi", "Print xi coefficient vectors");
  add_selector_flags(xi, cfg, ranks);
  add_output_flags(xi, cfg, format);

  CLI::App* lh = app.add_subcommand("local-h", "Print local h-polynomials");
  add_selector_flags(lh, cfg, ranks);
  add_output_flags(lh, cfg, format);

  CLI::App* cert = app.add_subcommand(
      "certify", "Certify real-rootedness of local h-polynomials");
  add_selector_flags(cert, cfg, ranks);
  cert->add_flag("--show-roots", cfg.show_roots,
                 "Append isolating intervals (width 2^-10) to each record");
  add_output_flags(cert, cfg, format);

  CLI::App* ms = app.add_subcommand(
      "ms-test", "Finite-depth Polya-Schur multiplier-sequence test");
  ms->add_option("--seq", cfg.seq_name,
                 "Named sequence: reciprocal-factorial | "
                 "reciprocal-shifted-factorial | binomial-reciprocal");
  ms->add_option("--param", cfg.param, "Parameter n for the named sequences");
  ms->add_option("--explicit", explicit_list,
                 "Explicit comma-separated rational sequence, e.g. 1,0,1");
  ms->add_option("--depth", cfg.depth, "Test levels 1..depth (default 30)");
  add_output_flags(ms, cfg, format);

  CLI::App* cheb = app.add_subcommand(
      "chebyshev", "Chebyshev/H_n identity and root-certificate checks");
  cheb->add_option("--n", cfg.cheb_n, "Order n")->required();
  cheb->add_option("--precision-bits", cfg.precision_bits,
                   "Oracle start precision (default 128)");
  cheb->add_flag("--show-roots", cfg.show_roots,
                 "Print isolating intervals (width 2^-20)");
  add_output_flags(cheb, cfg, format);

  CLI::App* nar = app.add_subcommand(
      "narayana-check", "Verify the type-D Narayana identities");
  nar->add_option("--rank", cfg.rank, "Single n");
  nar->add_option("--ranks", ranks, "Range A..B");
  add_output_flags(nar, cfg, format);

  CLI::App* tr = app.add_subcommand(
      "transfer-check",
      "Check the real-rootedness transfer between xi(x) and the expansion");
  add_selector_flags(tr, cfg, ranks);
  add_output_flags(tr, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = localh::cli::parse_format(format);
    if (!ranks.empty()) cfg.ranks = localh::cli::parse_range(ranks);
    if (!explicit_list.empty()) {
      std::vector<localh::Rational> seq;
      std::stringstream ss(explicit_list);
      std::string item;
      while (std::getline(ss, item, ','))
        seq.push_back(localh::parse_rational(item));
      cfg.explicit_seq = std::move(seq);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return localh::cli::run(cfg, std::cout, std::cerr);
}
