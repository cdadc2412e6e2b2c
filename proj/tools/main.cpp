#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fplevel/config.hpp"
#include "fplevel/errors.hpp"
#include "fplevel/parse.hpp"
#include "fplevel/report.hpp"

namespace {

using fplevel::Errc;
using nlohmann::json;

struct Options {
  std::uint64_t p = 0;
  std::string expr;
  std::string file;
  std::optional<std::uint32_t> vars;
  std::uint32_t cutoff = 4;
  std::uint32_t max_e = 2;
  std::uint32_t e = 2;
  std::uint32_t n = 2;
  std::string op_file;
  bool as_json = false;
  unsigned threads = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fplevel::fail(Errc::BadInput, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fplevel::Polynomial load_poly(const Options& opt) {
  std::string text = opt.file.empty() ? opt.expr : slurp(opt.file);
  if (text.empty()) fplevel::fail(Errc::BadInput, "no polynomial given (use -f or --file)");
  return fplevel::parse_poly(text, fplevel::PrimeField(opt.p), opt.vars);
}

void add_poly_flags(CLI::App* cmd, Options& opt, bool with_cutoff) {
  cmd->add_option("-p,--prime", opt.p, "odd prime characteristic")->required();
  cmd->add_option("-f,--poly", opt.expr, "polynomial expression, e.g. 'x^3+y^3+z^3'");
  cmd->add_option("--file", opt.file, "read the polynomial from a file");
  cmd->add_option("--vars", opt.vars, "number of variables (default: inferred)");
  if (with_cutoff)
    cmd->add_option("--cutoff", opt.cutoff, "largest chain index to try")->capture_default_str();
  cmd->add_flag("--json", opt.as_json, "machine-readable output");
  cmd->add_option("--threads", opt.threads, "worker threads")->capture_default_str();
}

void emit(const json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << fplevel::render_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"F-singularity invariants of hypersurfaces over F_p"};
  app.require_subcommand(1);

  Options opt;

  auto* c_level = app.add_subcommand("level", "level of R/(f) via the Frobenius-root chain");
  add_poly_flags(c_level, opt, true);
  auto* c_hsl = app.add_subcommand("hsl", "Hartshorne-Speiser-Lyubeznik number");
  add_poly_flags(c_hsl, opt, true);
  auto* c_fpt = app.add_subcommand("fpt", "F-pure-threshold bounds from nu values");
  add_poly_flags(c_fpt, opt, false);
  c_fpt->add_option("--max-e", opt.max_e, "deepest Frobenius power p^e")->capture_default_str();
  auto* c_ord = app.add_subcommand("ordinary", "Hasse-Witt scalar and ordinarity (deg f = nvars)");
  add_poly_flags(c_ord, opt, false);
  auto* c_chain = app.add_subcommand("chain", "print the chain of Frobenius-root ideals");
  add_poly_flags(c_chain, opt, true);
  auto* c_jump = app.add_subcommand("jump", "largest F-jumping exponent on the grid 1 - 1/p^k");
  add_poly_flags(c_jump, opt, true);

  auto* c_op = app.add_subcommand("operator", "construct or verify a level witness operator");
  c_op->require_subcommand(1);
  auto* c_synth = c_op->add_subcommand("synth", "projection-based witness at index e");
  add_poly_flags(c_synth, opt, false);
  c_synth->add_option("-e,--index", opt.e, "witnessed index")->capture_default_str();
  auto* c_fermat = c_op->add_subcommand("fermat", "closed-form level-2 witness for x_0^{n+1}+...+x_n^{n+1}");
  c_fermat->add_option("-p,--prime", opt.p, "odd prime characteristic")->required();
  c_fermat->add_option("-n,--dim", opt.n, "projective dimension n")->capture_default_str();
  c_fermat->add_flag("--json", opt.as_json, "machine-readable output");
  c_fermat->add_option("--threads", opt.threads, "worker threads")->capture_default_str();
  auto* c_verify = c_op->add_subcommand("verify", "check apply(op, f^{p^e-1}) against f^{p^e-p}");
  add_poly_flags(c_verify, opt, false);
  c_verify->add_option("-e,--index", opt.e, "witnessed index")->capture_default_str();
  c_verify->add_option("--op", opt.op_file, "operator text file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    fplevel::config::set_threads(opt.threads);
    json report;
    if (c_level->parsed()) {
      report = fplevel::level_report(load_poly(opt), opt.cutoff);
    } else if (c_hsl->parsed()) {
      report = fplevel::hsl_report(load_poly(opt), opt.cutoff);
    } else if (c_fpt->parsed()) {
      report = fplevel::fpt_report(load_poly(opt), opt.max_e);
    } else if (c_ord->parsed()) {
      report = fplevel::ordinary_report(load_poly(opt));
    } else if (c_chain->parsed()) {
      report = fplevel::chain_report(load_poly(opt), opt.cutoff);
    } else if (c_jump->parsed()) {
      report = fplevel::jump_report(load_poly(opt), opt.cutoff);
    } else if (c_synth->parsed()) {
      report = fplevel::operator_synth_report(load_poly(opt), opt.e);
    } else if (c_fermat->parsed()) {
      report = fplevel::operator_fermat_report(opt.n, fplevel::PrimeField(opt.p));
    } else if (c_verify->parsed()) {
      fplevel::PrimeField field(opt.p);
      fplevel::DiffOp op = fplevel::diffop_from_text(slurp(opt.op_file), field);
      fplevel::Polynomial f =
          fplevel::parse_poly(opt.file.empty() ? opt.expr : slurp(opt.file), field, op.nvars());
      report = fplevel::operator_verify_report(op, f, opt.e);
    }
    emit(report, opt.as_json);
    return 0;
  } catch (const fplevel::Error& e) {
    int rc = e.code() == Errc::CutoffExceeded ? 2 : 1;
    if (opt.as_json) {
      json err{{"error", std::string(e.what())}, {"code", std::string(fplevel::errc_name(e.code()))}};
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
