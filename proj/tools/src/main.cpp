#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zetahess/error.hpp"
#include "zetahess/sampling.hpp"
#include "zetahess_cli/commands.hpp"

namespace zc = zetahess::cli;
using zetahess::OperatorKind;

namespace {

OperatorKind op_or_usage(const std::string& name) {
  try {
    return zetahess::parse_operator(name);
  } catch (const std::exception&) {
    throw zc::UsageError("unknown operator: " + name);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of zeta-function Hessian symbols"};
  app.fallthrough();
  app.require_subcommand(1);

  std::uint64_t seed = zetahess::default_seed();
  int jobs = 1;
  std::string out_path;
  std::string format_name = "text";
  app.add_option("--seed", seed, "Base seed (default from ZETAHESS_SEED)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");
  app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));

  zc::VerifyOptions vopt;
  std::string v_op = "both", general_h = "on";
  auto* verify = app.add_subcommand("verify-theorem1", "direct = grouped = closed form, per random case");
  verify->add_option("--operator", v_op)->check(CLI::IsMember({"bochner", "derham", "both"}));
  verify->add_option("--n-min", vopt.n_min);
  verify->add_option("--n-max", vopt.n_max);
  verify->add_option("--trials", vopt.trials);
  verify->add_option("--general-h", general_h)->check(CLI::IsMember({"on", "off"}));

  int id_n_max = 8;
  auto* ident = app.add_subcommand("identities", "Subset sums, gauge kernel, torsion sums, projector inequalities");
  ident->add_option("--n-max", id_n_max);

  std::string f_op;
  int f_n = 0;
  auto* ft = app.add_subcommand("ftable", "f1, f2 for p = 0..n and the d*d comparison");
  ft->add_option("--operator", f_op)->required()->check(CLI::IsMember({"bochner", "derham"}));
  ft->add_option("--n", f_n)->required();

  std::string c_op, c_s = "0";
  int c_n = 0, c_p = 0, c_k = 1;
  auto* cl = app.add_subcommand("classify", "Sign classification of a critical metric");
  cl->add_option("--operator", c_op)->required()->check(CLI::IsMember({"bochner", "derham", "dstar_d", "d_dstar"}));
  cl->add_option("--n", c_n)->required();
  cl->add_option("--p", c_p)->required();
  cl->add_option("--s", c_s, "Rational, e.g. 0 or -1/2");
  cl->add_option("--k", c_k);

  int s_n_max = 12;
  auto* sc = app.add_subcommand("scan", "Classification scan at (s, k) = (0, 1)");
  sc->add_option("--n-max", s_n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string text;
  int code = 0;
  try {
    const auto format = zc::parse_format(format_name);
    if (verify->parsed()) {
      if (v_op == "both")
        vopt.operators = {OperatorKind::Bochner, OperatorKind::DeRham};
      else
        vopt.operators = {op_or_usage(v_op)};
      vopt.general_h = general_h == "on";
      const auto rep = zc::verify_theorem1(vopt, seed, jobs);
      text = zc::render(rep, format);
      code = rep.exit_code();
    } else if (ident->parsed()) {
      const auto rep = zc::identities(id_n_max, seed, jobs);
      text = zc::render(rep, format);
      code = rep.exit_code();
    } else if (ft->parsed()) {
      text = zc::ftable(op_or_usage(f_op), f_n, format);
    } else if (cl->parsed()) {
      zetahess::Rational s;
      try {
        s = zetahess::parse_rational(c_s);
      } catch (const std::invalid_argument& e) {
        throw zc::UsageError(e.what());
      }
      text = zc::classify(zc::parse_scan_operator(c_op), c_n, c_p, s, c_k, format);
    } else if (sc->parsed()) {
      const auto r = zc::scan(s_n_max, format);
      text = r.text;
      code = r.matches ? 0 : 1;
    }
  } catch (const zc::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 2;
    }
    f << text;
  }
  return code;
}
