// Command-line front end: evaluation of the transcendent, single-identity
// verification, the full suite, the quotient-gamma table and figure-data
// export.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lerch/report.hpp"
#include "lerch_default_suite_json.hpp"

namespace {

using lerch::cplx;

// complex-valued CLI flags use the a+bi literal form; parse failures are
// usage errors (exit 2), never crashes
cplx parse_flag(const std::string& text, const std::string& flag) {
  auto v = lerch::parse_complex_literal(text);
  if (!v) throw CLI::ValidationError(flag, "expected a complex literal like 1.5 or 0.8+0.2i");
  return *v;
}

int thread_count() {
  const char* env = std::getenv("LERCH_VERIFY_THREADS");
  if (env != nullptr) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      std::cerr << "LERCH_VERIFY_THREADS must be a positive integer\n";
      std::exit(2);
    }
    return int(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(std::min(hw, 8u));
}

std::string fmt(double x) { return lerch::detail::fmt17(x); }

void print_report(const lerch::identity_report& r, std::ostream& os) {
  os << r.kase.id << " [";
  bool first = true;
  for (const auto& [k, v] : r.kase.params) {
    if (!first) os << ", ";
    first = false;
    os << k << "=" << v.real();
    if (v.imag() != 0.0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
  }
  os << "] lhs=(" << fmt(r.lhs.real()) << "," << fmt(r.lhs.imag()) << ") rhs=("
     << fmt(r.rhs.real()) << "," << fmt(r.rhs.imag()) << ") abs=" << fmt(r.abs_residual)
     << " rel=" << fmt(r.rel_residual) << " " << (r.pass ? "pass" : "FAIL");
  if (!r.notes.empty()) os << "  (" << r.notes << ")";
  os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz-Lerch transcendent evaluation and identity verification"};
  app.require_subcommand(1);

  std::string z_str = "0", s_str = "0", v_str = "1";
  auto* eval = app.add_subcommand("eval", "evaluate Phi(z, s, v)");
  eval->add_option("--z", z_str, "argument z (complex literal)")->required();
  eval->add_option("--s", s_str, "order s")->required();
  eval->add_option("--v", v_str, "shift v")->required();

  std::string id;
  std::vector<std::string> raw_params;
  double tol_abs = 0.0, tol_rel = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "verify one identity at given parameters");
  verify_cmd->add_option("--id", id, "identity id (see `suite --list`)")->required();
  verify_cmd->add_option("--param,--p", raw_params, "name=value pairs, e.g. --p z=2")
      ->take_all();
  verify_cmd->add_option("--tol-abs", tol_abs, "absolute tolerance override");
  verify_cmd->add_option("--tol-rel", tol_rel, "relative tolerance override");
  // common parameters directly as flags for convenience
  std::map<std::string, std::string> flag_params;
  for (const char* name : {"k", "a", "m", "n", "z", "s", "x", "r", "N", "row"}) {
    verify_cmd
        ->add_option_function<std::string>(
            std::string("--") + name,
            [&flag_params, name](const std::string& val) { flag_params[name] = val; })
        ->expected(1);
  }

  std::string config_path, out_dir = ".", format = "text";
  bool list_ids = false;
  auto* suite = app.add_subcommand("suite", "run an identity grid and write reports");
  suite->add_option("--config", config_path, "grid config (JSON); omit for the default");
  suite->add_option("--out", out_dir, "output directory");
  suite->add_option("--format", format,
                    "stdout format: text (failures + summary), json, csv")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  suite->add_flag("--list", list_ids, "list registered identity ids and exit");

  std::string t1_out = ".";
  auto* table1 = app.add_subcommand("table1", "verify the quotient-gamma table");
  table1->add_option("--out", t1_out, "output directory");

  double rmin = 0.25, rmax = 4.0;
  int steps = 200;
  std::string fig_out = ".";
  auto* figures = app.add_subcommand("figures", "sample the tan-ratio figure function");
  figures->add_option("--rmin", rmin, "grid start");
  figures->add_option("--rmax", rmax, "grid end");
  figures->add_option("--steps", steps, "number of samples")->check(CLI::PositiveNumber);
  figures->add_option("--out", fig_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      lerch::lerch_args args{parse_flag(z_str, "--z"), parse_flag(s_str, "--s"),
                             parse_flag(v_str, "--v")};
      lerch::eval_result r = lerch::lerch_phi(args);
      std::cout << "value = " << fmt(r.value.real());
      if (r.value.imag() != 0.0)
        std::cout << (r.value.imag() > 0 ? " + " : " - ") << fmt(std::abs(r.value.imag()))
                  << "i";
      std::cout << "\nabs_err <= " << fmt(r.abs_err) << "   method = "
                << lerch::to_string(r.method) << "   work = " << r.work << "\n";
      return 0;
    }

    if (*verify_cmd) {
      lerch::identity_case c;
      c.id = id;
      c.tol_abs = tol_abs;
      c.tol_rel = tol_rel;
      for (const auto& [k, v] : flag_params) c.params[k] = parse_flag(v, "--" + k);
      for (const auto& pr : raw_params) {
        auto eq = pr.find('=');
        if (eq == std::string::npos)
          throw CLI::ValidationError("--param", "expected name=value");
        c.params[pr.substr(0, eq)] = parse_flag(pr.substr(eq + 1), "--param");
      }
      lerch::identity_report rep = lerch::verify(c);
      print_report(rep, std::cout);
      return rep.pass ? 0 : 1;
    }

    if (*suite) {
      if (list_ids) {
        for (const auto& d : lerch::registry())
          std::cout << d.id << "  " << d.title << "\n";
        return 0;
      }
      std::string text;
      if (config_path.empty()) {
        text = lerch::default_suite_json;
      } else {
        std::ifstream is(config_path, std::ios::binary);
        if (!is) {
          std::cerr << "cannot read config: " << config_path << "\n";
          return 2;
        }
        std::ostringstream ss;
        ss << is.rdbuf();
        text = ss.str();
      }
      lerch::suite_config cfg;
      try {
        cfg = lerch::parse_suite_config(text);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
      auto reports = lerch::run_suite(cfg, thread_count());
      std::filesystem::create_directories(out_dir);
      lerch::write_file(out_dir + "/reports.json", lerch::emit_json(reports));
      lerch::write_file(out_dir + "/reports.csv", lerch::emit_csv(reports));
      long failed = 0, skipped = 0;
      for (const auto& r : reports) {
        if (!r.pass) ++failed;
        if (r.notes.rfind("skipped", 0) == 0) ++skipped;
        if (format == "text" && !r.pass) print_report(r, std::cout);
      }
      if (format == "json") std::cout << lerch::emit_json(reports);
      if (format == "csv") std::cout << lerch::emit_csv(reports);
      std::cout << reports.size() << " cases, " << failed << " failed, " << skipped
                << " skipped -> " << out_dir << "/reports.{json,csv}\n";
      return failed == 0 ? 0 : 1;
    }

    if (*table1) {
      auto rows = lerch::table1_rows();
      auto reports = lerch::table1_verify();
      std::filesystem::create_directories(t1_out);
      lerch::write_file(t1_out + "/table1.csv", lerch::emit_table1_csv(rows, reports));
      bool all = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::cout << "row " << rows[i].index << "  " << rows[i].closed_form_text << "  rel="
                  << fmt(reports[i].rel_residual) << "  "
                  << (reports[i].pass ? "pass" : "FAIL") << "\n";
        all = all && reports[i].pass;
      }
      return all ? 0 : 1;
    }

    if (*figures) {
      if (rmax <= rmin) {
        std::cerr << "figures: need rmin < rmax\n";
        return 2;
      }
      std::vector<cplx> grid;
      for (int i = 0; i < steps; ++i)
        grid.push_back(cplx(rmin + (rmax - rmin) * double(i) / double(steps - 1), 0.0));
      auto samples = lerch::figure_samples(grid);
      std::filesystem::create_directories(fig_out);
      lerch::write_file(fig_out + "/figure_samples.csv", lerch::emit_figure_csv(samples));
      std::cout << samples.size() << " samples -> " << fig_out << "/figure_samples.csv\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
