#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "pdcert/certify.hpp"
#include "pdcert/errors.hpp"
#include "pdcert/oracle.hpp"

int main(int argc, char** argv) {
  pdcert::Config cfg;
  std::string format = "text";
  std::string out = "stdout";
  bool with_oracle = false;
  pdcert::oracle::Options oopt;

  CLI::App app{"Interval re-certification of the period-doubling renormalization bounds"};
  app.add_option("--rho", cfg.rho, "bi-disk radius")->capture_default_str();
  app.add_option("--r", cfg.r, "polydisc radius of the midpoint bound")->capture_default_str();
  app.add_option("--delta", cfg.delta, "radius of the ball about the seed")->capture_default_str();
  app.add_option("--eps-ball", cfg.eps_ball, "contraction ball radius")->capture_default_str();
  app.add_option("--kappa", cfg.kappa, "compactness inflation")->capture_default_str();
  app.add_option("--kappa2", cfg.kappa2, "second compactness inflation")->capture_default_str();
  app.add_option("--eps-prime", cfg.eps_prime, "compactness ball radius or auto")->capture_default_str();
  app.add_option("--shift-p", cfg.shift_p, "center shift of the seed")->capture_default_str();
  app.add_option("--table", cfg.table, "coefficient table path or builtin")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--out", out, "output path or stdout")->capture_default_str();
  app.add_option("--soft-slack", cfg.soft_slack, "relative slack on soft targets")->capture_default_str();
  app.add_flag("--timestamp", cfg.timestamp, "record the wall-clock time in the header");
  app.add_flag("--oracle", with_oracle, "append the numerical fixed-point crosscheck");
  app.add_option("--oracle-nx", oopt.nx, "oracle truncation degree in x")->capture_default_str();
  app.add_option("--oracle-ny", oopt.ny, "oracle truncation degree in y")->capture_default_str();
  app.add_option("--oracle-grid", oopt.grid, "oracle samples per circle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    pdcert::Certificate cert = pdcert::run_pipeline(cfg);
    if (with_oracle && cert.seed) {
      try {
        const auto start = pdcert::oracle::from_table(cert.seed->table, oopt.nx, oopt.ny);
        oopt.rho = cert.seed->rho.mid();
        const auto fp = pdcert::oracle::solve_fixed_point(start, oopt);
        pdcert::oracle::append_crosscheck(cert, pdcert::oracle::crosscheck(cert, fp), fp);
      } catch (const pdcert::NewtonDivergence& e) {
        std::cerr << "pdcert: oracle: " << e.what() << '\n';
      }
    }
    const std::string text = pdcert::emit(cert, format == "text" ? pdcert::Format::text : pdcert::Format::structured);
    if (out == "stdout" || out == "-") {
      std::cout << text;
      std::cout.flush();
      if (!std::cout) throw pdcert::ConfigError("cannot write to stdout");
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!(f << text)) throw pdcert::ConfigError("cannot write " + out);
    }
    return pdcert::exit_code(cert);
  } catch (const pdcert::ConfigError& e) {
    std::cerr << "pdcert: " << e.what() << '\n';
    return 3;
  } catch (const pdcert::CertError& e) {
    std::cerr << "pdcert: " << e.what() << '\n';
    return 3;
  }
}
