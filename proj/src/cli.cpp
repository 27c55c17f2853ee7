// Copyright 2026 The lncert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lncert/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lncert/certificates.hpp"
#include "lncert/figures.hpp"
#include "lncert/json_io.hpp"

namespace lncert::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::Certified: return 0;
    case Verdict::Refuted: return 1;
    case Verdict::Undecided: return 2;
  }
  return 3;
}

int error_exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::PreconditionRefuted: return 1;
    case ErrorCode::PrecisionError: return 2;
    default: return 3;
  }
}

std::string approx(const Rational& v) { return v.to_decimal_string(6); }

std::string show(const Rational& v) { return v.to_string() + " (approx " + approx(v) + ")"; }

std::string show(const Interval& iv) {
  return "[" + iv.lo().to_string() + ", " + iv.hi().to_string() + "] (approx [" +
         approx(iv.lo()) + ", " + approx(iv.hi()) + "])";
}

void print_certificate(std::ostream& out, const Certificate& cert) {
  out << "claim:   " << cert.statement << "\n";
  if (!cert.partitions.empty()) {
    for (const Partition& p : cert.partitions) {
      out << "split:   {";
      const auto& pts = p.points();
      for (size_t i = 0; i < pts.size(); ++i) out << (i ? ", " : "") << pts[i].to_string();
      out << "}\n";
    }
  }
  for (const BoundTerm& t : cert.terms) {
    out << "term:    " << method_name(t.method) << "(" << t.a.to_string() << ", "
        << t.b.to_string() << ") = " << t.value.to_string() << "\n";
  }
  for (const auto& [name, value] : cert.totals) {
    out << "total:   " << name << " = " << show(value) << "\n";
  }
  out << "verdict: " << verdict_name(cert.verdict) << "\n";
}

int emit_certificate(std::ostream& out, const Certificate& cert, bool json) {
  if (json) {
    out << certificate_to_json(cert) << "\n";
  } else {
    print_certificate(out, cert);
  }
  return verdict_exit_code(cert.verdict);
}

struct GlobalOptions {
  std::string refinement_floor = "1e-30";
  long max_bisections = kDefaultMaxBisections;
  bool max_bisections_from_env = false;
};

CertConfig build_config(const GlobalOptions& global, const std::string& eps_text) {
  CertConfig config;
  config.eps = Rational::from_string(eps_text);
  config.refinement_floor = Rational::from_string(global.refinement_floor);
  config.max_bisections = global.max_bisections;
  if (config.refinement_floor.sign() <= 0 || !(config.eps > config.refinement_floor)) {
    fail(ErrorCode::UsageError, "needs eps > refinement floor > 0");
  }
  if (config.max_bisections < 1) fail(ErrorCode::UsageError, "needs max bisections >= 1");
  return config;
}

std::vector<Rational> parse_ratio_list(std::string_view text) {
  std::vector<Rational> ratios;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view item =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    if (item.empty()) fail(ErrorCode::UsageError, "empty entry in ratio list");
    ratios.push_back(Rational::from_string(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ratios;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-rational certificates for area bounds on ln, e, gamma, and pi"};
  app.require_subcommand(1);

  GlobalOptions global;
  if (const char* env = std::getenv("LNCERT_MAX_BISECTIONS"); env != nullptr) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || parsed < 1) {
      err << "UsageError: LNCERT_MAX_BISECTIONS must be a positive integer\n";
      return 3;
    }
    global.max_bisections = parsed;
    global.max_bisections_from_env = true;
  }
  app.add_option("--refinement-floor", global.refinement_floor,
                 "smallest enclosure width auto-refinement may request");
  app.add_option("--max-bisections", global.max_bisections,
                 "cap on ln-enclosure bisections (also via LNCERT_MAX_BISECTIONS)");

  std::string default_eps = "1/1000000";

  // ln-bound
  auto* ln_cmd = app.add_subcommand("ln-bound", "enclose ln(b/a) in a rational interval");
  std::string ln_a, ln_b, ln_eps = default_eps;
  bool ln_json = false;
  ln_cmd->add_option("a", ln_a, "left endpoint (> 0)")->required();
  ln_cmd->add_option("b", ln_b, "right endpoint (> 0)")->required();
  ln_cmd->add_option("--eps", ln_eps, "maximum interval width");
  ln_cmd->add_flag("--json", ln_json, "machine-readable output");

  // certify-e
  auto* e_cmd = app.add_subcommand("certify-e", "bound e by explicit partitions or bisection");
  bool e_paper = false, e_json = false;
  std::string e_eps = default_eps;
  auto* paper_flag = e_cmd->add_flag("--paper", e_paper, "emit the two explicit-partition certificates");
  e_cmd->add_option("--eps", e_eps, "enclosure width for the bisection route")
      ->excludes(paper_flag);
  e_cmd->add_flag("--json", e_json, "machine-readable output");

  // power
  auto* pow_cmd = app.add_subcommand("power", "certify b^a < a^b for e <= a < b");
  std::string pow_a, pow_b, pow_eps = default_eps;
  bool pow_json = false;
  pow_cmd->add_option("a", pow_a, "base a: a rational or the letter e")->required();
  pow_cmd->add_option("b", pow_b, "exponent side b (rational)")->required();
  pow_cmd->add_option("--eps", pow_eps, "initial enclosure width");
  pow_cmd->add_flag("--json", pow_json, "machine-readable output");

  // pi-e
  auto* pi_cmd = app.add_subcommand("pi-e", "certify pi^e < e^pi from a pi enclosure");
  std::string pi_lo = "223/71", pi_hi = "22/7", pi_eps = default_eps;
  bool pi_json = false;
  pi_cmd->add_option("--pi-lo", pi_lo, "lower bound for pi (>= 3)");
  pi_cmd->add_option("--pi-hi", pi_hi, "upper bound for pi");
  pi_cmd->add_option("--eps", pi_eps, "initial enclosure width");
  pi_cmd->add_flag("--json", pi_json, "machine-readable output");

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "gamma_n/A_n/Gamma_n enclosures and sandwich checks");
  long gamma_n = 0, gamma_verify = 0;
  std::string gamma_eps = default_eps;
  bool gamma_json = false;
  gamma_cmd->add_option("n", gamma_n, "index n >= 1")->required();
  gamma_cmd->add_option("--verify-up-to", gamma_verify, "also run sandwich checks for all n <= N");
  gamma_cmd->add_option("--eps", gamma_eps, "enclosure width per ln evaluation");
  gamma_cmd->add_flag("--json", gamma_json, "machine-readable output");

  // euler-limit
  auto* euler_cmd = app.add_subcommand("euler-limit", "sandwich table for the generalized limit");
  std::string euler_seq = "identity";
  long euler_n = 0;
  bool euler_json = false;
  euler_cmd->add_option("--seq", euler_seq, "identity | square | sqrtlike | ratios:R1,R2,...");
  euler_cmd->add_option("--n", euler_n, "largest index")->required();
  euler_cmd->add_flag("--json", euler_json, "machine-readable output");

  // geom
  auto* geom_cmd = app.add_subcommand("geom", "exact finite geometric-series identity");
  std::string geom_r, geom_m;
  bool geom_json = false;
  geom_cmd->add_option("r", geom_r, "ratio r > 1")->required();
  geom_cmd->add_option("m", geom_m, "partial-sum length m >= 0")->required();
  geom_cmd->add_flag("--json", geom_json, "machine-readable output");

  // figure / figures
  auto* fig_cmd = app.add_subcommand("figure", "render one figure as SVG");
  std::string fig_name, fig_out;
  fig_cmd->add_option("name", fig_name, "fig01|fig02|fig05|fig06|fig09|fig10|fig11|fig12|fig13|fig14|fig15")
      ->required();
  fig_cmd->add_option("-o,--output", fig_out, "output file")->required();

  auto* figs_cmd = app.add_subcommand("figures", "render the full figure set");
  std::string figs_dir;
  figs_cmd->add_option("--out-dir", figs_dir, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (ln_cmd->parsed()) {
      CertConfig config = build_config(global, ln_eps);
      Rational a = Rational::from_string(ln_a), b = Rational::from_string(ln_b);
      if (a.sign() <= 0 || b.sign() <= 0) fail(ErrorCode::DomainError, "needs a > 0 and b > 0");
      Interval iv = ln_enclosure(b / a, config.eps, config.ln_options());
      if (ln_json) {
        ordered_json j;
        j["command"] = "ln-bound";
        j["a"] = a.to_string();
        j["b"] = b.to_string();
        j["eps"] = config.eps.to_string();
        j["lo"] = iv.lo().to_string();
        j["hi"] = iv.hi().to_string();
        j["width"] = iv.width().to_string();
        out << j.dump() << "\n";
      } else {
        out << "ln(" << b.to_string() << "/" << a.to_string() << ") in " << show(iv) << "\n";
        out << "width " << show(iv.width()) << "\n";
      }
      return 0;
    }

    if (e_cmd->parsed()) {
      if (e_paper) {
        auto [upper_cert, lower_cert] = certify_e_paper();
        upper_cert.config = build_config(global, e_eps);
        lower_cert.config = upper_cert.config;
        if (e_json) {
          out << "[" << certificate_to_json(upper_cert) << ","
              << certificate_to_json(lower_cert) << "]\n";
        } else {
          print_certificate(out, upper_cert);
          out << "\n";
          print_certificate(out, lower_cert);
        }
        return std::max(verdict_exit_code(upper_cert.verdict),
                        verdict_exit_code(lower_cert.verdict));
      }
      CertConfig config = build_config(global, e_eps);
      Certificate cert = e_enclosure_certificate(config.eps, config);
      return emit_certificate(out, cert, e_json);
    }

    if (pow_cmd->parsed()) {
      CertConfig config = build_config(global, pow_eps);
      PowerBase base =
          (pow_a == "e" || pow_a == "E") ? PowerBase::e()
                                         : PowerBase::rational(Rational::from_string(pow_a));
      Certificate cert = certify_power(base, Rational::from_string(pow_b), config.eps, config);
      return emit_certificate(out, cert, pow_json);
    }

    if (pi_cmd->parsed()) {
      CertConfig config = build_config(global, pi_eps);
      Rational lo = Rational::from_string(pi_lo), hi = Rational::from_string(pi_hi);
      if (!(lo < hi)) fail(ErrorCode::UsageError, "needs pi_lo < pi_hi");
      Certificate cert = certify_pi_e(Interval(lo, hi), config.eps, config);
      return emit_certificate(out, cert, pi_json);
    }

    if (gamma_cmd->parsed()) {
      CertConfig config = build_config(global, gamma_eps);
      Certificate enclosure_cert = gamma_certificate(gamma_n, config.eps, config);
      GammaTriple triple = gamma_sequences(gamma_n, config.eps, config);

      Certificate sandwich_cert;
      bool have_sandwich = gamma_verify > 0;
      if (have_sandwich) {
        GammaSandwichReport report = verify_gamma_sandwich(gamma_verify, config.eps);
        sandwich_cert = gamma_sandwich_certificate(report, config);
        if (!gamma_json) {
          for (const GammaCheck& c : report.checks) {
            out << (c.passed ? "ok   " : "FAIL ") << c.name << " (checked " << c.checked
                << " indices)\n";
          }
          for (const std::string& f : report.failures) out << "failure: " << f << "\n";
          out << "note: " << report.note << "\n\n";
        }
      }

      if (gamma_json) {
        if (have_sandwich) {
          out << "[" << certificate_to_json(enclosure_cert) << ","
              << certificate_to_json(sandwich_cert) << "]\n";
        } else {
          out << certificate_to_json(enclosure_cert) << "\n";
        }
      } else {
        out << "H_n      = " << show(harmonic(gamma_n)) << "\n";
        out << "gamma_n  in " << show(triple.gamma_n) << "\n";
        out << "A_n      in " << show(triple.a_n) << "\n";
        out << "Gamma_n  in " << show(triple.big_gamma_n) << "\n";
        print_certificate(out, enclosure_cert);
      }
      int rc = verdict_exit_code(enclosure_cert.verdict);
      if (have_sandwich) rc = std::max(rc, verdict_exit_code(sandwich_cert.verdict));
      return rc;
    }

    if (euler_cmd->parsed()) {
      CertConfig config = build_config(global, default_eps);
      EulerLimitTable table;
      if (euler_seq.rfind("ratios:", 0) == 0) {
        table = euler_limit_demo_ratios(parse_ratio_list(std::string_view(euler_seq).substr(7)),
                                        config);
      } else if (euler_seq == "identity") {
        table = euler_limit_demo(SequenceKind::Identity, euler_n, config);
      } else if (euler_seq == "square") {
        table = euler_limit_demo(SequenceKind::Square, euler_n, config);
      } else if (euler_seq == "sqrtlike") {
        table = euler_limit_demo(SequenceKind::SqrtLike, euler_n, config);
      } else {
        fail(ErrorCode::UsageError, "unknown sequence '" + euler_seq + "'");
      }
      Certificate cert = euler_limit_certificate(table, config);
      if (euler_json) {
        out << certificate_to_json(cert) << "\n";
      } else {
        for (const EulerLimitRow& row : table.rows) {
          out << "n = " << row.n << ": lower " << show(row.lower) << ", upper "
              << show(row.upper) << ", gap " << show(row.gap)
              << (row.ln_checked ? "  [ln verified inside]" : "") << "\n";
        }
        print_certificate(out, cert);
      }
      return verdict_exit_code(cert.verdict);
    }

    if (geom_cmd->parsed()) {
      Rational r = Rational::from_string(geom_r);
      Rational m = Rational::from_string(geom_m);
      if (!m.is_integer() || m.sign() < 0) fail(ErrorCode::UsageError, "m must be an integer >= 0");
      Certificate cert = geometric_identity(r, m.num().get_si());
      cert.config = build_config(global, default_eps);  // provenance only; geom needs no enclosures
      return emit_certificate(out, cert, geom_json);
    }

    if (fig_cmd->parsed()) {
      std::string text = render(default_figure(fig_name));
      std::ofstream file(fig_out, std::ios::binary | std::ios::trunc);
      if (!file) fail(ErrorCode::WriteError, "cannot open " + fig_out + " for writing");
      file << text;
      file.flush();
      if (!file) fail(ErrorCode::WriteError, "write failed for " + fig_out);
      out << fig_out << "\n";
      return 0;
    }

    if (figs_cmd->parsed()) {
      std::error_code ec;
      std::filesystem::create_directories(figs_dir, ec);
      if (ec) fail(ErrorCode::WriteError, "cannot create " + figs_dir + ": " + ec.message());
      for (const std::string& name : render_all(figs_dir)) out << name << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << e.code_name() << ": " << e.what() << "\n";
    return error_exit_code(e);
  }

  err << "UsageError: no subcommand\n";
  return 3;
}

}  // namespace lncert::cli
