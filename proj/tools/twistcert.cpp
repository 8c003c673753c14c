// twistcert: thresholds, certificates, Riley polynomials and sweeps for
// double twist knots J(k, l).

#include "twistcert/io.hpp"
#include "twistcert/scan.hpp"
#include "twistcert/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <thread>

namespace {

using namespace twistcert;

enum ExitCode { kOk = 0, kUsage = 1, kNoCertificate = 2, kInconclusive = 3, kCheckFailed = 4 };

struct Output {
  std::string path;
  std::string format = "text";

  std::ostream& stream() {
    if (path.empty() || path == "-") return std::cout;
    if (!file) {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw std::runtime_error("cannot open output file: " + path);
    }
    return *file;
  }
  std::unique_ptr<std::ofstream> file;
};

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw CLI::ValidationError("range", "expected A..B or A, got '" + text + "'");
  const int a = std::stoi(m[1]);
  const int b = m[2].matched ? std::stoi(m[2]) : a;
  if (a > b) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return {a, b};
}

std::string fmt_opt(const std::optional<double>& v) { return v ? format_double(*v) : "-"; }

void print_threshold_text(std::ostream& os, const ThresholdReport& t) {
  os << "knot        " << t.knot.name() << (t.knot.mirrored ? " (mirrored)" : "") << "\n";
  os << "schubert    " << schubert_form(t.knot).name() << "\n";
  os << "class       " << to_string(t.tag) << "  m=" << t.m << "\n";
  os << "rule        " << t.rule << "\n";
  if (t.known_non_orderable) {
    os << "known_non_orderable true\n";
  } else {
    os << "q_or_4mn    " << fmt_opt(t.q_or_4mn) << "\n";
    os << "threshold   " << fmt_opt(t.threshold) << "\n";
    os << "r_min       " << *t.r_min << "\n";
  }
  for (const auto& n : t.notes) os << "note        " << n << "\n";
}

void print_certificate_text(std::ostream& os, const Certificate& c) {
  os << "knot                " << c.knot.name() << (c.knot.mirrored ? " (mirrored)" : "") << "\n";
  os << "r                   " << c.r << "\n";
  os << "x                   " << format_double(c.x) << "\n";
  os << "y                   " << (c.y_decimal.empty() ? "-" : c.y_decimal) << "\n";
  os << "phi_residual        " << fmt_opt(c.phi_residual) << "\n";
  os << "relation_residual   " << fmt_opt(c.relation_residual) << "\n";
  os << "commutator_distance " << fmt_opt(c.commutator_distance) << "\n";
  os << "signature           (" << c.signature_pos << "," << c.signature_neg << ")\n";
  os << "su11_residual       " << fmt_opt(c.su11_residual) << "\n";
  os << "meridian_residual   " << fmt_opt(c.meridian_residual) << "\n";
  os << "precision_bits      " << c.precision_bits << "\n";
  if (c.above_threshold) os << "above_threshold     " << (*c.above_threshold ? "true" : "false") << "\n";
  if (c.known_non_orderable) os << "known_non_orderable true\n";
  os << "verdict             " << to_string(c.verdict) << "\n";
  for (const auto& n : c.notes) os << "note                " << n << "\n";
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::certified: return kOk;
    case Verdict::no_certificate: return kNoCertificate;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-orderability certificates for cyclic branched covers of double twist knots"};
  app.require_subcommand(1);

  int k = 0, l = 0;
  long r = 0;
  long precision = precision_from_env();
  Output out;
  bool verify = false;
  std::string k_range, l_range;
  long r_max = 15;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  SelfTestOptions self;

  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("--k", k, "first twist parameter")->required();
    sub->add_option("--l", l, "second twist parameter")->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "text or json (JSON lines)")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out.path, "output file (default stdout)");
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", precision, "working precision in bits (env TWISTCERT_PRECISION)")
        ->check(CLI::Range(53L, 1L << 20));
  };

  auto* th_cmd = app.add_subcommand("threshold", "left-orderability threshold for J(k,l)");
  add_knot(th_cmd);
  add_output(th_cmd);

  auto* cert_cmd = app.add_subcommand("certify", "SU(1,1) witness for the r-fold cyclic branched cover");
  add_knot(cert_cmd);
  cert_cmd->add_option("--r", r, "covering degree")->required()->check(CLI::Range(2L, 1L << 30));
  add_precision(cert_cmd);
  add_output(cert_cmd);

  auto* riley_cmd = app.add_subcommand("riley", "Riley polynomial phi(x,y)");
  add_knot(riley_cmd);
  riley_cmd->add_flag("--verify", verify, "cross-check against the exact matrix-word expansion");
  add_output(riley_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "sweep (k, l, r) and write CSV");
  scan_cmd->add_option("--k-range", k_range, "A..B")->required();
  scan_cmd->add_option("--l-range", l_range, "A..B")->required();
  scan_cmd->add_option("--r-max", r_max, "largest r (rows start at r = 2)")->check(CLI::Range(2L, 1L << 20));
  scan_cmd->add_option("--out", out.path, "CSV file (default stdout)");
  scan_cmd->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
  add_precision(scan_cmd);

  auto* self_cmd = app.add_subcommand("selftest", "run the identity and bound suites");
  self_cmd->add_option("--grid-k", self.max_k, "largest k in the oracle grid")->check(CLI::Range(1, 40));
  self_cmd->add_option("--grid-n", self.max_abs_n, "largest |n| in the oracle grid")->check(CLI::Range(1, 20));
  self_cmd->add_option("--samples", self.samples, "random samples per bound check")->check(CLI::Range(1, 1000000));
  self_cmd->add_option("--seed", self.seed, "sampling seed");
  add_output(self_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string echo = command_echo(argc, argv);
  try {
    if (*th_cmd) {
      const ThresholdReport t = threshold(normalize(k, l));
      if (out.format == "json") {
        out.stream() << output_record(echo, t).dump() << "\n";
      } else {
        print_threshold_text(out.stream(), t);
      }
      return kOk;
    }
    if (*cert_cmd) {
      const Certificate c = certify(normalize(k, l), r, precision);
      if (out.format == "json") {
        out.stream() << output_record(echo, c).dump() << "\n";
      } else {
        print_certificate_text(out.stream(), c);
      }
      return verdict_exit(c.verdict);
    }
    if (*riley_cmd) {
      const DoubleTwistKnot K = normalize(k, l);
      if (K.is_trivial()) throw std::invalid_argument(K.name() + " is the trivial knot");
      const RileyData data = riley_poly(K);
      const TwoBridgeForm sf = schubert_form(K);
      std::optional<bool> match;
      if (verify) match = oracle_agrees(data, riley_oracle(K));
      if (out.format == "json") {
        json payload{{"knot", K},
                     {"schubert", sf.name()},
                     {"p", sf.p},
                     {"deg_y", riley_degree(data)},
                     {"phi", data.phi_poly.to_string()},
                     {"terms", poly_terms_json(data.phi_poly)}};
        payload["oracle_match"] = match ? json(*match) : json(nullptr);
        out.stream() << output_record(echo, payload).dump() << "\n";
      } else {
        auto& os = out.stream();
        os << "knot      " << K.name() << "\n";
        os << "schubert  " << sf.name() << "\n";
        os << "deg_y     " << riley_degree(data) << "\n";
        os << "phi       " << data.phi_poly.to_string() << "\n";
        if (match) os << "oracle_match " << (*match ? "true" : "false") << "\n";
      }
      return match && !*match ? kCheckFailed : kOk;
    }
    if (*scan_cmd) {
      ScanOptions opt;
      std::tie(opt.k_min, opt.k_max) = parse_range(k_range);
      std::tie(opt.l_min, opt.l_max) = parse_range(l_range);
      opt.r_max = r_max;
      opt.precision = precision;
      opt.workers = workers;
      const auto rows = run_scan(opt);
      write_scan_csv(out.stream(), rows);
      return kOk;
    }
    if (*self_cmd) {
      const auto results = run_selftest(self);
      bool all = true;
      for (const auto& c : results) {
        all = all && c.passed;
        if (out.format == "json") {
          out.stream() << output_record(echo, json{{"check", c.name}, {"passed", c.passed}, {"cases", c.cases},
                                                   {"detail", c.detail}})
                              .dump()
                       << "\n";
        } else {
          out.stream() << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)"
                       << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        }
      }
      return all ? kOk : kCheckFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
