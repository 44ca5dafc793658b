// Copyright 2026 The Watermelon Authors. All Rights Reserved.
//
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

#include "melon/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "watermelon/asymptotics.hpp"
#include "watermelon/dirichlet.hpp"
#include "watermelon/exact.hpp"
#include "watermelon/numeric.hpp"
#include "watermelon/sums.hpp"
#include "watermelon/verify.hpp"

namespace melon {

namespace wm = watermelon;

namespace {

constexpr int kConvergenceMaxN = 2000;

struct RunConfig {
  unsigned precision_bits = wm::kDefaultPrecisionBits;
  std::string tol = "1e-12";
  Format format = Format::table;
  std::string out_path;
  int digits = 10;
};

struct CountArgs {
  int n = 1;
  int p = 1;
  std::optional<int> h;
};

struct HeightArgs {
  int n = 1;
  int p = 1;
  std::string route = "determinant";
  std::string sum_mode = "exact";
};

struct ConstantsArgs {
  int max_a = 0;
  int max_b = 0;
};

struct ConvergenceArgs {
  int n_min = 1;
  int n_max = 1000;
  int step = 1;
};

struct VerifyArgs {
  std::string level = "quick";
};

// Carries a partial result out of a failing command.
struct PartialOutput : std::runtime_error {
  PartialOutput(const std::string& what, Table t, int code)
      : std::runtime_error(what), table(std::move(t)), exit_code(code) {}
  Table table;
  int exit_code;
};

std::string num_str(const wm::ExactRational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x);
  return os.str();
}

std::string den_str(const wm::ExactRational& x) {
  std::ostringstream os;
  os << boost::multiprecision::denominator(x);
  return os.str();
}

Table cmd_count(const CountArgs& args) {
  wm::exact::MelonConfig{args.n, args.p, args.h}.validate();
  Table t{{"n", "p", "h", "count"}, {}, {}};
  const wm::ExactInt value = args.h ? wm::exact::capped_melon_count(args.n, args.p, *args.h)
                                    : wm::exact::count_melons(args.n, args.p);
  t.rows.push_back({std::to_string(args.n), std::to_string(args.p),
                    args.h ? std::to_string(*args.h) : "-", value.str()});
  return t;
}

Table cmd_height(const HeightArgs& args, const RunConfig& cfg) {
  wm::exact::MelonConfig{args.n, args.p, std::nullopt}.validate();
  const bool want_det = args.route == "determinant" || args.route == "both";
  const bool want_sums = args.route == "sums" || args.route == "both";
  if (want_sums && args.p > 2) throw wm::DomainError("the sums route covers p = 1 and p = 2 only");
  const auto mode = args.sum_mode == "hp" ? wm::sums::SumMode::high_precision
                                          : wm::sums::SumMode::exact_rational;
  if (args.route == "both" && mode != wm::sums::SumMode::exact_rational) {
    throw wm::ConfigurationError("--route both compares exact values; use --sum-mode exact");
  }

  Table t{{"n", "p", "route", "H_num", "H_den", "H"}, {}, {}};
  auto exact_row = [&](const std::string& route, const wm::ExactRational& h) {
    t.rows.push_back({std::to_string(args.n), std::to_string(args.p), route, num_str(h), den_str(h),
                      wm::to_decimal(h, cfg.digits)});
  };

  std::optional<wm::ExactRational> det;
  if (want_det) {
    det = wm::exact::avg_height_exact(args.n, args.p);
    exact_row("determinant", *det);
  }
  if (want_sums) {
    const wm::sums::SumValue v = args.p == 1 ? wm::sums::avg_height1_sum(args.n, mode)
                                             : wm::sums::avg_height2_sum(args.n, mode);
    if (mode == wm::sums::SumMode::exact_rational) {
      const wm::ExactRational& s = wm::sums::as_exact(v);
      exact_row("sums", s);
      if (det && *det != s) {
        throw PartialOutput("routes disagree: determinant " + wm::to_string(*det) + ", sums " +
                                wm::to_string(s),
                            t, kExitConsistency);
      }
    } else {
      t.rows.push_back({std::to_string(args.n), std::to_string(args.p), "sums", "-", "-",
                        wm::to_decimal(wm::sums::as_hp(v), cfg.digits)});
    }
  }
  return t;
}

Table cmd_constants(const ConstantsArgs& args, const RunConfig& cfg) {
  if (args.max_a < 0 || args.max_b < 0) throw wm::DomainError("--max-a and --max-b must be >= 0");
  if (args.max_b > args.max_a) throw wm::DomainError("rows need a >= b, so --max-b <= --max-a");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : wm::asymptotics::h2_multipliers()) pairs.emplace_back(c.a, c.b);
  for (int a = 0; a <= args.max_a; ++a) {
    for (int b = 0; b <= std::min(a, args.max_b); ++b) pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  const wm::HPReal tol = wm::parse_hp(cfg.tol);
  wm::dirichlet::QuadratureConstants source(tol);
  Table t{{"a", "b", "residue_main_coeff", "residue_half", "c_ab", "c_error"}, {}, {}};
  for (const auto& [a, b] : pairs) {
    try {
      const wm::dirichlet::DirichletConstants d = source.details(a, b);
      t.rows.push_back({std::to_string(a), std::to_string(b), wm::to_string(d.residue_main_coeff),
                        wm::to_string(d.residue_half), wm::to_decimal(d.c_ab, cfg.digits),
                        wm::to_decimal(d.c_error, std::max(cfg.digits, 20))});
    } catch (const wm::NumericError& e) {
      throw PartialOutput(std::string("c(") + std::to_string(a) + "," + std::to_string(b) +
                              "): " + e.what(),
                          t, kExitNumeric);
    }
  }

  const auto coeff = wm::asymptotics::H2_coefficient(source);
  t.footer.push_back("K = " + wm::to_decimal(coeff.K, cfg.digits));
  t.footer.push_back("K*sqrt(pi) = " + wm::to_decimal(coeff.K_sqrt_pi(), cfg.digits) + "  (vs " +
                     wm::asymptotics::kNominalSlope + ")");
  return t;
}

Table cmd_convergence(const ConvergenceArgs& args, const RunConfig& cfg) {
  if (args.n_min < 1) throw wm::DomainError("--n-min must be >= 1");
  if (args.n_max > kConvergenceMaxN) {
    throw wm::DomainError("--n-max is capped at " + std::to_string(kConvergenceMaxN));
  }
  if (args.n_max < args.n_min) throw wm::DomainError("--n-max must be >= --n-min");
  if (args.step < 1) throw wm::DomainError("--step must be >= 1");

  // n_min, then the multiples of step above it.
  std::vector<int> ns{args.n_min};
  for (int n = (args.n_min / args.step + 1) * args.step; n <= args.n_max; n += args.step) {
    ns.push_back(n);
  }

  std::vector<std::vector<std::string>> rows(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ns.size(); i = next++) {
      const auto r = wm::asymptotics::convergence_ratio(ns[i]);
      rows[i] = {std::to_string(r.n), num_str(r.H), den_str(r.H),
                 wm::to_decimal(r.H_asym, cfg.digits), wm::to_decimal(r.q, cfg.digits)};
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, ns.size());
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = ns.size();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  return Table{{"n", "H_exact_num", "H_exact_den", "H_asym", "q"}, std::move(rows), {}};
}

Table cmd_verify(const VerifyArgs& args, std::string& text, bool& passed) {
  wm::verify::Options opts;
  opts.level = args.level == "full" ? wm::verify::Level::full : wm::verify::Level::quick;
  const wm::verify::Report report = wm::verify::run(opts);
  passed = report.passed();
  text = wm::verify::render(report);
  Table t{{"suite", "status", "detail"}, {}, {}};
  for (const auto& c : report.checks) t.rows.push_back({c.suite, c.passed ? "pass" : "fail", c.detail});
  for (const auto& i : report.info) t.rows.push_back({"info", "info", i});
  return t;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic average heights of watermelons with a wall", "melon"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "table";
  app.add_option("--precision-bits", cfg.precision_bits, "MPFR working precision")
      ->check(CLI::Range(wm::kMinPrecisionBits, 1u << 20));
  app.add_option("--tol", cfg.tol, "Target tolerance for quadrature and series");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to this file");
  app.add_option("--digits", cfg.digits, "Decimal digits (round half even)")->check(CLI::Range(0, 1000));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Number of p-watermelons, optionally height capped");
  count->add_option("--n", count_args.n, "Half length")->required();
  count->add_option("--p", count_args.p, "Number of paths")->required();
  count->set_help_flag("--help", "Print this help message and exit");
  count->add_option("--h", count_args.h, "Height cap");

  HeightArgs height_args;
  auto* height = app.add_subcommand("height", "Exact average height H(n,p)");
  height->add_option("--n", height_args.n, "Half length")->required();
  height->add_option("--p", height_args.p, "Number of paths")->required();
  height->add_option("--route", height_args.route, "Evaluation route")
      ->check(CLI::IsMember({"determinant", "sums", "both"}));
  height->add_option("--sum-mode", height_args.sum_mode, "Arithmetic for the sums route")
      ->check(CLI::IsMember({"exact", "hp"}));

  ConstantsArgs constants_args;
  auto* constants = app.add_subcommand("constants", "Dirichlet constants c(a,b) and the slope K");
  constants->add_option("--max-a", constants_args.max_a, "Also emit all a <= max-a");
  constants->add_option("--max-b", constants_args.max_b, "Also emit all b <= max-b");

  ConvergenceArgs conv_args;
  auto* convergence = app.add_subcommand("convergence", "q(n) = H(n,2) / (2.57758 sqrt(n) - 2)");
  convergence->add_option("--n-min", conv_args.n_min, "First n");
  convergence->add_option("--n-max", conv_args.n_max, "Last n (at most 2000)");
  convergence->add_option("--step", conv_args.step, "Emit multiples of step");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--level", verify_args.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  cfg.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::table;

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = cfg.out_path.empty() ? out : file;

  auto emit = [&](const Table& t) {
    sink << render(t, cfg.format);
    if (cfg.format != Format::table) {
      for (const auto& f : t.footer) err << f << '\n';
    }
  };

  try {
    const wm::PrecisionScope precision(cfg.precision_bits);
    if (!(wm::parse_hp(cfg.tol) > 0)) throw wm::ConfigurationError("--tol must be positive");

    if (count->parsed()) {
      emit(cmd_count(count_args));
    } else if (height->parsed()) {
      emit(cmd_height(height_args, cfg));
    } else if (constants->parsed()) {
      emit(cmd_constants(constants_args, cfg));
    } else if (convergence->parsed()) {
      emit(cmd_convergence(conv_args, cfg));
    } else if (verify->parsed()) {
      std::string text;
      bool passed = false;
      const Table t = cmd_verify(verify_args, text, passed);
      if (cfg.format == Format::table) {
        sink << text;
      } else {
        emit(t);
      }
      if (!passed) {
        err << "verification failed\n";
        return kExitConsistency;
      }
    }
  } catch (const PartialOutput& e) {
    emit(e.table);
    err << "error: " << e.what() << '\n';
    return e.exit_code;
  } catch (const wm::DomainError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const wm::ConfigurationError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const wm::ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const wm::NumericError& e) {
    err << "numeric failure: " << e.what() << " (partial " << e.partial() << ")\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace melon
