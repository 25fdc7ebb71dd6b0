// symqe: decide nonnegativity of symmetric quartic forms on R_+^n and R^n.
//
// Exit codes: 0 true, 1 false, 2 usage or parse error, 3 oracle mismatch.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symqe/oracle.hpp"
#include "symqe/qe_plus.hpp"
#include "symqe/qe_real.hpp"
#include "symqe/report.hpp"
#include "symqe/symquartic.hpp"

namespace {

using namespace symqe;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracleMismatch = 3;

struct InputSpec {
  long n = 0;
  std::string basis = "power-sum";
  std::string coeffs;
  std::string domain = "orthant";
  int degree = 4;
  bool witness = false;
  bool json = false;
  bool oracle_check = false;
  bool parallel = false;
  unsigned threads = 0;
};

std::vector<Rational> parse_coefficients(const std::string& text, std::size_t expected) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in coefficient list");
  if (out.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " coefficients, got " +
                                std::to_string(out.size()));
  }
  return out;
}

SymmetricQuartic make_quartic(long n, const std::string& basis, const std::string& coeffs) {
  const auto c = parse_coefficients(coeffs, 5);
  if (basis == "monomial") return from_monomial(MonomialQuartic{n, {c[0], c[1], c[2], c[3], c[4]}});
  return SymmetricQuartic(n, c[0], c[1], c[2], c[3], c[4]);
}

Domain parse_domain(const std::string& text) { return text == "real" ? Domain::real : Domain::orthant; }

void add_input_options(CLI::App& cmd, InputSpec& spec) {
  cmd.add_option("--n", spec.n, "Number of variables (>= 2)")->required();
  cmd.add_option("--coeffs", spec.coeffs, "Comma-separated exact rationals, e.g. 24,-19,-7,9,-1 or 1/2,...")
      ->required();
  cmd.add_option("--domain", spec.domain, "orthant or real")->check(CLI::IsMember({"orthant", "real"}));
  cmd.add_option("--basis", spec.basis, "power-sum (a..e) or monomial (alpha..epsilon)")
      ->check(CLI::IsMember({"power-sum", "monomial"}));
  cmd.add_option("--degree", spec.degree, "4 (quartic) or 3 (cubic, orthant only)")->check(CLI::IsMember({3, 4}));
  cmd.add_flag("--witness", spec.witness, "Print a point with f < 0 on failure");
  cmd.add_flag("--json", spec.json, "Emit a single JSON object");
  cmd.add_flag("--oracle-check", spec.oracle_check, "Re-decide with the quadratic-time reference; exit 3 on mismatch");
  cmd.add_flag("--parallel", spec.parallel, "Evaluate pair checks on several threads");
  cmd.add_option("--threads", spec.threads, "Worker threads for --parallel (0: all cores)");
}

int run_decide(const InputSpec& spec, bool with_trace) {
  if (spec.n < 2) throw std::invalid_argument("--n must be at least 2");
  DecideOptions options;
  options.trace = with_trace;
  options.parallel = spec.parallel;
  options.threads = spec.threads;

  const auto start = std::chrono::steady_clock::now();
  Verdict verdict;
  std::optional<SymmetricQuartic> quartic;
  if (spec.degree == 3) {
    if (spec.domain != "orthant") throw std::invalid_argument("cubic mode supports --domain orthant only");
    if (spec.basis != "power-sum") throw std::invalid_argument("cubic mode takes power-sum coefficients");
    const auto c = parse_coefficients(spec.coeffs, 3);
    verdict = decide_orthant_cubic(SymmetricCubic(spec.n, c[0], c[1], c[2]), options);
  } else {
    quartic = make_quartic(spec.n, spec.basis, spec.coeffs);
    verdict = parse_domain(spec.domain) == Domain::orthant ? decide_orthant(*quartic, options)
                                                           : decide_real(*quartic, options);
  }
  const double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (spec.json) {
    auto out = verdict_json(verdict, millis, true, with_trace);
    out["input"] = {{"n", spec.n}, {"domain", spec.domain}, {"basis", spec.basis},
                    {"degree", spec.degree}, {"coeffs", spec.coeffs}};
    std::cout << out.dump() << '\n';
  } else {
    if (with_trace) {
      for (const auto& rec : verdict.trace) std::cout << trace_line(rec) << '\n';
    }
    std::cout << decision_line(verdict.decision) << '\n';
    if (spec.witness && verdict.witness) std::cout << witness_line(*verdict.witness) << '\n';
  }

  if (spec.oracle_check) {
    if (quartic) {
      const bool reference = parse_domain(spec.domain) == Domain::orthant ? oracle::decide_orthant_reference(*quartic)
                                                                         : oracle::decide_real_reference(*quartic);
      if (reference != verdict.decision) {
        std::cerr << "oracle mismatch: fast decision " << verdict.decision << ", reference " << reference << '\n';
        return kExitOracleMismatch;
      }
    } else {
      std::cerr << "note: --oracle-check has no reference decider for cubics\n";
    }
  }
  return verdict.decision ? kExitTrue : kExitFalse;
}

int run_convert(const std::string& coeffs, long n) {
  const auto c = parse_coefficients(coeffs, 5);
  const SymmetricQuartic f = from_monomial(MonomialQuartic{n, {c[0], c[1], c[2], c[3], c[4]}});
  for (std::size_t i = 0; i < 5; ++i) std::cout << (i ? "," : "") << to_string(f.coefficients()[i]);
  std::cout << '\n';
  return 0;
}

std::vector<long> parse_n_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const long n = std::stol(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad n: '" + item + "'");
    if (n < 2) throw std::invalid_argument("every n must be at least 2");
    if (!out.empty() && n <= out.back()) throw std::invalid_argument("the n list must be strictly ascending");
    out.push_back(n);
  }
  if (out.empty()) throw std::invalid_argument("empty n list");
  return out;
}

int run_bench(const std::string& coeffs, const std::string& n_list, const std::string& domain,
              const std::string& basis, int repeat) {
  const auto ns = parse_n_list(n_list);
  if (repeat < 1) throw std::invalid_argument("--repeat must be positive");
  parse_coefficients(coeffs, 5);

  std::cout << "n,decision,millis\n";
  std::vector<double> medians;
  for (long n : ns) {
    const SymmetricQuartic f = make_quartic(n, basis, coeffs);
    std::vector<double> times;
    bool decision = true;
    for (int i = 0; i < repeat; ++i) {
      const auto start = std::chrono::steady_clock::now();
      decision = parse_domain(domain) == Domain::orthant ? decide_orthant(f).decision : decide_real(f).decision;
      times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[times.size() / 2]);
    std::cout << n << ',' << (decision ? "true" : "false") << ',' << medians.back() << '\n';
  }
  for (std::size_t i = 1; i < ns.size(); ++i) {
    std::cerr << "# time ratio n=" << ns[i] << " / n=" << ns[i - 1] << ": " << medians[i] / medians[i - 1] << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nonnegativity decisions for symmetric quartic forms"};
  app.require_subcommand(1);

  InputSpec decide_spec;
  auto* decide = app.add_subcommand("decide", "Decide 0 <= f on the orthant or on R^n");
  add_input_options(*decide, decide_spec);

  InputSpec trace_spec;
  auto* trace = app.add_subcommand("trace", "Decide and print every check performed");
  add_input_options(*trace, trace_spec);

  std::string convert_coeffs;
  long convert_n = 4;
  auto* convert = app.add_subcommand("convert", "Monomial-basis coefficients to power-sum coefficients");
  convert->add_option("--coeffs", convert_coeffs, "alpha,beta,gamma,delta,epsilon")->required();
  convert->add_option("--n", convert_n, "Number of variables");

  std::string bench_coeffs, bench_ns, bench_domain = "orthant", bench_basis = "power-sum";
  int bench_repeat = 1;
  auto* bench = app.add_subcommand("bench", "Time the decider over a list of n; CSV n,decision,millis");
  bench->add_option("--coeffs", bench_coeffs, "Five exact rationals")->required();
  bench->add_option("--n-list", bench_ns, "Ascending comma-separated n values")->required();
  bench->add_option("--domain", bench_domain, "orthant or real")->check(CLI::IsMember({"orthant", "real"}));
  bench->add_option("--basis", bench_basis, "power-sum or monomial")->check(CLI::IsMember({"power-sum", "monomial"}));
  bench->add_option("--repeat", bench_repeat, "Runs per n; the median is reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*decide) return run_decide(decide_spec, false);
    if (*trace) return run_decide(trace_spec, true);
    if (*convert) return run_convert(convert_coeffs, convert_n);
    if (*bench) return run_bench(bench_coeffs, bench_ns, bench_domain, bench_basis, bench_repeat);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
