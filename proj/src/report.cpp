#include "symqe/report.hpp"

#include <sstream>

namespace symqe {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string_view decisive_name(bool decisive) { return decisive ? "quartic-criterion" : "pairs-required"; }

}  // namespace

std::string_view to_string(PairBranch branch) {
  switch (branch) {
    case PairBranch::alpha_zero: return "alpha-zero";
    case PairBranch::complex_roots: return "negative-Delta";
    case PairBranch::beta_zero: return "beta-zero";
    case PairBranch::coeffs_nonneg: return "coeffs-nonneg";
    case PairBranch::coeffs_nonpos: return "coeffs-nonpos";
    case PairBranch::p_r_nonneg: return "P-R-nonneg";
    case PairBranch::discriminants: return "discriminants";
    case PairBranch::failed: return "failed";
  }
  return "unknown";
}

std::string_view to_string(RealBranch branch) {
  switch (branch) {
    case RealBranch::complex_critical: return "K-nonneg-Delta-negative";
    case RealBranch::critical_nonneg: return "G-H-K-nonneg";
    case RealBranch::failed: return "failed";
  }
  return "unknown";
}

std::string_view to_string(Domain domain) { return domain == Domain::orthant ? "orthant" : "real"; }

std::string decision_line(bool decision) { return decision ? "0 <= f, true" : "0 <= f, false"; }

std::string witness_line(const Witness& witness) {
  std::ostringstream out;
  out << "witness: (";
  for (std::size_t i = 0; i < witness.point.size(); ++i) {
    if (i) out << ", ";
    out << to_string(witness.point[i]);
  }
  out << ") value: " << to_string(witness.value);
  return out.str();
}

std::string trace_line(const TraceRecord& record) {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const OnesCheck& c) { out << "k=" << c.k << " value=" << to_string(c.value); },
                 [&](const OneMinusOneCheck& c) {
                   out << "(1,-1) value=" << to_string(c.value) << " branch=" << decisive_name(c.decisive);
                 },
                 [&](const PairCheck& c) {
                   out << "(r,s)=(" << c.r << "," << c.s << ") alpha=" << to_string(c.alpha)
                       << " beta=" << to_string(c.beta) << " gamma=" << to_string(c.gamma)
                       << " Delta=" << to_string(c.Delta);
                   if (c.pqr) {
                     out << " P=" << to_string(c.pqr->P) << " Q=" << to_string(c.pqr->Q)
                         << " R=" << to_string(c.pqr->R);
                   }
                   out << " branch=" << to_string(c.branch);
                 },
                 [&](const SplitCheck& c) {
                   out << "r=" << c.r << " Delta=" << to_string(c.disc.Delta) << " G=" << to_string(c.disc.G)
                       << " H=" << to_string(c.disc.H) << " K=" << to_string(c.disc.K)
                       << " branch=" << to_string(c.branch);
                 },
             },
             record);
  return out.str();
}

nlohmann::json trace_json(const TraceRecord& record) {
  return std::visit(
      overloaded{
          [](const OnesCheck& c) {
            return nlohmann::json{{"check", "ones"}, {"k", c.k}, {"value", to_string(c.value)}, {"passed", c.passed}};
          },
          [](const OneMinusOneCheck& c) {
            return nlohmann::json{{"check", "one-minus-one"},
                                  {"value", to_string(c.value)},
                                  {"branch", decisive_name(c.decisive)}};
          },
          [](const PairCheck& c) {
            nlohmann::json j{{"check", "pair"},
                             {"r", c.r},
                             {"s", c.s},
                             {"alpha", to_string(c.alpha)},
                             {"beta", to_string(c.beta)},
                             {"gamma", to_string(c.gamma)},
                             {"Delta", to_string(c.Delta)},
                             {"branch", to_string(c.branch)},
                             {"passed", c.passed}};
            if (c.pqr) {
              j["P"] = to_string(c.pqr->P);
              j["Q"] = to_string(c.pqr->Q);
              j["R"] = to_string(c.pqr->R);
            }
            return j;
          },
          [](const SplitCheck& c) {
            return nlohmann::json{{"check", "split"},
                                  {"r", c.r},
                                  {"Delta", to_string(c.disc.Delta)},
                                  {"G", to_string(c.disc.G)},
                                  {"H", to_string(c.disc.H)},
                                  {"K", to_string(c.disc.K)},
                                  {"branch", to_string(c.branch)},
                                  {"passed", c.passed}};
          },
      },
      record);
}

nlohmann::json witness_json(const Witness& witness) {
  nlohmann::json point = nlohmann::json::array();
  for (const auto& x : witness.point) point.push_back(to_string(x));
  return {{"point", std::move(point)}, {"value", to_string(witness.value)}};
}

nlohmann::json verdict_json(const Verdict& verdict, double timing_ms, bool with_witness, bool with_trace) {
  nlohmann::json out{{"decision", verdict.decision}};
  if (with_witness && verdict.witness) out["witness"] = witness_json(*verdict.witness);
  if (with_trace) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& rec : verdict.trace) trace.push_back(trace_json(rec));
    out["trace"] = std::move(trace);
  }
  out["timing_ms"] = timing_ms;
  return out;
}

}  // namespace symqe
