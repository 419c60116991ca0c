// spectau: command-line front end.
//
//   spectau curve-info    --input W.json [--order K]
//   spectau correlators   --input W.json [--kmax K] [--max-n N] [--indices "a1,k1;a2,k2;..."]
//   spectau divisor       --input W.json [--tol T]
//   spectau jet           --input W.json
//   spectau verify-theta  --input W.json [--kmax K] [--tol T]
//
// Without --input, --seed draws a random instance (--shape n,m or --genus g).
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spectau/hyperelliptic.hpp"
#include "spectau/io.hpp"
#include "spectau/projectors.hpp"
#include "spectau/random.hpp"

using namespace spectau;

namespace {

constexpr int kKmaxCap = 16;
constexpr int kMaxNCap = 6;

struct Job {
  std::string command;
  std::string input;
  std::string output;
  int kmax = 2;
  int max_n = 3;
  int order = 4;
  double tol = -1;
  std::string indices;
  std::optional<std::uint64_t> seed;
  std::string shape = "3,1";
  int genus = 1;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> split_ints(const std::string& s, char sep, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(what + ": cannot read \"" + item + "\" as an integer");
    }
  }
  return out;
}

MatrixPolynomial load(const Job& job) {
  if (!job.input.empty()) return load_matrix_polynomial(job.input);
  if (!job.seed) throw InputError("--input is required (or --seed for a random instance)");
  Rng rng(*job.seed);
  if (job.command == "verify-theta") {
    if (job.genus < 1 || job.genus > 3) throw InputError("--genus must be between 1 and 3");
    auto s = random_hyperelliptic(rng, job.genus);
    return hyperelliptic_matrix(s.a, s.b, s.c);
  }
  auto nm = split_ints(job.shape, ',', "--shape");
  if (nm.size() != 2 || nm[0] < 2 || nm[0] > 6 || nm[1] < 1 || nm[1] > 4) throw InputError("--shape must be n,m with 2 <= n <= 6, 1 <= m <= 4");
  return random_matrix_polynomial(rng, nm[0], nm[1], {.traceless = true});
}

Json curve_info(const Job& job, const MatrixPolynomial& W) {
  SpectralCurveData curve = characteristic_data(W);
  Json out = curve_info_json(W, curve);
  if (curve.fatal()) {
    std::string msg;
    for (const auto& d : curve.diagnostics)
      if (d.level == Diagnostic::Level::fatal) msg += (msg.empty() ? "" : "; ") + d.name + ": " + d.detail;
    throw InputError(msg);
  }
  if (job.order < 0 || job.order > 64) throw InputError("--order must be between 0 and 64");
  ProjectorSet proj = compute_projectors(curve, W, job.order);
  Json branches = Json::array();
  for (const auto& s : proj.sheets) {
    Json c = Json::array();
    for (const auto& x : s.w.coeffs()) c.push_back(to_string(x));
    branches.push_back({{"sheet", s.sheet + 1}, {"lead", s.w.lead()}, {"coefficients", c}});
  }
  out["branches"] = branches;
  return out;
}

Json correlators(const Job& job, const MatrixPolynomial& W) {
  if (!job.indices.empty()) {
    IndexTuple a, k;
    std::stringstream ss(job.indices);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
      auto ak = split_ints(pair, ',', "--indices");
      if (ak.size() != 2) throw InputError("--indices: expected \"a,k\" pairs, got \"" + pair + "\"");
      if (ak[0] < 1 || ak[0] > W.n()) throw InputError("--indices: sheet " + std::to_string(ak[0]) + " out of range 1.." + std::to_string(W.n()));
      if (ak[1] < 0 || ak[1] > kKmaxCap) throw InputError("--indices: k out of range 0.." + std::to_string(kKmaxCap));
      a.push_back(ak[0] - 1);
      k.push_back(ak[1]);
    }
    if (a.size() < 2 || a.size() > static_cast<std::size_t>(kMaxNCap)) throw InputError("--indices: need between 2 and 6 pairs");
    int kmax = *std::max_element(k.begin(), k.end());
    CorrelatorTable t = correlator_n(W, a, kmax);
    Json ao = Json::array();
    for (int x : a) ao.push_back(x + 1);
    return {{"a", ao}, {"k", k}, {"value", to_string(t.at(a, k))}};
  }
  if (job.kmax < 0 || job.kmax > kKmaxCap) throw InputError("--kmax must be between 0 and " + std::to_string(kKmaxCap));
  if (job.max_n < 2 || job.max_n > kMaxNCap) throw InputError("--max-n must be between 2 and " + std::to_string(kMaxNCap));
  Json tables = Json::array();
  for (int N = 2; N <= job.max_n; ++N) tables.push_back(correlator_table_json(correlator_table(W, N, job.kmax)));
  return {{"tables", tables}};
}

Json divisor(const Job& job, const MatrixPolynomial& W) {
  double tol = job.tol > 0 ? job.tol : 1e-9;
  DivisorReport rep = pole_divisor_report(W, tol);
  Json out = divisor_report_json(rep);
  if (!rep.rejected.empty()) throw VerificationFailure(std::to_string(rep.rejected.size()) + " divisor point(s) failed the residual checks");
  return out;
}

Json jet(const Job&, const MatrixPolynomial& W) {
  JetPoint j = jet_from_projectors(W);
  Json tau = Json::array();
  const TauLevel levels[] = {TauLevel::l00, TauLevel::l01, TauLevel::l02};
  for (int a = 0; a < W.n(); ++a)
    for (int b = 0; b < W.n(); ++b)
      for (int l = 0; l < 3; ++l)
        tau.push_back({{"a", a + 1}, {"b", b + 1}, {"l", l}, {"value", to_string(tau_second_derivative(j, a, b, levels[l]))}});
  return {{"jet", jet_json(j)}, {"constraints_satisfied", validate_jet(j).ok()}, {"tau_second_derivatives", tau}};
}

Json verify_theta(const Job& job, const MatrixPolynomial& W) {
  if (job.kmax < 0 || job.kmax > kKmaxCap) throw InputError("--kmax must be between 0 and " + std::to_string(kKmaxCap));
  ThetaOptions opt;
  opt.kmax = job.kmax;
  if (job.tol > 0) opt.tol = job.tol;
  ThetaReport rep = verify_main_theorem(W, opt);
  Json out = theta_report_json(rep);
  if (!rep.pass) {
    std::string msg;
    for (const auto& f : rep.failures) msg += (msg.empty() ? "" : "; ") + f;
    out["status_detail"] = msg;
  }
  return out;
}

int run(const Job& job, Json& report) {
  report["command"] = job.command;
  Json errors = Json::array();
  int status = 0;
  try {
    MatrixPolynomial W = load(job);
    report["input"] = matrix_polynomial_json(W);
    if (job.command == "curve-info") report["result"] = curve_info(job, W);
    else if (job.command == "correlators") report["result"] = correlators(job, W);
    else if (job.command == "divisor") report["result"] = divisor(job, W);
    else if (job.command == "jet") report["result"] = jet(job, W);
    else if (job.command == "verify-theta") {
      report["result"] = verify_theta(job, W);
      if (!report["result"]["pass"].get<bool>()) {
        for (const auto& f : report["result"]["failures"]) errors.push_back(f);
        status = 1;
      }
    }
  } catch (const InputError& e) {
    errors.push_back(std::string("input error: ") + e.what());
    status = 2;
  } catch (const ParseError& e) {
    errors.push_back(std::string("input error: ") + e.what());
    status = 2;
  } catch (const VerificationFailure& e) {
    errors.push_back(e.what());
    status = 1;
  } catch (const std::exception& e) {
    // Numerical or consistency failures from the modules (divisor, jet, theta, truncation).
    errors.push_back(e.what());
    status = 1;
  }
  report["errors"] = errors;
  report["status"] = status == 0 ? "ok" : status == 1 ? "verification_failure" : "input_error";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectau: correlators, divisors, jets and theta checks for matrix polynomial spectral curves"};
  app.require_subcommand(1);
  Job job;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", job.input, "matrix polynomial JSON file");
    sub->add_option("--output", job.output, "report file (default stdout)");
    sub->add_option("--seed", job.seed, "random instance when --input is absent");
    sub->add_option("--tol", job.tol, "numerical tolerance");
  };
  auto* info = app.add_subcommand("curve-info", "characteristic polynomial, genus, diagnostics, branch expansions");
  common(info);
  info->add_option("--order", job.order, "branch expansion order")->capture_default_str();
  info->add_option("--shape", job.shape, "n,m of the random instance")->capture_default_str();
  auto* corr = app.add_subcommand("correlators", "exact correlator tables");
  common(corr);
  corr->add_option("--kmax", job.kmax, "largest k_i")->capture_default_str();
  corr->add_option("--max-n", job.max_n, "largest N")->capture_default_str();
  corr->add_option("--indices", job.indices, "single correlator \"a1,k1;a2,k2;...\" (sheets 1-based)");
  corr->add_option("--shape", job.shape, "n,m of the random instance")->capture_default_str();
  auto* div = app.add_subcommand("divisor", "pole divisor of the normalized eigenvector");
  common(div);
  div->add_option("--shape", job.shape, "n,m of the random instance")->capture_default_str();
  auto* jt = app.add_subcommand("jet", "n-wave jet from the projector expansion");
  common(jt);
  jt->add_option("--shape", job.shape, "n,m of the random instance")->capture_default_str();
  auto* th = app.add_subcommand("verify-theta", "compare N=3,4 correlators with theta derivatives (2x2 traceless W)");
  common(th);
  th->add_option("--kmax", job.kmax, "N=3 uses k_i <= kmax, N=4 uses k_i <= kmax-1")->capture_default_str();
  th->add_option("--genus", job.genus, "genus of the random instance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  job.command = app.get_subcommands().front()->get_name();

  Json report;
  int status = run(job, report);
  std::string text = dump(report);
  if (job.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(job.output);
    if (!out) {
      std::cerr << "cannot write " << job.output << "\n";
      return 2;
    }
    out << text;
  }
  if (status != 0)
    for (const auto& e : report["errors"]) std::cerr << "spectau: " << e.get<std::string>() << "\n";
  return status;
}
