// One line per criterion: "criterion K: PASS|FAIL (seconds) detail".
// Usage: acceptance [--criterion K]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "spectau/correlators.hpp"
#include "spectau/divisor.hpp"
#include "spectau/jets.hpp"
#include "spectau/projectors.hpp"
#include "spectau/theta.hpp"

using namespace testing_util;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> info;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

// ---- 1: hyperelliptic closed forms

Outcome hyperelliptic_golden() {
  Outcome out;
  Rng rng(101);
  int checked = 0;
  for (int g : {1, 2}) {
    for (int t = 0; t < 10; ++t) {
      auto s = random_hyperelliptic(rng, g, false);
      auto W = hyperelliptic_matrix(s.a, s.b, s.c);
      auto at = [&](const Poly& p, int k) { return g + 1 - k >= 0 ? p.coeff(g + 1 - k) : Rational(0); };
      Rational a1 = at(s.a, 1), a2 = at(s.a, 2);
      Rational b1 = at(s.b, 1), b2 = at(s.b, 2), b3 = at(s.b, 3);
      Rational c1 = at(s.c, 1), c2 = at(s.c, 2), c3 = at(s.c, 3);

      auto proj = compute_projectors(W, correlator_truncation(4, 1) + 2);
      auto t2 = correlator_table(proj, 2, 1);
      auto t3 = correlator_table(proj, 3, 1);
      auto t4 = correlator_table(proj, 4, 0);

      struct Row {
        const char* name;
        Rational engine, golden;
      };
      std::vector<Row> rows = {
          {"F00", difference_correlator(t2, {0, 0}), -b1 * c1},
          {"F01", difference_correlator(t2, {0, 1}), 2 * a1 * b1 * c1 - b2 * c1 - b1 * c2},
          {"F11", difference_correlator(t2, {1, 1}),
           Rational(-8 * a1 * a1 * b1 * c1 + 4 * a2 * b1 * c1 + 6 * a1 * b2 * c1 - 2 * b3 * c1 + b1 * b1 * c1 * c1 +
                    6 * a1 * b1 * c2 - 4 * b2 * c2 - 2 * b1 * c3) /
               2},
          {"F000", difference_correlator(t3, {0, 0, 0}), 2 * (b1 * c2 - b2 * c1)},
          {"F001", difference_correlator(t3, {0, 0, 1}), 2 * (a1 * b2 * c1 - b3 * c1 - a1 * b1 * c2 + b1 * c3)},
          {"F0000", difference_correlator(t4, {0, 0, 0, 0}),
           4 * (2 * a2 * b1 * c1 - a1 * b2 * c1 - b3 * c1 - a1 * b1 * c2 + 2 * b2 * c2 - b1 * c3)},
      };
      for (const auto& r : rows) {
        ++checked;
        if (r.engine != r.golden)
          out.fail("g=" + std::to_string(g) + " " + r.name + ": engine " + to_string(r.engine) + " vs " + to_string(r.golden));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " exact matches over 20 instances";
  return out;
}

// ---- 2: 3x3 closed forms

Outcome three_by_three_golden() {
  Outcome out;
  Rng rng(202);
  int instances = 0, printed_f10_fail = 0, corrected_f10_fail = 0;
  for (int t = 0; t < 10; ++t) {
    int m = 1 + t % 2;
    auto W = random_matrix_polynomial(rng, 3, m, {.traceless = true});
    auto b = [&](int l, int i, int j) -> Rational { return l <= m ? W.coefficient(l)(i, j) : Rational(0); };
    auto d = [&](int i, int j) -> Rational { return b(0, i, i) - b(0, j, j); };
    auto proj = compute_projectors(W, correlator_truncation(3, 1) + 2);
    auto t2 = correlator_table(proj, 2, 1);
    auto t3 = correlator_table(proj, 3, 0);
    ++instances;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        int k = 3 - i - j;
        Rational dij = d(i, j);
        Rational f00 = b(1, i, j) * b(1, j, i) / (dij * dij);
        if (t2.at({i, j}, {0, 0}) != f00) out.fail("F^{ij}_00 mismatch");

        Rational a = (b(2, i, j) * b(1, j, i) + b(2, j, i) * b(1, i, j)) / (dij * dij);
        Rational c = (b(1, i, i) - b(1, j, j)) * b(1, i, j) * b(1, j, i) / (dij * dij * dij);
        Rational printed = a - 2 * c;
        Rational third = (b(1, i, j) * b(1, j, k) * b(1, k, i) + b(1, i, k) * b(1, k, j) * b(1, j, i)) / (dij * dij * d(i, k));
        Rational engine = t2.at({i, j}, {1, 0});
        if (engine != printed) {
          ++printed_f10_fail;
          out.fail("F^{ij}_10 differs from the printed two-term formula (i=" + std::to_string(i + 1) +
                   ", j=" + std::to_string(j + 1) + ": engine " + to_string(engine) + ", formula " + to_string(printed) + ")");
        }
        if (engine != printed + third) ++corrected_f10_fail;

        Rational fiij = (b(1, i, j) * b(1, j, k) * b(1, k, i) - b(1, i, k) * b(1, k, j) * b(1, j, i)) / (dij * dij * d(k, i)) +
                        (b(2, i, j) * b(1, j, i) - b(2, j, i) * b(1, i, j)) / (dij * dij);
        if (t3.at({i, i, j}, {0, 0, 0}) != fiij) out.fail("F^{iij}_000 mismatch");
      }
    Rational f123 = (b(1, 0, 1) * b(1, 1, 2) * b(1, 2, 0) - b(1, 0, 2) * b(1, 2, 1) * b(1, 1, 0)) / (d(0, 1) * d(1, 2) * d(2, 0));
    if (t3.at({0, 1, 2}, {0, 0, 0}) != f123) out.fail("F^{123}_000 mismatch");
  }
  if (out.pass) out.detail = std::to_string(instances) + " traceless instances, all four formulas exact";
  out.info.push_back("F^{ij}_10 printed formula mismatches: " + std::to_string(printed_f10_fail) + " of 60");
  out.info.push_back("F^{ij}_10 with third-sheet term sum_k (b1_ij b1_jk b1_ki + b1_ik b1_kj b1_ji)/((b0_i-b0_j)^2 (b0_i-b0_k)): " +
                     std::to_string(corrected_f10_fail) + " mismatches of 60");
  return out;
}

// ---- 3 and 4 share an instance set

using Shape = std::pair<int, int>;
const std::vector<Shape> kShapes = {{2, 2}, {3, 1}, {3, 2}, {4, 1}};

std::vector<std::pair<Shape, MatrixPolynomial>> instance_set() {
  Rng rng(303);
  std::vector<std::pair<Shape, MatrixPolynomial>> out;
  for (const auto& s : kShapes)
    for (int t = 0; t < 10; ++t) out.push_back({s, random_matrix_polynomial(rng, s.first, s.second)});
  return out;
}

Outcome projector_identities() {
  Outcome out;
  const long K = 12;
  for (const auto& [shape, W] : instance_set()) {
    int n = shape.first;
    auto proj = compute_projectors(W, K);
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(shape.second) + ")";
    MatrixTailSeries sum = proj.pi(0);
    MatrixTailSeries recon = proj.sheets[0].w * proj.pi(0);
    for (int a = 0; a < n; ++a) {
      const auto& pa = proj.pi(a);
      if (pa.floor() > -K) out.fail(tag + " projector shorter than z^-12");
      if (!(pa * pa == pa)) out.fail(tag + " Pi_a^2 != Pi_a");
      auto tr = pa.trace();
      if (tr.at(0) != 1) out.fail(tag + " tr Pi_a leading term");
      for (long k = 1; k <= K; ++k)
        if (!is_zero(tr.at(-k))) out.fail(tag + " tr Pi_a != 1");
      for (int b = 0; b < n; ++b)
        if (b != a && !is_zero_series(pa * proj.pi(b))) out.fail(tag + " Pi_a Pi_b != 0");
      if (a > 0) {
        sum = sum + pa;
        recon = recon + proj.sheets[static_cast<std::size_t>(a)].w * pa;
      }
    }
    if (!(sum == identity_series(n, K))) out.fail(tag + " sum Pi_a != 1");
    auto expect = matrix_series_from_poly(W.as_poly_matrix(), recon.floor());
    if (!(recon == expect.truncated(recon.order()))) out.fail(tag + " sum w_a Pi_a != W");
  }
  if (out.pass) out.detail = "40 instances over 4 shapes through z^-12";
  return out;
}

Outcome summation_symmetry() {
  Outcome out;
  Rng rng(404);
  int kmax2 = 2, kmax3 = 1;
  for (const auto& [shape, W] : instance_set()) {
    int n = shape.first;
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(shape.second) + ")";
    auto proj = compute_projectors(W, correlator_truncation(3, kmax3) + 2);
    auto t2 = correlator_table(proj, 2, kmax2);
    auto t3 = correlator_table(proj, 3, kmax3);

    // single-slot sums
    for (const auto* t : {&t2, &t3}) {
      std::map<CorrelatorKey, Rational> sums;
      for (const auto& [key, v] : t->entries)
        for (std::size_t slot = 0; slot < key.a.size(); ++slot) {
          CorrelatorKey reduced = key;
          reduced.a[slot] = -1 - static_cast<int>(slot);
          sums[reduced] += v;
        }
      for (const auto& [key, v] : sums)
        if (v != 0) out.fail(tag + " slot sum nonzero at N=" + std::to_string(t->N));
    }

    // permutation symmetry against direct evaluation of unsorted tuples
    CorrelatorOptions direct;
    direct.stability_check = false;
    IndexTuple a2 = {n - 1, 0};
    auto d2 = correlator_n(proj, a2, kmax2, direct);
    for (const auto& [key, v] : d2.entries)
      if (t2.at({key.a[1], key.a[0]}, {key.k[1], key.k[0]}) != v) out.fail(tag + " N=2 not symmetric");
    IndexTuple a3 = {n - 1, 0, 1 % n};
    auto d3 = correlator_n(proj, a3, kmax3, direct);
    for (const auto& [key, v] : d3.entries) {
      if (t3.at({key.a[2], key.a[0], key.a[1]}, {key.k[2], key.k[0], key.k[1]}) != v) out.fail(tag + " N=3 not symmetric");
      if (t3.at({key.a[0], key.a[2], key.a[1]}, {key.k[0], key.k[2], key.k[1]}) != v) out.fail(tag + " N=3 not symmetric");
    }

    // diagonal conjugation
    std::vector<Rational> dg;
    for (int i = 0; i < n; ++i) {
      Rational x = 0;
      while (x == 0) x = random_rational(rng);
      dg.push_back(x);
    }
    auto Wc = W.conjugated_by_diagonal(dg);
    auto pc = compute_projectors(Wc, correlator_truncation(3, kmax3) + 2);
    if (correlator_table(pc, 2, kmax2).entries != t2.entries) out.fail(tag + " N=2 not conjugation invariant");
    if (correlator_table(pc, 3, kmax3).entries != t3.entries) out.fail(tag + " N=3 not conjugation invariant");
  }
  if (out.pass) out.detail = "40 instances: slot sums, permutations, diagonal conjugation exact";
  return out;
}

// ---- 5: divisor

Outcome divisor_checks() {
  Outcome out;
  Rng rng(505);
  int points = 0;
  for (const auto& [shape, W] : instance_set()) {
    int n = shape.first;
    int g = characteristic_data(W).genus;
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(shape.second) + ")";
    if (d_polynomial(W).degree() != g + n - 1) out.fail(tag + " deg D != g+n-1");
    auto rep = pole_divisor_report(W);
    if (static_cast<int>(rep.points.size()) != g + n - 1 || !rep.rejected.empty()) out.fail(tag + " point count");
    for (const auto& p : rep.points) {
      ++points;
      if (!(p.residual_R < 1e-9)) out.fail(tag + " |R| too large");
      if (!(p.residual_eig < 1e-8)) out.fail(tag + " eigenvector residual too large");
    }
  }
  auto worked = pole_divisor(g1_instance());
  auto near = [&](std::complex<double> z, std::complex<double> w) {
    for (const auto& p : worked)
      if (std::abs(p.z - z) < 1e-9 && std::abs(p.w - w) < 1e-9) return true;
    return false;
  };
  if (worked.size() != 2 || !near({0.5, 0}, {-1.25, 0}) || !near({-1, 0}, {1, 0})) out.fail("worked instance points differ");
  if (out.pass) out.detail = std::to_string(points) + " points over 40 instances; worked instance {(1/2,-5/4),(-1,1)}";
  return out;
}

// ---- 6: jets

Outcome jet_bridge() {
  Outcome out;
  Rng rng(606);
  const TauLevel lv[] = {TauLevel::l00, TauLevel::l01, TauLevel::l02};
  for (int t = 0; t < 10; ++t) {
    auto W = random_matrix_polynomial(rng, 3, 1 + t % 2);
    auto j = jet_from_projectors(W);
    if (!validate_jet(j).ok()) out.fail("extracted jet violates the first-order constraints");
    auto table = correlator_table(W, 2, 2);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int l = 0; l < 3; ++l)
          if (tau_second_derivative(j, a, b, lv[l]) != table.at({a, b}, {0, l}))
            out.fail("tau second derivative differs from F^{ab}_{0" + std::to_string(l) + "}");
  }
  if (out.pass) out.detail = "10 instances, F^{ab}_{00,01,02} and constraints exact";
  return out;
}

// ---- 7: theta

Outcome theta_checks() {
  Outcome out;
  std::ostringstream os;
  for (const auto& [name, W] : {std::pair{"g1", g1_instance()}, std::pair{"g2", g2_instance()}}) {
    ThetaReport rep;
    try {
      rep = verify_main_theorem(W, {});
    } catch (const std::exception& e) {
      out.fail(std::string(name) + ": " + e.what());
      continue;
    }
    double worst = 0, worst_im = 0;
    for (const auto& id : rep.identities) {
      worst = std::max(worst, id.abs_err / std::max(1.0, std::abs(id.f.get_d())));
      worst_im = std::max(worst_im, std::abs(id.t.imag()));
      if (!id.pass) out.fail(std::string(name) + " identity failed");
    }
    if (!(worst < 1e-6) || !(worst_im < 1e-6)) out.fail(std::string(name) + " identity tolerance");
    if (!(rep.symmetry_error < 1e-8)) out.fail(std::string(name) + " B not symmetric");
    if (!(rep.quasi_periodicity_error < 1e-10)) out.fail(std::string(name) + " quasi-periodicity");
    if (!(rep.v_convention_error < 1e-8)) out.fail(std::string(name) + " V convention");
    if (!rep.pass) out.fail(std::string(name) + " report not passing");
    os << name << ": " << rep.identities.size() << " identities, worst " << worst << ", shift #" << rep.shift_used << "; ";
  }
  if (out.pass) out.detail = os.str();
  return out;
}

// ---- 8: determinism

std::string run_cli(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() / "spectau_acceptance.json";
  std::string cmd = std::string(SPECTAU_CLI) + " " + args + " --output " + tmp.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(tmp);
  return std::to_string(WEXITSTATUS(rc)) + "\n" + ss.str();
}

Outcome determinism() {
  Outcome out;
  std::string dir = PAPER_EXAMPLES;
  std::vector<std::string> runs = {
      "curve-info --input " + dir + "/three_by_three.json",
      "correlators --max-n 3 --kmax 2 --input " + dir + "/hyperelliptic_g2.json",
      "correlators --seed 9 --shape 4,1 --kmax 1",
      "divisor --input " + dir + "/three_by_three.json",
      "jet --seed 3 --shape 3,2",
      "verify-theta --input " + dir + "/hyperelliptic_g2.json",
  };
  for (const auto& r : runs) {
    std::string first = run_cli(r);
    if (first.size() < 4) out.fail("no report for: " + r);
    if (run_cli(r) != first) out.fail("reports differ for: " + r);
  }
  if (out.pass) out.detail = std::to_string(runs.size()) + " commands byte-identical across two runs";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"hyperelliptic golden values", hyperelliptic_golden},
      {"3x3 golden formulas", three_by_three_golden},
      {"projector identities", projector_identities},
      {"summation and symmetry", summation_symmetry},
      {"pole divisor", divisor_checks},
      {"jet bridge", jet_bridge},
      {"theta verification", theta_checks},
      {"determinism", determinism},
  };
  const double budget[] = {10, 30, 60, 60, 5, 30, 300, 120};

  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--criterion") only = std::atoi(argv[i + 1]);
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be 1.." << criteria.size() << "\n";
    return 2;
  }

  bool all = true;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (only && static_cast<int>(c) + 1 != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget[c]) o.fail("over time budget of " + std::to_string(static_cast<int>(budget[c])) + " s");
    all = all && o.pass;
    std::printf("criterion %zu (%s): %s (%.2f s) %s\n", c + 1, criteria[c].first, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    for (const auto& line : o.info) std::printf("  info: %s\n", line.c_str());
  }
  return all ? 0 : 1;
}
