#include "spectau/correlators.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>

#include "spectau/parallel.hpp"

namespace spectau {

const Rational& CorrelatorTable::at(const IndexTuple& a, const IndexTuple& k) const {
  auto it = entries.find(CorrelatorKey{a, k});
  if (it == entries.end()) throw std::out_of_range("correlator entry not in table");
  return it->second;
}

void CorrelatorTable::merge(const CorrelatorTable& other) {
  if (N != other.N) throw std::invalid_argument("cannot merge tables of different N");
  trusted_order = std::min(trusted_order, other.trusted_order);
  for (const auto& [key, v] : other.entries) entries[key] = v;
}

long correlator_truncation(int N, int kmax) {
  long d = N == 2 ? 2 : static_cast<long>(N) * (N - 1) / 2;
  return static_cast<long>(N) * kmax + d;
}

namespace {

// tr[Pi_{a[c_0]}(u_{c_0}) ... Pi_{a[c_{N-1}]}(u_{c_{N-1}})] up to total degree T.
MultiPoly trace_polynomial(const ProjectorSet& proj, const IndexTuple& a, const std::vector<int>& cycle, long T) {
  int N = static_cast<int>(a.size());
  int n = proj.n;
  MultiPoly out(N);
  Exponent e(static_cast<std::size_t>(N), 0);
  std::vector<RatMatrix> prefix(static_cast<std::size_t>(N) + 1);
  prefix[0] = rat_identity(n);

  auto rec = [&](auto&& self, int pos, long budget) -> void {
    if (pos == N) {
      Rational tr = prefix[static_cast<std::size_t>(N)].trace();
      if (!is_zero(tr)) out.add_term(e, tr);
      return;
    }
    int var = cycle[static_cast<std::size_t>(pos)];
    const auto& coeffs = proj.pi(a[static_cast<std::size_t>(var)]).coeffs();
    for (long k = 0; k <= budget; ++k) {
      const RatMatrix& c = coeffs[static_cast<std::size_t>(k)];
      bool zero = std::all_of(c.data().begin(), c.data().end(), [](const Rational& x) { return is_zero(x); });
      if (zero) continue;
      prefix[static_cast<std::size_t>(pos) + 1] = prefix[static_cast<std::size_t>(pos)] * c;
      e[static_cast<std::size_t>(var)] = static_cast<int>(k);
      self(self, pos + 1, budget - k);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, T);
  return out;
}

// Contribution of one cyclic order: the trace times the sign and the
// (u_p - u_q) factors that are not edges of the cycle.
MultiPoly cycle_term(const ProjectorSet& proj, const IndexTuple& a, const std::vector<int>& cycle, long T) {
  int N = static_cast<int>(a.size());
  std::vector<std::vector<bool>> edge(static_cast<std::size_t>(N), std::vector<bool>(static_cast<std::size_t>(N), false));
  int sign = 1;
  for (int i = 0; i < N; ++i) {
    int s = cycle[static_cast<std::size_t>(i)], t = cycle[static_cast<std::size_t>((i + 1) % N)];
    // 1/(z_s - z_t) = u_s u_t / (u_t - u_s)
    int p = std::min(s, t), q = std::max(s, t);
    edge[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = true;
    if (t != p) sign = -sign;
  }
  MultiPoly factor = MultiPoly::constant(N, Rational(-sign));
  for (int p = 0; p < N; ++p)
    for (int q = p + 1; q < N; ++q)
      if (!edge[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)])
        factor = MultiPoly::multiply(factor, MultiPoly::difference(N, p, q), static_cast<int>(T));
  return MultiPoly::multiply(trace_polynomial(proj, a, cycle, T), factor, static_cast<int>(T));
}

MultiPoly vandermonde(int N) {
  MultiPoly v = MultiPoly::constant(N, 1);
  for (int p = 0; p < N; ++p)
    for (int q = p + 1; q < N; ++q) v = v * MultiPoly::difference(N, p, q);
  return v;
}

void check_sheets(const ProjectorSet& proj, const IndexTuple& a) {
  for (int s : a)
    if (s < 0 || s >= proj.n) throw std::out_of_range("sheet index out of range");
}

CorrelatorTable evaluate(const ProjectorSet& proj, const IndexTuple& a, int kmax, long T, Execution execution) {
  int N = static_cast<int>(a.size());
  MultiPoly num = correlator_numerator(proj, a, T, execution);
  MultiPoly den = N == 2 ? MultiPoly::difference(2, 0, 1) * MultiPoly::difference(2, 0, 1) : vandermonde(N);
  MultiPoly q = multipoly_exact_divide(num, den, static_cast<int>(T));

  CorrelatorTable table;
  table.N = N;
  table.trusted_order = kmax;
  IndexTuple k(static_cast<std::size_t>(N), 0);
  while (true) {
    table.entries[CorrelatorKey{a, k}] = q.coeff(k);
    int pos = N - 1;
    while (pos >= 0 && k[static_cast<std::size_t>(pos)] == kmax) k[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++k[static_cast<std::size_t>(pos)];
  }
  return table;
}

}  // namespace

MultiPoly correlator_numerator(const ProjectorSet& proj, const IndexTuple& a, long T, Execution execution) {
  int N = static_cast<int>(a.size());
  if (N < 2) throw std::invalid_argument("correlators need N >= 2");
  check_sheets(proj, a);
  if (proj.order < T)
    throw TruncationError("projectors known through u^" + std::to_string(proj.order) + ", need u^" + std::to_string(T));

  if (N == 2) {
    MultiPoly num = trace_polynomial(proj, a, {0, 1}, T);
    if (a[0] == a[1]) num.add_term({0, 0}, -1);
    return num;
  }

  std::vector<std::vector<int>> cycles;
  std::vector<int> rest(static_cast<std::size_t>(N) - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<int> c{0};
    c.insert(c.end(), rest.begin(), rest.end());
    cycles.push_back(std::move(c));
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::vector<MultiPoly> terms(cycles.size(), MultiPoly(N));
  long count = static_cast<long>(cycles.size());
  if (execution == Execution::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
    for (long i = 0; i < count; ++i) {
      try {
        terms[static_cast<std::size_t>(i)] = cycle_term(proj, a, cycles[static_cast<std::size_t>(i)], T);
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (long i = 0; i < count; ++i) terms[static_cast<std::size_t>(i)] = cycle_term(proj, a, cycles[static_cast<std::size_t>(i)], T);
  }
  // Fixed summation order keeps the result independent of scheduling.
  MultiPoly total(N);
  for (const auto& t : terms) total += t;
  return total;
}

CorrelatorTable correlator_n(const ProjectorSet& proj, const IndexTuple& a, int kmax, const CorrelatorOptions& options) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  int N = static_cast<int>(a.size());
  long T = correlator_truncation(N, kmax);
  CorrelatorTable table = evaluate(proj, a, kmax, T, options.execution);
  if (options.stability_check) {
    CorrelatorTable again = evaluate(proj, a, kmax, T + 2, options.execution);
    for (const auto& [key, v] : table.entries)
      if (again.entries.at(key) != v)
        throw std::logic_error("correlator coefficient changed when the truncation was raised");
  }
  return table;
}

CorrelatorTable correlator_n(const MatrixPolynomial& W, const IndexTuple& a, int kmax, const CorrelatorOptions& options) {
  long T = correlator_truncation(static_cast<int>(a.size()), kmax) + (options.stability_check ? 2 : 0);
  return correlator_n(compute_projectors(W, T), a, kmax, options);
}

CorrelatorTable correlator_pair(const MatrixPolynomial& W, int a1, int a2, int kmax, const CorrelatorOptions& options) {
  return correlator_n(W, IndexTuple{a1, a2}, kmax, options);
}

CorrelatorTable correlator_table(const ProjectorSet& proj, int N, int kmax, const CorrelatorOptions& options) {
  CorrelatorTable out;
  out.N = N;
  out.trusted_order = kmax;
  IndexTuple a(static_cast<std::size_t>(N), 0);
  while (true) {
    CorrelatorTable part = correlator_n(proj, a, kmax, options);
    for (const auto& [key, v] : part.entries) {
      std::vector<int> perm(static_cast<std::size_t>(N));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CorrelatorKey permuted{IndexTuple(static_cast<std::size_t>(N)), IndexTuple(static_cast<std::size_t>(N))};
        for (int i = 0; i < N; ++i) {
          permuted.a[static_cast<std::size_t>(i)] = key.a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
          permuted.k[static_cast<std::size_t>(i)] = key.k[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        }
        out.entries.emplace(std::move(permuted), v);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // next nondecreasing tuple
    int pos = N - 1;
    while (pos >= 0 && a[static_cast<std::size_t>(pos)] == proj.n - 1) --pos;
    if (pos < 0) break;
    int v = a[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < N; ++i) a[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

CorrelatorTable correlator_table(const MatrixPolynomial& W, int N, int kmax, const CorrelatorOptions& options) {
  long T = correlator_truncation(N, kmax) + (options.stability_check ? 2 : 0);
  return correlator_table(compute_projectors(W, T), N, kmax, options);
}

FreeEnergy free_energy(const MatrixPolynomial& W, int max_n, int kmax, const CorrelatorOptions& options) {
  if (max_n < 2) throw std::invalid_argument("free energy needs maxN >= 2");
  long T = correlator_truncation(max_n, kmax) + (options.stability_check ? 2 : 0);
  ProjectorSet proj = compute_projectors(W, T);
  FreeEnergy out;
  for (int N = 2; N <= max_n; ++N) {
    CorrelatorTable table = correlator_table(proj, N, kmax, options);
    for (const auto& [key, v] : table.entries) {
      if (is_zero(v)) continue;
      std::vector<Label> labels;
      for (int i = 0; i < N; ++i) labels.emplace_back(key.a[static_cast<std::size_t>(i)], key.k[static_cast<std::size_t>(i)]);
      if (!std::is_sorted(labels.begin(), labels.end())) continue;
      // 1/N! times the N!/prod(mult!) orderings of this monomial
      Rational c = v;
      std::size_t run = 1;
      for (std::size_t i = 1; i <= labels.size(); ++i) {
        if (i < labels.size() && labels[i] == labels[i - 1]) {
          ++run;
          continue;
        }
        for (std::size_t f = 2; f <= run; ++f) c /= static_cast<long>(f);
        run = 1;
      }
      out[labels] = c;
    }
  }
  return out;
}

}  // namespace spectau
