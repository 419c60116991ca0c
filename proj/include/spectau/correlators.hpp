#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spectau/multipoly.hpp"
#include "spectau/parallel.hpp"
#include "spectau/projectors.hpp"

namespace spectau {

using IndexTuple = std::vector<int>;

struct CorrelatorKey {
  IndexTuple a;
  IndexTuple k;
  friend bool operator<(const CorrelatorKey& x, const CorrelatorKey& y) {
    return std::tie(x.a, x.k) < std::tie(y.a, y.k);
  }
  friend bool operator==(const CorrelatorKey& x, const CorrelatorKey& y) { return x.a == y.a && x.k == y.k; }
};

struct CorrelatorTable {
  int N = 0;
  int trusted_order = 0;
  std::map<CorrelatorKey, Rational> entries;

  // Throws std::out_of_range when the entry was not computed.
  const Rational& at(const IndexTuple& a, const IndexTuple& k) const;
  void merge(const CorrelatorTable& other);
};

struct CorrelatorOptions {
  Execution execution = Execution::parallel;
  // Recompute with two extra orders and require identical values.
  bool stability_check = true;
};

// Internal truncation in total u-degree needed for all k_i <= kmax.
long correlator_truncation(int N, int kmax);

// Numerator of the N-point generating function over the common denominator
// prod_{i<j}(u_i - u_j) (N >= 3), or (u_1 - u_2)^2 (N = 2), truncated at total degree T.
MultiPoly correlator_numerator(const ProjectorSet& proj, const IndexTuple& a, long T, Execution execution);

CorrelatorTable correlator_pair(const MatrixPolynomial& W, int a1, int a2, int kmax,
                                const CorrelatorOptions& options = {});
CorrelatorTable correlator_n(const MatrixPolynomial& W, const IndexTuple& a, int kmax,
                             const CorrelatorOptions& options = {});
// Reuses precomputed projectors; their order must cover the truncation.
CorrelatorTable correlator_n(const ProjectorSet& proj, const IndexTuple& a, int kmax,
                             const CorrelatorOptions& options = {});

// Every sheet tuple of length N; nondecreasing tuples are computed and the
// rest filled in by simultaneous permutation.
CorrelatorTable correlator_table(const ProjectorSet& proj, int N, int kmax, const CorrelatorOptions& options = {});
CorrelatorTable correlator_table(const MatrixPolynomial& W, int N, int kmax, const CorrelatorOptions& options = {});

// Monomial in the labels t^a_k, stored as a sorted list of (a, k).
using Label = std::pair<int, int>;
using FreeEnergy = std::map<std::vector<Label>, Rational>;

FreeEnergy free_energy(const MatrixPolynomial& W, int max_n, int kmax, const CorrelatorOptions& options = {});

}  // namespace spectau
