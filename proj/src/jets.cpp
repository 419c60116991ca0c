#include "spectau/jets.hpp"

#include <sstream>

#include "spectau/projectors.hpp"

namespace spectau {

namespace {

std::string idx(std::initializer_list<int> v) {
  std::string s;
  for (int x : v) s += std::to_string(x + 1);
  return s;
}

Rational s_sum(const JetPoint& jet, int a) {
  Rational s = 0;
  for (int t = 0; t < jet.n; ++t)
    if (t != a) s += jet.y(a, t) * jet.y(t, a);
  return s;
}

void need(const JetPoint& jet, int depth) {
  if (jet.depth < depth) throw JetError("insufficient jet depth");
}

void check_sheet(const JetPoint& jet, int a) {
  if (a < 0 || a >= jet.n) throw std::out_of_range("sheet index out of range");
}

// Second derivative of y_ij along x^c, x^k with k outside {i, j}:
// d_c (y_ik y_kj).
Rational through_outside(const JetPoint& jet, int i, int j, int c, int k) {
  return jet.dy[static_cast<std::size_t>(c)](i, k) * jet.y(k, j) + jet.y(i, k) * jet.dy[static_cast<std::size_t>(c)](k, j);
}

}  // namespace

JetPoint JetPoint::zero(int n, int depth) {
  JetPoint j;
  j.n = n;
  j.depth = depth;
  j.y = RatMatrix(n, Rational(0));
  j.dy.assign(static_cast<std::size_t>(n), RatMatrix(n, Rational(0)));
  j.d2y.assign(static_cast<std::size_t>(n), std::vector<RatMatrix>(static_cast<std::size_t>(n), RatMatrix(n, Rational(0))));
  return j;
}

bool JetReport::ok() const {
  for (const auto& r : residues)
    if (!is_zero(r.value)) return false;
  return true;
}

JetReport validate_jet(const JetPoint& jet) {
  JetReport rep;
  int n = jet.n;
  auto dy = [&](int b, int i, int j) { return jet.dy[static_cast<std::size_t>(b)](i, j); };
  auto d2 = [&](int b, int c, int i, int j) { return jet.d2y[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)](i, j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (jet.depth >= 1) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += dy(k, i, j);
        rep.residues.push_back({"sum_k d_k y_" + idx({i, j}), s});
        for (int k = 0; k < n; ++k)
          if (k != i && k != j)
            rep.residues.push_back({"d_" + idx({k}) + " y_" + idx({i, j}) + " - y_" + idx({i, k}) + " y_" + idx({k, j}),
                                    dy(k, i, j) - jet.y(i, k) * jet.y(k, j)});
      }
      if (jet.depth >= 2) {
        for (int b = 0; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            rep.residues.push_back({"symmetry d_" + idx({b}) + " d_" + idx({c}) + " y_" + idx({i, j}), d2(b, c, i, j) - d2(c, b, i, j)});
        for (int c = 0; c < n; ++c) {
          Rational s = 0;
          for (int k = 0; k < n; ++k) s += d2(c, k, i, j);
          rep.residues.push_back({"d_" + idx({c}) + " sum_k d_k y_" + idx({i, j}), s});
          for (int k = 0; k < n; ++k)
            if (k != i && k != j)
              rep.residues.push_back({"d_" + idx({c}) + " (d_" + idx({k}) + " y_" + idx({i, j}) + " - y_" + idx({i, k}) +
                                          " y_" + idx({k, j}) + ")",
                                      d2(c, k, i, j) - through_outside(jet, i, j, c, k)});
        }
      }
    }
  return rep;
}

ResolventCoeffs resolvent_coefficients(const JetPoint& jet, int a) {
  check_sheet(jet, a);
  need(jet, 2);
  int n = jet.n;
  const RatMatrix& y = jet.y;
  const RatMatrix& da = jet.dy[static_cast<std::size_t>(a)];
  const RatMatrix& daa = jet.d2y[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
  Rational sa = s_sum(jet, a);
  ResolventCoeffs r{RatMatrix(n, Rational(0)), RatMatrix(n, Rational(0)), RatMatrix(n, Rational(0))};

  for (int j = 0; j < n; ++j)
    if (j != a) {
      r.b1(a, j) = -y(a, j);
      r.b1(j, a) = y(j, a);
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j)
        r.b2(i, j) = -da(i, j);
      else if (i != a)
        r.b2(i, i) = -y(i, a) * y(a, i);
      else
        r.b2(a, a) = sa;
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = 0;
      if (i == a && j == a) {
        for (int s = 0; s < n; ++s)
          if (s != a) v += y(s, a) * da(a, s) - da(s, a) * y(a, s);
      } else if (i == a) {
        v = -daa(a, j) - 2 * y(a, j) * sa;
      } else if (j == a) {
        v = daa(i, a) + 2 * y(i, a) * sa;
      } else if (i == j) {
        v = da(i, a) * y(a, i) - y(i, a) * da(a, i);
      } else {
        // i != j, both away from a: the x^i flow applied to B_{a,2}.
        v = -jet.d2y[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)](i, j) - r.b2(i, i) * y(i, j);
        for (int s = 0; s < n; ++s)
          if (s != i) v += y(i, s) * r.b2(s, j);
      }
      r.b3(i, j) = v;
    }
  return r;
}

JetPoint jet_from_projectors(const MatrixPolynomial& W) {
  int n = W.n();
  ProjectorSet proj = compute_projectors(W, 3);
  auto B = [&](int a, int k) -> const RatMatrix& { return proj.pi(a).coeffs()[static_cast<std::size_t>(k)]; };
  auto fail = [](const std::string& what) {
    throw JetError("projector data inconsistent with n-wave jet: " + what);
  };

  JetPoint jet = JetPoint::zero(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational from_i = -B(i, 1)(i, j), from_j = B(j, 1)(i, j);
      if (from_i != from_j) fail("y_" + idx({i, j}) + " differs between sheets");
      jet.y(i, j) = from_i;
      for (int a = 0; a < n; ++a) jet.dy[static_cast<std::size_t>(a)](i, j) = -B(a, 2)(i, j);
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto& d2 = jet.d2y;
      d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)](i, j) = -B(i, 3)(i, j) - 2 * jet.y(i, j) * s_sum(jet, i);
      d2[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)](i, j) = B(j, 3)(i, j) - 2 * jet.y(i, j) * s_sum(jet, j);
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < n; ++k) {
          if (k != i && k != j)
            d2[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)](i, j) = through_outside(jet, i, j, c, k);
          else if (c != i && c != j)
            d2[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)](i, j) = through_outside(jet, i, j, k, c);
        }
      Rational via_i = -d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)](i, j);
      Rational via_j = -d2[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)](i, j);
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) {
          via_i -= d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)](i, j);
          via_j -= d2[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)](i, j);
        }
      if (via_i != via_j) fail("d_" + idx({i}) + " d_" + idx({j}) + " y_" + idx({i, j}) + " differs between routes");
      d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](i, j) = via_i;
      d2[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)](i, j) = via_i;
    }

  JetReport rep = validate_jet(jet);
  for (const auto& r : rep.residues)
    if (!is_zero(r.value)) fail("constraint " + r.constraint + " = " + to_string(r.value));

  for (int a = 0; a < n; ++a) {
    ResolventCoeffs rc = resolvent_coefficients(jet, a);
    const RatMatrix* got[3] = {&rc.b1, &rc.b2, &rc.b3};
    for (int k = 1; k <= 3; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((*got[k - 1])(i, j) != B(a, k)(i, j)) {
            std::ostringstream os;
            os << "(B_" << a + 1 << "," << k << ")_" << idx({i, j}) << " closed form " << to_string((*got[k - 1])(i, j))
               << " vs projector " << to_string(B(a, k)(i, j));
            fail(os.str());
          }
  }
  return jet;
}

Rational tau_second_derivative(const JetPoint& jet, int a, int b, TauLevel level) {
  check_sheet(jet, a);
  check_sheet(jet, b);
  int n = jet.n;
  const RatMatrix& y = jet.y;
  switch (level) {
    case TauLevel::l00:
      return a != b ? Rational(-y(a, b) * y(b, a)) : s_sum(jet, a);
    case TauLevel::l01: {
      need(jet, 1);
      if (a != b) {
        const RatMatrix& db = jet.dy[static_cast<std::size_t>(b)];
        return db(a, b) * y(b, a) - y(a, b) * db(b, a);
      }
      Rational v = 0;
      for (int s = 0; s < n; ++s)
        if (s != a) {
          const RatMatrix& ds = jet.dy[static_cast<std::size_t>(s)];
          v += y(a, s) * ds(s, a) - ds(a, s) * y(s, a);
        }
      return v;
    }
    case TauLevel::l02: {
      need(jet, 2);
      if (a == b) {
        Rational v = 0;
        for (int s = 0; s < n; ++s)
          if (s != a) v -= tau_second_derivative(jet, s, a, TauLevel::l02);
        return v;
      }
      const RatMatrix& db = jet.dy[static_cast<std::size_t>(b)];
      const RatMatrix& dbb = jet.d2y[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)];
      return -y(a, b) * dbb(b, a) - y(b, a) * dbb(a, b) + db(a, b) * db(b, a) - 3 * y(a, b) * y(b, a) * s_sum(jet, b);
    }
  }
  throw std::logic_error("unknown level");
}

}  // namespace spectau
