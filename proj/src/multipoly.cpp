#include "spectau/multipoly.hpp"

#include <numeric>
#include <string>

namespace spectau {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::difference(int nvars, int i, int j) {
  MultiPoly p(nvars);
  Exponent ei(static_cast<std::size_t>(nvars), 0), ej(static_cast<std::size_t>(nvars), 0);
  ei[static_cast<std::size_t>(i)] = 1;
  ej[static_cast<std::size_t>(j)] = 1;
  p.add_term(ei, 1);
  p.add_term(ej, -1);
  return p;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, total_degree(e));
  return d;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (spectau::is_zero(c)) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (spectau::is_zero(it->second)) t_.erase(it);
  }
}

MultiPoly MultiPoly::truncated(int max_total_degree) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : t_)
    if (total_degree(e) <= max_total_degree) r.t_.emplace(e, c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::multiply(const MultiPoly& a, const MultiPoly& b, int cap) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.t_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.t_) {
      if (cap >= 0 && da + total_degree(eb) > cap) continue;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

namespace {

// Ascending total degree, then descending lex inside a degree.
struct DivisionOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
  }
};

std::string show(const Exponent& e) {
  std::string s = "u^(";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
  return s + ")";
}

}  // namespace

MultiPoly multipoly_exact_divide(const MultiPoly& numerator, const MultiPoly& divisor, int trusted_total_degree) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (numerator.nvars() != divisor.nvars()) throw std::invalid_argument("variable count mismatch");
  int low = -1;
  for (const auto& [e, c] : divisor.terms()) {
    int d = total_degree(e);
    if (low < 0 || d < low) low = d;
  }
  Exponent lt;
  for (const auto& [e, c] : divisor.terms())
    if (total_degree(e) == low && (lt.empty() || lt < e)) lt = e;
  const Rational lc = divisor.coeff(lt);

  std::map<Exponent, Rational, DivisionOrder> rem;
  for (const auto& [e, c] : numerator.terms())
    if (total_degree(e) <= trusted_total_degree) rem.emplace(e, c);

  MultiPoly q(numerator.nvars());
  Exponent qe(lt.size()), pe(lt.size());
  while (!rem.empty()) {
    auto it = rem.begin();
    const Exponent e = it->first;
    const Rational c = it->second;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < lt[k])
        throw DivisionError("division not exact within trusted range: remainder term " + show(e) + " of degree " +
                            std::to_string(total_degree(e)));
      qe[k] = e[k] - lt[k];
    }
    Rational qc = c / lc;
    q.add_term(qe, qc);
    for (const auto& [de, dc] : divisor.terms()) {
      for (std::size_t k = 0; k < pe.size(); ++k) pe[k] = qe[k] + de[k];
      if (total_degree(pe) > trusted_total_degree) continue;
      auto [jt, inserted] = rem.emplace(pe, -qc * dc);
      if (!inserted) {
        jt->second -= qc * dc;
        if (is_zero(jt->second)) rem.erase(jt);
      }
    }
  }
  return q;
}

}  // namespace spectau
