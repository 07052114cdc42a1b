#include "wzt/magnus.hpp"

#include <stdexcept>

namespace wzt {

MagnusSeries::MagnusSeries(int rank, int truncation_degree)
    : rank_(rank), degree_(truncation_degree) {
  if (rank < 0) throw std::invalid_argument("negative series rank");
  if (truncation_degree < 1) throw std::invalid_argument("truncation degree must be >= 1");
}

MagnusSeries MagnusSeries::one(int rank, int truncation_degree) {
  MagnusSeries s(rank, truncation_degree);
  s.add_term({}, 1);
  return s;
}

MagnusInt MagnusSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? MagnusInt(0) : it->second;
}

void MagnusSeries::add_term(const Monomial& m, const MagnusInt& c) {
  if (static_cast<int>(m.size()) > degree_) return;
  MagnusInt& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

bool MagnusSeries::lowest_term(Monomial& monomial_out, MagnusInt& coeff_out) const {
  for (const auto& [mon, coeff] : terms_) {
    if (mon.empty()) continue;  // constant term
    monomial_out = mon;
    coeff_out = coeff;
    return true;
  }
  return false;
}

std::string MagnusSeries::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mon, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += coeff.str();
    for (int idx : mon) out += "*X" + std::to_string(idx);
  }
  return out;
}

MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("series rank mismatch");
  int degree = std::min(a.truncation_degree(), b.truncation_degree());
  MagnusSeries out(a.rank(), degree);
  for (const auto& [ma, ca] : a.terms()) {
    if (static_cast<int>(ma.size()) > degree) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (static_cast<int>(ma.size() + mb.size()) > degree) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MagnusSeries truncate(const MagnusSeries& a, int degree) {
  MagnusSeries out(a.rank(), degree);
  for (const auto& [mon, coeff] : a.terms())
    out.add_term(mon, coeff);
  return out;
}

namespace {

MagnusSeries letter_series(int rank, const FreeLetter& l, int degree) {
  MagnusSeries s(rank, degree);
  if (l.sign > 0) {
    s.add_term({}, 1);
    s.add_term({l.index}, 1);
  } else {
    // 1 - X + X^2 - ... truncated.
    Monomial m;
    int sign = 1;
    for (int d = 0; d <= degree; ++d) {
      s.add_term(m, sign);
      m.push_back(l.index);
      sign = -sign;
    }
  }
  return s;
}

}  // namespace

MagnusSeries magnus_expand(const FreeWord& w, int degree) {
  MagnusSeries acc = MagnusSeries::one(w.rank(), degree);
  for (const FreeLetter& l : w.letters())
    acc = multiply(acc, letter_series(w.rank(), l, degree));
  return acc;
}

Sign magnus_sign(const FreeWord& w) {
  FreeWord r = free_reduce(w);
  if (r.empty()) return Sign::zero;
  const int length = r.length();
  const int cap = std::max(16, 4 * length);
  for (int degree = 1;; degree = std::min(2 * degree, cap)) {
    MagnusSeries s = magnus_expand(r, degree);
    Monomial mon;
    MagnusInt coeff;
    if (s.lowest_term(mon, coeff))
      return coeff > 0 ? Sign::positive : Sign::negative;
    if (degree == cap)
      throw std::runtime_error(
          "magnus_sign: no nonzero term below the truncation cap (internal error)");
  }
}

Ordering magnus_compare(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("magnus_compare: rank mismatch");
  return ordering_from_difference_sign(magnus_sign(concat(invert(a), b)));
}

}  // namespace wzt
