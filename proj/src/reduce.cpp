#include "ocb/reduce.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>

#include "ocb/errors.hpp"
#include "ocb/qseries.hpp"

namespace ocb {

Decomposition express(const LaurentSeries& target, const OrderCompleteBasis& basis, const LaurentSeries& ts,
                      int window) {
  if (basis.entries.empty()) throw GapError("empty basis");
  const int n = ts.pole_order();
  if (n <= 0) throw EvaluationError("t must have a pole at the cusp");
  const Rational lt = ts.leading();
  auto check = [&](const LaurentSeries& s, const char* what) {
    if (s.trunc() < window)
      throw PrecisionError(std::string(what) + " known only to O(q^" + std::to_string(s.trunc()) + "), need O(q^" +
                           std::to_string(window) + ")");
  };
  check(target, "target");
  for (const auto& e : basis.entries) check(e.series, "basis series");

  std::vector<LaurentSeries> tpow{LaurentSeries::constant(1, ts.trunc())};
  std::map<size_t, std::vector<Rational>> coeff;
  LaurentSeries work = target;
  while (!work.is_zero() && work.valuation() <= 0) {
    const int p = work.pole_order();
    int idx = -1, k = 0;
    for (; p - k * n >= 0; ++k) {
      idx = basis.find(p - k * n);
      if (idx >= 0) break;
    }
    if (idx < 0) throw GapError("pole order " + std::to_string(p) + " is not reachable with the basis");
    while (static_cast<int>(tpow.size()) <= k) tpow.push_back(tpow.back() * ts);
    Rational lead = 1;
    for (int i = 0; i < k; ++i) lead *= lt;
    const Rational c = work.leading() / lead;
    const auto& b = basis.entries[static_cast<size_t>(idx)];
    work -= (tpow[static_cast<size_t>(k)] * b.series) * c;
    auto& v = coeff[static_cast<size_t>(idx)];
    if (static_cast<int>(v.size()) <= k) v.resize(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] += c;
  }
  check(work, "remainder");
  Decomposition d;
  for (auto& [i, v] : coeff) {
    Poly c(std::move(v));
    if (c.is_zero()) continue;
    d.terms.push_back({i, basis.entries[i].pole_order, std::move(c)});
  }
  std::sort(d.terms.begin(), d.terms.end(),
            [](const DecompositionTerm& a, const DecompositionTerm& b) { return a.pole_order > b.pole_order; });
  d.certified_to = work.trunc();
  d.residual_valuation = work.valuation();
  return d;
}

FieldElement closed_form(const Decomposition& dec, const OrderCompleteBasis& basis, const FieldPtr& k) {
  FieldElement r = FieldElement::zero(k);
  for (const auto& t : dec.terms) r += basis.entries[t.index].expr * RatFunc(t.coeff);
  return r;
}

int verify_identity(const LaurentSeries& lhs, const FieldElement& rhs, const Generators& gens, int trunc) {
  if (trunc < 1) throw EvaluationError("truncation must be positive");
  auto diff = lhs.truncated(trunc) - to_qseries(rhs, gens, trunc).truncated(trunc);
  if (diff.trunc() < trunc) throw PrecisionError("identity check lacks precision");
  return diff.valuation();
}

int verify_identity(const Recipe& lhs, const FieldElement& rhs, const Generators& gens, int trunc) {
  return verify_identity(evaluate_recipe(lhs, trunc), rhs, gens, trunc);
}

std::vector<int> check_congruence(int a, int b, int m, int count) {
  if (a < 1 || m < 2 || b < 0 || count < 0) throw EvaluationError("congruence needs a >= 1, b >= 0, m >= 2");
  std::vector<int> bad;
  if (count == 0) return bad;
  auto p = partition_numbers(a * (count - 1) + b + 1);
  for (int n = 0; n < count; ++n)
    if (mpz_fdiv_ui(p[static_cast<size_t>(a * n + b)].get_mpz_t(), static_cast<unsigned long>(m)) != 0) bad.push_back(n);
  return bad;
}

std::string to_json(const Decomposition& dec) {
  using nlohmann::json;
  json j;
  j["terms"] = json::array();
  for (const auto& t : dec.terms) {
    json c = json::array();
    for (const auto& x : t.coeff.coeffs()) c.push_back(x.get_den() == 1 ? x.get_num().get_str() : x.get_str());
    j["terms"].push_back({{"index", t.index}, {"pole_order", t.pole_order}, {"coefficient", to_string(t.coeff, "t")}, {"t_coefficients", c}});
  }
  j["residual_valuation"] = dec.residual_valuation;
  j["certified_to"] = dec.certified_to;
  return j.dump(2) + "\n";
}

}  // namespace ocb
