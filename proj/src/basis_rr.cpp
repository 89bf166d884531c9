#include "ocb/basis_rr.hpp"

#include <algorithm>
#include <climits>
#include <json.hpp>

#include "ocb/errors.hpp"

namespace ocb {

using nlohmann::json;

int OrderCompleteBasis::find(int pole_order) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].pole_order == pole_order) return static_cast<int>(i);
  return -1;
}

std::vector<FieldElement> build_Bd(const NormalizedBasis& nb, int d) {
  if (d < 0) throw EvaluationError("d must be non-negative");
  std::vector<FieldElement> out;
  for (size_t i = 0; i < nb.b.size(); ++i)
    for (int j = 0; j <= d - nb.d[i]; ++j) out.push_back(nb.b[i] * RatFunc(Poly::constant(Rational(1)).shifted(j)));
  return out;
}

namespace {

std::vector<int> gaps_of(const std::vector<BasisEntry>& e) {
  std::vector<int> g;
  if (e.empty()) return g;
  for (int k = 0, i = 0; k <= e.back().pole_order; ++k) {
    if (i < static_cast<int>(e.size()) && e[static_cast<size_t>(i)].pole_order == k) ++i;
    else g.push_back(k);
  }
  return g;
}

OrderCompleteBasis echelonize(const std::vector<FieldElement>& elems, std::vector<LaurentSeries> series) {
  const size_t m = elems.size();
  if (m == 0) return {};
  std::vector<size_t> order(m);
  for (size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return series[a].valuation() < series[b].valuation(); });
  int lo = INT_MAX, hi = INT_MAX;
  for (const auto& s : series) {
    if (s.is_zero()) throw InternalContractViolation("basis element with vanishing expansion");
    lo = std::min(lo, s.valuation());
    hi = std::min(hi, s.trunc());
  }
  if (hi <= lo) throw PrecisionError("expansions too short to echelonize");
  const size_t w = static_cast<size_t>(hi - lo);
  QMatrix a(m, w + m);
  for (size_t r = 0; r < m; ++r) {
    const auto& s = series[order[r]];
    for (int k = s.valuation(); k < hi; ++k) a(r, static_cast<size_t>(k - lo)) = s.coeff(k);
    a(r, w + order[r]) = 1;
  }
  auto red = rref(a);
  OrderCompleteBasis out;
  for (size_t r = 0; r < m; ++r) {
    if (red.pivots[r] >= w) throw InternalContractViolation("basis elements are linearly dependent to this precision");
    BasisEntry e;
    const int lead = lo + static_cast<int>(red.pivots[r]);
    e.pole_order = -lead;
    std::vector<Rational> c;
    for (size_t k = red.pivots[r]; k < w; ++k) c.push_back(red.matrix(r, k));
    e.series = LaurentSeries(lead, std::move(c), hi);
    e.expr = FieldElement::zero(elems[0].field());
    for (size_t i = 0; i < m; ++i)
      if (red.matrix(r, w + i) != 0) e.expr += elems[i] * RatFunc(red.matrix(r, w + i));
    out.entries.push_back(std::move(e));
  }
  std::reverse(out.entries.begin(), out.entries.end());
  out.gaps = gaps_of(out.entries);
  return out;
}

}  // namespace

OrderCompleteBasis ref_basis(const std::vector<FieldElement>& elems, const Generators& gens, int trunc) {
  std::vector<LaurentSeries> s;
  for (const auto& e : elems) s.push_back(to_qseries(e, gens, trunc).truncated(trunc));
  return echelonize(elems, std::move(s));
}

OrderCompleteBasis ref_basis(const std::vector<FieldElement>& elems, const LaurentSeries& ts, const LaurentSeries& fs,
                             int trunc) {
  return ref_basis(elems, Generators(ts, fs), trunc);
}

OrderCompleteBasis order_complete_basis(const NormalizedBasis& nb, int d, const Generators& gens, int trunc) {
  auto b = ref_basis(build_Bd(nb, d), gens, trunc);
  b.d_used = d;
  return b;
}

int min_d_for_order(const NormalizedBasis& nb, int target, const Generators& gens, int trunc) {
  if (target < 0) throw EvaluationError("pole order must be non-negative");
  const int n = static_cast<int>(nb.b.size());
  const int dmax = (target + n - 1) / n + 1;
  int dmin = *std::min_element(nb.d.begin(), nb.d.end());
  for (int d = std::max(0, dmin); d <= dmax; ++d) {
    auto b = order_complete_basis(nb, d, gens, trunc);
    if (b.max_order() >= target) return d;
  }
  return dmax;
}

namespace {

std::string rat_string(const Rational& r) { return r.get_den() == 1 ? r.get_num().get_str() : r.get_str(); }

Rational parse_rat(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace

std::string to_json(const OrderCompleteBasis& b) {
  json j;
  j["d"] = b.d_used;
  j["gaps"] = b.gaps;
  j["entries"] = json::array();
  for (const auto& e : b.entries) {
    json s;
    s["valuation"] = e.series.valuation();
    s["trunc"] = e.series.trunc();
    s["coefficients"] = json::array();
    for (const auto& c : e.series.coeffs()) s["coefficients"].push_back(rat_string(c));
    j["entries"].push_back({{"pole_order", e.pole_order},
                            {"expr", to_text(e.expr)},
                            {"display", to_display_string(e.expr)},
                            {"series", s}});
  }
  return j.dump(2) + "\n";
}

OrderCompleteBasis parse_order_complete_basis(const FieldPtr& k, std::string_view text) {
  OrderCompleteBasis b;
  try {
    json j = json::parse(text);
    b.d_used = j.at("d").get<int>();
    b.gaps = j.at("gaps").get<std::vector<int>>();
    for (const auto& e : j.at("entries")) {
      BasisEntry be;
      be.pole_order = e.at("pole_order").get<int>();
      be.expr = parse_field_element(k, e.at("expr").get<std::string>());
      const auto& s = e.at("series");
      std::vector<Rational> c;
      for (const auto& x : s.at("coefficients")) c.push_back(parse_rat(x.get<std::string>()));
      be.series = LaurentSeries(s.at("valuation").get<int>(), std::move(c), s.at("trunc").get<int>());
      b.entries.push_back(std::move(be));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("basis JSON: ") + e.what(), 1, 1);
  }
  return b;
}

}  // namespace ocb
