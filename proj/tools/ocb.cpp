#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ocb/errors.hpp"
#include "ocb/reduce.hpp"

using namespace ocb;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "ocb 1.0.0";

struct Output {
  std::string path;
  std::string format = "text";
  bool json() const { return format == "json"; }
  void write(const std::string& s) const {
    if (path.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << s;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 1, 1);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string rat(const Rational& r) { return r.get_den() == 1 ? r.get_num().get_str() : r.get_str(); }

json series_json(const LaurentSeries& s) {
  json c = json::array();
  for (const auto& x : s.coeffs()) c.push_back(rat(x));
  return {{"valuation", s.valuation()}, {"trunc", s.trunc()}, {"coefficients", c}};
}

std::string series_text(const LaurentSeries& s) {
  std::string out;
  for (int k = s.valuation(); k < s.trunc(); ++k) out += "q^" + std::to_string(k) + ": " + rat(s.coeff(k)) + "\n";
  return out + "O(q^" + std::to_string(s.trunc()) + ")\n";
}

BivariatePoly monic_relation(const BivariatePoly& p) {
  if (!p.is_monic_in_y()) throw DegenerateInput("relation is not monic in y");
  return p;
}

// Everything the basis and express commands share.
struct Pipeline {
  Recipe t, f;
  BivariatePoly relation;
  FieldPtr k;
  std::unique_ptr<Generators> gens;

  void init(Recipe tr, Recipe fr, BivariatePoly p) {
    t = std::move(tr);
    f = std::move(fr);
    relation = monic_relation(p);
    k = FunctionField::make(relation);
    gens = std::make_unique<Generators>(t, f);
  }

  BivariatePoly derive_relation() const {
    auto pt = pole_order(evaluate_recipe(t, 1)), pf = pole_order(evaluate_recipe(f, 1));
    const int trunc = relation_precision(pt, pf);
    return find_relation(evaluate_recipe(t, trunc), evaluate_recipe(f, trunc));
  }

  OrderCompleteBasis basis(int d, int trunc) const {
    auto nb = normalize_at_infinity(integral_basis(k), infinity_basis(k));
    return order_complete_basis(nb, d, *gens, trunc);
  }
};

std::string basis_text(const OrderCompleteBasis& b) {
  std::ostringstream os;
  os << "d " << b.d_used << "\ngaps";
  for (int g : b.gaps) os << ' ' << g;
  os << '\n';
  for (const auto& e : b.entries)
    os << "order " << e.pole_order << ": " << to_display_string(e.expr) << "\n  " << e.series.to_string(40) << '\n';
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Order complete bases of rings of modular functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Output out;
  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", out.path, "write to this file instead of stdout");
  };

  std::string recipe_path;
  int trunc = 0;
  auto* series = app.add_subcommand("series", "expand a recipe");
  series->add_option("recipe", recipe_path)->required();
  series->add_option("--trunc", trunc, "expand to O(q^T)")->required()->check(CLI::Range(1, 100000));
  add_output(series);

  std::string t_path, f_path;
  auto* relation = app.add_subcommand("relation", "polynomial relation p(t, f) = 0");
  relation->add_option("t", t_path)->required();
  relation->add_option("f", f_path)->required();
  relation->add_option("--trunc", trunc, "series precision (default: automatic)")->check(CLI::Range(1, 100000));
  add_output(relation);

  std::string relation_path;
  int d = 1;
  auto* basis = app.add_subcommand("basis", "order complete basis B_d");
  basis->add_option("relation", relation_path, "relation file (derived from --t and --f when omitted)");
  basis->add_option("--t", t_path)->required();
  basis->add_option("--f", f_path)->required();
  basis->add_option("--d", d, "pole bound at infinity, in multiples of the pole of t")->check(CLI::NonNegativeNumber);
  basis->add_option("--trunc", trunc, "precision of the stored expansions (default 20)")->check(CLI::Range(1, 100000));
  add_output(basis);

  std::string basis_path, target_path;
  auto* express_cmd = app.add_subcommand("express", "decompose a target in an order complete basis");
  express_cmd->add_option("target", target_path)->required();
  express_cmd->add_option("--basis", basis_path, "basis JSON written by the basis command");
  express_cmd->add_option("--t", t_path, "generator t (when no basis is given)");
  express_cmd->add_option("--f", f_path, "generator f (when no basis is given)");
  express_cmd->add_option("--d", d, "pole bound when the basis is built here")->check(CLI::NonNegativeNumber);
  express_cmd->add_option("--trunc", trunc, "certify the remainder to O(q^T) (default 50)")->check(CLI::Range(1, 100000));
  add_output(express_cmd);

  int ca = 0, cb = 0, cm = 0, count = 0;
  auto* congruence = app.add_subcommand("congruence", "check p(a n + b) = 0 mod m for n < count");
  congruence->add_option("a", ca)->required()->check(CLI::Range(1, 100000));
  congruence->add_option("b", cb)->required()->check(CLI::NonNegativeNumber);
  congruence->add_option("m", cm)->required()->check(CLI::Range(2, 1 << 30));
  congruence->add_option("count", count)->required()->check(CLI::NonNegativeNumber);
  add_output(congruence);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  std::cerr << kVersion << '\n';

  if (*series) {
    auto s = evaluate_recipe(load_recipe(recipe_path), trunc);
    out.write(out.json() ? series_json(s).dump(2) + "\n" : series_text(s));
    return 0;
  }

  if (*relation) {
    Pipeline p;
    p.t = load_recipe(t_path);
    p.f = load_recipe(f_path);
    BivariatePoly rel;
    if (trunc > 0) rel = find_relation(evaluate_recipe(p.t, trunc), evaluate_recipe(p.f, trunc));
    else rel = p.derive_relation();
    if (out.json()) {
      json terms = json::array();
      for (const auto& [key, c] : rel.coeffs()) terms.push_back({{"x", key.first}, {"y", key.second}, {"c", c.get_str()}});
      out.write(json{{"terms", terms}, {"display", to_display_string(rel)}}.dump(2) + "\n");
    } else {
      out.write(rel.to_text());
    }
    return 0;
  }

  auto build = [&](Pipeline& p) {
    auto t = load_recipe(t_path), f = load_recipe(f_path);
    p.t = t;
    p.f = f;
    p.init(t, f, relation_path.empty() ? p.derive_relation() : BivariatePoly::parse(read_file(relation_path)));
  };

  if (*basis) {
    Pipeline p;
    build(p);
    auto b = p.basis(d, trunc > 0 ? trunc : 20);
    if (out.json()) {
      json j = json::parse(to_json(b));
      j["relation"] = p.relation.to_text();
      j["t"] = to_string(p.t);
      j["f"] = to_string(p.f);
      out.write(j.dump(2) + "\n");
    } else {
      out.write(basis_text(b));
    }
    return 0;
  }

  if (*express_cmd) {
    const int window = trunc > 0 ? trunc : 50;
    Pipeline p;
    OrderCompleteBasis b;
    if (!basis_path.empty()) {
      json j;
      try {
        j = json::parse(read_file(basis_path));
        p.init(parse_recipe(j.at("t").get<std::string>()), parse_recipe(j.at("f").get<std::string>()),
               BivariatePoly::parse(j.at("relation").get<std::string>()));
      } catch (const json::exception& e) {
        throw ParseError(std::string("basis JSON: ") + e.what(), 1, 1);
      }
      b = parse_order_complete_basis(p.k, j.dump());
    } else {
      if (t_path.empty() || f_path.empty()) throw ParseError("express needs --basis or both --t and --f", 1, 1);
      build(p);
      b = p.basis(d, 10);
    }
    auto target = load_recipe(target_path);
    const int margin = std::max(0, pole_order(evaluate_recipe(target, 1))) + 10;
    auto ts = p.gens->at(window + margin).first;
    for (auto& e : b.entries) e.series = to_qseries(e.expr, *p.gens, window + margin);
    auto dec = express(evaluate_recipe(target, window), b, ts, window);
    auto cf = closed_form(dec, b, p.k);
    const int identity = dec.exact() ? verify_identity(target, cf, *p.gens, window) : dec.residual_valuation;
    if (out.json()) {
      json j = json::parse(to_json(dec));
      j["closed_form"] = to_display_string(cf);
      j["closed_form_text"] = to_text(cf);
      j["identity_valuation"] = identity;
      out.write(j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (const auto& t : dec.terms) os << "order " << t.pole_order << ": " << to_string(t.coeff, "t") << '\n';
      os << "residual valuation " << dec.residual_valuation << " (certified to O(q^" << dec.certified_to << "))\n";
      os << "closed form: " << to_display_string(cf) << '\n';
      os << "identity: " << (identity >= window ? "verified" : "FAILED") << " to O(q^" << window << ")\n";
      out.write(os.str());
    }
    if (!dec.exact())
      throw GapError("remainder has valuation " + std::to_string(dec.residual_valuation) +
                     "; the target is not in the span of the basis");
    return 0;
  }

  if (*congruence) {
    auto bad = check_congruence(ca, cb, cm, count);
    if (out.json()) {
      out.write(json{{"a", ca}, {"b", cb}, {"m", cm}, {"count", count}, {"violations", bad}}.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "p(" << ca << "n+" << cb << ") mod " << cm << " for n < " << count << ": ";
      if (bad.empty()) {
        os << "no violations\n";
      } else {
        os << bad.size() << " violations, n =";
        for (int n : bad) os << ' ' << n;
        os << '\n';
      }
      out.write(os.str());
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const EvaluationError& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return 3;
  } catch (const CoprimalityError& e) {
    std::cerr << "coprimality error: " << e.what() << '\n';
    return 4;
  } catch (const InsufficientPrecision& e) {
    std::cerr << "insufficient precision: " << e.what() << '\n';
    return 5;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << '\n';
    return 5;
  } catch (const DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << '\n';
    return 6;
  } catch (const GapError& e) {
    std::cerr << "gap error: " << e.what() << '\n';
    return 7;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
