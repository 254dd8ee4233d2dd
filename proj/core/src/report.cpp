#include "cosk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cosk/bochner.hpp"
#include "cosk/holonomy.hpp"
#include "cosk/rng.hpp"

namespace cosk {
namespace {

using nlohmann::json;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PForm random_form(int n, int p, Rng& rng) {
  PForm w(n, p);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = rng.normal();
  return w;
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double cached_calibration() {
  static const double c = weitzenboeck_calibration();
  return c;
}

json conventions_json() {
  return json{{"version", kConventionsVersion},
              {"sphere_R1212", kSphereR1212},
              {"second_kind_sphere_eigenvalue", kSphereSecondKindEigenvalue},
              {"first_kind_sphere_eigenvalue", kSphereFirstKindEigenvalue},
              {"form_basis", "unit increasing monomials"},
              {"weitzenboeck_calibration", cached_calibration()}};
}

json tool_json() { return json{{"name", kToolName}, {"version", kToolVersion}}; }

json rational_json(const Rational& r) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}, {"value", r.to_double()}, {"text", r.str()}};
}

json spectrum_json(const Spectrum& s) {
  json vals = json::array();
  for (double v : s.values) vals.push_back(v);
  json mults = json::array();
  const double tol = s.tol();
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && s.values[j] - s.values[j - 1] <= tol) ++j;
    double mean = 0.0;
    for (std::size_t t = i; t < j; ++t) mean += s.values[t];
    mean /= static_cast<double>(j - i);
    mults.push_back(json{{"value", mean}, {"multiplicity", j - i}});
    i = j;
  }
  return json{{"eigenvalues", std::move(vals)}, {"clusters", std::move(mults)}};
}

json k_report_json(const KReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back(json{
        {"k", e.k}, {"partial_sum", e.partial_sum}, {"nonneg", e.nonneg}, {"nonpos", e.nonpos}});
  json out{{"entries", std::move(entries)},
           {"kernel_dim", rep.kernel_dim},
           {"tolerance", rep.tol},
           {"scale", rep.scale}};
  if (rep.nonneg_threshold)
    out["nonneg_threshold"] = *rep.nonneg_threshold;
  else
    out["nonneg_threshold"] = nullptr;
  return out;
}

struct CheckSet {
  json checks = json::object();
  bool all_pass = true;

  void add(const std::string& name, bool pass, json detail = json::object()) {
    detail["pass"] = pass;
    checks[name] = std::move(detail);
    all_pass &= pass;
  }
};

// Shared per-space verification battery (analyze and catalog-sweep).
void run_space_checks(const SpaceSpec& spec, const CurvatureTensor& r, const BochnerEvaluator& ev,
                      const HolonomyReport& hol, std::uint64_t seed, bool thorough, CheckSet& cs) {
  const int n = r.dim();
  const ValidationReport vr = validate(r);
  cs.add("validate", vr.accepted,
         json{{"antisym_ij", vr.antisym_ij},
              {"antisym_kl", vr.antisym_kl},
              {"pair_sym", vr.pair_sym},
              {"bianchi", vr.bianchi},
              {"tolerance", vr.tolerance}});

  const Spectrum& spec2 = ev.second_kind_spectrum();
  double trace = 0.0;
  for (double v : spec2.values) trace += v;
  const double scal = ev.ricci_data().scal;
  const double expected = (n + 2) / (2.0 * n) * scal;
  const double trace_gap = relative_gap(trace, expected);
  cs.add("trace_identity", trace_gap <= 1e-9,
         json{{"trace", trace}, {"expected", expected}, {"relative_error", trace_gap}});

  // parallel candidates satisfy the Bochner vanishing
  {
    json items = json::array();
    bool pass = true;
    for (const auto& cand : parallel_candidates(spec)) {
      const BochnerBreakdown br = ev.second_kind_quadratic(cand.form);
      const double scale =
          std::max(1.0, std::abs(br.term_eig) + std::abs(br.term_ric) + std::abs(br.term_scal));
      const bool ok = std::abs(br.total) <= 1e-9 * scale;
      pass &= ok;
      items.push_back(json{{"description", cand.description},
                           {"degree", cand.form.degree()},
                           {"term_eig", br.term_eig},
                           {"term_ric", br.term_ric},
                           {"term_scal", br.term_scal},
                           {"total", br.total},
                           {"pass", ok}});
    }
    cs.add("parallel_vanishing", pass, json{{"candidates", std::move(items)}});
  }

  // Theorem-A style consistency: n-nonneg or n-nonpos forces flat or full
  {
    bool pass = true;
    bool premise = false;
    if (n >= 2) {
      premise = is_k_nonneg(spec2, n) || is_k_nonpos(spec2, n);
      if (premise) {
        const bool flat = r.max_abs() <= 1e-9 * std::max(1.0, spec2.scale());
        pass = flat || hol.full_so_n;
      }
    }
    cs.add("holonomy_theorem_consistency", pass,
           json{{"premise", premise}, {"full_so_n", hol.full_so_n}});
  }

  if (!thorough) return;

  Rng rng(mix_seed(seed, 0xc0ffee));

  // self-adjointness of Rbar and agreement of the two projection routes
  {
    const RicciData& rd = ev.ricci_data();
    double adj_res = 0.0, route_res = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      SymTensor h(n), k(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          h.set(i, j, rng.normal());
          k.set(i, j, rng.normal());
        }
      adj_res = std::max(adj_res, relative_gap(rbar_apply(r, h).inner(k), h.inner(rbar_apply(r, k))));
      const SymTensor h0 = tracefree_project(h);
      const SymTensor via_formula = second_kind_apply(r, rd, h0);
      const SymTensor via_projection = tracefree_project(rbar_apply(r, h0));
      SymTensor diff = via_formula;
      diff.axpy(-1.0, via_projection);
      route_res = std::max(route_res, diff.norm() / std::max(1.0, via_formula.norm()));
    }
    cs.add("rbar_self_adjoint", adj_res <= 1e-12, json{{"residual", adj_res}});
    cs.add("projection_routes_agree", route_res <= 1e-12, json{{"residual", route_res}});
  }

  // cross-oracle agreement on random forms, p <= min(3, n/2)
  {
    const double c = cached_calibration();
    double worst = 0.0;
    for (int p = 1; 2 * p <= n && p <= 3; ++p)
      for (int trial = 0; trial < 5; ++trial) {
        const PForm w = random_form(n, p, rng);
        const double first = ev.first_kind_quadratic(w);
        const double second = ev.second_kind_quadratic(w).total;
        worst = std::max(worst, relative_gap(first, 2.0 * c / 3.0 * second));
      }
    cs.add("cross_oracle", worst <= 1e-8, json{{"relative_error", worst}});
  }

  // Einstein cases: reduction identity and the weighted lower bound
  if (ev.ricci_data().einstein && n >= 2) {
    double red_res = 0.0;
    bool bound_ok = true;
    double worst_margin = 0.0;
    for (int p = 1; 2 * p <= n; ++p)
      for (int trial = 0; trial < 10; ++trial) {
        const PForm w = random_form(n, p, rng);
        const BochnerBreakdown br = ev.second_kind_quadratic(w);
        const double expected_tail =
            static_cast<double>(p) * (n - p) / (static_cast<double>(n) * n) * scal * form_inner(w, w);
        red_res = std::max(red_res, relative_gap(br.term_ric + br.term_scal, expected_tail));
        const EinsteinBoundReport eb = einstein_lower_bound_check(ev, w);
        bound_ok &= eb.holds;
        worst_margin = std::min(worst_margin, eb.margin);
      }
    cs.add("einstein_reduction", red_res <= 1e-9, json{{"residual", red_res}});
    cs.add("einstein_lower_bound", bound_ok, json{{"worst_margin", worst_margin}});
  }

  // scaling the tensor scales the spectrum
  {
    CurvatureTensor r2 = r;
    r2 *= 2.0;
    const Spectrum s2 = eigh(second_kind(r2).matrix).spectrum;
    double res = 0.0;
    for (std::size_t i = 0; i < s2.size(); ++i)
      res = std::max(res, std::abs(s2.values[i] - 2.0 * spec2.values[i]));
    cs.add("scale_equivariance", res <= 1e-9 * spec2.scale(), json{{"residual", res}});
  }

  // products: reducible holonomy with factor-matching subspaces
  if (spec.kind == SpaceSpec::Kind::Product) {
    std::vector<int> factor_dims;
    for (auto [off, d] : factor_blocks(spec)) factor_dims.push_back(d);
    std::sort(factor_dims.begin(), factor_dims.end());
    const bool match = hol.reducible && factor_dims == hol.invariant_subspace_dims;
    cs.add("product_reducibility", match,
           json{{"factor_dims", factor_dims}, {"subspace_dims", hol.invariant_subspace_dims}});
  }

  // locally symmetric catalog: curvature invariant under its own algebra
  {
    double res = 0.0;
    for (const Matrix& g : hol.generators)
      res = std::max(res, derivation_residual(r, g));
    const double tol = 1e-9 * std::max(1.0, r.max_abs());
    cs.add("algebra_invariance", res <= tol, json{{"residual", res}, {"tolerance", tol}});
  }
}

json holonomy_json(const HolonomyReport& hol) {
  return json{{"dimension", hol.dimension},
              {"invariant_subspace_dims", hol.invariant_subspace_dims},
              {"full_so_n", hol.full_so_n},
              {"reducible", hol.reducible},
              {"trivial", hol.trivial},
              {"kind", hol.kind},
              {"seed", hol.seed}};
}

}  // namespace

RunResult analyze(const SpaceSpec& spec, const AnalyzeOptions& options) {
  const CurvatureTensor r = build(spec, options.extra_datasets);
  const int n = r.dim();
  const BochnerEvaluator ev(r);
  const HolonomyReport hol = curvature_algebra(r, mix_seed(options.seed, 0x401));
  const Spectrum& s = ev.second_kind_spectrum();
  const int d = static_cast<int>(s.size());

  std::vector<double> ks = options.k_values;
  if (ks.empty()) {
    for (double k : {1.0, static_cast<double>(n), static_cast<double>(n + 1), static_cast<double>(d)})
      if (k >= 1.0 && k <= d) ks.push_back(k);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  }
  for (double k : ks)
    if (k < 0.0 || k > d) throw std::invalid_argument("analyze: k out of range [0, D]");

  json rep;
  rep["tool"] = tool_json();
  rep["conventions"] = conventions_json();
  rep["seed"] = options.seed;
  rep["spec"] = spec.str();
  rep["n"] = n;
  rep["D"] = d;

  const RicciData& rd = ev.ricci_data();
  {
    json ric = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(rd.ric(i, j));
      ric.push_back(std::move(row));
    }
    rep["ricci"] = json{{"matrix", std::move(ric)},
                        {"scal", rd.scal},
                        {"einstein", rd.einstein},
                        {"einstein_deviation", rd.einstein_deviation}};
  }

  rep["second_kind"] = spectrum_json(s);
  rep["k_report"] = k_report_json(make_k_report(s, ks));

  {
    json th = json::object();
    if (n >= 2) {
      th["N"] = rational_json(threshold_N(n));
      json cps = json::array();
      for (int p = 1; 2 * p <= n; ++p) {
        json e = rational_json(threshold_Cp(n, p));
        e["p"] = p;
        cps.push_back(std::move(e));
      }
      th["C_p"] = std::move(cps);
    }
    if (spec.kind == SpaceSpec::Kind::FubiniStudy) th["kahler"] = rational_json(threshold_kahler(spec.m));
    rep["thresholds"] = std::move(th);
  }

  rep["holonomy"] = holonomy_json(hol);

  CheckSet cs;
  run_space_checks(spec, r, ev, hol, options.seed, /*thorough=*/false, cs);

  // optional cross-oracle checks at requested degrees
  if (!options.form_degrees.empty()) {
    Rng rng(mix_seed(options.seed, 0x705));
    const double c = cached_calibration();
    json items = json::array();
    bool pass = true;
    for (int p : options.form_degrees) {
      if (p < 1 || 2 * p > n)
        throw std::invalid_argument("analyze: form degree must satisfy 1 <= p <= n/2");
      double worst = 0.0;
      for (int trial = 0; trial < 10; ++trial) {
        const PForm w = random_form(n, p, rng);
        worst = std::max(worst, relative_gap(ev.first_kind_quadratic(w),
                                             2.0 * c / 3.0 * ev.second_kind_quadratic(w).total));
      }
      const bool ok = worst <= 1e-8;
      pass &= ok;
      items.push_back(json{{"p", p}, {"relative_error", worst}, {"pass", ok}});
    }
    cs.add("cross_oracle_forms", pass, json{{"degrees", std::move(items)}});
  }

  rep["checks"] = std::move(cs.checks);
  rep["all_checks_pass"] = cs.all_pass;

  return RunResult{std::move(rep), cs.all_pass ? 0 : 2};
}

json scan_integrality(long long max_n) {
  json rep;
  rep["tool"] = tool_json();
  rep["scan"] = "integrality";
  rep["max_n"] = max_n;
  json hits = json::array();
  for (long long n : integrality_scan(max_n)) {
    hits.push_back(json{{"n", n}, {"N", rational_json(threshold_N(n))}});
  }
  rep["integral_n"] = std::move(hits);
  return rep;
}

WeightPrincipleScan run_weight_principle(
    long long trials, std::uint64_t seed,
    const std::function<void(const Spectrum&, double, double, double)>& per_instance) {
  WeightPrincipleScan scan;
  scan.trials = trials;
  scan.seed = seed;
  Rng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    const int d = 5 + static_cast<int>(rng.below(16));  // 5..20
    std::vector<double> vals(d);
    for (double& v : vals) v = rng.normal();
    Spectrum s = Spectrum::of(std::move(vals));
    if (s.values.front() >= 0.0) s = negate(s);  // enforce lambda_1 < 0

    const double cap = rng.uniform(0.5, 2.5);
    const double ratio = rng.uniform(1.5, d - 0.5);
    const double total = cap * ratio;
    const double k_prime = rng.uniform(0.25, ratio - 0.25);

    if (per_instance) per_instance(s, cap, total, k_prime);

    if (is_k_nonneg(s, k_prime)) {
      ++scan.premise_holds;
      if (!weight_principle_check(s, cap, total, k_prime)) ++scan.violations;
    }
  }
  return scan;
}

RunResult scan_weight_principle(long long trials, std::uint64_t seed) {
  const WeightPrincipleScan scan = run_weight_principle(trials, seed);
  json rep;
  rep["tool"] = tool_json();
  rep["scan"] = "weight_principle";
  rep["trials"] = scan.trials;
  rep["premise_holds"] = scan.premise_holds;
  rep["violations"] = scan.violations;
  rep["seed"] = scan.seed;
  return RunResult{std::move(rep), scan.violations == 0 ? 0 : 2};
}

RunResult scan_catalog_sweep(std::uint64_t seed) {
  json rep;
  rep["tool"] = tool_json();
  rep["conventions"] = conventions_json();
  rep["scan"] = "catalog_sweep";
  rep["seed"] = seed;

  std::vector<CatalogEntry> entries = builtin_catalog();
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.text < b.text; });

  bool all_pass = true;
  json spaces = json::array();
  for (const auto& entry : entries) {
    const CurvatureTensor r = build(entry.spec);
    const BochnerEvaluator ev(r);
    const HolonomyReport hol = curvature_algebra(r, mix_seed(seed, 0x401));
    CheckSet cs;
    run_space_checks(entry.spec, r, ev, hol, seed, /*thorough=*/true, cs);
    all_pass &= cs.all_pass;
    spaces.push_back(json{{"spec", entry.text},
                          {"n", r.dim()},
                          {"einstein", ev.ricci_data().einstein},
                          {"checks", std::move(cs.checks)},
                          {"pass", cs.all_pass}});
  }
  rep["spaces"] = std::move(spaces);
  rep["all_pass"] = all_pass;
  return RunResult{std::move(rep), all_pass ? 0 : 2};
}

namespace {

void dump_value(const json& j, std::string& out, int indent, int depth) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(indent) * d, ' '); };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.cbegin(); it != j.cend(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        dump_value(v, out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw std::invalid_argument("dump_json: non-finite number");
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

void render_node(const json& j, std::ostringstream& os, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.cbegin(); it != j.cend(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      render_node(it.value(), os, key);
    }
  } else if (j.is_array()) {
    // inline short scalar arrays, one line per element otherwise
    const bool scalars = std::all_of(j.cbegin(), j.cend(), [](const json& v) {
      return v.is_number() || v.is_string() || v.is_boolean() || v.is_null();
    });
    if (scalars) {
      os << prefix << ": ";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        os << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      os << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i)
        render_node(j[i], os, prefix + "[" + std::to_string(i) + "]");
    }
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  out += "\n";
  return out;
}

std::string render_text(const json& j) {
  std::ostringstream os;
  render_node(j, os, "");
  return os.str();
}

}  // namespace cosk
