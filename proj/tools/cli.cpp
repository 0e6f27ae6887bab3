#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "frobsplit/density.hpp"
#include "frobsplit/errors.hpp"
#include "frobsplit/goursat.hpp"
#include "frobsplit/groups.hpp"
#include "frobsplit/intpoly.hpp"
#include "frobsplit/nonspecial.hpp"
#include "frobsplit/torus.hpp"
#include "frobsplit/weil.hpp"

#ifndef FROBSPLIT_VERSION
#define FROBSPLIT_VERSION "dev"
#endif

namespace frobsplit::cli {

using json = nlohmann::ordered_json;
using u64 = std::uint64_t;

namespace {

struct Params {
  std::string family;
  int r = 1;
  u64 ell = 0;
  std::vector<u64> ells;
  u64 m = 1;
  std::string squeeze = "full";
  std::string level = "similitude";
  u64 q = 0;
  std::string poly;
  int degree = 0;
  std::string sig;
  u64 samples = 100000;
  u64 seed = 0;
  u64 streams = 1;
  u64 gens = 2;
  std::vector<u64> aux{3, 5, 7, 11, 13};
  std::vector<u64> weyl_primes;
  std::string context = "irreducible";
  bool check = false;
  bool diagonal = false;
  bool residue_degree_one = false;
  std::string input;

  std::string format = "json";
  std::string output;
  bool timing = false;
};

// Domain rejection carried alongside a result payload.
struct Rejection {
  ErrorCode code;
  std::string message;
};

struct Outcome {
  Outcome(json r, std::optional<Rejection> rej) : result(std::move(r)), rejection(std::move(rej)) {}

  json result;
  std::optional<Rejection> rejection;
  bool internal_failure = false;
  std::string internal_message;
};

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json rational(const mpq_class& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

std::string count(u64 v) { return std::to_string(v); }

Family parse_family(const std::string& f) { return f == "A" ? Family::kA : Family::kC; }

Level parse_level(const std::string& l) {
  if (l == "isometry") return Level::kIsometry;
  if (l == "derived") return Level::kDerived;
  return Level::kSimilitude;
}

Squeeze parse_squeeze(const std::string& s) { return s == "der" ? Squeeze::kDerived : Squeeze::kFull; }

json descriptor_json(const GroupDescriptor& d) {
  return {{"family", std::string(family_name(d.family))},
          {"r", d.r},
          {"ell", d.ell},
          {"level", std::string(level_name(d.level))},
          {"name", d.name()},
          {"order", group_order(d).get_str()},
          {"exceptional", d.exceptional()}};
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m.field().coeffs(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// Resolved argument vector of the command, enough to replay it.
std::vector<std::string> canonical_argv(const std::string& sub, const Params& p) {
  std::vector<std::string> a{sub};
  auto add = [&](const char* flag, const std::string& v) {
    a.emplace_back(flag);
    a.push_back(v);
  };
  auto flag = [&](const char* f, bool on) {
    if (on) a.emplace_back(f);
  };
  if (sub == "torus") {
    add("--family", p.family);
    add("--r", std::to_string(p.r));
    add("--ell", std::to_string(p.ell));
    add("--m", std::to_string(p.m));
    add("--level", p.level);
    if (!p.weyl_primes.empty()) add("--weyl-primes", join(p.weyl_primes));
    flag("--check", p.check);
  } else if (sub == "density") {
    add("--family", p.family);
    add("--r", std::to_string(p.r));
    add("--ells", join(p.ells));
    add("--m", std::to_string(p.m));
    add("--squeeze", p.squeeze);
    flag("--residue-degree-one", p.residue_degree_one);
    flag("--check", p.check);
  } else if (sub == "cm-fraction") {
    add("--degree", std::to_string(p.degree));
    add("--ells", join(p.ells));
    flag("--check", p.check);
  } else if (sub == "simulate") {
    add("--family", p.family);
    add("--r", std::to_string(p.r));
    add("--ells", join(p.ells));
    add("--m", std::to_string(p.m));
    add("--squeeze", p.squeeze);
    add("--samples", std::to_string(p.samples));
    add("--seed", std::to_string(p.seed));
    add("--streams", std::to_string(p.streams));
  } else if (sub == "goursat") {
    add("--family", p.family);
    add("--r", std::to_string(p.r));
    add("--ells", join(p.ells));
    add("--gens", std::to_string(p.gens));
    add("--seed", std::to_string(p.seed));
    flag("--diagonal", p.diagonal);
  } else if (sub == "weil") {
    add("--q", std::to_string(p.q));
    add("--poly", p.poly);
    add("--aux", join(p.aux));
    add("--context", p.context);
  } else if (sub == "nonspecial") {
    add("--r", std::to_string(p.r));
    add("--sig", p.sig);
  }
  add("--format", p.format);
  return a;
}

// ---- subcommands ----------------------------------------------------------

Outcome do_torus(const Params& p) {
  const GroupDescriptor d = make_descriptor(parse_family(p.family), p.r, p.ell, parse_level(p.level));
  const AnisotropicTorus t = build_anisotropic_torus(d);
  const TorusCensus c = torus_census(d, p.m);
  json gens = json::array();
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    gens.push_back({{"matrix", matrix_json(t.generators[i].matrix)},
                    {"order", count(t.generator_orders[i])},
                    {"similitude", t.generators[i].similitude}});
  }
  json res{{"group", descriptor_json(d)},
           {"torus",
            {{"order", count(t.order)},
             {"extension_degree", t.extension_degree},
             {"construction", t.construction},
             {"generators", gens}}},
           {"census",
            {{"m", c.m},
             {"torus_order", count(c.torus_order)},
             {"regular_count", count(c.regular_count)},
             {"regular_count_m", count(c.regular_count_m)},
             {"normalizer_order", count(c.normalizer_order)},
             {"weyl_order", count(c.weyl_order)},
             {"normalizer_method", c.normalizer_method},
             {"b_estimate", rational(c.b_estimate)}}}};
  if (p.check) {
    const ClassCount cc = classify_group(d, p.m);
    const mpz_class predicted = group_order(d) / static_cast<unsigned long>(c.normalizer_order) *
                                static_cast<unsigned long>(c.regular_count_m);
    res["exhaustive"] = {{"group_order", count(cc.group_order)},
                         {"j_count", count(cc.j_count)},
                         {"count_identity", predicted.get_str()},
                         {"count_identity_holds", predicted == static_cast<unsigned long>(cc.j_count)}};
  }
  if (!p.weyl_primes.empty()) {
    const WeylStability w = weyl_stability(d.family, d.r, d.level, p.weyl_primes);
    json orders = json::array();
    for (std::size_t i = 0; i < w.primes.size(); ++i) {
      orders.push_back({{"ell", w.primes[i]}, {"weyl_order", count(w.weyl_orders[i])}});
    }
    res["weyl_stability"] = {{"orders", orders}, {"stable", w.stable}};
  }
  return {res, std::nullopt};
}

json model_json(const Params& p) {
  return {{"family", p.family}, {"r", p.r}, {"primes", p.ells}, {"m", p.m}, {"squeeze", p.squeeze}};
}

Outcome do_density(const Params& p) {
  const GaloisModel model = make_model(parse_family(p.family), p.r, p.ells, parse_squeeze(p.squeeze),
                                       p.m, p.residue_degree_one);
  json per = json::array();
  for (const auto& f : model.factors) {
    const FractionDetail fd = anisotropic_fraction_detail(f.desc, model.m, f.squeeze, p.check);
    per.push_back({{"ell", f.desc.ell},
                   {"group", descriptor_json(fd.desc)},
                   {"fraction", rational(fd.i_fraction)},
                   {"j_count", fd.j_count.get_str()},
                   {"torus_order", count(fd.census.torus_order)},
                   {"regular_count_m", count(fd.census.regular_count_m)},
                   {"normalizer_order", count(fd.census.normalizer_order)},
                   {"cross_checked", fd.cross_checked}});
  }
  const DensityReport rep = density_product(model);
  json m = model_json(p);
  m["residue_degree_one"] = p.residue_degree_one;
  json res{{"model", m},
           {"per_prime", per},
           {"product", rational(rep.product)},
           {"constant", rational(rep.constant)},
           {"bound", rational(rep.bound)},
           {"complement", rational(rep.complement)}};
  if (rep.residue_adjusted) res["residue_adjusted"] = rational(*rep.residue_adjusted);
  return {res, std::nullopt};
}

Outcome do_cm(const Params& p) {
  json per = json::array();
  mpq_class constant = 0;
  for (u64 ell : p.ells) {
    const mpq_class f = cm_subfield_fraction(p.degree, ell);
    if (f > constant) constant = f;
    json e{{"ell", ell}, {"fraction", rational(f)}};
    if (p.check) {
      try {
        e["exhaustive"] = rational(cm_subfield_fraction_exhaustive(p.degree, ell));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kBudgetExceeded) throw;
        e["exhaustive"] = nullptr;
      }
    }
    per.push_back(e);
  }
  mpq_class bound = 1;
  for (std::size_t i = 0; i < p.ells.size(); ++i) bound *= constant;
  return {json{{"degree", p.degree},
               {"per_prime", per},
               {"product", rational(cm_density_product(p.degree, p.ells))},
               {"constant", rational(constant)},
               {"bound", rational(bound)}},
          std::nullopt};
}

Outcome do_simulate(const Params& p) {
  const GaloisModel model = make_model(parse_family(p.family), p.r, p.ells, parse_squeeze(p.squeeze), p.m);
  const SimulationResult s = chebotarev_simulate(model, p.samples, p.seed, p.streams);
  json hits = json::array();
  for (u64 h : s.stream_hits) hits.push_back(count(h));
  return {json{{"model", model_json(p)},
               {"samples", count(s.samples)},
               {"seed", count(s.seed)},
               {"streams", s.streams},
               {"hits", count(s.hits)},
               {"stream_hits", hits},
               {"empirical", s.empirical},
               {"expected", rational(s.expected)},
               {"expected_decimal", s.expected.get_d()},
               {"z_score", s.z_score},
               {"within_4_sigma", std::abs(s.z_score) <= 4}},
          std::nullopt};
}

Outcome do_goursat(const Params& p) {
  std::vector<GroupDescriptor> factors;
  for (u64 ell : p.ells) {
    factors.push_back(make_descriptor(parse_family(p.family), p.r, ell, Level::kDerived));
  }
  std::vector<ElementTuple> gens;
  if (p.diagonal) {
    for (u64 ell : p.ells) {
      if (ell != p.ells.front()) fail(ErrorCode::kInvalidArgument, "--diagonal needs equal primes");
    }
    gens = diagonal_generators(factors.front(), factors.size(), p.gens, p.seed);
  } else {
    gens = random_surjective_generators(factors, p.gens, p.seed);
  }
  const GoursatResult g = goursat_verify(factors, gens);
  json fs = json::array();
  for (const auto& d : g.factors) fs.push_back(descriptor_json(d));
  json gj = json::array();
  for (const auto& t : gens) {
    json tuple = json::array();
    for (const auto& m : t) tuple.push_back(matrix_json(m));
    gj.push_back(tuple);
  }
  json po = json::array();
  for (u64 o : g.projection_orders) po.push_back(count(o));
  Outcome out{json{{"factors", fs},
                   {"generators", gj},
                   {"closure_order", count(g.closure_order)},
                   {"product_order", g.product_order.get_str()},
                   {"projection_orders", po},
                   {"surjective", g.surjective},
                   {"full", g.full},
                   {"hypotheses_hold", g.hypotheses_hold},
                   {"hypothesis_failures", g.hypothesis_failures},
                   {"verdict", std::string(goursat_verdict_name(g.verdict))},
                   {"witness", g.witness}},
              std::nullopt};
  if (g.verdict == GoursatVerdict::kCounterexample) {
    out.internal_failure = true;
    out.internal_message = "surjective projections generate a proper subgroup: " + g.witness;
  }
  return out;
}

json certificate_json(const Certificate& c) {
  return {{"kind", std::string(certificate_kind_name(c.kind))},
          {"ell", c.ell},
          {"reason", c.reason},
          {"reduction", c.reduction}};
}

Outcome do_weil(const Params& p) {
  const IntPoly f = IntPoly::parse(p.poly);
  const WeilValidation v = weil_validate(f, p.q);
  json val{{"accepted", v.ok()}, {"diagnostic", v.diagnostic}};
  if (v.error) val["error"] = std::string(error_code_name(*v.error));
  if (v.symmetry_index >= 0) val["symmetry_index"] = v.symmetry_index;
  json res{{"poly", f.to_string()}, {"pretty", f.pretty()}, {"q", p.q}, {"validation", val}};
  if (!v.ok()) return {res, Rejection{*v.error, v.diagnostic}};

  const WeilPoly& w = *v.poly;
  const CertificateContext ctx =
      p.context == "unitary-even" ? CertificateContext::kUnitaryEven : CertificateContext::kIrreducible;
  const SplitReport rep = analyze(w, p.aux, ctx);
  json factors = json::array();
  for (const auto& fc : rep.factors) {
    json cands = json::array();
    for (const auto& [e, dy] : fc.candidates) cands.push_back({{"e", e}, {"dY", dy}});
    json j{{"factor", fc.factor.to_string()},
           {"pretty", fc.factor.pretty()},
           {"a", fc.a},
           {"e", fc.e ? json(*fc.e) : json(nullptr)},
           {"dY", fc.dY ? json(*fc.dY) : json(nullptr)},
           {"rule", fc.rule},
           {"candidates", cands},
           {"constraint", "d | e*dY with a*d = e*dY, a*d = " + std::to_string(fc.a * rep.d)},
           {"self_dual", fc.self_dual},
           {"dual_index", fc.dual_index},
           {"label", fc.label}};
    factors.push_back(j);
  }
  json certs = json::array();
  for (const auto& ac : rep.certificates) {
    json j{{"ell", ac.ell}};
    j["certificate"] = ac.certificate ? certificate_json(*ac.certificate) : json(nullptr);
    j["power"] = ac.power ? certificate_json(*ac.power) : json(nullptr);
    if (!ac.skipped.empty()) j["skipped"] = ac.skipped;
    certs.push_back(j);
  }
  res["p"] = w.p;
  res["a"] = w.a;
  res["g"] = w.g();
  res["real_weil_transform"] = real_weil_transform(w).to_string();
  res["ordinary"] = rep.ordinary;
  res["prime_field"] = rep.prime_field;
  res["d"] = rep.d;
  res["root"] = rep.root.to_string();
  res["root_pretty"] = rep.root.pretty();
  res["factors"] = factors;
  res["aux_primes"] = p.aux;
  res["context"] = std::string(certificate_context_name(rep.context));
  res["certificates"] = certs;
  res["simple"] = rep.simple ? json(*rep.simple) : json(nullptr);
  res["decomposition"] = rep.decomposition;
  return {res, std::nullopt};
}

Outcome do_nonspecial(const Params& p) {
  const CMSignature sig = CMSignature::parse(p.r, p.sig);
  const auto conds = non_special(sig);
  json labels = json::array();
  for (auto c : conds) labels.push_back(std::string(condition_label(c)));
  return {json{{"signature", sig.to_string()}, {"r", sig.r}, {"conditions", labels}, {"certified", !conds.empty()}},
          std::nullopt};
}

// ---- driver ---------------------------------------------------------------

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array()) {
    if (j.empty()) rows.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else {
    rows.emplace_back(path, j.dump());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const json& report, const std::string& format) {
  if (format == "csv") return to_csv(report.dump());
  return report.dump(2) + "\n";
}

int emit(const std::string& text, const Params& p, std::ostream& out, std::ostream& err) {
  if (p.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(p.output);
  if (!f) {
    err << "--output: cannot open " << p.output << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

using Handler = std::function<Outcome(const Params&)>;

int execute(const std::string& sub, const Params& p, const Handler& h, std::ostream& out,
            std::ostream& err) {
  json report{{"schema", kSchema},
              {"version", FROBSPLIT_VERSION},
              {"command", {{"subcommand", sub}, {"argv", canonical_argv(sub, p)}}}};
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    Outcome o = h(p);
    report["result"] = std::move(o.result);
    if (o.rejection) {
      code = kExitDomain;
      report["status"] = "error";
      report["error"] = {{"code", std::string(error_code_name(o.rejection->code))},
                         {"message", o.rejection->message}};
    } else if (o.internal_failure) {
      code = kExitInternal;
      report["status"] = "error";
      report["error"] = {{"code", "Internal"}, {"message", o.internal_message}};
    } else {
      report["status"] = "ok";
    }
  } catch (const Error& e) {
    code = e.code() == ErrorCode::kBudgetExceeded ? kExitBudget : kExitDomain;
    report["result"] = nullptr;
    report["status"] = "error";
    report["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = kExitInternal;
    report["result"] = nullptr;
    report["status"] = "error";
    report["error"] = {{"code", "Internal"}, {"message", e.what()}};
  }
  if (p.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    report["timing"] = {{"seconds", dt.count()}};
  }
  report["exit_code"] = code;
  const int io = emit(render(report, p.format), p, out, err);
  return io != kExitOk ? io : code;
}

}  // namespace

std::string to_csv(const std::string& json_text) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(json::parse(json_text), "", rows);
  std::string out = "field,value\n";
  for (const auto& [k, v] : rows) out += csv_cell(k) + "," + csv_cell(v) + "\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Params p;
  CLI::App app{"Finite classical groups, anisotropic tori, split-reduction densities and Weil "
               "polynomial analysis."};
  app.name("frobsplit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", p.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", p.output, "Write the report to this file instead of stdout");
  app.add_flag("--timing", p.timing, "Add wall-clock timing to the report");
  app.set_version_flag("--version", FROBSPLIT_VERSION);

  auto family = [&](CLI::App* s) {
    s->add_option("--family", p.family, "Group family")->required()->check(CLI::IsMember({"A", "C"}));
    s->add_option("--r", p.r, "Rank")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto prime_list = [&](CLI::App* s, const char* help, bool required) {
    auto* o = s->add_option("--ells", p.ells, help)->delimiter(',');
    if (required) o->required();
    return o;
  };
  auto m_opt = [&](CLI::App* s) {
    s->add_option("--m", p.m, "Power m of the J_{ell,m} variant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto squeeze = [&](CLI::App* s) {
    s->add_option("--squeeze", p.squeeze, "der: derived subgroup, full: similitude group")
        ->check(CLI::IsMember({"der", "full"}))
        ->capture_default_str();
  };

  auto* torus = app.add_subcommand("torus", "Anisotropic torus census of one group");
  family(torus);
  torus->add_option("--ell", p.ell, "Prime")->required();
  m_opt(torus);
  torus->add_option("--level", p.level, "similitude, isometry or derived")
      ->check(CLI::IsMember({"similitude", "isometry", "derived"}))
      ->capture_default_str();
  torus->add_option("--weyl-primes", p.weyl_primes, "Primes for the Weyl-order stability check")
      ->delimiter(',');
  torus->add_flag("--check", p.check, "Also classify every group element");

  auto* density = app.add_subcommand("density", "Exact I-fractions and their product over primes");
  family(density);
  prime_list(density, "Distinct primes", true);
  m_opt(density);
  squeeze(density);
  density->add_flag("--residue-degree-one", p.residue_degree_one, "Also report complement / m");
  density->add_flag("--check", p.check, "Cross-check each fraction by exhaustive classification");

  auto* cm = app.add_subcommand("cm-fraction", "Share of F_{ell^degree}^x in proper subfields");
  cm->add_option("--degree", p.degree, "Even degree 2g")->required();
  auto* cm_ells = prime_list(cm, "Primes", false);
  auto* cm_ell = cm->add_option("--ell", p.ell, "Single prime");
  cm_ell->excludes(cm_ells);
  cm->add_flag("--check", p.check, "Also count exhaustively when the field has <= 10^6 elements");

  auto* sim = app.add_subcommand("simulate", "Seeded Chebotarev simulation of the product density");
  family(sim);
  prime_list(sim, "Distinct primes", true);
  m_opt(sim);
  squeeze(sim);
  sim->add_option("--samples", p.samples, "Sample count")->capture_default_str();
  sim->add_option("--seed", p.seed, "Generator seed")->required();
  sim->add_option("--streams", p.streams, "Independent streams")->capture_default_str();

  auto* gour = app.add_subcommand("goursat", "Closure of random generators in a product of derived groups");
  family(gour);
  prime_list(gour, "One prime per factor", true);
  gour->add_option("--gens", p.gens, "Generators per set")->check(CLI::PositiveNumber)->capture_default_str();
  gour->add_option("--seed", p.seed, "Generator seed")->required();
  gour->add_flag("--diagonal", p.diagonal, "Use diagonal generators (all primes equal)");

  auto* weil = app.add_subcommand("weil", "Validate and analyze a Weil polynomial");
  weil->add_option("--q", p.q, "Prime power q")->required();
  weil->add_option("--poly", p.poly, "Ascending integer coefficients, e.g. 9,0,6,0,1")->required();
  weil->add_option("--aux", p.aux, "Auxiliary primes for certificates")->delimiter(',')->capture_default_str();
  weil->add_option("--context", p.context, "Certificate patterns: irreducible or unitary-even")
      ->check(CLI::IsMember({"irreducible", "unitary-even"}))
      ->capture_default_str();

  auto* ns = app.add_subcommand("nonspecial", "Non-special conditions (i)-(iv) of a CM signature");
  ns->add_option("--r", p.r, "Rank")->required();
  ns->add_option("--sig", p.sig, "Pairs m:mbar, comma separated")->required();

  auto* replay = app.add_subcommand("replay", "Re-run the command echoed in a JSON report");
  replay->add_option("--input", p.input, "Report file")->required()->check(CLI::ExistingFile);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << FROBSPLIT_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "frobsplit: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cm->parsed()) {
    if (cm_ell->count() > 0) p.ells = {p.ell};
    if (p.ells.empty()) {
      err << "frobsplit: --ell or --ells is required\n";
      return kExitUsage;
    }
  }

  if (replay->parsed()) {
    std::ifstream f(p.input);
    json stored;
    try {
      stored = json::parse(f);
    } catch (const json::exception& e) {
      err << "--input: " << e.what() << "\n";
      return kExitUsage;
    }
    if (!stored.contains("command") || !stored["command"].contains("argv")) {
      err << "--input: no command.argv in report\n";
      return kExitUsage;
    }
    std::vector<std::string> argv = stored["command"]["argv"].get<std::vector<std::string>>();
    if (!p.output.empty()) {
      argv.emplace_back("--output");
      argv.push_back(p.output);
    }
    return run(argv, out, err);
  }

  const std::vector<std::pair<CLI::App*, Handler>> table{
      {torus, do_torus},       {density, do_density}, {cm, do_cm},
      {sim, do_simulate},      {gour, do_goursat},    {weil, do_weil},
      {ns, do_nonspecial},
  };
  for (const auto& [sub, handler] : table) {
    if (sub->parsed()) return execute(sub->get_name(), p, handler, out, err);
  }
  return kExitUsage;
}

}  // namespace frobsplit::cli
