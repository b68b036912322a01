#include "parafock/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "parafock/character.hpp"
#include "parafock/defining_rep.hpp"
#include "parafock/gz_checks.hpp"
#include "parafock/gz_general.hpp"
#include "parafock/induced_checks.hpp"
#include "parafock/schur.hpp"

namespace parafock::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  int m = 1;
  int n = 1;
  std::string p_text = "1";
  BigRational p{1};
  int max_level = 4;
  int level = 2;
  int degree = 4;
  std::string format = "text";
  std::string out_path;
  bool mutate = false;
  bool vbar = false;
  bool check = false;
};

// Failures listed per check before the rest are summarized.
constexpr std::size_t kShownFailures = 20;

std::string join(const std::vector<int>& values, const char* separator = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? separator : "") + std::to_string(values[i]);
  return out;
}

Json number(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::vector<int> pattern_labels(const gz::GZPattern& mu) { return {mu.mu12, mu.mu22, mu.mu11}; }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// --- verification suites -------------------------------------------------

int emit_reports(const Config& cfg, const std::string& title, const std::vector<CheckReport>& reports,
                 std::ostream& out) {
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
  if (cfg.format == "json") {
    Json doc;
    doc["command"] = cfg.command;
    doc["subject"] = title;
    Json checks = Json::array();
    for (const auto& r : reports) {
      checks.push_back({{"name", r.name},
                        {"checked", r.checked},
                        {"violations", r.failures.size()},
                        {"failures", r.failures}});
    }
    doc["checks"] = checks;
    doc["status"] = pass ? "pass" : "fail";
    out << doc.dump(2) << "\n";
  } else {
    out << title << "\n";
    for (const auto& r : reports) {
      out << r.name << ": " << r.failures.size() << " violations (" << r.checked << " checked)\n";
      for (std::size_t i = 0; i < r.failures.size() && i < kShownFailures; ++i) out << "  " << r.failures[i] << "\n";
      if (r.failures.size() > kShownFailures) out << "  ... " << r.failures.size() - kShownFailures << " more\n";
    }
    out << "status: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? Pass : Violation;
}

int verify_defining(const Config& cfg, std::ostream& out) {
  defrep::GeneratorSet g = defrep::build_generators(cfg.m, cfg.n);
  if (cfg.mutate) {
    // Negative control: flip the sign of one entry of c_1^+.
    auto& entry = g.c_plus[0].at(1, 2 * cfg.m + 1);
    entry = -entry;
  }
  std::vector<CheckReport> reports;

  CheckReport triples{"triple relations", 0, {}};
  triples.checked = all_triples(g.count()).size();
  for (const auto& v : defrep::verify_triple_relations(g)) triples.failures.push_back(defrep::to_string(v));
  reports.push_back(std::move(triples));

  const auto basis = defrep::build_umn_basis(g);
  CheckReport gl{"gl(m|n) relations", 0, {}};
  gl.checked = basis.size() * basis.size();
  for (const auto& q : defrep::verify_gl_relations(g, basis))
    gl.failures.push_back("[[E" + std::to_string(q[0]) + std::to_string(q[1]) + ", E" + std::to_string(q[2]) +
                          std::to_string(q[3]) + "]]");
  reports.push_back(std::move(gl));

  CheckReport weights{"generator weights", 0, {}};
  weights.checked = static_cast<std::size_t>(g.count()) * all_generators(g.count()).size();
  for (const auto& [i, gen] : defrep::verify_weights(g))
    weights.failures.push_back("[[h" + std::to_string(i) + ", " + to_string(gen) + "]]");
  reports.push_back(std::move(weights));

  CheckReport even{"even subalgebra closure", 0, {}};
  int span = 0;
  const int escaped = defrep::verify_even_closure(g, &span);
  even.checked = static_cast<std::size_t>(span);
  if (escaped > 0) even.failures.push_back(std::to_string(escaped) + " brackets leave the span");
  reports.push_back(std::move(even));

  const std::string title = "osp(" + std::to_string(2 * cfg.m + 1) + "|" + std::to_string(2 * cfg.n) +
                            ") defining representation, m=" + std::to_string(cfg.m) + " n=" + std::to_string(cfg.n) +
                            (cfg.mutate ? " (mutated c1+)" : "");
  return emit_reports(cfg, title, reports, out);
}

int verify_induced(const Config& cfg, std::ostream& out) {
  std::vector<CheckReport> reports;
  reports.push_back(induced::check_norms(cfg.p, cfg.max_level));
  reports.push_back(induced::check_adjointness(cfg.p, cfg.max_level));
  reports.push_back(induced::check_triple_relations(cfg.p, cfg.max_level));
  reports.push_back(induced::check_cartan(cfg.p, cfg.max_level));
  if (is_integer(cfg.p)) {
    const int p = static_cast<int>(cfg.p.get_num().get_si());
    reports.push_back(induced::check_positivity_boundary(p, cfg.max_level));
    reports.push_back(induced::check_gram_rank_vs_gz(p, cfg.max_level));
  }
  const std::string title =
      "monomial basis of V-bar(" + to_string(cfg.p) + "), max level " + std::to_string(cfg.max_level);
  return emit_reports(cfg, title, reports, out);
}

int verify_gz(const Config& cfg, std::ostream& out) {
  const gz::FockModule mode = cfg.vbar ? gz::FockModule::Induced : gz::FockModule::Irreducible;
  std::vector<CheckReport> reports;
  reports.push_back(gz::check_triple_relations(cfg.p, cfg.max_level, mode));
  reports.push_back(gz::check_cartan(cfg.p, cfg.max_level, mode));
  reports.push_back(gz::check_adjoint_symmetry(cfg.p, cfg.max_level, mode));
  reports.push_back(gz::check_lowest_weight(cfg.p));
  reports.push_back(gz::check_cgc_orthogonality(cfg.max_level));
  reports.push_back(gz::check_recurrences(cfg.p, cfg.max_level));
  if (is_integer(cfg.p)) {
    const int p = static_cast<int>(cfg.p.get_num().get_si());
    reports.push_back(gz::check_truncation_closure(p, cfg.max_level));
    if (p == 1) reports.push_back(gz::p1_oracle_compare(cfg.max_level));
  }
  const std::string title = "GZ basis of " + std::string(cfg.vbar ? "V-bar(" : "V(") + to_string(cfg.p) +
                            "), max level " + std::to_string(cfg.max_level);
  return emit_reports(cfg, title, reports, out);
}

// --- tables ----------------------------------------------------------------

int gram(const Config& cfg, std::ostream& out) {
  std::vector<induced::GramAnalysis> analyses;
  for (int a = cfg.level; a >= 0; --a) {
    analyses.push_back(induced::gram_rank_and_null(induced::Weight11::from_offsets(a, cfg.level - a, cfg.p), cfg.p));
  }
  if (cfg.format == "json") {
    Json doc = Json::array();
    for (const auto& an : analyses) {
      Json states = Json::array();
      for (const auto& s : an.gram.states) states.push_back({s.k, s.l, s.theta});
      Json rows = Json::array();
      for (const auto& row : an.gram.entries) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        rows.push_back(r);
      }
      Json nulls = Json::array();
      for (const auto& v : an.null_vectors) {
        Json coeffs = Json::array();
        for (const auto& s : an.gram.states) coeffs.push_back(number(v.coefficient(s).get_num()));
        nulls.push_back(coeffs);
      }
      doc.push_back({{"weight", {to_string(an.gram.weight.w1), to_string(an.gram.weight.w2)}},
                     {"states", states},
                     {"gram", rows},
                     {"rank", an.rank},
                     {"null", nulls}});
    }
    out << doc.dump(2) << "\n";
    return Pass;
  }
  out << "Gram matrices of V-bar(" << to_string(cfg.p) << ") at level " << cfg.level << "\n";
  for (const auto& an : analyses) {
    out << "weight (" << to_string(an.gram.weight.w1) << "|" << to_string(an.gram.weight.w2) << ")\n";
    out << "  states:";
    for (const auto& s : an.gram.states) out << " " << induced::to_string(s);
    out << "\n  gram:\n";
    for (const auto& row : an.gram.entries) {
      out << "   ";
      for (const auto& x : row) out << " " << to_string(x);
      out << "\n";
    }
    out << "  rank: " << an.rank << "\n";
    for (const auto& v : an.null_vectors) out << "  null: " << induced::to_string(v) << "\n";
  }
  return Pass;
}

int act(const Config& cfg, std::ostream& out) {
  // One application from mu12 <= floor(p) stays real, so V-bar sources go up to floor(p).
  BigInt floor_p;
  mpz_fdiv_q(floor_p.get_mpz_t(), cfg.p.get_num_mpz_t(), cfg.p.get_den_mpz_t());
  const auto sources = gz::enumerate_patterns(static_cast<int>(floor_p.get_si()), cfg.max_level);
  const gz::FockModule mode = cfg.vbar ? gz::FockModule::Induced : gz::FockModule::Irreducible;

  struct Row {
    gz::GZPattern source;
    Generator generator;
    gz::GZPattern target;
    RadicalScalar value;
  };
  std::vector<Row> rows;
  for (const auto& mu : sources) {
    for (const auto& g : all_generators(2)) {
      for (const auto& [target, value] : gz::apply_c(g, gz::GZVector(mu), cfg.p, mode))
        rows.push_back({mu, g, target, value});
    }
  }

  if (cfg.format == "json") {
    Json doc = Json::array();
    for (const auto& r : rows) {
      doc.push_back({{"source", pattern_labels(r.source)},
                     {"generator", to_string(r.generator)},
                     {"target", pattern_labels(r.target)},
                     {"value", r.value.to_string()}});
    }
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "source,generator,target,value\n";
    for (const auto& r : rows) {
      out << csv_quote(gz::to_string(r.source)) << "," << to_string(r.generator) << ","
          << csv_quote(gz::to_string(r.target)) << "," << r.value.to_string() << "\n";
    }
  } else {
    for (const auto& r : rows) {
      out << gz::to_string(r.source) << " --" << to_string(r.generator) << "--> " << gz::to_string(r.target) << " : "
          << r.value.to_string() << "\n";
    }
  }
  return Pass;
}

std::vector<std::pair<characters::Exponents, std::int64_t>> canonical_terms(const characters::WeightSeries& s) {
  std::vector<std::pair<characters::Exponents, std::int64_t>> terms(s.terms.begin(), s.terms.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return characters::total_degree(a.first) < characters::total_degree(b.first);
  });
  return terms;
}

std::string offset_text(const characters::Exponents& e, int m) {
  std::vector<int> x(e.begin(), e.begin() + m);
  std::vector<int> y(e.begin() + m, e.end());
  return "(" + join(x) + "|" + join(y) + ")";
}

std::vector<std::string> weight_of(const characters::Exponents& e, int m, const BigRational& p) {
  std::vector<std::string> w;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const BigRational base = static_cast<int>(i) < m ? BigRational(-p / 2) : BigRational(p / 2);
    w.push_back(to_string(BigRational(base + e[i])));
  }
  return w;
}

int character(const Config& cfg, std::ostream& out) {
  const auto series = characters::character_series(cfg.m, cfg.n, cfg.p, cfg.degree);
  const auto terms = canonical_terms(series);

  std::vector<characters::IdentityReport> identities;
  if (cfg.check) {
    identities.push_back(characters::king_identity_check(cfg.m, cfg.n, cfg.degree));
    const auto pbw = characters::pbw_multiplicities(cfg.m, cfg.n, cfg.p, cfg.degree);
    std::size_t mismatched = 0;
    std::set<characters::Exponents> keys;
    for (const auto& [e, c] : series.terms) keys.insert(e);
    for (const auto& [e, c] : pbw.terms) keys.insert(e);
    for (const auto& e : keys) mismatched += series.multiplicity(e) != pbw.multiplicity(e) ? 1 : 0;
    identities.push_back({"character = PBW weight count", cfg.m, cfg.n, cfg.degree, mismatched == 0, mismatched});
  }
  const bool pass = std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.status; });

  if (cfg.format == "json") {
    Json doc;
    doc["m"] = cfg.m;
    doc["n"] = cfg.n;
    doc["p"] = to_string(cfg.p);
    doc["degree"] = cfg.degree;
    doc["prefactor"] = series.prefactor();
    Json rows = Json::array();
    for (const auto& [e, c] : terms)
      rows.push_back({{"offset", e}, {"weight", weight_of(e, cfg.m, cfg.p)}, {"multiplicity", c}});
    doc["terms"] = rows;
    if (cfg.check) {
      Json checks = Json::array();
      for (const auto& r : identities) {
        checks.push_back({{"identity", r.identity},
                          {"m", r.m},
                          {"n", r.n},
                          {"degree", r.degree},
                          {"status", r.status ? "equal" : "differ"}});
      }
      doc["identities"] = checks;
    }
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::vector<std::string> header;
    for (int i = 1; i <= cfg.m; ++i) header.push_back("x" + std::to_string(i));
    for (int j = 1; j <= cfg.n; ++j) header.push_back("y" + std::to_string(j));
    for (const auto& h : header) out << h << ",";
    out << "multiplicity\n";
    for (const auto& [e, c] : terms) out << join(e) << "," << c << "\n";
  } else {
    for (const auto& [e, c] : terms) {
      const auto w = weight_of(e, cfg.m, cfg.p);
      std::vector<std::string> xs(w.begin(), w.begin() + cfg.m), ys(w.begin() + cfg.m, w.end());
      std::string weight = "(";
      for (std::size_t i = 0; i < xs.size(); ++i) weight += (i ? "," : "") + xs[i];
      weight += "|";
      for (std::size_t i = 0; i < ys.size(); ++i) weight += (i ? "," : "") + ys[i];
      weight += ")";
      out << "offset " << offset_text(e, cfg.m) << "  weight " << weight << "  multiplicity " << c << "\n";
    }
    for (const auto& r : identities) {
      out << "identity " << r.identity << ": " << (r.status ? "equal" : "differ") << " (m=" << r.m << " n=" << r.n
          << " degree " << r.degree << ", " << r.mismatched_terms << " mismatched terms)\n";
    }
  }
  return pass ? Pass : Violation;
}

int branch(const Config& cfg, std::ostream& out) {
  const auto report = characters::decompose_branching(characters::character_series(cfg.m, cfg.n, cfg.p, cfg.degree));
  const bool pass = report.exact && report.multiplicity_free;
  if (cfg.format == "json") {
    Json doc;
    doc["m"] = cfg.m;
    doc["n"] = cfg.n;
    doc["degree"] = cfg.degree;
    Json rows = Json::array();
    for (const auto& t : report.terms) {
      rows.push_back({{"lambda", characters::to_string(t.lambda)},
                      {"highest_weight", characters::to_string(t.highest_weight)},
                      {"multiplicity", t.multiplicity},
                      {"dimension", t.dimension}});
    }
    doc["components"] = rows;
    doc["exact"] = report.exact;
    doc["multiplicity_free"] = report.multiplicity_free;
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "lambda,highest_weight,multiplicity,dimension\n";
    for (const auto& t : report.terms) {
      out << csv_quote(characters::to_string(t.lambda)) << "," << csv_quote(characters::to_string(t.highest_weight))
          << "," << t.multiplicity << "," << t.dimension << "\n";
    }
  } else {
    for (const auto& t : report.terms) {
      out << characters::to_string(t.lambda) << "  " << characters::to_string(t.highest_weight) << "  multiplicity "
          << t.multiplicity << "  dimension " << t.dimension << "\n";
    }
    out << "exact: " << (report.exact ? "yes" : "no") << "\n";
    out << "multiplicity-free: " << (report.multiplicity_free ? "yes" : "no") << "\n";
  }
  return pass ? Pass : Violation;
}

int dims(const Config& cfg, std::ostream& out) {
  struct Row {
    characters::Partition lambda;
    characters::HighestWeightMN hw;
    std::size_t gz_count;
    std::int64_t schur_dim;
  };
  std::vector<Row> rows;
  bool pass = true;
  for (const auto& lambda : characters::hook_partitions_up_to(cfg.degree, cfg.m, cfg.n)) {
    const auto hw = characters::hw_from_partition(lambda, cfg.m, cfg.n);
    const auto count = characters::enumerate_gz_general(hw, cfg.m, cfg.n).count;
    const auto dim = characters::super_schur(lambda, cfg.m, cfg.n).evaluate_at_ones();
    pass = pass && static_cast<std::int64_t>(count) == dim;
    rows.push_back({lambda, hw, count, dim});
  }
  if (cfg.format == "json") {
    Json doc = Json::array();
    for (const auto& r : rows) {
      doc.push_back({{"lambda", characters::to_string(r.lambda)},
                     {"highest_weight", characters::to_string(r.hw)},
                     {"gz_patterns", r.gz_count},
                     {"super_schur_dimension", r.schur_dim},
                     {"status", static_cast<std::int64_t>(r.gz_count) == r.schur_dim ? "equal" : "differ"}});
    }
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "lambda,highest_weight,gz_patterns,super_schur_dimension\n";
    for (const auto& r : rows) {
      out << csv_quote(characters::to_string(r.lambda)) << "," << csv_quote(characters::to_string(r.hw)) << ","
          << r.gz_count << "," << r.schur_dim << "\n";
    }
  } else {
    for (const auto& r : rows) {
      out << characters::to_string(r.lambda) << "  " << characters::to_string(r.hw) << "  gz " << r.gz_count
          << "  super-schur " << r.schur_dim << "  "
          << (static_cast<std::int64_t>(r.gz_count) == r.schur_dim ? "equal" : "differ") << "\n";
    }
  }
  return pass ? Pass : Violation;
}

// --- configuration -----------------------------------------------------------

const std::map<std::string, std::set<std::string>> kFormats = {
    {"verify-defining", {"text", "json"}}, {"verify-induced", {"text", "json"}},
    {"verify-gz", {"text", "json"}},       {"gram", {"text", "json"}},
    {"act", {"text", "json", "csv"}},      {"character", {"text", "json", "csv"}},
    {"branch", {"text", "json", "csv"}},   {"dims", {"text", "json", "csv"}},
};

void validate(Config& cfg) {
  if (cfg.m < 1 || cfg.n < 1) throw UsageError("--m and --n must be positive");
  if (cfg.max_level < 0 || cfg.degree < 0 || cfg.level < 0) throw UsageError("levels and degrees must be >= 0");
  if (!kFormats.at(cfg.command).contains(cfg.format))
    throw UsageError("format '" + cfg.format + "' is not available for " + cfg.command);

  try {
    cfg.p = parse_rational(cfg.p_text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--p must be an exact rational 'a' or 'a/b', got '" + cfg.p_text + "'");
  }
  if (sgn(cfg.p) <= 0) throw UsageError("--p must be positive");

  const bool rank_one = cfg.command == "verify-induced" || cfg.command == "verify-gz" || cfg.command == "gram" ||
                        cfg.command == "act";
  if (rank_one && (cfg.m != 1 || cfg.n != 1))
    throw UsageError(cfg.command + " supports only m = n = 1 (osp(3|2)); the monomial and GZ bases are not "
                                   "available for other (m,n)");
  const bool irreducible = (cfg.command == "verify-gz" || cfg.command == "act") && !cfg.vbar;
  if (irreducible && !is_integer(cfg.p))
    throw UsageError("V(p) needs a positive integer --p; pass --vbar for V-bar(p) at rational p");
  if (cfg.check && cfg.format == "csv") throw UsageError("--check reports need --format text or json");
}

int dispatch(const Config& cfg, std::ostream& out) {
  static const std::map<std::string, std::function<int(const Config&, std::ostream&)>> commands = {
      {"verify-defining", verify_defining},
      {"verify-induced", verify_induced},
      {"verify-gz", verify_gz},
      {"gram", gram},
      {"act", act},
      {"character", character},
      {"branch", branch},
      {"dims", dims},
  };
  return commands.at(cfg.command)(cfg, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Parastatistics Fock spaces of osp(2m+1|2n): exact verification and tables", "parafock"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "number of parafermions (even rank)");
    sub->add_option("--n", cfg.n, "number of parabosons (odd rank)");
    sub->add_option("--format", cfg.format, "text, json or csv");
    sub->add_option("--out", cfg.out_path, "write the report to this file");
  };
  auto add_p = [&cfg](CLI::App* sub) { sub->add_option("--p", cfg.p_text, "order p as an exact rational a or a/b"); };

  auto* defining = app.add_subcommand("verify-defining", "parastatistics relations in the defining representation");
  add_common(defining);
  defining->add_flag("--mutate", cfg.mutate, "corrupt one generator entry (negative control)");

  auto* vinduced = app.add_subcommand("verify-induced", "monomial-basis identities in V-bar(p), m = n = 1");
  add_common(vinduced);
  add_p(vinduced);
  vinduced->add_option("--max-level", cfg.max_level);

  auto* vgz = app.add_subcommand("verify-gz", "GZ-basis identities in V(p), m = n = 1");
  add_common(vgz);
  add_p(vgz);
  vgz->add_option("--max-level", cfg.max_level);
  vgz->add_flag("--vbar", cfg.vbar, "use V-bar(p) instead of V(p)");

  auto* vgram = app.add_subcommand("gram", "Gram matrices and null vectors at one level, m = n = 1");
  add_common(vgram);
  add_p(vgram);
  vgram->add_option("--level", cfg.level);

  auto* vact = app.add_subcommand("act", "GZ matrix-element table, m = n = 1");
  add_common(vact);
  add_p(vact);
  vact->add_option("--max-level", cfg.max_level);
  vact->add_flag("--vbar", cfg.vbar, "use V-bar(p) instead of V(p)");

  auto* vchar = app.add_subcommand("character", "weight multiplicities of V-bar(p)");
  add_common(vchar);
  add_p(vchar);
  vchar->add_option("--degree", cfg.degree);
  vchar->add_flag("--check", cfg.check, "also check the Schur expansion and the PBW count");

  auto* vbranch = app.add_subcommand("branch", "u(m|n) branching of V-bar(p)");
  add_common(vbranch);
  add_p(vbranch);
  vbranch->add_option("--degree", cfg.degree);

  auto* vdims = app.add_subcommand("dims", "GZ pattern counts against super-Schur dimensions");
  add_common(vdims);
  vdims->add_option("--degree", cfg.degree);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Pass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    validate(cfg);
    std::ostringstream report;
    const int code = dispatch(cfg, report);
    if (cfg.out_path.empty()) {
      out << report.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + cfg.out_path);
      file << report.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  }
}

}  // namespace parafock::cli
