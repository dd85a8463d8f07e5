#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kast/cokernel.hpp"
#include "kast/exact_matrix.hpp"
#include "kast/families.hpp"
#include "kast/graph_io.hpp"
#include "kast/harness.hpp"
#include "kast/laurent_smith.hpp"
#include "kast/matching.hpp"
#include "kast/smith.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace kast;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

// Thrown for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::string family;
  long a = 0, b = 0, c = 0, d = 0, e = 0, n = 0;
  std::string group = "1";
  std::string weights = "none";
  std::string lambda, mu;
  bool wrong_parity = false;

  void add_to(CLI::App* app) {
    app->add_option("--family", family, "ppbox, ppbox-quotient, ppbox-impossible, hex-minus-triangle, "
                                        "skew-shape, aztec or delannoy");
    app->add_option("--a", a, "hexagon side a, or the number of variables for skew-shape");
    app->add_option("--b", b, "hexagon side b");
    app->add_option("--c", c, "hexagon side c");
    app->add_option("--d", d, "hex-minus-triangle offset d");
    app->add_option("--e", e, "hex-minus-triangle triangle size e");
    app->add_option("--n", n, "order for aztec and delannoy");
    app->add_option("--group", group, "symmetry group: 1, rho, kappa, tau, kappa-tau, rho-kappa, "
                                      "rho-kappa-tau, tau-kappa, tau-rho-kappa, tau-rho");
    app->add_option("--weights", weights, "q-weights: none, cube or orbit");
    app->add_option("--lambda", lambda, "outer partition, e.g. 3,2,1");
    app->add_option("--mu", mu, "inner partition, e.g. 1");
    app->add_flag("--wrong-parity", wrong_parity, "build the impossible variant of a quotient");
  }

  FamilySpec spec() const {
    if (family.empty()) throw UsageError("--family is required");
    FamilySpec s;
    s.variant = parse_variant(family);
    s.a = a;
    s.b = b;
    s.c = c;
    s.d = d;
    s.e = e;
    s.n = n;
    s.group = parse_group(group);
    s.weights = parse_weight_mode(weights);
    s.lambda = Partition::parse(lambda);
    s.mu = Partition::parse(mu);
    s.wrong_parity = wrong_parity;
    if (s.wrong_parity && s.variant == Variant::PPBoxQuotient) s.variant = Variant::PPBoxImpossible;
    s.validate();
    return s;
  }
};

struct Common {
  std::string format = "json";
  std::string out;
  uint64_t seed = 0;

  void add_to(CLI::App* app, const std::vector<std::string>& formats) {
    app->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    app->add_option("--out", out, "write to this path instead of standard output");
    app->add_option("--seed", seed, "seed for randomized decorations");
  }
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open " + c.out);
  f << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// The matrix named by --matrix, or the family matrix at the requested ring.
struct MatrixSource {
  FamilyFlags family;
  std::string matrix_path;
  std::string ring = "integers";
  std::string q0 = "-1";

  void add_to(CLI::App* app) {
    family.add_to(app);
    app->add_option("--matrix", matrix_path, "read a matrix file instead of building a family");
    app->add_option("--ring", ring, "integers (z), laurent (zq), rational-poly (qq) or integers-at-q0 (q0)");
    app->add_option("--q0", q0, "evaluation point for integers-at-q0");
  }

  ReportRing report_ring() const {
    try {
      return parse_report_ring(ring);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  ExactMatrix load(uint64_t seed, std::string* label) const {
    ReportRing r = report_ring();
    Matrix<LaurentPoly> m;
    if (!matrix_path.empty()) {
      ExactMatrix x = parse_matrix(read_file(matrix_path));
      *label = matrix_path;
      if (auto* z = std::get_if<Matrix<BigInteger>>(&x)) {
        if (r == ReportRing::Integers || r == ReportRing::IntegersAtQ0) return *z;
        m = to_laurent(*z);
      } else if (auto* l = std::get_if<Matrix<LaurentPoly>>(&x)) {
        m = *l;
      } else {
        if (r != ReportRing::RationalPoly) throw UsageError("a rational matrix needs --ring rational-poly");
        return x;
      }
    } else {
      FamilySpec s = family.spec();
      *label = s.str();
      m = family_matrix(s, seed).matrix;
    }
    switch (r) {
      case ReportRing::Integers: return specialize(m, BigInteger(1));
      case ReportRing::IntegersAtQ0: return specialize(m, BigInteger(q0));
      case ReportRing::Laurent:
      case ReportRing::RationalPoly: return m;
    }
    return m;
  }
};

int run_build(const FamilyFlags& f, const Common& c, bool decorated) {
  FamilySpec s = f.spec();
  EmbeddedGraph g = decorated ? family_matrix(s, c.seed).decorated : build_family_graph(s);
  emit(c, graph_to_json(g));
  return kExitOk;
}

int run_matrix(const MatrixSource& src, const Common& c) {
  std::string label;
  emit(c, format_matrix(src.load(c.seed, &label)));
  return kExitOk;
}

template <class T>
std::vector<std::string> strings_of(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(RingTraits<T>::str(x));
  return out;
}

std::string csv_quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

int run_snf(const MatrixSource& src, const Common& c) {
  std::string label;
  ExactMatrix m = src.load(c.seed, &label);
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["source"] = label;
  j["ring"] = report_ring_name(src.report_ring());
  j["rows"] = rows_of(m);
  j["cols"] = cols_of(m);
  std::vector<std::string> diagonal, factors;
  size_t rank = 0;
  std::string outcome = "success";
  if (auto* z = std::get_if<Matrix<BigInteger>>(&m)) {
    auto f = smith_normal_form(*z, false);
    diagonal = strings_of(f.diagonal);
    rank = f.rank;
    for (const auto& d : f.nontrivial()) factors.push_back(normalize_unit(d).get_str());
  } else if (auto* l = std::get_if<Matrix<LaurentPoly>>(&m); l && src.report_ring() == ReportRing::RationalPoly) {
    // Over Q[q,q^-1] only the invariant factors are reported.
    StableInvariants inv = stable_invariants_rational(*l);
    factors = inv.factors;
    rank = rows_of(m) - inv.free_rank;
  } else if (l) {
    NormalFormAttempt at = laurent_smith_attempt(*l, kDefaultLaurentStepLimit, false);
    outcome = at.outcome_name();
    if (at.success()) {
      diagonal = strings_of(at.form.diagonal);
      rank = at.form.rank;
      for (const auto& d : at.form.nontrivial()) factors.push_back(normalize_unit(d).str());
    } else {
      j["detail"] = at.outcome == NormalFormAttempt::Outcome::NonPrincipal ? at.witness.str() : at.message;
    }
  } else {
    auto f = smith_normal_form(std::get<Matrix<RationalPoly>>(m), false);
    diagonal = strings_of(f.diagonal);
    rank = f.rank;
    for (const auto& d : f.nontrivial()) factors.push_back(normalize_unit(d).str());
  }
  // Rank is unknown when the Laurent attempt stops early.
  const bool known = outcome == "success";
  const std::string free_rank = known ? std::to_string(rows_of(m) - rank) : "";
  j["normal_form"] = outcome;
  j["rank"] = known ? ojson(rank) : ojson(nullptr);
  j["free_rank"] = known ? ojson(rows_of(m) - rank) : ojson(nullptr);
  j["diagonal"] = diagonal;
  j["invariant_factors"] = factors;
  if (c.format == "json") {
    emit(c, dump(j));
  } else if (c.format == "csv") {
    std::ostringstream os;
    os << "schema_version,source,ring,normal_form,free_rank,invariant_factors\n"
       << kReportSchemaVersion << "," << csv_quoted(label) << "," << j["ring"].get<std::string>() << "," << outcome << ","
       << free_rank << ",\"";
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? ";" : "") << factors[i];
    os << "\"\n";
    emit(c, os.str());
  } else {
    std::ostringstream os;
    os << "source:      " << label << "\nnormal form: " << outcome
       << "\nfree rank:   " << (known ? free_rank : "unknown") << "\nfactors:     [";
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? ", " : "") << factors[i];
    os << "]\n";
    if (j.contains("detail")) os << "detail:      " << j["detail"].get<std::string>() << "\n";
    emit(c, os.str());
  }
  return outcome == "success" ? kExitOk : kExitFailed;
}

int run_coker(const MatrixSource& src, const Common& c) {
  std::string label;
  ExactMatrix m = src.load(c.seed, &label);
  auto* z = std::get_if<Matrix<BigInteger>>(&m);
  if (!z) throw UsageError("coker works over the integers; use --ring integers or integers-at-q0");
  Cokernel k = cokernel_of(*z);
  std::vector<std::string> torsion = strings_of(k.torsion);
  if (c.format == "json") {
    ojson j;
    j["schema_version"] = kReportSchemaVersion;
    j["source"] = label;
    j["free_rank"] = k.free_rank;
    j["torsion"] = torsion;
    j["cokernel"] = k.str();
    emit(c, dump(j));
  } else if (c.format == "csv") {
    std::string t;
    for (size_t i = 0; i < torsion.size(); ++i) t += (i ? ";" : "") + torsion[i];
    emit(c, "schema_version,source,free_rank,torsion\n" + std::to_string(kReportSchemaVersion) + "," + csv_quoted(label) + "," +
                std::to_string(k.free_rank) + "," + csv_quoted(t) + "\n");
  } else {
    emit(c, k.str() + "\n");
  }
  return kExitOk;
}

int run_report_cmd(const MatrixSource& src, const Common& c, const ReportOptions& base) {
  if (!src.matrix_path.empty()) throw UsageError("report needs a --family");
  ReportOptions opt = base;
  opt.seed = c.seed;
  opt.q0 = BigInteger(src.q0);
  ReportRecord r = run_report(src.family.spec(), src.report_ring(), opt);
  if (c.format == "json") emit(c, report_to_json(r));
  else if (c.format == "csv") emit(c, report_csv_header() + report_to_csv(r));
  else emit(c, report_to_text(r));
  return kExitOk;
}

int run_conjecture(const std::string& id, long ceiling, size_t threads, const Common& c) {
  ReportOptions opt;
  opt.seed = c.seed;
  opt.threads = threads;
  auto vs = conjecture_suite(parse_conjecture(id), ceiling, opt);
  if (c.format == "json") emit(c, verdicts_to_json(vs));
  else if (c.format == "csv") emit(c, verdicts_to_csv(vs));
  else emit(c, verdicts_to_text(vs));
  return kExitOk;
}

int run_verify(const std::string& which, long ceiling, const Common& c) {
  TheoremSummary s = verify_theorems(parse_theorem(which), ceiling);
  if (c.format == "json") emit(c, theorem_summary_to_json(s));
  else if (c.format == "csv") emit(c, theorem_summary_to_csv(s));
  else emit(c, theorem_summary_to_text(s));
  return s.all_pass() ? kExitOk : kExitFailed;
}

int run_oracle(const FamilyFlags& f, const Common& c, size_t guard) {
  FamilySpec s = f.spec();
  EmbeddedGraph g = build_family_graph(s);
  MatchingSet ms = enumerate_matchings(g, {false, guard});
  LaurentPoly w = ms.total_weight.unit_normalized();
  if (c.format == "json") {
    ojson j;
    j["schema_version"] = kReportSchemaVersion;
    j["family"] = ojson::parse(family_spec_to_json(s));
    j["vertices"] = g.vertices.size();
    j["edges"] = g.edges.size();
    j["count"] = ms.count.get_str();
    j["weighted_count"] = w.str();
    emit(c, dump(j));
  } else if (c.format == "csv") {
    emit(c, "schema_version,family,vertices,edges,count,weighted_count\n" + std::to_string(kReportSchemaVersion) +
                "," + s.str() + "," + std::to_string(g.vertices.size()) + "," + std::to_string(g.edges.size()) +
                "," + ms.count.get_str() + ",\"" + w.str() + "\"\n");
  } else {
    emit(c, ms.count.get_str() + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kast: Kasteleyn and Gessel-Viennot matrices, their Smith forms and cokernels"};
  app.require_subcommand(1);
  const std::vector<std::string> all_formats = {"json", "csv", "text"};

  Common common;
  FamilyFlags family;
  MatrixSource source;
  bool decorated = false;

  auto* build = app.add_subcommand("build", "emit the family graph as JSON");
  family.add_to(build);
  common.add_to(build, {"json"});
  build->add_flag("--decorated", decorated, "emit the resolved, signed or oriented graph");

  auto* matrix = app.add_subcommand("matrix", "emit the family matrix in the text matrix format");
  source.add_to(matrix);
  common.add_to(matrix, {"text"});

  auto* snf = app.add_subcommand("snf", "Smith normal form of a family or matrix file");
  source.add_to(snf);
  common.add_to(snf, all_formats);

  auto* coker = app.add_subcommand("coker", "integer cokernel of a family or matrix file");
  source.add_to(coker);
  common.add_to(coker, all_formats);

  ReportOptions report_opt;
  auto* report = app.add_subcommand("report", "full report: invariants, verdicts and oracle");
  source.add_to(report);
  common.add_to(report, all_formats);
  report->add_option("--guard", report_opt.oracle_guard, "vertex guard for the brute-force oracle");

  std::string conjecture_id;
  long conjecture_ceiling = 8;
  size_t threads = 1;
  auto* conjecture = app.add_subcommand("conjecture", "run a conjecture suite");
  conjecture->add_option("--id", conjecture_id, "round, sqfree or q-minus-one")
      ->required()
      ->check(CLI::IsMember({"round", "sqfree", "q-minus-one"}));
  conjecture->add_option("--ceiling", conjecture_ceiling, "bound on a + b + c")->check(CLI::Range(3L, 30L));
  conjecture->add_option("--threads", threads, "worker threads; output does not depend on it")
      ->check(CLI::Range(size_t{1}, size_t{256}));
  common.add_to(conjecture, all_formats);

  std::string which;
  long verify_ceiling = 0;
  auto* verify = app.add_subcommand("verify", "check a theorem on all instances under a ceiling");
  verify->add_option("--which", which, "jt or aztec")->required()->check(CLI::IsMember({"jt", "aztec"}));
  auto* max_n = verify->add_option("--max-n", verify_ceiling, "aztec: largest order");
  auto* max_size = verify->add_option("--max-size", verify_ceiling, "jt: largest |lambda|");
  max_n->excludes(max_size);
  common.add_to(verify, all_formats);

  size_t oracle_guard = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force perfect matching count");
  family.add_to(oracle);
  common.add_to(oracle, all_formats);
  oracle->add_option("--guard", oracle_guard, "vertex guard; default from KASTELEYN_ORACLE_GUARD or 64");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return run_build(family, common, decorated);
    if (*matrix) {
      common.format = "text";
      return run_matrix(source, common);
    }
    if (*snf) return run_snf(source, common);
    if (*coker) return run_coker(source, common);
    if (*report) return run_report_cmd(source, common, report_opt);
    if (*conjecture) return run_conjecture(conjecture_id, conjecture_ceiling, threads, common);
    if (*verify) {
      if (verify_ceiling <= 0) verify_ceiling = which == "aztec" ? 5 : 4;
      return run_verify(which, verify_ceiling, common);
    }
    if (*oracle) return run_oracle(family, common, oracle_guard);
  } catch (const UsageError& e) {
    std::cerr << "kast: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kast: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "kast: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "kast: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
