#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "kast/harness.hpp"
#include "kast/hexagon.hpp"
#include "kast/qfactor.hpp"

namespace kast {
namespace {

using G = SymmetryGroup;
using json = nlohmann::json;

LaurentPoly product(const std::vector<std::string>& factors) {
  LaurentPoly p(1);
  for (const auto& f : factors) p = p * LaurentPoly::parse(f);
  return p;
}

size_t count_lines(const std::string& s) { return static_cast<size_t>(std::count(s.begin(), s.end(), '\n')); }

size_t count_fields(const std::string& line) {
  size_t n = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++n;
  }
  return n;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(Ring, NamesAndAliasesRoundTrip) {
  for (auto r : {ReportRing::Integers, ReportRing::Laurent, ReportRing::RationalPoly, ReportRing::IntegersAtQ0})
    EXPECT_EQ(parse_report_ring(report_ring_name(r)), r);
  EXPECT_EQ(parse_report_ring("z"), ReportRing::Integers);
  EXPECT_EQ(parse_report_ring("zq"), ReportRing::Laurent);
  EXPECT_EQ(parse_report_ring("qq"), ReportRing::RationalPoly);
  EXPECT_EQ(parse_report_ring("q0"), ReportRing::IntegersAtQ0);
  EXPECT_THROW(parse_report_ring("reals"), std::invalid_argument);
  EXPECT_EQ(parse_conjecture("q-minus-one"), ConjectureId::QMinusOne);
  EXPECT_THROW(parse_conjecture("other"), std::invalid_argument);
  EXPECT_EQ(parse_theorem("jt"), TheoremId::JacobiTrudi);
}

TEST(Report, BoxTwoTwoTwoOverIntegers) {
  ReportRecord r = run_report(FamilySpec::ppbox(2, 2, 2), ReportRing::Integers);
  EXPECT_EQ(r.free_rank, 0u);
  EXPECT_EQ(r.factors, (std::vector<std::string>{"2", "10"}));
  EXPECT_EQ(r.round, Verdict::Holds);
  EXPECT_EQ(r.squarefree, Verdict::Holds);
  EXPECT_EQ(r.oracle, Verdict::Holds);
  EXPECT_EQ(r.oracle_count, "20");
  EXPECT_EQ(r.determinant, "20");
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[1].kind, "smooth");
  EXPECT_TRUE(r.diagnostics[1].ok);
}

TEST(Report, BoxTwoTwoTwoOverLaurentMatchesVolumeGeneratingFunction) {
  ReportRecord r = run_report(FamilySpec::ppbox(2, 2, 2, WeightMode::Cube), ReportRing::Laurent);
  EXPECT_EQ(r.normal_form, "success");
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(r.round, Verdict::Holds);
  EXPECT_EQ(r.squarefree, Verdict::Holds);
  EXPECT_EQ(r.oracle, Verdict::Holds);
  // The product of the invariant factors is the volume generating function.
  LaurentPoly gf = plane_partition_generating_function(2, 2, 2, G::Trivial, WeightMode::Cube);
  EXPECT_EQ(product(r.factors).unit_normalized(), gf.unit_normalized());
  // The first factor divides the second.
  LaurentPoly f0 = LaurentPoly::parse(r.factors[0]), f1 = LaurentPoly::parse(r.factors[1]);
  EXPECT_TRUE(f1.divisible_by(f0));
  // Both specialize at q = 1 to the integer invariants (2, 10).
  EXPECT_EQ(specialize_integer(f0, 1), 2);
  EXPECT_EQ(specialize_integer(f1, 1), 10);
}

TEST(Report, RationalRingAgreesWithLaurentWhenTheNormalFormExists) {
  for (auto spec : {FamilySpec::ppbox(1, 2, 3, WeightMode::Cube), FamilySpec::ppbox(2, 2, 2, WeightMode::Cube),
                    FamilySpec::quotient(G::Rho, 2, 2, 2, WeightMode::Cube)}) {
    ReportRecord a = run_report(spec, ReportRing::Laurent), b = run_report(spec, ReportRing::RationalPoly);
    ASSERT_EQ(a.normal_form, "success") << spec.str();
    EXPECT_EQ(a.factors, b.factors) << spec.str();
    EXPECT_EQ(a.free_rank, b.free_rank) << spec.str();
  }
}

TEST(Report, AztecFourOverIntegers) {
  ReportRecord r = run_report(FamilySpec::aztec(4), ReportRing::Integers);
  EXPECT_EQ(r.factors, (std::vector<std::string>{"2", "4", "8", "16"}));
  EXPECT_EQ(r.round, Verdict::Holds);
  EXPECT_EQ(r.squarefree, Verdict::Fails);
  std::string why;
  ConjectureVerdict v{"sqfree", "aztec", "4", Verdict::Fails, "integers", r.squarefree_witness, ""};
  EXPECT_TRUE(verify_conjecture_witness(v, &why)) << why;
  EXPECT_EQ(r.oracle_count, "1024");
}

TEST(Report, IntegersAtMinusOneCountsSelfComplementaryBoxes) {
  // Evaluating the volume generating function at q = -1 gives 4 for the 2x2x2 box.
  ReportRecord r = run_report(FamilySpec::ppbox(2, 2, 2, WeightMode::Cube), ReportRing::IntegersAtQ0);
  EXPECT_EQ(r.q0, -1);
  EXPECT_EQ(r.oracle, Verdict::Holds);
  EXPECT_EQ(r.oracle_count, "4");
  EXPECT_EQ(product(r.factors), LaurentPoly(4));
}

TEST(Report, DelannoyHasNoOracle) {
  ReportRecord r = run_report(FamilySpec::delannoy(3), ReportRing::Integers);
  EXPECT_EQ(r.oracle, Verdict::Skipped);
  EXPECT_EQ(r.factors, (std::vector<std::string>{"2", "4"}));
  EXPECT_EQ(r.vertices, 0u);
}

TEST(Report, OracleGuardDowngradesToSkipped) {
  ReportOptions opt;
  opt.oracle_guard = 4;
  ReportRecord r = run_report(FamilySpec::ppbox(2, 2, 2), ReportRing::Integers, opt);
  EXPECT_EQ(r.oracle, Verdict::Skipped);
  EXPECT_EQ(r.factors, (std::vector<std::string>{"2", "10"}));
}

TEST(Report, ImpossibleEnumerationIsSingular) {
  ReportRecord r = run_report(FamilySpec::impossible(G::Tau, 2, 2, 2, WeightMode::Cube), ReportRing::RationalPoly);
  EXPECT_EQ(r.free_rank, 1u);
  EXPECT_EQ(r.oracle, Verdict::Holds);
  EXPECT_EQ(r.oracle_count, "0");
}

TEST(Report, NonPrincipalNormalFormFailsRoundnessWithWitness) {
  ReportRecord r = run_report(FamilySpec::impossible(G::Tau, 2, 2, 2, WeightMode::Cube), ReportRing::Laurent);
  ASSERT_EQ(r.normal_form, "non-principal");
  EXPECT_EQ(r.round, Verdict::Fails);
  EXPECT_EQ(r.squarefree, Verdict::Inconclusive);
  ConjectureVerdict v{"round", "A'_tau", "(2,2,2)", Verdict::Fails, "laurent", r.round_witness, ""};
  std::string why;
  EXPECT_TRUE(verify_conjecture_witness(v, &why)) << why;
}

TEST(Report, SmoothBoundScalesWithSize) {
  EXPECT_EQ(round_prime_bound(FamilySpec::ppbox(1, 1, 1)), 7u);
  EXPECT_EQ(round_prime_bound(FamilySpec::ppbox(2, 3, 4)), 18u);
  EXPECT_EQ(round_prime_bound(FamilySpec::aztec(6)), 12u);
}

TEST(Report, JsonCarriesSchemaAndAllVerdicts) {
  ReportRecord r = run_report(FamilySpec::ppbox(2, 2, 2), ReportRing::Integers);
  json j = json::parse(report_to_json(r));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["invariant_factors"], json({"2", "10"}));
  for (const char* key : {"round", "squarefree", "oracle"}) {
    ASSERT_TRUE(j.contains(key)) << key;
    EXPECT_NE(j[key].get<std::string>(), "") << key;
  }
  EXPECT_EQ(j["family"]["variant"], "ppbox");
}

TEST(Report, CsvRowMatchesHeader) {
  ReportRecord r = run_report(FamilySpec::ppbox(1, 2, 2, WeightMode::Cube), ReportRing::Laurent);
  std::string header = report_csv_header(), row = report_to_csv(r);
  EXPECT_EQ(count_lines(row), 1u);
  EXPECT_EQ(count_fields(first_line(header)), count_fields(first_line(row)));
  EXPECT_EQ(first_line(header).substr(0, 15), "schema_version,");
}

TEST(Report, DeterministicModuloDuration) {
  auto strip = [](ReportRecord r) {
    r.duration_ms = 0;
    return report_to_json(r);
  };
  FamilySpec s = FamilySpec::quotient(G::Kappa, 2, 2, 2);
  EXPECT_EQ(strip(run_report(s, ReportRing::Integers)), strip(run_report(s, ReportRing::Integers)));
  EXPECT_NE(report_to_text(run_report(s, ReportRing::Integers)).find("oracle:"), std::string::npos);
}

// Property: the oracle field equals |det| for every small instance.
TEST(Report, OracleHoldsAcrossSmallFamilies) {
  std::vector<FamilySpec> specs = {FamilySpec::ppbox(1, 2, 3, WeightMode::Cube),
                                   FamilySpec::quotient(G::Tau, 2, 2, 2, WeightMode::Orbit),
                                   FamilySpec::quotient(G::RhoKappa, 2, 2, 2),
                                   FamilySpec::quotient(G::TauKappa, 2, 1, 1),
                                   FamilySpec::hex_minus_triangle(2, 2, 2, 1, 1),
                                   FamilySpec::skew(Partition{2, 1}, Partition{}, 3),
                                   FamilySpec::aztec(3)};
  for (const auto& s : specs)
    for (auto ring : {ReportRing::Integers, ReportRing::Laurent, ReportRing::IntegersAtQ0}) {
      ReportRecord r = run_report(s, ring);
      EXPECT_EQ(r.oracle, Verdict::Holds) << s.str() << " " << report_ring_name(ring) << " " << r.oracle_count
                                          << " vs " << r.determinant;
    }
}

TEST(Conjecture, RoundSuiteHoldsOnBoxes) {
  auto vs = conjecture_suite(ConjectureId::Round, 6);
  size_t boxes = 0;
  for (const auto& v : vs) {
    EXPECT_NE(v.verdict, Verdict::Inconclusive) << v.family << v.instance;
    if (v.family == "M(a,b,c;q)") {
      ++boxes;
      EXPECT_EQ(v.verdict, Verdict::Holds) << v.instance << " " << v.detail;
    }
  }
  EXPECT_EQ(boxes, 20u);  // triples of positive integers with sum <= 6
}

TEST(Conjecture, SqfreeSuiteHoldsOnBoxes) {
  for (const auto& v : conjecture_suite(ConjectureId::Sqfree, 6))
    if (v.family == "M(a,b,c;q)") EXPECT_EQ(v.verdict, Verdict::Holds) << v.instance << " " << v.detail;
}

TEST(Conjecture, EveryFailureCarriesAVerifiableWitness) {
  for (auto id : {ConjectureId::Round, ConjectureId::Sqfree, ConjectureId::QMinusOne})
    for (const auto& v : conjecture_suite(id, 6)) {
      if (v.verdict == Verdict::Skipped) EXPECT_FALSE(v.detail.empty()) << v.family << v.instance;
      if (v.verdict != Verdict::Fails) continue;
      ASSERT_FALSE(v.witness.empty()) << v.family << v.instance;
      std::string why;
      EXPECT_TRUE(verify_conjecture_witness(v, &why)) << v.witness << ": " << why;
    }
}

TEST(Conjecture, TamperedWitnessesAreRejected) {
  ConjectureVerdict v{"round", "x", "y", Verdict::Fails, "laurent", "q-round:1 + q", ""};
  EXPECT_FALSE(verify_conjecture_witness(v));
  v.witness = "smooth:30:7";
  EXPECT_FALSE(verify_conjecture_witness(v));
  v.witness = "smooth:22:7";
  EXPECT_TRUE(verify_conjecture_witness(v));
  v.witness = "squarefree-int:30";
  EXPECT_FALSE(verify_conjecture_witness(v));
  v.witness = "squarefree-poly:1 + 2*q + q^2";
  EXPECT_TRUE(verify_conjecture_witness(v));
  v.witness = "mismatch:a|a";
  EXPECT_FALSE(verify_conjecture_witness(v));
  v.witness = "no-snf:2:1,1:1:1 + q";
  EXPECT_FALSE(verify_conjecture_witness(v));
  v.witness = "nonsense";
  EXPECT_FALSE(verify_conjecture_witness(v));
  v.verdict = Verdict::Holds;
  v.witness = "smooth:22:7";
  EXPECT_FALSE(verify_conjecture_witness(v));
}

TEST(Conjecture, QMinusOneCaseOneAtTwoTwoTwo) {
  auto vs = conjecture_suite(ConjectureId::QMinusOne, 6);
  const ConjectureVerdict* found = nullptr;
  for (const auto& v : vs)
    if (v.conjecture == "q-minus-one-case-1" && v.family == "A_kappa vs M(q=-1)" && v.instance == "(2,2,2)") found = &v;
  ASSERT_NE(found, nullptr);
  EXPECT_NE(found->verdict, Verdict::Skipped);
  // The reading of the squared relation is printed with the verdict.
  EXPECT_NE(found->detail.find("reading:"), std::string::npos);
}

TEST(Conjecture, QMinusOneEmitsAnEntryForEveryTuple) {
  auto vs = conjecture_suite(ConjectureId::QMinusOne, 5);
  // 10 triples with sum <= 5, two groups for each of three cases.
  EXPECT_EQ(vs.size(), 10u * 6u);
}

TEST(Conjecture, ThreadCountDoesNotChangeOutput) {
  ReportOptions one, four;
  four.threads = 4;
  EXPECT_EQ(verdicts_to_csv(conjecture_suite(ConjectureId::Sqfree, 5, one)),
            verdicts_to_csv(conjecture_suite(ConjectureId::Sqfree, 5, four)));
}

TEST(Conjecture, SerializersAgreeOnCounts) {
  auto vs = conjecture_suite(ConjectureId::Sqfree, 5);
  json j = json::parse(verdicts_to_json(vs));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["verdicts"].size(), vs.size());
  size_t total = j["summary"]["holds"].get<size_t>() + j["summary"]["fails"].get<size_t>() +
                 j["summary"]["inconclusive"].get<size_t>() + j["summary"]["skipped"].get<size_t>();
  EXPECT_EQ(total, vs.size());
  std::string csv = verdicts_to_csv(vs);
  EXPECT_EQ(count_lines(csv), vs.size() + 1);
  EXPECT_EQ(count_lines(verdicts_to_text(vs)), vs.size());
}

TEST(Conjecture, CeilingBelowThreeIsRejected) {
  EXPECT_THROW(conjecture_suite(ConjectureId::Round, 2), std::domain_error);
}

TEST(Theorem, AztecBaseCase) {
  TheoremSummary s = verify_theorems(TheoremId::Aztec, 1);
  ASSERT_FALSE(s.checks.empty());
  EXPECT_TRUE(s.all_pass());
  EXPECT_NE(s.checks[0].detail.find("[2]"), std::string::npos) << s.checks[0].detail;
}

TEST(Theorem, AztecUpToFivePasses) {
  TheoremSummary s = verify_theorems(TheoremId::Aztec, 5);
  EXPECT_TRUE(s.all_pass()) << theorem_summary_to_text(s);
  EXPECT_EQ(s.checks.size(), 10u);
}

TEST(Theorem, JacobiTrudiTwoOneAgreesAcrossConstructions) {
  TheoremSummary s = verify_theorems(TheoremId::JacobiTrudi, 3);
  bool seen = false;
  for (const auto& c : s.checks) {
    EXPECT_TRUE(c.pass) << c.instance << " " << c.detail;
    if (c.instance == "lambda=2,1 mu= a=3") seen = true;
  }
  EXPECT_TRUE(seen);
}

TEST(Theorem, SummarySerializers) {
  TheoremSummary s = verify_theorems(TheoremId::Aztec, 2);
  json j = json::parse(theorem_summary_to_json(s));
  EXPECT_EQ(j["theorem"], "aztec");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["results"].size(), s.checks.size());
  EXPECT_EQ(count_lines(theorem_summary_to_csv(s)), s.checks.size() + 1);
}

}  // namespace
}  // namespace kast
