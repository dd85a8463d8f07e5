#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kast/bigint.hpp"
#include "kast/families.hpp"

namespace kast {

inline constexpr int kReportSchemaVersion = 1;

// Report verdicts are Holds, Fails or Inconclusive. Skipped marks an oracle
// check that did not run or a suite tuple whose builders reject it.
enum class Verdict { Holds, Fails, Inconclusive, Skipped };
std::string verdict_name(Verdict v);

// integers: the matrix at q = 1 over Z. laurent: Z[q,q^-1]. rational-poly:
// Q[q,q^-1]. integers-at-q0: the matrix at q = q0 over Z.
enum class ReportRing { Integers, Laurent, RationalPoly, IntegersAtQ0 };
std::string report_ring_name(ReportRing r);
// Accepts the names above and the aliases z, zq, qq, q0.
ReportRing parse_report_ring(const std::string& s);

struct ReportOptions {
  BigInteger q0 = -1;               // evaluation point for integers-at-q0
  size_t oracle_guard = 0;          // 0: oracle_count_guard()
  uint64_t seed = 0;                // passed to the decorators
  size_t laurent_step_limit = 10000;
  size_t threads = 1;               // conjecture sweeps; output order is fixed
};

// Roundness diagnostics for one invariant factor: q-round factorization over
// the Laurent ring, smooth factorization over the integers.
struct FactorDiagnostic {
  std::string factor;
  std::string kind;  // "q-round" or "smooth"
  bool ok = false;
  std::string detail;
};

struct ReportRecord {
  FamilySpec spec;
  ReportRing ring = ReportRing::Integers;
  BigInteger q0 = 1;
  std::string matrix_mode;  // "bipartite" or "alternating"
  size_t vertices = 0;      // 0 when the family has no graph
  size_t rows = 0, cols = 0;
  std::string normal_form = "success";  // "success", "non-principal" or "inconclusive"
  std::string normal_form_detail;
  size_t free_rank = 0;
  std::vector<std::string> factors;  // normalized non-unit invariant factors
  std::vector<FactorDiagnostic> diagnostics;
  unsigned long smooth_bound = 0;
  Verdict round = Verdict::Inconclusive;
  std::string round_witness;
  Verdict squarefree = Verdict::Inconclusive;
  std::string squarefree_witness;
  Verdict oracle = Verdict::Skipped;
  std::string oracle_detail;
  std::string oracle_count;  // brute-force weighted count, unit-normalized
  std::string determinant;   // |det| or |Pf|, unit-normalized; empty if non-square
  double duration_ms = 0;
};

// Largest prime allowed in a round integer for the family: twice the sum of its
// size parameters (at least 7).
unsigned long round_prime_bound(const FamilySpec& spec);

ReportRecord run_report(const FamilySpec& spec, ReportRing ring, const ReportOptions& opt = {});

std::string report_to_json(const ReportRecord& r, int indent = 2);
std::string report_csv_header();
std::string report_to_csv(const ReportRecord& r);
std::string report_to_text(const ReportRecord& r);

enum class ConjectureId { Round, Sqfree, QMinusOne };
std::string conjecture_name(ConjectureId id);
ConjectureId parse_conjecture(const std::string& s);  // "round", "sqfree", "q-minus-one"

struct ConjectureVerdict {
  std::string conjecture;  // round, sqfree, q-minus-one-case-1/2/3
  std::string family;      // matrix family, e.g. "M(a,b,c;q)"
  std::string instance;    // parameters
  Verdict verdict = Verdict::Inconclusive;
  std::string ring;
  std::string witness;  // non-empty on Fails
  std::string detail;   // invariants, factorizations or the skip reason
};

// Enumerates the conjecture's matrix families over all tuples with
// a + b + c <= ceiling, in a fixed order.
std::vector<ConjectureVerdict> conjecture_suite(ConjectureId id, long ceiling = 8, const ReportOptions& opt = {});

// Re-checks a Fails verdict from its witness alone.
bool verify_conjecture_witness(const ConjectureVerdict& v, std::string* why = nullptr);

std::string verdicts_to_json(const std::vector<ConjectureVerdict>& vs, int indent = 2);
std::string verdicts_csv_header();
std::string verdicts_to_csv(const std::vector<ConjectureVerdict>& vs);
std::string verdicts_to_text(const std::vector<ConjectureVerdict>& vs);

enum class TheoremId { JacobiTrudi, Aztec };
std::string theorem_name(TheoremId id);
TheoremId parse_theorem(const std::string& s);  // "jt" or "aztec"

struct TheoremCheck {
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct TheoremSummary {
  TheoremId theorem = TheoremId::Aztec;
  long ceiling = 0;
  std::vector<TheoremCheck> checks;
  bool all_pass() const;
  size_t failures() const;
};

struct TheoremOptions {
  long max_mu = 2;             // jt: |mu| <= max_mu
  long max_a = 4;              // jt: number of variables
  long max_geometric = 5;      // aztec: graph-based check for n <= this
  long max_oracle = 4;         // aztec: brute-force count for n <= this
};

// jt: |lambda| <= ceiling; aztec: n <= ceiling.
TheoremSummary verify_theorems(TheoremId which, long ceiling, const TheoremOptions& opt = {});

std::string theorem_summary_to_json(const TheoremSummary& s, int indent = 2);
std::string theorem_summary_to_csv(const TheoremSummary& s);
std::string theorem_summary_to_text(const TheoremSummary& s);

}  // namespace kast
