#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kast/graph.hpp"
#include "kast/kasteleyn.hpp"
#include "kast/laurent.hpp"
#include "kast/matrix.hpp"

namespace kast {

// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<long> parts);  // NOLINT(google-explicit-constructor)
  Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

  static Partition parse(const std::string& text);  // "2,2,1" or "" for the empty partition
  std::string str() const;

  const std::vector<long>& parts() const { return parts_; }
  size_t length() const { return parts_.size(); }
  long size() const;
  // i-th part, 1-based, zero past the end.
  long part(size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  Partition conjugate() const;
  bool contains(const Partition& mu) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<long> parts_;
};

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(long n);

enum class Variant { PPBox, PPBoxQuotient, PPBoxImpossible, HexMinusTriangle, SkewShape, Aztec, Delannoy };

// Subgroups of the hexagon symmetries generated by rho (120 degree rotation),
// kappa (180 degree rotation) and tau (reflection swapping the b and c sides).
enum class SymmetryGroup {
  Trivial,
  Rho,
  Kappa,
  Tau,
  KappaTau,
  RhoKappa,
  RhoKappaTau,  // <rho, kappa tau>
  TauKappa,
  TauRhoKappa,
  TauRho,
};

enum class WeightMode { None, Cube, Orbit };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);
std::string group_name(SymmetryGroup g);
SymmetryGroup parse_group(const std::string& s);
std::string weight_mode_name(WeightMode m);
WeightMode parse_weight_mode(const std::string& s);

struct FamilySpec {
  Variant variant = Variant::PPBox;
  long a = 0, b = 0, c = 0, d = 0, e = 0, n = 0;
  SymmetryGroup group = SymmetryGroup::Trivial;
  WeightMode weights = WeightMode::None;
  bool wrong_parity = false;
  Partition lambda, mu;

  // Throws std::domain_error on invalid parameters.
  void validate() const;
  // Short tag, e.g. "ppbox-quotient[tau](2,2,2);cube".
  std::string str() const;

  static FamilySpec ppbox(long a, long b, long c, WeightMode w = WeightMode::None);
  static FamilySpec quotient(SymmetryGroup g, long a, long b, long c, WeightMode w = WeightMode::None);
  static FamilySpec impossible(SymmetryGroup g, long a, long b, long c, WeightMode w = WeightMode::None);
  static FamilySpec hex_minus_triangle(long a, long b, long c, long d, long e);
  static FamilySpec skew(Partition lambda, Partition mu, long a);
  static FamilySpec aztec(long n);
  static FamilySpec delannoy(long n);
};

std::string family_spec_to_json(const FamilySpec& s, int indent = -1);
FamilySpec family_spec_from_json(const std::string& text);

// Graph of a graph-based family, undecorated, with weights per the spec.
// Delannoy has no graph and throws std::domain_error.
EmbeddedGraph build_family_graph(const FamilySpec& spec);

struct FamilyMatrix {
  Matrix<LaurentPoly> matrix;
  MatrixMode mode = MatrixMode::Bipartite;
  bool has_graph = false;
  EmbeddedGraph graph;     // as built, before resolution
  EmbeddedGraph decorated; // monogamous, signed or oriented
  std::vector<size_t> odd_components;
};

// Builds, resolves polygamy, decorates (Percus signs when bipartite, a flat
// orientation otherwise) and extracts the matrix.
FamilyMatrix family_matrix(const FamilySpec& spec, uint64_t seed = 0);

}  // namespace kast
