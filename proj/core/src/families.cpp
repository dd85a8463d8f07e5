#include "kast/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "kast/aztec.hpp"
#include "kast/hexagon.hpp"
#include "kast/polygamy.hpp"
#include "kast/skew.hpp"

namespace kast {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::domain_error("negative partition part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::domain_error("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    size_t used = 0;
    long v = std::stol(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition part: " + item);
    parts.push_back(v);
  }
  return Partition(parts);
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

long Partition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<long> c;
  for (long i = 1; i <= part(1); ++i)
    c.push_back(static_cast<long>(std::count_if(parts_.begin(), parts_.end(), [&](long p) { return p >= i; })));
  return Partition(c);
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (size_t i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long left, long cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

template <class E>
struct NameTable {
  std::vector<std::pair<E, std::string>> entries;
  std::string name(E e) const {
    for (const auto& [k, v] : entries)
      if (k == e) return v;
    throw std::logic_error("unnamed enumerator");
  }
  E parse(const std::string& s, const char* what) const {
    for (const auto& [k, v] : entries)
      if (v == s) return k;
    throw std::invalid_argument(std::string("unknown ") + what + ": " + s);
  }
};

const NameTable<Variant> kVariants{{
    {Variant::PPBox, "ppbox"},
    {Variant::PPBoxQuotient, "ppbox-quotient"},
    {Variant::PPBoxImpossible, "ppbox-impossible"},
    {Variant::HexMinusTriangle, "hex-minus-triangle"},
    {Variant::SkewShape, "skew-shape"},
    {Variant::Aztec, "aztec"},
    {Variant::Delannoy, "delannoy"},
}};

const NameTable<SymmetryGroup> kGroups{{
    {SymmetryGroup::Trivial, "1"},
    {SymmetryGroup::Rho, "rho"},
    {SymmetryGroup::Kappa, "kappa"},
    {SymmetryGroup::Tau, "tau"},
    {SymmetryGroup::KappaTau, "kappa-tau"},
    {SymmetryGroup::RhoKappa, "rho-kappa"},
    {SymmetryGroup::RhoKappaTau, "rho-kappa-tau"},
    {SymmetryGroup::TauKappa, "tau-kappa"},
    {SymmetryGroup::TauRhoKappa, "tau-rho-kappa"},
    {SymmetryGroup::TauRho, "tau-rho"},
}};

const NameTable<WeightMode> kModes{{
    {WeightMode::None, "none"},
    {WeightMode::Cube, "cube"},
    {WeightMode::Orbit, "orbit"},
}};

bool is_hexagon_variant(Variant v) {
  return v == Variant::PPBox || v == Variant::PPBoxQuotient || v == Variant::PPBoxImpossible;
}

}  // namespace

std::string variant_name(Variant v) { return kVariants.name(v); }
Variant parse_variant(const std::string& s) { return kVariants.parse(s, "variant"); }
std::string group_name(SymmetryGroup g) { return kGroups.name(g); }
SymmetryGroup parse_group(const std::string& s) {
  return s == "trivial" ? SymmetryGroup::Trivial : kGroups.parse(s, "group");
}
std::string weight_mode_name(WeightMode m) { return kModes.name(m); }
WeightMode parse_weight_mode(const std::string& s) { return kModes.parse(s, "weight mode"); }

void FamilySpec::validate() const {
  if (a < 0 || b < 0 || c < 0 || n < 0) throw std::domain_error("parameters must be nonnegative");
  switch (variant) {
    case Variant::PPBox:
      if (group != SymmetryGroup::Trivial) throw std::domain_error("ppbox takes no group; use ppbox-quotient");
      [[fallthrough]];
    case Variant::PPBoxQuotient:
    case Variant::PPBoxImpossible: {
      if (a < 1 || b < 1 || c < 1) throw std::domain_error("hexagon dimensions must be positive");
      bool rho = group == SymmetryGroup::Rho || group == SymmetryGroup::RhoKappa ||
                 group == SymmetryGroup::RhoKappaTau || group == SymmetryGroup::TauRhoKappa ||
                 group == SymmetryGroup::TauRho;
      bool tau = group == SymmetryGroup::Tau || group == SymmetryGroup::KappaTau ||
                 group == SymmetryGroup::RhoKappaTau || group == SymmetryGroup::TauKappa ||
                 group == SymmetryGroup::TauRhoKappa || group == SymmetryGroup::TauRho;
      if (rho && !(a == b && b == c)) throw std::domain_error("rho requires a = b = c");
      if (tau && b != c) throw std::domain_error("tau requires b = c");
      break;
    }
    case Variant::HexMinusTriangle:
      if (a + d < 0 || b + d < 0 || c + d < 0) throw std::domain_error("hexagon sides must be nonnegative");
      break;
    case Variant::SkewShape:
      if (a < 1) throw std::domain_error("skew shapes need a >= 1");
      if (lambda.length() == 0) throw std::domain_error("lambda is empty");
      if (!lambda.contains(mu)) throw std::domain_error("mu is not contained in lambda");
      break;
    case Variant::Aztec:
    case Variant::Delannoy:
      if (n < 1) throw std::domain_error("order must be positive");
      break;
  }
  if (variant == Variant::Delannoy && weights != WeightMode::None)
    throw std::domain_error("delannoy matrices are unweighted");
  if (variant == Variant::Aztec && weights != WeightMode::None) throw std::domain_error("aztec graphs are unweighted");
}

std::string FamilySpec::str() const {
  std::string s = variant_name(variant);
  if (is_hexagon_variant(variant) && group != SymmetryGroup::Trivial) s += "[" + group_name(group) + "]";
  auto num = [](long x) { return std::to_string(x); };
  switch (variant) {
    case Variant::PPBox:
    case Variant::PPBoxQuotient:
    case Variant::PPBoxImpossible: s += "(" + num(a) + "," + num(b) + "," + num(c) + ")"; break;
    case Variant::HexMinusTriangle:
      s += "(" + num(a) + "," + num(b) + "," + num(c) + "," + num(d) + "," + num(e) + ")";
      break;
    case Variant::SkewShape: s += "(" + lambda.str() + "/" + mu.str() + ";a=" + num(a) + ")"; break;
    case Variant::Aztec:
    case Variant::Delannoy: s += "(" + num(n) + ")"; break;
  }
  if (weights != WeightMode::None) s += ";" + weight_mode_name(weights);
  if (wrong_parity) s += ";wrong-parity";
  return s;
}

FamilySpec FamilySpec::ppbox(long a, long b, long c, WeightMode w) {
  FamilySpec s;
  s.variant = Variant::PPBox;
  s.a = a, s.b = b, s.c = c, s.weights = w;
  return s;
}

FamilySpec FamilySpec::quotient(SymmetryGroup g, long a, long b, long c, WeightMode w) {
  FamilySpec s = ppbox(a, b, c, w);
  s.variant = Variant::PPBoxQuotient;
  s.group = g;
  return s;
}

FamilySpec FamilySpec::impossible(SymmetryGroup g, long a, long b, long c, WeightMode w) {
  FamilySpec s = quotient(g, a, b, c, w);
  s.variant = Variant::PPBoxImpossible;
  return s;
}

FamilySpec FamilySpec::hex_minus_triangle(long a, long b, long c, long d, long e) {
  FamilySpec s = ppbox(a, b, c);
  s.variant = Variant::HexMinusTriangle;
  s.d = d, s.e = e;
  return s;
}

FamilySpec FamilySpec::skew(Partition lambda, Partition mu, long a) {
  FamilySpec s;
  s.variant = Variant::SkewShape;
  s.a = a;
  s.lambda = std::move(lambda);
  s.mu = std::move(mu);
  s.weights = WeightMode::Cube;
  return s;
}

FamilySpec FamilySpec::aztec(long n) {
  FamilySpec s;
  s.variant = Variant::Aztec;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::delannoy(long n) {
  FamilySpec s;
  s.variant = Variant::Delannoy;
  s.n = n;
  return s;
}

std::string family_spec_to_json(const FamilySpec& s, int indent) {
  nlohmann::ordered_json j;
  j["variant"] = variant_name(s.variant);
  j["a"] = s.a;
  j["b"] = s.b;
  j["c"] = s.c;
  j["d"] = s.d;
  j["e"] = s.e;
  j["n"] = s.n;
  j["group"] = group_name(s.group);
  j["weights"] = weight_mode_name(s.weights);
  j["wrong_parity"] = s.wrong_parity;
  j["lambda"] = s.lambda.parts();
  j["mu"] = s.mu.parts();
  return j.dump(indent);
}

FamilySpec family_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("family spec: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("family spec must be a JSON object");
  try {
    FamilySpec s;
    s.variant = parse_variant(j.at("variant").get<std::string>());
    s.a = j.value("a", 0L);
    s.b = j.value("b", 0L);
    s.c = j.value("c", 0L);
    s.d = j.value("d", 0L);
    s.e = j.value("e", 0L);
    s.n = j.value("n", 0L);
    s.group = parse_group(j.value("group", std::string("1")));
    s.weights = parse_weight_mode(j.value("weights", std::string("none")));
    s.wrong_parity = j.value("wrong_parity", false);
    s.lambda = Partition(j.value("lambda", std::vector<long>{}));
    s.mu = Partition(j.value("mu", std::vector<long>{}));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("family spec: ") + e.what());
  }
}

EmbeddedGraph build_family_graph(const FamilySpec& spec) {
  spec.validate();
  switch (spec.variant) {
    case Variant::PPBox: {
      CellGraph z = hexagon_cells(spec.a, spec.b, spec.c);
      if (spec.weights != WeightMode::None) apply_cube_weights(z);
      return z.graph;
    }
    case Variant::PPBoxQuotient: return symmetry_quotient(spec);
    case Variant::PPBoxImpossible: return impossible_variant(spec);
    case Variant::HexMinusTriangle: {
      CellGraph z = hexagon_minus_triangle_cells(spec.a, spec.b, spec.c, spec.d, spec.e);
      if (spec.weights != WeightMode::None) apply_cube_weights(z);
      return z.graph;
    }
    case Variant::SkewShape: {
      EmbeddedGraph g = build_skew_graph(spec.lambda, spec.mu, spec.a);
      if (spec.weights == WeightMode::None)
        for (auto& e : g.edges) e.weight = 1;
      return g;
    }
    case Variant::Aztec: return build_aztec_graph(spec.n);
    case Variant::Delannoy: break;
  }
  throw std::domain_error("delannoy is a matrix family without a graph");
}

FamilyMatrix family_matrix(const FamilySpec& spec, uint64_t seed) {
  FamilyMatrix out;
  if (spec.variant == Variant::Delannoy) {
    spec.validate();
    Matrix<BigInteger> v = delannoy_matrix(spec.n);
    out.matrix = Matrix<LaurentPoly>(v.rows(), v.cols());
    for (size_t i = 0; i < v.rows(); ++i)
      for (size_t j = 0; j < v.cols(); ++j) out.matrix(i, j) = LaurentPoly(v(i, j));
    return out;
  }
  out.has_graph = true;
  out.graph = build_family_graph(spec);
  bool alternating = out.graph.has_polygamy() || !is_bipartite(out.graph);
  EmbeddedGraph mono = out.graph.has_polygamy() ? monogamous_resolution(out.graph) : out.graph;
  DecorationReport report;
  DecorationOptions opt{seed};
  if (alternating) {
    out.mode = MatrixMode::Alternating;
    for (auto& v : mono.vertices) v.color = Color::None;
    out.decorated = kasteleyn_orient(mono, opt, &report);
  } else {
    out.mode = MatrixMode::Bipartite;
    out.decorated = kasteleyn_percus_sign(mono, opt, &report);
  }
  out.odd_components = report.odd_components;
  out.matrix = adjacency_matrix(out.decorated, out.mode);
  return out;
}

}  // namespace kast
