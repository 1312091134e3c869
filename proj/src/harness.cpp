#include "lexconn/harness.hpp"

#include <charconv>
#include <chrono>
#include <numeric>

#include "lexconn/connectivity.hpp"
#include "lexconn/graph_io.hpp"

namespace lexconn {

namespace {

constexpr std::pair<TheoremId, std::string_view> kTheoremNames[] = {
    {TheoremId::thm21, "thm21"},
    {TheoremId::thm21_complete, "thm21_complete"},
    {TheoremId::thm22, "thm22"},
    {TheoremId::thm23, "thm23"},
    {TheoremId::cor24, "cor24"},
    {TheoremId::super_part1, "super_part1"},
    {TheoremId::super_part2, "super_part2"},
    {TheoremId::super_part3, "super_part3"},
};

bool parse_u64(std::string_view s, std::uint64_t& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (auto [t, name] : kTheoremNames)
    if (t == id) return name;
  return "?";
}

TheoremId parse_theorem_id(std::string_view s) {
  for (auto [t, name] : kTheoremNames)
    if (name == s) return t;
  throw UsageError("unknown theorem id '" + std::string(s) + "'");
}

Probability Probability::parse(std::string_view text) {
  Probability p;
  auto bad = [&] { return std::domain_error("invalid probability '" + std::string(text) + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!parse_u64(text.substr(0, slash), p.num) || !parse_u64(text.substr(slash + 1), p.den))
      throw bad();
  } else {
    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (frac.size() > 18) throw bad();
    std::uint64_t w = 0, f = 0;
    if (!parse_u64(whole.empty() ? "0" : whole, w)) throw bad();
    if (!frac.empty() && !parse_u64(frac, f)) throw bad();
    if (whole.empty() && frac.empty()) throw bad();
    p.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) p.den *= 10;
    if (w > 1) throw bad();
    p.num = w * p.den + f;
  }
  if (p.den == 0 || p.num > p.den) throw bad();
  auto g = std::gcd(p.num, p.den);
  if (g > 1) {
    p.num /= g;
    p.den /= g;
  }
  if (p.num == 0) p.den = 1;
  return p;
}

std::string Probability::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  __extension__ using Wide = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<Wide>(next()) * bound) >> 64);
}

bool SeededRng::bernoulli(const Probability& p) { return below(p.den) < p.num; }

std::string_view to_string(FamilyMode m) {
  return m == FamilyMode::exhaustive ? "exhaustive" : "random";
}

void InstanceFamily::validate() const {
  if (n1_max == 0 || n2_max == 0) throw UsageError("n1_max and n2_max must be positive");
  if (mode == FamilyMode::exhaustive) {
    if (n1_max > kExhaustiveMaxN1 || n2_max > kExhaustiveMaxN2)
      throw UsageError("exhaustive mode is limited to n1_max <= " +
                       std::to_string(kExhaustiveMaxN1) + " and n2_max <= " +
                       std::to_string(kExhaustiveMaxN2));
    return;
  }
  if (sample_count == 0) throw UsageError("sample count must be positive");
  if (n1_max * n2_max > kRandomMaxProductOrder)
    throw UsageError("random mode is limited to n1_max * n2_max <= " +
                     std::to_string(kRandomMaxProductOrder));
  if (edge_probability.den == 0 || edge_probability.num > edge_probability.den)
    throw UsageError("edge probability outside [0, 1]");
}

std::uint64_t labeled_graph_count(std::size_t n) {
  if (n == 0 || n > kExhaustiveMaxN1) throw std::domain_error("labeled graphs: n outside 1..6");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  if (mask >= labeled_graph_count(n)) throw std::domain_error("labeled graphs: mask out of range");
  Graph g(n);
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1) g.add_edge(u, v);
  return g;
}

std::vector<Graph> enumerate_labeled_graphs(std::size_t n) {
  const auto count = labeled_graph_count(n);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(labeled_graph(n, mask));
  return out;
}

Graph random_graph(std::size_t n, const Probability& p, SeededRng& rng) {
  if (n == 0) throw std::domain_error("random_graph: n must be positive");
  if (p.den == 0 || p.num > p.den) throw std::domain_error("random_graph: invalid probability");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

Graph random_graph(std::size_t n, const Probability& p, std::uint64_t seed) {
  SeededRng rng(seed);
  return random_graph(n, p, rng);
}

std::string to_string(const TheoremValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return to_string(std::get<ExtendedNat>(v));
}

namespace {

// Facts about the first factor, computed on demand and reused across every
// second factor it is paired with.
class FirstFactor {
 public:
  explicit FirstFactor(const Graph& g) : g_(g) {
    connected_ = is_connected(g);
    complete_ = is_complete(g);
  }
  const Graph& graph() const { return g_; }
  bool connected() const { return connected_; }
  bool complete() const { return complete_; }
  bool connected_noncomplete() const { return connected_ && !complete_; }

  std::size_t kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(g_);
    return *kappa_;
  }
  ExtendedNat k1() {
    if (!k1_) k1_ = k1_connectivity(g_);
    return *k1_;
  }
  bool super() {
    if (!super_) super_ = is_super_connected(g_);
    return *super_;
  }

 private:
  const Graph& g_;
  bool connected_;
  bool complete_;
  std::optional<std::size_t> kappa_;
  std::optional<ExtendedNat> k1_;
  std::optional<bool> super_;
};

struct SecondFactor {
  const Graph* g;
  bool connected;
  std::size_t isolated;
};

SecondFactor describe(const Graph& g) { return {&g, is_connected(g), isolated_vertices(g).size()}; }

bool hypotheses_hold(TheoremId id, FirstFactor& f1, const SecondFactor& f2) {
  switch (id) {
    case TheoremId::thm21:
      return f1.connected_noncomplete();
    case TheoremId::thm21_complete:
      return f1.complete() && f1.graph().order() >= 2;
    case TheoremId::thm22:
      return f1.connected_noncomplete() && f1.k1() == ExtendedNat(f1.kappa());
    case TheoremId::thm23:
      return f1.connected_noncomplete() && ExtendedNat(f1.kappa()) < f1.k1() &&
             f1.k1().is_finite();
    case TheoremId::cor24:
      return f1.connected_noncomplete() && f1.k1().is_infinite();
    case TheoremId::super_part1:
      return f1.connected_noncomplete() && f2.g->order() >= 2 && f2.connected;
    case TheoremId::super_part2:
      return f1.connected_noncomplete() && !f2.connected && f2.isolated == 0;
    case TheoremId::super_part3:
      return f1.connected_noncomplete() && !f2.connected && f2.isolated >= 1 && f1.super();
  }
  return false;
}

bool is_k1_theorem(TheoremId id) {
  return id == TheoremId::thm22 || id == TheoremId::thm23 || id == TheoremId::cor24;
}

bool is_super_theorem(TheoremId id) {
  return id == TheoremId::super_part1 || id == TheoremId::super_part2 ||
         id == TheoremId::super_part3;
}

TheoremValue formula_side(TheoremId id, const Graph& g1, const Graph& g2, CutReading reading) {
  if (id == TheoremId::thm21 || id == TheoremId::thm21_complete)
    return ExtendedNat(lex_connectivity(g1, g2));
  if (is_k1_theorem(id)) return lex_k1_formula(g1, g2, reading).value;
  return lex_super_connected(g1, g2).super_connected;
}

TheoremValue oracle_side(TheoremId id, const Graph& product) {
  if (id == TheoremId::thm21 || id == TheoremId::thm21_complete)
    return ExtendedNat(vertex_connectivity_oracle(product));
  if (is_k1_theorem(id)) return k1_connectivity(product);
  return is_super_connected(product);
}

// The cut that backs the oracle's answer on the product.
CutCertificate oracle_witness(TheoremId id, const Graph& g1, const Graph& g2,
                              const Graph& product, CutReading reading) {
  const auto kappa = vertex_connectivity_oracle(product);
  if (is_k1_theorem(id)) {
    auto search = k1_search(product);
    if (search.witness) return certify_cut(product, *search.witness, kappa);
    // No k1-cut exists; show the formula's candidate failing instead.
    auto f = lex_k1_formula(g1, g2, reading);
    for (const auto& c : {f.augmented_cut, f.lifted_k1_cut})
      if (c) return certify_cut(product, *c, kappa);
    return certify_cut(product, {}, kappa);
  }
  if (is_super_theorem(id)) {
    if (auto bad = non_isolating_min_cut(product)) return *bad;
    if (is_connected(product) && !is_complete(product))
      return enumerate_min_vertex_cuts(product).front();
  }
  return certify_cut(product, first_min_vertex_cut_oracle(product), kappa);
}

InvariantReport factor_invariants(const Graph& g) {
  return compute_invariants(g, kAllInvariants);
}

std::optional<CutReading> reading_for(TheoremId id, CutReading reading) {
  if (id == TheoremId::thm23 || id == TheoremId::cor24) return reading;
  return std::nullopt;
}

class Verifier {
 public:
  Verifier(TheoremId id, CutReading reading, VerificationReport& report)
      : id_(id), reading_(reading), report_(report) {
    if (is_k1_theorem(id)) report_.witness_audit = WitnessAudit{};
  }

  void check(FirstFactor& f1, const SecondFactor& f2) {
    ++report_.total_pairs;
    if (!hypotheses_hold(id_, f1, f2)) {
      ++report_.skipped;
      return;
    }
    ++report_.instances_checked;
    const Graph& g1 = f1.graph();
    const Graph& g2 = *f2.g;
    const auto product = lex_product(g1, g2);
    const auto formula = formula_side(id_, g1, g2, reading_);
    const auto oracle = oracle_side(id_, product);

    if (report_.witness_audit) audit_witness(g1, g2, product, oracle);

    if (formula == oracle) {
      ++report_.agreements;
      return;
    }
    report_.discrepancies.push_back({id_, serialize_graph6(g1), serialize_graph6(g2), formula,
                                     oracle, oracle_witness(id_, g1, g2, product, reading_),
                                     reading_for(id_, reading_), factor_invariants(g1),
                                     factor_invariants(g2)});
  }

 private:
  void audit_witness(const Graph& g1, const Graph& g2, const Graph& product,
                     const TheoremValue& oracle) {
    auto& audit = *report_.witness_audit;
    const auto result = lex_k1_connectivity(g1, g2, reading_);
    if (result.branch == K1Branch::oracle_fallback) ++audit.oracle_fallbacks;
    if (result.value.is_infinite()) return;
    ++audit.finite_results;
    if (!result.witness) return;
    const auto cert = certify_cut(product, *result.witness, 0);
    const bool ok = cert.disconnects && cert.isolated_after.empty() &&
                    cert.cut.size() == result.value.value() &&
                    std::get<ExtendedNat>(oracle) <= result.value;
    if (ok) ++audit.verified;
  }

  TheoremId id_;
  CutReading reading_;
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_theorem(TheoremId id, const InstanceFamily& family, CutReading reading) {
  family.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = id;
  report.reading = reading;
  report.family = family;
  Verifier verifier(id, reading, report);

  if (family.mode == FamilyMode::exhaustive) {
    std::vector<Graph> second;
    for (std::size_t m = 1; m <= family.n2_max; ++m)
      for (auto& g : enumerate_labeled_graphs(m)) second.push_back(std::move(g));
    std::vector<SecondFactor> facts;
    facts.reserve(second.size());
    for (const auto& g : second) facts.push_back(describe(g));

    for (std::size_t n1 = 1; n1 <= family.n1_max; ++n1) {
      for (std::uint64_t mask = 0; mask < labeled_graph_count(n1); ++mask) {
        const auto g1 = labeled_graph(n1, mask);
        FirstFactor f1(g1);
        for (const auto& f2 : facts) verifier.check(f1, f2);
      }
    }
  } else {
    SeededRng rng(family.seed);
    for (std::size_t s = 0; s < family.sample_count; ++s) {
      const auto n1 = 1 + rng.below(family.n1_max);
      const auto m = 1 + rng.below(family.n2_max);
      const auto g1 = random_graph(n1, family.edge_probability, rng);
      const auto g2 = random_graph(m, family.edge_probability, rng);
      FirstFactor f1(g1);
      verifier.check(f1, describe(g2));
    }
  }

  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

bool validate_certificate(const DiscrepancyCertificate& cert) {
  try {
    if (cert.formula_value == cert.oracle_value) return false;
    if (cert.formula_value.index() != cert.oracle_value.index()) return false;
    if (reading_for(cert.theorem_id, CutReading::min_cuts_only).has_value() !=
        cert.reading.has_value())
      return false;
    const auto reading = cert.reading.value_or(CutReading::min_cuts_only);

    const auto g1 = parse_graph6(cert.g1);
    const auto g2 = parse_graph6(cert.g2);
    FirstFactor f1(g1);
    if (!hypotheses_hold(cert.theorem_id, f1, describe(g2))) return false;

    const auto product = lex_product(g1, g2);
    const auto kappa = vertex_connectivity_oracle(product);
    if (certify_cut(product, cert.witness.cut, kappa) != cert.witness) return false;
    if (oracle_side(cert.theorem_id, product) != cert.oracle_value) return false;
    if (formula_side(cert.theorem_id, g1, g2, reading) != cert.formula_value) return false;

    // The witness has to back the oracle's answer.
    const auto& w = cert.witness;
    if (auto nat = std::get_if<ExtendedNat>(&cert.oracle_value)) {
      if (cert.theorem_id == TheoremId::thm21 || cert.theorem_id == TheoremId::thm21_complete) {
        if (!w.is_minimum || ExtendedNat(w.cut.size()) != *nat) return false;
      } else if (nat->is_finite()) {
        if (!w.disconnects || !w.isolated_after.empty() || w.cut.size() != nat->value())
          return false;
      } else if (w.disconnects && w.isolated_after.empty()) {
        return false;
      }
    } else {
      const bool super = std::get<bool>(cert.oracle_value);
      if (!w.is_minimum) return false;
      if (!super && (!w.isolated_after.empty() || w.reduces_to_trivial)) return false;
      if (super && w.isolated_after.empty() && !w.reduces_to_trivial) return false;
    }

    if (factor_invariants(g1) != cert.g1_invariants) return false;
    if (factor_invariants(g2) != cert.g2_invariants) return false;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace lexconn
