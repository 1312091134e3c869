#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexconn/cuts.hpp"
#include "lexconn/graph.hpp"
#include "lexconn/invariants.hpp"
#include "lexconn/lexprod.hpp"

namespace lexconn {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TheoremId {
  thm21,
  thm21_complete,
  thm22,
  thm23,
  cor24,
  super_part1,
  super_part2,
  super_part3,
};

std::string_view to_string(TheoremId id);
/// Throws UsageError for unknown ids.
TheoremId parse_theorem_id(std::string_view s);

/// Edge probability as an exact fraction num/den.
struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  /// Accepts "a/b" or a decimal such as "0.25". Throws std::domain_error
  /// when the value is outside [0, 1] or malformed.
  static Probability parse(std::string_view text);
  std::string to_string() const;
};

/// Seeded 64-bit Mersenne Twister. Only raw engine output is used, so the
/// stream is identical on every conforming platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(const Probability& p);

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::size_t kExhaustiveMaxN1 = 6;
inline constexpr std::size_t kExhaustiveMaxN2 = 4;
inline constexpr std::size_t kRandomMaxProductOrder = 24;

enum class FamilyMode { exhaustive, random };
std::string_view to_string(FamilyMode m);

struct InstanceFamily {
  std::size_t n1_max = 4;
  std::size_t n2_max = 2;
  FamilyMode mode = FamilyMode::exhaustive;
  std::size_t sample_count = 100;
  std::uint64_t seed = 0;
  Probability edge_probability;

  /// Throws UsageError when the family exceeds the verification budget.
  void validate() const;
};

/// Graphs on n labeled vertices are indexed by an edge bitmask whose bit k
/// is the k-th pair (u, v), u < v, in lexicographic order.
std::uint64_t labeled_graph_count(std::size_t n);
Graph labeled_graph(std::size_t n, std::uint64_t mask);
/// All 2^C(n,2) labeled graphs in mask order; 1 <= n <= 6.
std::vector<Graph> enumerate_labeled_graphs(std::size_t n);

Graph random_graph(std::size_t n, const Probability& p, SeededRng& rng);
Graph random_graph(std::size_t n, const Probability& p, std::uint64_t seed);

using TheoremValue = std::variant<ExtendedNat, bool>;
std::string to_string(const TheoremValue& v);

struct DiscrepancyCertificate {
  TheoremId theorem_id;
  std::string g1;  // graph6
  std::string g2;  // graph6
  TheoremValue formula_value;
  TheoremValue oracle_value;
  CutCertificate witness;  // evaluated on the product
  std::optional<CutReading> reading;  // thm23 and cor24 only
  InvariantReport g1_invariants;
  InvariantReport g2_invariants;
};

/// Tally of the witnesses attached to lex_k1_connectivity results, for the
/// k1 theorems.
struct WitnessAudit {
  std::size_t finite_results = 0;
  std::size_t verified = 0;
  std::size_t oracle_fallbacks = 0;
};

struct VerificationReport {
  TheoremId theorem_id;
  CutReading reading = CutReading::min_cuts_only;
  InstanceFamily family;
  std::size_t total_pairs = 0;
  std::size_t instances_checked = 0;
  std::size_t skipped = 0;
  std::size_t agreements = 0;
  std::vector<DiscrepancyCertificate> discrepancies;
  std::optional<WitnessAudit> witness_audit;
  double wall_time_ms = 0;
};

/// Checks the theorem on every pair of the family that satisfies its
/// hypotheses, comparing the closed form with the brute-force oracle on the
/// constructed product. Pairs outside the hypotheses count as skipped.
VerificationReport verify_theorem(TheoremId id, const InstanceFamily& family,
                                  CutReading reading = CutReading::min_cuts_only);

/// Rebuilds the product from the embedded graph6 strings and re-derives the
/// witness flags, both values and the factor invariants. False on any
/// mismatch or parse failure.
bool validate_certificate(const DiscrepancyCertificate& cert);

}  // namespace lexconn
