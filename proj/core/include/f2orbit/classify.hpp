#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2orbit/actions.hpp"
#include "f2orbit/bigcount.hpp"
#include "f2orbit/census.hpp"
#include "f2orbit/orbits.hpp"

namespace f2orbit {

/// -1 iff k = 1 mod 4, else +1. Requires k >= 1.
int epsilon(int k);

/// Number of orbits of the first action of order n, indexed by n+1:
/// 2, 6, 20, 52 for n+1 = 2..5 and 3*2^n beyond.
BigCount sharp(int n_plus_1);

enum class OrbitType { Trivial, Standard, Type1, Type2, Type3, Type4, Type5 };

const char* to_string(OrbitType t);
std::optional<OrbitType> parse_orbit_type(std::string_view text);

/// Aggregate line of a predicted census: `orbit_count` orbits of this type,
/// each of size `cardinality`.
struct PredictedRow {
  OrbitType type;
  BigCount cardinality;
  BigCount orbit_count;
};

struct PredictedOrbit {
  OrbitType type;
  BigCount cardinality;
  friend bool operator==(const PredictedOrbit&, const PredictedOrbit&) = default;
};

/// Closed-form census for the first or second action of order n >= 5.
class PredictedCensus {
 public:
  int n() const noexcept { return n_; }
  int k() const noexcept { return n_ / 2; }
  ActionKind kind() const noexcept { return kind_; }
  std::size_t state_dim() const noexcept { return state_dim_; }
  /// Number of height coordinates (n for the first action, k for the second).
  std::size_t height_size() const noexcept { return height_size_; }
  const std::vector<PredictedRow>& rows() const noexcept { return rows_; }

  /// Orbits of the stratum at `h`, grouped by type in table order.
  std::vector<PredictedOrbit> layout(const Height& h) const;

  BigCount total_orbits() const;
  /// Sum of cardinality times count; equals 2^state_dim for a sound table.
  BigCount total_states() const;

  friend PredictedCensus predict_first(int n);
  friend PredictedCensus predict_second(int n);

 private:
  int n_ = 0;
  ActionKind kind_ = ActionKind::First;
  std::size_t state_dim_ = 0;
  std::size_t height_size_ = 0;
  std::vector<PredictedRow> rows_;
};

/// Throw PredictionRefused for n < 5.
PredictedCensus predict_first(int n);
PredictedCensus predict_second(int n);

/// h-bar for even n = 2k: first k entries 1,0,1,0,..., last k entries 0.
Height first_distinguished_height(int n);
/// eta-bar for even n = 2k: k-1 ones followed by k mod 2.
Height second_distinguished_height(int n);

/// Tags each record with the unique predicted type of matching cardinality
/// in its stratum. Records with no match, or with matches of different
/// types, are reported through `problems`; with `problems == nullptr` the
/// first such record raises std::runtime_error.
OrbitCensus label_orbits(const OrbitCensus& census, const PredictedCensus& prediction,
                         std::vector<std::string>* problems = nullptr);

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string observed;
};

/// Consistency between the two tables: every first-action stratum S^h and
/// the second-action stratum at psi(h) carry the same labels, each label's
/// total size in S^h is 2^k times its size downstairs, and every
/// nontrivial orbit covers its image with degree 2^(k-1) or 2^k.
std::vector<Check> check_coherence(int n);

struct VerificationReport {
  int n = 0;
  ActionKind kind = ActionKind::First;
  std::string mode;  // "prediction" or "observed"
  std::vector<Check> checks;
  OrbitCensus census;  // labelled when a prediction applies
  double elapsed_seconds = 0.0;

  bool passed() const;
  std::string to_text() const;
};

/// Enumerates (n, kind) and diffs against the closed form when one exists.
/// For n < 5 the first action is compared with sharp(n+1) and the second
/// action is reported as observed; conjugate actions are checked for equal
/// orbit counts with their unconjugated partner.
VerificationReport verify(int n, ActionKind kind, const EnumerationOptions& options = {});

}  // namespace f2orbit
