#include "f2orbit/classify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "f2orbit/errors.hpp"

namespace f2orbit {

int epsilon(int k) {
  if (k < 1) throw std::invalid_argument("epsilon: k must be at least 1");
  return k % 4 == 1 ? -1 : 1;
}

BigCount sharp(int n_plus_1) {
  switch (n_plus_1) {
    case 2: return 2;
    case 3: return 6;
    case 4: return 20;
    case 5: return 52;
    default: break;
  }
  if (n_plus_1 < 2) throw std::invalid_argument("sharp: argument must be at least 2");
  return 3 * pow2(static_cast<unsigned>(n_plus_1 - 1));
}

namespace {

constexpr const char* kTypeNames[] = {"trivial", "standard", "type1", "type2", "type3", "type4", "type5"};

BigCount p2(int e) {
  if (e < 0) throw std::logic_error("negative power of two in a table entry");
  return pow2(static_cast<unsigned>(e));
}

std::size_t tri_dim(int order) { return static_cast<std::size_t>(order) * static_cast<std::size_t>(order + 1) / 2; }

Height height_from_bits(std::size_t size, std::uint64_t bits) { return Height{F2Vector::from_bits(size, bits)}; }

std::string cardinality_summary(const std::map<BigCount, BigCount>& counts) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [card, count] : counts) {
    out << (first ? "" : " ") << card << 'x' << count;
    first = false;
  }
  return out.str();
}

}  // namespace

const char* to_string(OrbitType t) { return kTypeNames[static_cast<int>(t)]; }

std::optional<OrbitType> parse_orbit_type(std::string_view text) {
  for (int i = 0; i < 7; ++i) {
    if (text == kTypeNames[i]) return static_cast<OrbitType>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Predictions

Height first_distinguished_height(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("first_distinguished_height: n must be even");
  Height h{F2Vector(static_cast<std::size_t>(n))};
  for (int i = 0; i < n / 2; i += 2) h.bits.set(static_cast<std::size_t>(i));
  return h;
}

Height second_distinguished_height(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("second_distinguished_height: n must be even");
  const int k = n / 2;
  Height h{F2Vector(static_cast<std::size_t>(k))};
  for (int i = 0; i < k - 1; ++i) h.bits.set(static_cast<std::size_t>(i));
  h.bits.set(static_cast<std::size_t>(k - 1), k % 2 == 1);
  return h;
}

PredictedCensus predict_first(int n) {
  if (n < 5) {
    throw PredictionRefused("no closed-form census for the first action with n=" + std::to_string(n) +
                            "; enumeration only");
  }
  PredictedCensus p;
  p.n_ = n;
  p.kind_ = ActionKind::First;
  p.state_dim_ = tri_dim(n);
  p.height_size_ = static_cast<std::size_t>(n);
  const int k = n / 2;
  const BigCount e = epsilon(k);
  using T = OrbitType;
  if (n % 2 == 1) {
    p.rows_ = {
        {T::Trivial, 1, p2(2 * k + 1)},
        {T::Standard, p2(2 * k * k + k - 1), p2(2 * k + 2) - p2(k + 2)},
        {T::Type1, (p2(k * k) - e) * p2(k * k + k - 1), p2(k + 1)},
        {T::Type2, (p2(k * k) - e) * (p2(k * k - 1) + e) * p2(k), p2(k + 1)},
    };
  } else {
    p.rows_ = {
        {T::Trivial, 1, p2(2 * k)},
        {T::Standard, p2(2 * k * k - k - 1), p2(2 * k + 1) - p2(k + 2)},
        {T::Type3, (p2(2 * k * (k - 1)) - 1) * p2(k - 1), p2(k + 1)},
        {T::Type4, (p2(k * (k - 1)) - 1) * p2(k * k - 1), p2(k)},
        {T::Type5, (p2(k * (k - 1)) + 1) * p2(k * k - 1), p2(k)},
    };
  }
  return p;
}

PredictedCensus predict_second(int n) {
  if (n < 5) {
    throw PredictionRefused("no closed-form census for the second action with n=" + std::to_string(n) +
                            "; enumeration only");
  }
  PredictedCensus p;
  p.n_ = n;
  p.kind_ = ActionKind::Second;
  p.state_dim_ = tri_dim(n - 1);
  const int k = n / 2;
  p.height_size_ = static_cast<std::size_t>(k);
  const BigCount e = epsilon(k);
  using T = OrbitType;
  if (n % 2 == 1) {
    p.rows_ = {
        {T::Trivial, 1, 1},
        {T::Standard, p2(2 * k * k), p2(k) - 1},
        {T::Type1, (p2(k * k) - e) * p2(k * k - 1), 1},
        {T::Type2, (p2(k * k) - e) * (p2(k * k - 1) + e), 1},
    };
  } else {
    const int a = k * (k - 1);
    p.rows_ = {
        {T::Trivial, 1, 1},
        {T::Standard, p2(2 * a), p2(k) - 2},
        {T::Type3, p2(2 * a) - 1, 1},
        {T::Type4, (p2(a) - 1) * p2(a - 1), 1},
        {T::Type5, (p2(a) + 1) * p2(a - 1), 1},
    };
  }
  return p;
}

std::vector<PredictedOrbit> PredictedCensus::layout(const Height& h) const {
  if (h.size() != height_size_) {
    throw std::invalid_argument("layout: height has " + std::to_string(h.size()) + " entries, expected " +
                                std::to_string(height_size_));
  }
  auto row = [&](OrbitType t) -> const BigCount& {
    for (const auto& r : rows_) {
      if (r.type == t) return r.cardinality;
    }
    throw std::logic_error("layout: type missing from table");
  };
  using T = OrbitType;
  std::vector<PredictedOrbit> out;
  const int k = n_ / 2;
  const bool odd = n_ % 2 == 1;
  if (kind_ == ActionKind::First) {
    if (h.is_symmetric()) {
      if (odd) {
        out = {{T::Type1, row(T::Type1)}, {T::Type2, row(T::Type2)}};
      } else {
        out = {{T::Type3, row(T::Type3)}, {T::Type3, row(T::Type3)}};
      }
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << k); ++t) out.push_back({T::Trivial, 1});
    } else if (!odd && Height{h.bits ^ first_distinguished_height(n_).bits}.is_symmetric()) {
      out = {{T::Type4, row(T::Type4)}, {T::Type5, row(T::Type5)}};
    } else {
      out = {{T::Standard, row(T::Standard)}, {T::Standard, row(T::Standard)}};
    }
  } else {
    if (h.bits.none()) {
      if (odd) {
        out = {{T::Type1, row(T::Type1)}, {T::Type2, row(T::Type2)}, {T::Trivial, 1}};
      } else {
        out = {{T::Type3, row(T::Type3)}, {T::Trivial, 1}};
      }
    } else if (!odd && h == second_distinguished_height(n_)) {
      out = {{T::Type4, row(T::Type4)}, {T::Type5, row(T::Type5)}};
    } else {
      out = {{T::Standard, row(T::Standard)}};
    }
  }
  return out;
}

BigCount PredictedCensus::total_orbits() const {
  BigCount total = 0;
  for (const auto& r : rows_) total += r.orbit_count;
  return total;
}

BigCount PredictedCensus::total_states() const {
  BigCount total = 0;
  for (const auto& r : rows_) total += r.cardinality * r.orbit_count;
  return total;
}

// ---------------------------------------------------------------------------
// Labelling

OrbitCensus label_orbits(const OrbitCensus& census, const PredictedCensus& prediction,
                         std::vector<std::string>* problems) {
  if (census.n != prediction.n() || census.kind != to_string(prediction.kind())) {
    throw std::invalid_argument("label_orbits: census " + census.descriptor + " does not match the prediction");
  }
  auto report = [&](const std::string& msg) {
    if (problems == nullptr) throw std::runtime_error("label_orbits: " + msg);
    problems->push_back(msg);
  };
  OrbitCensus out = census;
  std::optional<Height> cached_height;
  std::vector<PredictedOrbit> layout;
  for (auto& rec : out.records) {
    rec.type_label.clear();
    if (!rec.height) {
      report("record " + rec.representative.to_hex() + " has no height");
      continue;
    }
    if (cached_height != rec.height) {
      layout = prediction.layout(*rec.height);
      cached_height = rec.height;
    }
    std::set<OrbitType> types;
    for (const auto& p : layout) {
      if (p.cardinality == rec.cardinality) types.insert(p.type);
    }
    if (types.empty()) {
      report("no predicted orbit of cardinality " + to_decimal(rec.cardinality) + " at height " +
             rec.height->to_string() + " (representative " + rec.representative.to_hex() + ")");
    } else if (types.size() > 1) {
      report("cardinality " + to_decimal(rec.cardinality) + " at height " + rec.height->to_string() +
             " matches several types");
    } else {
      rec.type_label = to_string(*types.begin());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coherence of the two tables

std::vector<Check> check_coherence(int n) {
  if (n > 20) throw ResourceGuardError("check_coherence: 2^" + std::to_string(n) + " heights is too many");
  const PredictedCensus first = predict_first(n);
  const PredictedCensus second = predict_second(n);
  const int k = n / 2;
  const BigCount full = p2(k);
  const BigCount half = p2(k - 1);

  std::size_t label_bad = 0, mass_bad = 0, degree_bad = 0;
  std::string first_issue;
  std::set<std::uint64_t> reached;
  for (std::uint64_t hv = 0; hv < (std::uint64_t{1} << n); ++hv) {
    const Height h = height_from_bits(static_cast<std::size_t>(n), hv);
    const Height eta = psi_height(h);
    reached.insert(eta.bits.to_u64());
    std::map<OrbitType, BigCount> up, down;
    std::map<OrbitType, BigCount> down_card;
    for (const auto& o : first.layout(h)) up[o.type] += o.cardinality;
    for (const auto& o : second.layout(eta)) {
      down[o.type] += o.cardinality;
      down_card[o.type] = o.cardinality;
    }
    auto note = [&](const std::string& what) {
      if (first_issue.empty()) first_issue = what + " at h=" + h.to_string();
    };
    std::set<OrbitType> ul, dl;
    for (const auto& [t, c] : up) ul.insert(t);
    for (const auto& [t, c] : down) dl.insert(t);
    if (ul != dl) {
      ++label_bad;
      note("label mismatch");
      continue;
    }
    for (const auto& [t, c] : up) {
      if (c != full * down[t]) {
        ++mass_bad;
        note(std::string("mass mismatch for ") + to_string(t));
      }
    }
    for (const auto& o : first.layout(h)) {
      if (o.type == OrbitType::Trivial) continue;
      const BigCount& image = down_card[o.type];
      if (o.cardinality != full * image && o.cardinality != half * image) {
        ++degree_bad;
        note(std::string("covering degree off for ") + to_string(o.type));
      }
    }
  }
  const std::string where = first_issue.empty() ? "" : " (first: " + first_issue + ")";
  std::vector<Check> checks;
  checks.push_back({"coherence.labels", label_bad == 0, "0 strata with differing labels",
                    std::to_string(label_bad) + " strata with differing labels" + where});
  checks.push_back({"coherence.mass", mass_bad == 0, "every label covers 2^k times its image",
                    std::to_string(mass_bad) + " mismatches"});
  checks.push_back({"coherence.degree", degree_bad == 0, "each nontrivial orbit covers with degree 2^(k-1) or 2^k",
                    std::to_string(degree_bad) + " mismatches"});
  checks.push_back({"coherence.surjective", reached.size() == (std::size_t{1} << k),
                    std::to_string(std::size_t{1} << k) + " second-action heights reached",
                    std::to_string(reached.size()) + " reached"});
  return checks;
}

// ---------------------------------------------------------------------------
// Verification

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "verify " << to_string(kind) << " n=" << n << " (" << mode << " mode): " << (passed() ? "PASS" : "FAIL")
      << '\n';
  for (const auto& c : checks) {
    out << "  " << (c.pass ? "ok  " : "DIFF") << ' ' << c.name << ": expected " << c.expected << "; observed "
        << c.observed << '\n';
  }
  return out.str();
}

namespace {

std::map<BigCount, BigCount> observed_multiset(const OrbitCensus& census) {
  std::map<BigCount, BigCount> m;
  for (const auto& r : census.records) m[r.cardinality] += 1;
  return m;
}

void add_prediction_checks(VerificationReport& rep, const PredictedCensus& pred, BigCount claimed_total) {
  const OrbitCensus& census = rep.census;
  const BigCount space = pow2(static_cast<unsigned>(pred.state_dim()));
  rep.checks.push_back({"prediction.consistent",
                        pred.total_states() == space && pred.total_orbits() == claimed_total,
                        to_decimal(space) + " states in " + to_decimal(claimed_total) + " orbits",
                        to_decimal(pred.total_states()) + " states in " + to_decimal(pred.total_orbits()) + " orbits"});
  rep.checks.push_back({"orbit_count", BigCount(census.orbit_count()) == pred.total_orbits(),
                        to_decimal(pred.total_orbits()), std::to_string(census.orbit_count())});

  std::map<BigCount, BigCount> expected;
  for (const auto& r : pred.rows()) expected[r.cardinality] += r.orbit_count;
  const auto observed = observed_multiset(census);
  rep.checks.push_back({"cardinality_multiset", expected == observed, cardinality_summary(expected),
                        cardinality_summary(observed)});

  // Per-height layout.
  std::map<Height, std::vector<BigCount>> by_height;
  for (const auto& r : census.records) {
    if (r.height) by_height[*r.height].push_back(r.cardinality);
  }
  std::size_t bad = 0;
  std::string first_bad;
  for (auto& [h, cards] : by_height) {
    std::vector<BigCount> want;
    for (const auto& o : pred.layout(h)) want.push_back(o.cardinality);
    std::sort(want.begin(), want.end());
    std::sort(cards.begin(), cards.end());
    if (want != cards) {
      if (first_bad.empty()) first_bad = " (first at height " + h.to_string() + ")";
      ++bad;
    }
  }
  const std::size_t strata = std::size_t{1} << pred.height_size();
  rep.checks.push_back({"per_height_layout", bad == 0 && by_height.size() == strata,
                        std::to_string(strata) + " strata, all as tabulated",
                        std::to_string(by_height.size()) + " strata, " + std::to_string(bad) + " differ" + first_bad});

  std::vector<std::string> problems;
  rep.census = label_orbits(census, pred, &problems);
  std::map<std::string, BigCount> want_types, got_types;
  for (const auto& r : pred.rows()) want_types[to_string(r.type)] += r.orbit_count;
  for (const auto& r : rep.census.records) {
    if (!r.type_label.empty()) got_types[r.type_label] += 1;
  }
  auto fmt = [](const std::map<std::string, BigCount>& m) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : m) {
      out << (first ? "" : " ") << t << ':' << c;
      first = false;
    }
    return out.str();
  };
  std::string got = fmt(got_types);
  if (!problems.empty()) got += "; " + std::to_string(problems.size()) + " unlabelled (" + problems.front() + ")";
  rep.checks.push_back({"type_coverage", problems.empty() && want_types == got_types, fmt(want_types), got});
}

}  // namespace

VerificationReport verify(int n, ActionKind kind, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.n = n;
  rep.kind = kind;
  const ActionSpec spec(n, kind);
  check_enumeration_guard(spec.state_dim());
  rep.census = enumerate(spec, options);
  const std::string observed = std::to_string(rep.census.orbit_count());
  const BigCount space = pow2(static_cast<unsigned>(spec.state_dim()));
  const int k = n / 2;

  switch (kind) {
    case ActionKind::First:
      if (n >= 5) {
        rep.mode = "prediction";
        add_prediction_checks(rep, predict_first(n), sharp(n + 1));
      } else {
        rep.mode = "observed";
        rep.checks.push_back({"orbit_count", BigCount(rep.census.orbit_count()) == sharp(n + 1),
                              to_decimal(sharp(n + 1)), observed});
      }
      break;
    case ActionKind::Second:
      if (n >= 5) {
        rep.mode = "prediction";
        add_prediction_checks(rep, predict_second(n), p2(k) + 2);
      } else {
        rep.mode = "observed";
        rep.checks.push_back({"orbit_count", true, "no closed form", observed});
      }
      break;
    case ActionKind::FirstConjugate:
    case ActionKind::SecondConjugate: {
      rep.mode = n >= 5 ? "prediction" : "observed";
      const bool first = kind == ActionKind::FirstConjugate;
      BigCount expected;
      if (n >= 5) {
        expected = first ? sharp(n + 1) : p2(k) + 2;
      } else {
        expected = enumerate(ActionSpec(n, first ? ActionKind::First : ActionKind::Second), options).orbit_count();
      }
      rep.checks.push_back({"orbit_count_matches_unconjugated", BigCount(rep.census.orbit_count()) == expected,
                            to_decimal(expected), observed});
      break;
    }
  }
  rep.checks.push_back({"partition", rep.census.covered_states() == space, to_decimal(space),
                        to_decimal(rep.census.covered_states())});
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace f2orbit
