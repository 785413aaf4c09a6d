#include "f2orbit/orbits.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "f2orbit/errors.hpp"

namespace f2orbit {

// ---------------------------------------------------------------------------
// OrbitSystem

OrbitSystem OrbitSystem::of(const ActionSpec& spec) {
  OrbitSystem s;
  s.descriptor = spec.descriptor();
  s.kind = std::string(to_string(spec.kind()));
  s.n = spec.n();
  s.dim = spec.state_dim();
  s.moves.assign(spec.moves().begin(), spec.moves().end());
  s.height_masks.assign(spec.height_masks().begin(), spec.height_masks().end());
  return s;
}

OrbitSystem OrbitSystem::of(const LatticeSpec& spec) {
  OrbitSystem s;
  s.descriptor = spec.descriptor();
  s.kind = "graph";
  s.n = static_cast<int>(spec.dim());
  s.dim = spec.dim();
  s.moves = spec.moves();
  return s;
}

Height OrbitSystem::height(std::uint64_t state) const {
  Height h{F2Vector(height_masks.size())};
  for (std::size_t i = 0; i < height_masks.size(); ++i) {
    if (std::popcount(state & height_masks[i]) & 1) h.bits.set(i);
  }
  return h;
}

void check_enumeration_guard(std::size_t dim, std::size_t limit) {
  if (dim <= limit) return;
  std::ostringstream msg;
  msg << "state dimension " << dim << " exceeds the enumeration guard of " << limit << "; a visited bitmap of 2^"
      << dim << " bits would need ";
  if (dim >= 23 + 40) {
    msg << "more than 2^" << (dim - 23 - 40) << " TiB";
  } else if (dim >= 23 + 30) {
    msg << (std::uint64_t{1} << (dim - 23 - 30)) << " PiB";
  } else if (dim >= 23 + 10) {
    msg << (std::uint64_t{1} << (dim - 23 - 10)) << " GiB";
  } else {
    msg << (std::uint64_t{1} << (dim - 23)) << " MiB";
  }
  throw ResourceGuardError(msg.str());
}

namespace {

constexpr std::size_t kParallelFrontier = 1 << 14;
constexpr std::size_t kOrbitOfHashLimit = std::size_t{1} << 22;

int resolve_threads(const EnumerationOptions& options) {
  return options.threads > 0 ? options.threads : std::max(1, omp_get_max_threads());
}

class Bitmap {
 public:
  explicit Bitmap(std::size_t dim) : words_(std::max<std::size_t>(1, (std::size_t{1} << dim) / 64), 0) {}

  bool test(std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }

  // Returns true if the bit was already set.
  bool test_and_set(std::uint64_t x) {
    auto& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    const bool was = (w & bit) != 0;
    w |= bit;
    return was;
  }

  bool test_and_set_atomic(std::uint64_t x) {
    std::atomic_ref<std::uint64_t> w(words_[x >> 6]);
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w.load(std::memory_order_relaxed) & bit) return true;
    return (w.fetch_or(bit, std::memory_order_relaxed) & bit) != 0;
  }

  std::size_t word_count() const noexcept { return words_.size(); }
  std::uint64_t word(std::size_t i) const { return words_[i]; }

 private:
  std::vector<std::uint64_t> words_;
};

// Breadth-first flood of the orbit through `seed`; returns its size.
std::uint64_t flood(const OrbitSystem& sys, Bitmap& seen, std::uint32_t seed, int threads,
                    std::vector<std::uint32_t>& frontier, std::vector<std::uint32_t>& next) {
  const MaskMove* moves = sys.moves.data();
  const std::size_t g = sys.moves.size();
  seen.test_and_set(seed);
  std::uint64_t count = 1;
  frontier.assign(1, seed);
  while (!frontier.empty()) {
    next.clear();
    if (threads > 1 && frontier.size() >= kParallelFrontier) {
#pragma omp parallel num_threads(threads)
      {
        std::vector<std::uint32_t> local;
#pragma omp for schedule(static)
        for (std::size_t f = 0; f < frontier.size(); ++f) {
          const std::uint64_t x = frontier[f];
          for (std::size_t k = 0; k < g; ++k) {
            const std::uint64_t y = moves[k](x);
            if (!seen.test_and_set_atomic(y)) local.push_back(static_cast<std::uint32_t>(y));
          }
        }
#pragma omp critical
        next.insert(next.end(), local.begin(), local.end());
      }
    } else {
      for (const std::uint64_t x : frontier) {
        for (std::size_t k = 0; k < g; ++k) {
          const std::uint64_t y = moves[k](x);
          if (!seen.test_and_set(y)) next.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
    count += next.size();
    frontier.swap(next);
  }
  return count;
}

bool height_matches(const OrbitSystem& sys, std::uint64_t state, std::uint64_t target) {
  for (std::size_t i = 0; i < sys.height_masks.size(); ++i) {
    const std::uint64_t bit = std::popcount(state & sys.height_masks[i]) & 1;
    if (bit != ((target >> i) & 1U)) return false;
  }
  return true;
}

OrbitCensus census_header(const OrbitSystem& sys) {
  OrbitCensus c;
  c.descriptor = sys.descriptor;
  c.kind = sys.kind;
  c.n = sys.n;
  c.state_dim = sys.dim;
  return c;
}

// Shared driver: seeds are scanned in increasing order, so each seed is the
// minimum of its orbit (every smaller state already belongs to an earlier
// orbit). `filter` restricts seeds to a single height.
OrbitCensus run(const OrbitSystem& sys, const Height* filter, const EnumerationOptions& options) {
  check_enumeration_guard(sys.dim);
  const int threads = resolve_threads(options);
  std::uint64_t target = 0;
  if (filter != nullptr) {
    if (filter->size() != sys.height_masks.size()) {
      throw std::invalid_argument("height has " + std::to_string(filter->size()) + " entries; " + sys.descriptor +
                                  " expects " + std::to_string(sys.height_masks.size()));
    }
    for (std::size_t i = 0; i < filter->size(); ++i) {
      if ((*filter)[i]) target |= std::uint64_t{1} << i;
    }
  }

  OrbitCensus census = census_header(sys);
  Bitmap seen(sys.dim);
  std::vector<std::uint32_t> frontier, next;
  const std::uint64_t states = std::uint64_t{1} << sys.dim;
  BigCount covered = 0;
  for (std::size_t w = 0; w < seen.word_count(); ++w) {
    while (true) {
      const std::uint64_t free_bits = ~seen.word(w);
      if (free_bits == 0) break;
      const std::uint64_t seed = w * 64 + static_cast<std::uint64_t>(std::countr_zero(free_bits));
      if (seed >= states) break;
      if (filter != nullptr && !height_matches(sys, seed, target)) {
        seen.test_and_set(seed);  // not ours; mark so the scan moves on
        continue;
      }
      const std::uint64_t size = flood(sys, seen, static_cast<std::uint32_t>(seed), threads, frontier, next);
      OrbitRecord r{F2Vector::from_bits(sys.dim, seed), BigCount(size), std::nullopt, {}};
      if (sys.has_height()) r.height = sys.height(seed);
      covered += r.cardinality;
      census.records.push_back(std::move(r));
    }
  }
  census.total_states = filter != nullptr ? covered : pow2(static_cast<unsigned>(sys.dim));
  census.sort_records();
  return census;
}

}  // namespace

OrbitCensus enumerate(const OrbitSystem& system, const EnumerationOptions& options) {
  return run(system, nullptr, options);
}

OrbitCensus enumerate(const ActionSpec& spec, const EnumerationOptions& options) {
  return enumerate(OrbitSystem::of(spec), options);
}

OrbitCensus enumerate(const LatticeSpec& spec, const EnumerationOptions& options) {
  check_enumeration_guard(spec.dim());
  return enumerate(OrbitSystem::of(spec), options);
}

OrbitCensus enumerate_stratum(const OrbitSystem& system, const Height& height, const EnumerationOptions& options) {
  return run(system, &height, options);
}

OrbitCensus enumerate_stratum(const ActionSpec& spec, const Height& height, const EnumerationOptions& options) {
  return enumerate_stratum(OrbitSystem::of(spec), height, options);
}

OrbitRecord orbit_of(const OrbitSystem& sys, const F2Vector& state) {
  if (state.dim() != sys.dim) {
    throw std::invalid_argument("orbit_of: state has dimension " + std::to_string(state.dim()) + ", expected " +
                                std::to_string(sys.dim));
  }
  const std::uint64_t start = state.to_u64();
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> frontier{start}, next;
  std::uint64_t lowest = start;
  bool overflow = false;
  while (!frontier.empty() && !overflow) {
    next.clear();
    for (auto x : frontier) {
      for (const auto& mv : sys.moves) {
        const auto y = mv(x);
        if (seen.insert(y).second) {
          next.push_back(y);
          lowest = std::min(lowest, y);
        }
      }
    }
    frontier.swap(next);
    overflow = seen.size() > kOrbitOfHashLimit;
  }

  OrbitRecord r;
  if (!overflow) {
    r.cardinality = BigCount(seen.size());
  } else {
    check_enumeration_guard(sys.dim);
    seen.clear();
    Bitmap bits(sys.dim);
    std::vector<std::uint32_t> f, nx;
    r.cardinality = BigCount(flood(sys, bits, static_cast<std::uint32_t>(start), 1, f, nx));
    for (std::size_t w = 0; w < bits.word_count(); ++w) {
      if (bits.word(w) != 0) {
        lowest = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits.word(w)));
        break;
      }
    }
  }
  r.representative = F2Vector::from_bits(sys.dim, lowest);
  if (sys.has_height()) r.height = sys.height(start);
  return r;
}

OrbitRecord orbit_of(const ActionSpec& spec, const F2Vector& state) { return orbit_of(OrbitSystem::of(spec), state); }

OrbitRecord orbit_of(const LatticeSpec& spec, const F2Vector& state) {
  return orbit_of(OrbitSystem::of(spec), state);
}

OrbitPartition partition(const OrbitSystem& sys, const EnumerationOptions& options) {
  check_enumeration_guard(sys.dim, kMaxPartitionDim);
  OrbitPartition out;
  out.census = enumerate(sys, options);
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  out.label.assign(std::size_t{1} << sys.dim, kUnset);
  std::vector<std::uint64_t> frontier, next;
  for (std::size_t r = 0; r < out.census.records.size(); ++r) {
    const std::uint64_t seed = out.census.records[r].representative.to_u64();
    out.label[seed] = static_cast<std::uint32_t>(r);
    frontier.assign(1, seed);
    while (!frontier.empty()) {
      next.clear();
      for (auto x : frontier) {
        for (const auto& mv : sys.moves) {
          const auto y = mv(x);
          if (out.label[y] == kUnset) {
            out.label[y] = static_cast<std::uint32_t>(r);
            next.push_back(y);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return out;
}

}  // namespace f2orbit
