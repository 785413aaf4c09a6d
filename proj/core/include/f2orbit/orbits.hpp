#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "f2orbit/actions.hpp"
#include "f2orbit/census.hpp"
#include "f2orbit/lattice.hpp"

namespace f2orbit {

/// Largest state dimension the engine will enumerate (dense visited bitmap
/// of 2^d bits, 32 MiB at the limit).
inline constexpr std::size_t kMaxEnumerationDim = 28;

struct EnumerationOptions {
  int threads = 0;  // 0: implementation default (all available workers)
};

/// Everything the engine needs about an action: state dimension, the
/// involutive generators in mask form, and the height functionals.
struct OrbitSystem {
  std::string descriptor;
  std::string kind;
  int n = 0;
  std::size_t dim = 0;
  std::vector<MaskMove> moves;
  std::vector<std::uint64_t> height_masks;

  static OrbitSystem of(const ActionSpec& spec);
  static OrbitSystem of(const LatticeSpec& spec);

  bool has_height() const noexcept { return !height_masks.empty(); }
  Height height(std::uint64_t state) const;
  std::uint64_t apply(std::size_t generator, std::uint64_t state) const { return moves[generator](state); }
};

/// Throws ResourceGuardError (with the memory the bitmap would need) when
/// dim exceeds `limit`.
void check_enumeration_guard(std::size_t dim, std::size_t limit = kMaxEnumerationDim);

OrbitCensus enumerate(const OrbitSystem& system, const EnumerationOptions& options = {});
OrbitCensus enumerate(const ActionSpec& spec, const EnumerationOptions& options = {});
OrbitCensus enumerate(const LatticeSpec& spec, const EnumerationOptions& options = {});

/// Census of the states of one height. Throws std::invalid_argument when
/// the height has the wrong length for the action.
OrbitCensus enumerate_stratum(const OrbitSystem& system, const Height& height, const EnumerationOptions& options = {});
OrbitCensus enumerate_stratum(const ActionSpec& spec, const Height& height, const EnumerationOptions& options = {});

/// The record of the orbit through `state`.
OrbitRecord orbit_of(const OrbitSystem& system, const F2Vector& state);
OrbitRecord orbit_of(const ActionSpec& spec, const F2Vector& state);
OrbitRecord orbit_of(const LatticeSpec& spec, const F2Vector& state);

/// Full partition as a per-state orbit label. Labels index the records of
/// the returned census. Guarded at 24 dimensions (4 bytes per state).
struct OrbitPartition {
  OrbitCensus census;
  std::vector<std::uint32_t> label;  // label[state] = record index
};

inline constexpr std::size_t kMaxPartitionDim = 24;

OrbitPartition partition(const OrbitSystem& system, const EnumerationOptions& options = {});

}  // namespace f2orbit
