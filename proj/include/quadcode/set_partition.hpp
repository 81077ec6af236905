// Set partitions of four tuple positions: the index set Pi(q) of the
// invariant pairing basis and of the orbit monomials.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace quadcode {

/// Equality pattern of a 4-tuple, stored as a restricted-growth string over
/// positions {0,1,2,3}: rgs[p] is the block of position p, blocks numbered by
/// first appearance (so rgs[0] == 0). Blocks ordered by minimum element.
class SetPartition {
 public:
  SetPartition() : rgs_{0, 0, 0, 0} {}

  /// Normalizes an arbitrary labeling (positions with equal labels share a block).
  static SetPartition from_labels(const std::array<int, 4>& labels);

  int block_count() const;
  int block_of(int pos) const { return rgs_[static_cast<size_t>(pos)]; }
  bool same_block(int a, int b) const {
    return rgs_[static_cast<size_t>(a)] == rgs_[static_cast<size_t>(b)];
  }

  /// Blocks as sorted position lists (1-based), e.g. "13,2,4".
  std::string to_string() const;

  /// Packed rgs, two bits per position; distinct per partition.
  uint8_t packed() const {
    return static_cast<uint8_t>(rgs_[0] | rgs_[1] << 2 | rgs_[2] << 4 | rgs_[3] << 6);
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::array<uint8_t, 4> rgs_;
};

/// Equality pattern of four letters.
SetPartition pattern_of(const std::array<int, 4>& letters);

/// Pattern of the position-permuted tuple: i ~ j in the result iff
/// perm[i] ~ perm[j] in p.
SetPartition permuted(const SetPartition& p, const std::array<int, 4>& perm);

/// Swaps the row pair (positions 1,2) with the column pair (positions 3,4).
inline constexpr std::array<int, 4> kRoleSwap{2, 3, 0, 1};

/// Pi(q): all partitions of the four positions into at most q blocks, in the
/// canonical order (ascending block count, then ascending display string).
/// Sizes: 8 for q=2, 14 for q=3, 15 for q>=4.
class PartitionSet {
 public:
  static PartitionSet for_q(int q);

  int q() const { return q_; }
  int size() const { return static_cast<int>(list_.size()); }
  const SetPartition& at(int idx) const { return list_[static_cast<size_t>(idx)]; }
  const std::string& name(int idx) const { return names_[static_cast<size_t>(idx)]; }

  /// Index in canonical order; -1 if the partition needs more than q blocks.
  int index_of(const SetPartition& p) const { return lookup_[p.packed()]; }

  /// Index of the pattern named by a display string such as "12,34".
  int index_of_name(const std::string& name) const;

 private:
  int q_ = 0;
  std::vector<SetPartition> list_;
  std::vector<std::string> names_;
  std::array<int, 256> lookup_{};
};

}  // namespace quadcode
