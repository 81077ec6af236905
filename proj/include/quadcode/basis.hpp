// Representative basis family for the natural action of S_q on R^{q x q},
// and the exact pairing table of tensor squares against the pattern basis.
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "quadcode/set_partition.hpp"

namespace quadcode {

/// The ordered matrix lists B_1..B_k for a given q. Indices i, j are 1-based
/// throughout, matching the established naming B_i(j).
struct BasisFamily {
  int q = 0;
  std::vector<std::vector<Eigen::MatrixXi>> classes;

  int k() const { return static_cast<int>(classes.size()); }
  int dim(int i) const { return static_cast<int>(classes[static_cast<size_t>(i - 1)].size()); }
  const Eigen::MatrixXi& matrix(int i, int j) const {
    return classes[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
  std::vector<int> dims() const;
};

/// Builds the family: k = 4 classes of dimensions (2,3,1,1) for q >= 4, with
/// the last class dropped for q = 3 and the last class plus the third column
/// of the second one dropped for q = 2 (where that column vanishes).
BasisFamily build_basis(int q);

/// Exact value of (B_i(j) (x) B_i(h)) paired with the pattern P: the sum of
/// B_i(j)[a,b] * B_i(h)[c,e] over all letter 4-tuples (a,b,c,e) whose equality
/// pattern is P. Direct O(q^4) summation.
long long pairing_value(const BasisFamily& basis, int i, int j, int h, const SetPartition& P);

/// Complete pairing table over all (i, j, h, P).
class PairingTable {
 public:
  PairingTable(int q, PartitionSet patterns, std::vector<int> dims,
               std::vector<long long> values);

  int q() const { return q_; }
  const PartitionSet& patterns() const { return patterns_; }
  int k() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_[static_cast<size_t>(i - 1)]; }
  long long value(int i, int j, int h, int pattern_index) const;

 private:
  int q_;
  PartitionSet patterns_;
  std::vector<int> dims_;
  std::vector<size_t> class_offset_;
  std::vector<long long> values_;
};

PairingTable pairing_table(const BasisFamily& basis);

/// Comparison of the computed table against the built-in golden expansions
/// (coefficients polynomial in q, evaluated at the given q). Lines for basis
/// elements deleted by the truncation rules are reported as skipped.
struct ReferenceExpansionReport {
  struct Line {
    int i = 0, j = 0, h = 0;
    bool applicable = false;
    bool pass = false;
    std::string detail;
  };
  std::vector<Line> lines;
  bool all_pass = true;
  int checked = 0, skipped = 0;
};

ReferenceExpansionReport verify_reference_expansions(int q);

}  // namespace quadcode
