// Partitions, semistandard Young tableaux and the column-content count
// functions that collapse row-equivalence sums to polynomial size.
#pragma once

#include <functional>
#include <vector>

#include "quadcode/bigint.hpp"

namespace quadcode {

/// Integer partition, parts weakly decreasing and positive. The empty
/// partition (weight 0) is valid.
struct Partition {
  std::vector<int> parts;

  int weight() const;
  int height() const { return static_cast<int>(parts.size()); }
  /// 1-based part access; 0 beyond the height.
  int part(int t) const {
    return (t >= 1 && t <= height()) ? parts[static_cast<size_t>(t - 1)] : 0;
  }
  bool valid() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of n, lexicographically decreasing: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// All ordered k-tuples of nonnegative integers summing to n, lexicographically
/// ascending.
std::vector<std::vector<int>> compositions(int n, int k);

/// Dual (conjugate) partition: dual_j = #{parts >= j}.
Partition dual_partition(const Partition& p);

/// Filling of a Young shape, stored row-major (row 1 first).
struct Tableau {
  Partition shape;
  std::vector<int> entries;

  int at(int row, int col) const;  // 0-based row/col
  bool semistandard() const;
  /// Number of cells holding `value`.
  int count_entry(int value) const;
  /// Number of cells in row `row` (0-based) holding `value`.
  int count_in_row(int row, int value) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// All semistandard fillings with entries in [m] (rows weakly increasing,
/// columns strictly increasing), lexicographic by row-major entries. Empty
/// exactly when the shape is higher than m.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, int m);

/// Order of the column stabilizer: product over columns j of (height of j)!.
BigInt column_stabilizer_order(const Partition& shape);

/// All distinct tableaux obtained by rearranging entries within rows.
std::vector<Tableau> row_equivalents(const Tableau& t);

/// Count function kappa: for each column height t and pair of column words
/// v,w in [m]^t, the number of height-t columns carrying (v,w). Only nonzero
/// cells are stored.
struct CountFunction {
  struct Entry {
    int height = 0;
    std::vector<int> v, w;
    long long count = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Partition shape;
  int m = 0;
  std::vector<Entry> entries;  // sorted by (height, v, w)

  long long kappa(int height, const std::vector<int>& v, const std::vector<int>& w) const;
};

/// Enumerates every count function consistent with the row contents of tau and
/// sigma (both marginal systems), in a deterministic order. Column words may
/// contain repeated letters.
std::vector<CountFunction> count_functions(const Partition& shape, int m,
                                           const Tableau& tau, const Tableau& sigma);

/// Callback flavor of count_functions used by the polynomial engine.
void for_each_count_function(
    const Partition& shape, int m, const Tableau& tau, const Tableau& sigma,
    const std::function<void(const std::vector<CountFunction::Entry>&)>& fn);

/// Number of pairs (tau' ~ tau, sigma' ~ sigma) sharing the count function:
/// product over heights t of (lambda_t - lambda_{t+1})! / prod kappa!.
/// Throws if the per-height totals do not match the shape.
BigInt kappa_multiplicity(const Partition& shape, const CountFunction& kappa);

}  // namespace quadcode
