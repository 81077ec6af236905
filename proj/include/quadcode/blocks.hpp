// Representative index enumeration with the parity and distance filters, and
// assembly of the reduced blocks as exact integer linear forms in the orbit
// variables.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadcode/orbits.hpp"

namespace quadcode {

/// A tuple of tableaux, one per basis class.
using TableauTuple = std::vector<Tableau>;

/// One representative index: a composition of n over the classes, a partition
/// tuple, and the surviving tableau tuples. Survivors satisfy
///   - parity: #2-entries of the class-2 tableau plus #cells of the class-3
///     tableau is even, and
///   - distance: n minus the 1-entries of the class-1 and class-2 tableaux
///     lies in {0, d, d+1, ..., n}.
struct RepIndex {
  std::vector<int> bold_n;
  std::vector<Partition> bold_lambda;
  std::vector<TableauTuple> tuples;
  std::vector<int> tuple_distance;  // the filtered t per tuple
  bool trivial = false;             // the index that carries the empty-set row

  std::string label() const;
};

std::vector<RepIndex> representative_index(int q, int n, int d);

/// Linear form over SDP variables plus an affine constant (nonzero only at the
/// empty-set diagonal cell).
struct LinearEntry {
  std::map<int, BigInt> coeff;
  BigInt constant = 0;
};

struct Block {
  std::string label;
  int size = 0;
  bool augmented = false;
  std::vector<LinearEntry> entries;  // upper triangle, row-major
  BigInt divided_gcd = 1;            // recorded scaling

  LinearEntry& at(int r, int c);
  const LinearEntry& at(int r, int c) const;
};

struct VarInfo {
  std::string orbit_id;
  int cardinality = 0;
  int min_distance = -1;
};

struct SdpProblem {
  int q = 0, n = 0, d = 0;
  std::vector<VarInfo> vars;
  int objective_var = 0;
  BigInt objective_coeff = 0;  // maximize objective_coeff * y[objective_var]
  std::vector<Block> blocks;

  int max_block_size() const;
};

/// Variable index per catalog orbit: admissible nonempty orbits are numbered
/// in catalog order; inadmissible orbits and the empty orbit get -1.
std::vector<int> admissible_variable_map(const OrbitCatalog& catalog, int d);

Block assemble_block(int n, int d, const RepIndex& rep, const OrbitCatalog& catalog,
                     const PairingTable& table, const std::vector<int>& orbit_to_var,
                     DetCache* cache = nullptr);

/// Adds the empty-set row and column to the flagged block: (0,0) carries the
/// constant 1, (0, tuple) the coefficient C(n,t) q^n (q-1)^t on the orbit of
/// word pairs at distance t. Rejects non-flagged indices.
Block augment_empty_block(const Block& block, int q, int n, int d, const RepIndex& rep,
                          const OrbitCatalog& catalog, const std::vector<int>& orbit_to_var);

/// Full reduced problem: maximize q^n y(singleton) subject to every block PSD
/// and y >= 0, with the empty-set variable folded into constants and
/// inadmissible orbit variables eliminated. Blocks are gcd-normalized.
SdpProblem assemble_problem(int q, int n, int d, const OrbitCatalog& catalog,
                            const PairingTable& table, int threads = 0);
SdpProblem assemble_problem(int q, int n, int d, int threads = 0);

}  // namespace quadcode
