// H-orbits of codes with at most four words, reached through degree-n pattern
// monomials, with canonical identifiers and admissibility metadata.
#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "quadcode/polynomial.hpp"
#include "quadcode/set_partition.hpp"

namespace quadcode {

using Word = std::vector<uint8_t>;  // letters 1..q, length n

/// Equality pattern of the four letters at one coordinate.
SetPartition column_pattern(const std::array<int, 4>& letters);

inline constexpr uint64_t kEmptyOrbitKey = ~0ULL;

/// One orbit of codes of size <= 4 under simultaneous alphabet and coordinate
/// permutations. min_distance is -1 ("none") for codes of size <= 1.
struct CodeOrbit {
  uint64_t canonical_key = 0;
  int cardinality = 0;
  int min_distance = -1;
};

/// Canonical orbit key of a code given by its distinct words: the minimal
/// pattern-monomial key over all surjective assignments of the four tuple
/// positions onto the words.
uint64_t orbit_key_of_code(const std::vector<Word>& distinct_words, const PartitionSet& patterns);

/// Orbit of the code realized by a degree-n pattern monomial: words are built
/// column by column with one fixed letter per pattern block, then collapsed to
/// their set.
CodeOrbit monomial_orbit(const Monomial& mu, int n, const PartitionSet& patterns);

class OrbitCatalog {
 public:
  int q = 0, n = 0;
  PartitionSet patterns;
  std::vector<CodeOrbit> orbits;  // nonempty orbits sorted by key, empty orbit last

  int empty_orbit() const { return static_cast<int>(orbits.size()) - 1; }
  int orbit_of_monomial(const Monomial& mu) const;
  int orbit_of_key(uint64_t key) const;  // -1 if unknown
  /// Orbit of a singleton (t = 0) or of a word pair at Hamming distance t.
  int pair_orbit(int t) const;
  /// Admissible iff cardinality <= 1 or minimum distance >= d.
  bool admissible(int orbit_index, int d) const;

  const std::unordered_map<uint64_t, int>& monomial_map() const { return monomial_to_orbit_; }

  friend OrbitCatalog enumerate_orbits(int q, int n);

 private:
  std::unordered_map<uint64_t, int> monomial_to_orbit_;
  std::unordered_map<uint64_t, int> key_to_orbit_;
};

/// Builds the full catalog by mapping every degree-n monomial over Pi(q).
OrbitCatalog enumerate_orbits(int q, int n);

}  // namespace quadcode
