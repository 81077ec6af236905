#include "quadcode/orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadcode {

SetPartition column_pattern(const std::array<int, 4>& letters) { return pattern_of(letters); }

uint64_t orbit_key_of_code(const std::vector<Word>& distinct_words, const PartitionSet& patterns) {
  int r = static_cast<int>(distinct_words.size());
  if (r < 1 || r > 4) throw std::invalid_argument("orbit_key_of_code: need 1..4 distinct words");
  size_t n = distinct_words[0].size();
  uint64_t best = ~0ULL;
  std::array<int, 4> assign{};
  // All surjective assignments of the four tuple positions onto the words.
  for (assign[0] = 0; assign[0] < r; ++assign[0])
    for (assign[1] = 0; assign[1] < r; ++assign[1])
      for (assign[2] = 0; assign[2] < r; ++assign[2])
        for (assign[3] = 0; assign[3] < r; ++assign[3]) {
          int used = 0;
          for (int w = 0; w < r; ++w)
            if (assign[0] == w || assign[1] == w || assign[2] == w || assign[3] == w) ++used;
          if (used != r) continue;
          std::vector<int> exps(static_cast<size_t>(patterns.size()), 0);
          for (size_t i = 0; i < n; ++i) {
            std::array<int, 4> letters{};
            for (int pos = 0; pos < 4; ++pos)
              letters[static_cast<size_t>(pos)] =
                  distinct_words[static_cast<size_t>(assign[static_cast<size_t>(pos)])][i];
            ++exps[static_cast<size_t>(patterns.index_of(pattern_of(letters)))];
          }
          best = std::min(best, Monomial::from_exponents(exps).key);
        }
  return best;
}

CodeOrbit monomial_orbit(const Monomial& mu, int n, const PartitionSet& patterns) {
  if (mu.degree() != n) throw std::invalid_argument("monomial_orbit: monomial degree must be n");
  std::vector<int> exps = mu.exponents(patterns.size());

  std::array<Word, 4> tuple;
  for (auto& w : tuple) w.reserve(static_cast<size_t>(n));
  for (size_t v = 0; v < exps.size(); ++v) {
    const SetPartition& p = patterns.at(static_cast<int>(v));
    for (int rep = 0; rep < exps[v]; ++rep)
      for (int pos = 0; pos < 4; ++pos)
        tuple[static_cast<size_t>(pos)].push_back(static_cast<uint8_t>(p.block_of(pos) + 1));
  }

  std::vector<Word> distinct;
  for (const Word& w : tuple)
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);

  CodeOrbit orbit;
  orbit.cardinality = static_cast<int>(distinct.size());
  orbit.min_distance = -1;
  for (size_t a = 0; a < distinct.size(); ++a)
    for (size_t b = a + 1; b < distinct.size(); ++b) {
      int dist = 0;
      for (size_t i = 0; i < distinct[a].size(); ++i)
        if (distinct[a][i] != distinct[b][i]) ++dist;
      if (orbit.min_distance < 0 || dist < orbit.min_distance) orbit.min_distance = dist;
    }
  orbit.canonical_key = orbit_key_of_code(distinct, patterns);
  return orbit;
}

int OrbitCatalog::orbit_of_monomial(const Monomial& mu) const {
  auto it = monomial_to_orbit_.find(mu.key);
  if (it == monomial_to_orbit_.end())
    throw std::invalid_argument("OrbitCatalog: monomial outside the degree-n catalog");
  return it->second;
}

int OrbitCatalog::orbit_of_key(uint64_t key) const {
  auto it = key_to_orbit_.find(key);
  return it == key_to_orbit_.end() ? -1 : it->second;
}

int OrbitCatalog::pair_orbit(int t) const {
  if (t < 0 || t > n) throw std::invalid_argument("pair_orbit: t out of range");
  int all_equal = patterns.index_of_name("1234");
  std::vector<int> exps(static_cast<size_t>(patterns.size()), 0);
  if (t == 0) {
    exps[static_cast<size_t>(all_equal)] = n;
  } else {
    int split = patterns.index_of_name("12,34");
    exps[static_cast<size_t>(split)] = t;
    exps[static_cast<size_t>(all_equal)] = n - t;
  }
  return orbit_of_monomial(Monomial::from_exponents(exps));
}

bool OrbitCatalog::admissible(int orbit_index, int d) const {
  const CodeOrbit& o = orbits[static_cast<size_t>(orbit_index)];
  return o.cardinality <= 1 || o.min_distance >= d;
}

OrbitCatalog enumerate_orbits(int q, int n) {
  if (q < 2 || n < 1) throw std::invalid_argument("enumerate_orbits: need q >= 2, n >= 1");
  if (n > 15) throw std::invalid_argument("enumerate_orbits: n above the packed-monomial limit");
  OrbitCatalog cat;
  cat.q = q;
  cat.n = n;
  cat.patterns = PartitionSet::for_q(q);

  std::unordered_map<uint64_t, CodeOrbit> by_key;
  std::vector<std::pair<uint64_t, uint64_t>> mu_to_key;  // monomial -> orbit key

  std::vector<int> exps(static_cast<size_t>(cat.patterns.size()), 0);
  auto rec = [&](auto&& self, size_t var, int rest) -> void {
    if (var + 1 == exps.size()) {
      exps[var] = rest;
      Monomial mu = Monomial::from_exponents(exps);
      CodeOrbit orbit = monomial_orbit(mu, n, cat.patterns);
      by_key.emplace(orbit.canonical_key, orbit);
      mu_to_key.emplace_back(mu.key, orbit.canonical_key);
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      exps[var] = e;
      self(self, var + 1, rest - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, n);

  std::vector<uint64_t> keys;
  keys.reserve(by_key.size());
  for (const auto& [key, orbit] : by_key) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (uint64_t key : keys) {
    cat.key_to_orbit_.emplace(key, static_cast<int>(cat.orbits.size()));
    cat.orbits.push_back(by_key.at(key));
  }
  cat.orbits.push_back(CodeOrbit{kEmptyOrbitKey, 0, -1});
  cat.key_to_orbit_.emplace(kEmptyOrbitKey, cat.empty_orbit());

  cat.monomial_to_orbit_.reserve(mu_to_key.size());
  for (const auto& [mu, key] : mu_to_key)
    cat.monomial_to_orbit_.emplace(mu, cat.key_to_orbit_.at(key));
  return cat;
}

}  // namespace quadcode
