#include "quadcode/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadcode {

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  Monomial m;
  for (size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] < 0 || exps[v] > 15) throw std::invalid_argument("Monomial: exponent out of range");
    m.key |= static_cast<uint64_t>(exps[v]) << (4 * (14 - static_cast<int>(v)));
  }
  return m;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> exps(static_cast<size_t>(nvars));
  for (int v = 0; v < nvars; ++v) exps[static_cast<size_t>(v)] = static_cast<int>(key >> (4 * (14 - v)) & 0xF);
  return exps;
}

int Monomial::degree() const {
  int d = 0;
  for (uint64_t k = key; k != 0; k >>= 4) d += static_cast<int>(k & 0xF);
  return d;
}

Polynomial Polynomial::constant(BigInt c) {
  Polynomial p;
  p.add_term(Monomial::one(), c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m.key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [key, c] : o.terms_) add_term(Monomial{key}, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [key, c] : o.terms_) add_term(Monomial{key}, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  const Polynomial& small = term_count() <= o.term_count() ? *this : o;
  const Polynomial& large = term_count() <= o.term_count() ? o : *this;
  for (const auto& [ka, ca] : small.terms_)
    for (const auto& [kb, cb] : large.terms_) out.add_term(Monomial{ka + kb}, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

const BigInt* Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m.key);
  return it == terms_.end() ? nullptr : &it->second;
}

bool Polynomial::homogeneous_of_degree(int d) const {
  for (const auto& [key, c] : terms_)
    if (Monomial{key}.degree() != d) return false;
  return true;
}

int Polynomial::max_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, Monomial{key}.degree());
  return d;
}

std::vector<std::pair<Monomial, BigInt>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, BigInt>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(Monomial{key}, c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.key < b.first.key; });
  return out;
}

LinearForm linear_form(const PairingTable& table, int i, int j, int h) {
  LinearForm f;
  f.coeff.resize(static_cast<size_t>(table.patterns().size()));
  for (int p = 0; p < table.patterns().size(); ++p)
    f.coeff[static_cast<size_t>(p)] = table.value(i, j, h, p);
  return f;
}

Polynomial to_polynomial(const LinearForm& f) {
  Polynomial p;
  for (size_t v = 0; v < f.coeff.size(); ++v)
    if (f.coeff[v] != 0) p.add_term(Monomial::variable(static_cast<int>(v)), f.coeff[v]);
  return p;
}

Polynomial determinant_of_forms(const std::vector<std::vector<LinearForm>>& entries) {
  size_t t = entries.size();
  if (t > 4) throw std::invalid_argument("determinant_of_forms: order above 4 not supported");
  for (const auto& row : entries)
    if (row.size() != t) throw std::invalid_argument("determinant_of_forms: matrix not square");
  Polynomial det;
  std::vector<int> perm(t);
  for (size_t i = 0; i < t; ++i) perm[i] = static_cast<int>(i);
  if (t == 0) return Polynomial::constant(1);
  do {
    int sgn = 1;
    for (size_t a = 0; a < t; ++a)
      for (size_t b = a + 1; b < t; ++b)
        if (perm[a] > perm[b]) sgn = -sgn;
    Polynomial prod = Polynomial::constant(sgn);
    for (size_t r = 0; r < t; ++r)
      prod = prod * to_polynomial(entries[r][static_cast<size_t>(perm[r])]);
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Polynomial* DetCache::find(uint32_t key) {
  auto it = map_.find(key);
  return it == map_.end() ? nullptr : &it->second;
}

void DetCache::store(uint32_t key, Polynomial value) { map_.emplace(key, std::move(value)); }

namespace {

uint32_t det_key(int i, int t, const std::vector<int>& v, const std::vector<int>& w) {
  uint32_t key = static_cast<uint32_t>(i) << 28 | static_cast<uint32_t>(t) << 24;
  for (int a = 0; a < t; ++a) {
    key |= static_cast<uint32_t>(v[static_cast<size_t>(a)] - 1) << (2 * a + 16);
    key |= static_cast<uint32_t>(w[static_cast<size_t>(a)] - 1) << (2 * a);
  }
  return key;
}

bool has_repeat(const std::vector<int>& word) {
  for (size_t a = 0; a < word.size(); ++a)
    for (size_t b = a + 1; b < word.size(); ++b)
      if (word[a] == word[b]) return true;
  return false;
}

// det of the t x t matrix with (a,b) entry B_i(v_a) (x) B_i(w_b) in the dual
// pattern basis. Zero polynomial when a word repeats a letter.
const Polynomial& column_determinant(const PairingTable& table, int i,
                                     const CountFunction::Entry& e, DetCache& cache) {
  uint32_t key = det_key(i, e.height, e.v, e.w);
  if (Polynomial* hit = cache.find(key)) return *hit;
  Polynomial det;
  if (!has_repeat(e.v) && !has_repeat(e.w)) {
    std::vector<std::vector<LinearForm>> entries(static_cast<size_t>(e.height));
    for (int a = 0; a < e.height; ++a) {
      entries[static_cast<size_t>(a)].resize(static_cast<size_t>(e.height));
      for (int b = 0; b < e.height; ++b)
        entries[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            linear_form(table, i, e.v[static_cast<size_t>(a)], e.w[static_cast<size_t>(b)]);
    }
    det = determinant_of_forms(entries);
  }
  cache.store(key, std::move(det));
  return *cache.find(key);
}

}  // namespace

Polynomial pair_polynomial(const PairingTable& table, int i, const Partition& lambda,
                           const Tableau& tau, const Tableau& sigma, DetCache* cache) {
  DetCache local;
  DetCache& dets = cache ? *cache : local;
  Polynomial acc;
  for_each_count_function(lambda, table.dim(i), tau, sigma,
                          [&](const std::vector<CountFunction::Entry>& entries) {
                            Polynomial term = Polynomial::constant(1);
                            for (const CountFunction::Entry& e : entries) {
                              const Polynomial& det = column_determinant(table, i, e, dets);
                              if (det.is_zero()) return;  // whole term vanishes
                              for (long long c = 0; c < e.count; ++c) term = term * det;
                            }
                            CountFunction k{lambda, table.dim(i), entries};
                            term *= kappa_multiplicity(lambda, k);
                            acc += term;
                          });
  acc *= column_stabilizer_order(lambda);
  return acc;
}

Polynomial pair_polynomial_bruteforce(const PairingTable& table, int i, const Partition& lambda,
                                      const Tableau& tau, const Tableau& sigma, int limit) {
  if (lambda.weight() > limit)
    throw std::invalid_argument("pair_polynomial_bruteforce: weight exceeds the oracle limit");

  // Column cells as (row, col) lists, then all per-column permutation pairs.
  Partition dual = dual_partition(lambda);
  int ncols = lambda.part(1);
  std::vector<std::vector<int>> columns(static_cast<size_t>(ncols));
  for (int c = 0; c < ncols; ++c)
    for (int r = 0; r < dual.part(c + 1); ++r) columns[static_cast<size_t>(c)].push_back(r);

  struct ColPerm {
    std::vector<std::vector<int>> maps;  // per column: row -> row
    std::vector<int> signs;
  };
  ColPerm perms;
  perms.maps.resize(columns.size());
  std::vector<std::vector<std::pair<std::vector<int>, int>>> per_column;
  for (const auto& col : columns) {
    std::vector<int> p(col.size());
    for (size_t r = 0; r < col.size(); ++r) p[r] = static_cast<int>(r);
    std::vector<std::pair<std::vector<int>, int>> list;
    do {
      int sgn = 1;
      for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
          if (p[a] > p[b]) sgn = -sgn;
      list.emplace_back(p, sgn);
    } while (std::next_permutation(p.begin(), p.end()));
    per_column.push_back(std::move(list));
  }

  // Flatten the per-column choices into a list of column permutations of the
  // whole shape, with signs.
  std::vector<std::pair<std::vector<std::vector<int>>, int>> group;
  std::vector<size_t> pick(per_column.size(), 0);
  while (true) {
    std::vector<std::vector<int>> maps;
    int sgn = 1;
    for (size_t c = 0; c < per_column.size(); ++c) {
      maps.push_back(per_column[c][pick[c]].first);
      sgn *= per_column[c][pick[c]].second;
    }
    group.emplace_back(std::move(maps), sgn);
    size_t c = 0;
    for (; c < pick.size(); ++c) {
      if (++pick[c] < per_column[c].size()) break;
      pick[c] = 0;
    }
    if (c == pick.size()) break;
  }
  if (per_column.empty()) group.emplace_back(std::vector<std::vector<int>>{}, 1);

  auto entry_after = [&](const Tableau& t, const std::vector<std::vector<int>>& maps, int row,
                         int col) {
    // Value at cell (row, col) after composing with the column permutation.
    int target_row = maps.empty() ? row : maps[static_cast<size_t>(col)][static_cast<size_t>(row)];
    return t.at(target_row, col);
  };

  Polynomial acc;
  for (const Tableau& tp : row_equivalents(tau))
    for (const Tableau& sp : row_equivalents(sigma))
      for (const auto& [cmap, csgn] : group)
        for (const auto& [dmap, dsgn] : group) {
          Polynomial prod = Polynomial::constant(csgn * dsgn);
          for (int col = 0; col < ncols; ++col)
            for (int row = 0; row < dual.part(col + 1); ++row) {
              int a = entry_after(tp, cmap, row, col);
              int b = entry_after(sp, dmap, row, col);
              prod = prod * to_polynomial(linear_form(table, i, a, b));
              if (prod.is_zero()) break;
            }
          acc += prod;
        }
  return acc;
}

Polynomial tuple_polynomial(const PairingTable& table, const std::vector<Partition>& lambdas,
                            const std::vector<Tableau>& taus, const std::vector<Tableau>& sigmas,
                            DetCache* cache) {
  if (lambdas.size() != taus.size() || lambdas.size() != sigmas.size())
    throw std::invalid_argument("tuple_polynomial: tuple sizes disagree");
  Polynomial out = Polynomial::constant(1);
  for (size_t i = 0; i < lambdas.size(); ++i) {
    Polynomial factor = pair_polynomial(table, static_cast<int>(i) + 1, lambdas[i], taus[i],
                                        sigmas[i], cache);
    out = out * factor;
    if (out.is_zero()) break;
  }
  return out;
}

Monomial conjugate_role_swap(const Monomial& m, const PartitionSet& patterns) {
  std::vector<int> exps = m.exponents(patterns.size());
  std::vector<int> swapped(exps.size(), 0);
  for (size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    int target = patterns.index_of(permuted(patterns.at(static_cast<int>(v)), kRoleSwap));
    swapped[static_cast<size_t>(target)] += exps[v];
  }
  return Monomial::from_exponents(swapped);
}

}  // namespace quadcode
