#include "quadcode/blocks.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/integer.hpp>

namespace quadcode {

std::string RepIndex::label() const {
  std::ostringstream os;
  os << "n=(";
  for (size_t i = 0; i < bold_n.size(); ++i) os << (i ? "," : "") << bold_n[i];
  os << ") lambda=(";
  for (size_t i = 0; i < bold_lambda.size(); ++i) {
    os << (i ? "," : "") << "(";
    for (size_t p = 0; p < bold_lambda[i].parts.size(); ++p)
      os << (p ? "," : "") << bold_lambda[i].parts[p];
    os << ")";
  }
  os << ")";
  return os.str();
}

std::vector<RepIndex> representative_index(int q, int n, int d) {
  if (q < 2 || n < 1 || d < 1 || d > n)
    throw std::invalid_argument("representative_index: need q >= 2, 1 <= d <= n");
  BasisFamily basis = build_basis(q);
  int k = basis.k();

  std::vector<RepIndex> out;
  for (const std::vector<int>& comp : compositions(n, k)) {
    // Partition tuples, lexicographic per class.
    std::vector<std::vector<Partition>> choices;
    for (int i = 0; i < k; ++i) {
      std::vector<Partition> parts;
      for (Partition& p : partitions_of(comp[static_cast<size_t>(i)]))
        if (p.height() <= basis.dim(i + 1)) parts.push_back(std::move(p));
      choices.push_back(std::move(parts));
    }
    std::vector<size_t> pick(static_cast<size_t>(k), 0);
    bool any_empty = false;
    for (const auto& c : choices) any_empty |= c.empty();
    if (any_empty) continue;
    while (true) {
      RepIndex rep;
      rep.bold_n = comp;
      for (int i = 0; i < k; ++i) rep.bold_lambda.push_back(choices[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]]);

      std::vector<std::vector<Tableau>> tabs;
      for (int i = 0; i < k; ++i)
        tabs.push_back(semistandard_tableaux(rep.bold_lambda[static_cast<size_t>(i)], basis.dim(i + 1)));
      bool feasible = true;
      for (const auto& t : tabs) feasible &= !t.empty();

      if (feasible) {
        std::vector<size_t> tpick(static_cast<size_t>(k), 0);
        while (true) {
          TableauTuple tuple;
          for (int i = 0; i < k; ++i) tuple.push_back(tabs[static_cast<size_t>(i)][tpick[static_cast<size_t>(i)]]);

          int skew = tuple[1].count_entry(2) + (k >= 3 ? tuple[2].count_entry(1) : 0);
          int t = n - tuple[0].count_entry(1) - tuple[1].count_entry(1);
          bool keep = skew % 2 == 0 && (t == 0 || t >= d);
          if (keep) {
            rep.tuples.push_back(std::move(tuple));
            rep.tuple_distance.push_back(t);
          }

          size_t i = 0;
          for (; i < tpick.size(); ++i) {
            if (++tpick[i] < tabs[i].size()) break;
            tpick[i] = 0;
          }
          if (i == tpick.size()) break;
        }
      }

      if (!rep.tuples.empty()) {
        rep.trivial = rep.bold_n[0] == n && rep.bold_lambda[0].height() == 1;
        out.push_back(std::move(rep));
      }

      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  return out;
}

LinearEntry& Block::at(int r, int c) {
  if (r > c) std::swap(r, c);
  return entries[static_cast<size_t>(r * size - r * (r - 1) / 2 + (c - r))];
}

const LinearEntry& Block::at(int r, int c) const {
  if (r > c) std::swap(r, c);
  return entries[static_cast<size_t>(r * size - r * (r - 1) / 2 + (c - r))];
}

int SdpProblem::max_block_size() const {
  int m = 0;
  for (const Block& b : blocks) m = std::max(m, b.size);
  return m;
}

std::vector<int> admissible_variable_map(const OrbitCatalog& catalog, int d) {
  std::vector<int> map(catalog.orbits.size(), -1);
  int next = 0;
  for (size_t i = 0; i + 1 < catalog.orbits.size(); ++i)  // empty orbit excluded
    if (catalog.admissible(static_cast<int>(i), d)) map[i] = next++;
  return map;
}

Block assemble_block(int n, int d, const RepIndex& rep, const OrbitCatalog& catalog,
                     const PairingTable& table, const std::vector<int>& orbit_to_var,
                     DetCache* cache) {
  (void)d;
  Block block;
  block.label = rep.label();
  block.size = static_cast<int>(rep.tuples.size());
  block.entries.resize(static_cast<size_t>(block.size * (block.size + 1) / 2));

  // Component polynomials are shared across tuple pairs; cache per (class,
  // tableau pair) within the block.
  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, Polynomial> component;
  auto component_poly = [&](int i, const Tableau& a, const Tableau& b) -> const Polynomial& {
    auto key = std::make_tuple(i, a.entries, b.entries);
    auto it = component.find(key);
    if (it == component.end()) {
      Polynomial p = pair_polynomial(table, i, rep.bold_lambda[static_cast<size_t>(i - 1)], a, b, cache);
      it = component.emplace(key, std::move(p)).first;
    }
    return it->second;
  };

  int k = static_cast<int>(rep.bold_lambda.size());
  for (int a = 0; a < block.size; ++a)
    for (int b = a; b < block.size; ++b) {
      Polynomial p = Polynomial::constant(1);
      for (int i = 1; i <= k; ++i) {
        p = p * component_poly(i, rep.tuples[static_cast<size_t>(a)][static_cast<size_t>(i - 1)],
                               rep.tuples[static_cast<size_t>(b)][static_cast<size_t>(i - 1)]);
        if (p.is_zero()) break;
      }
      if (!p.is_zero() && !p.homogeneous_of_degree(n))
        throw std::runtime_error("assemble_block: tuple polynomial not homogeneous of degree n");
      LinearEntry entry;
      for (const auto& [key, c] : p.raw()) {
        int orbit = catalog.orbit_of_monomial(Monomial{key});
        int var = orbit_to_var[static_cast<size_t>(orbit)];
        if (var < 0) continue;  // orbit variable fixed to zero
        auto [it, inserted] = entry.coeff.emplace(var, c);
        if (!inserted) {
          it->second += c;
          if (it->second == 0) entry.coeff.erase(it);
        }
      }
      block.at(a, b) = std::move(entry);
    }
  return block;
}

Block augment_empty_block(const Block& block, int q, int n, int d, const RepIndex& rep,
                          const OrbitCatalog& catalog, const std::vector<int>& orbit_to_var) {
  if (!rep.trivial)
    throw std::invalid_argument("augment_empty_block: index does not carry the empty-set row");
  Block out;
  out.label = block.label;
  out.size = block.size + 1;
  out.augmented = true;
  out.entries.resize(static_cast<size_t>(out.size * (out.size + 1) / 2));

  out.at(0, 0).constant = 1;
  BigInt qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  for (int b = 0; b < block.size; ++b) {
    int t = rep.tuple_distance[static_cast<size_t>(b)];
    int orbit = catalog.pair_orbit(t);
    int var = orbit_to_var[static_cast<size_t>(orbit)];
    if (var < 0) {
      if (t == 0 || t >= d)
        throw std::runtime_error("augment_empty_block: admissible pair orbit has no variable");
      continue;  // inadmissible distance: entry fixed to zero
    }
    BigInt weight = binomial(n, t) * qn;
    for (int i = 0; i < t; ++i) weight *= q - 1;
    out.at(0, b + 1).coeff.emplace(var, weight);
  }
  for (int a = 0; a < block.size; ++a)
    for (int b = a; b < block.size; ++b) out.at(a + 1, b + 1) = block.at(a, b);
  return out;
}

namespace {

void gcd_normalize(Block& block) {
  BigInt g = 0;
  for (const LinearEntry& e : block.entries) {
    for (const auto& [var, c] : e.coeff) g = boost::multiprecision::gcd(g, c);
    g = boost::multiprecision::gcd(g, e.constant);
  }
  if (g <= 1) return;
  for (LinearEntry& e : block.entries) {
    for (auto& [var, c] : e.coeff) c /= g;
    e.constant /= g;
  }
  block.divided_gcd = g;
}

}  // namespace

SdpProblem assemble_problem(int q, int n, int d, const OrbitCatalog& catalog,
                            const PairingTable& table, int threads) {
  std::vector<int> orbit_to_var = admissible_variable_map(catalog, d);

  SdpProblem problem;
  problem.q = q;
  problem.n = n;
  problem.d = d;
  for (size_t i = 0; i + 1 < catalog.orbits.size(); ++i) {
    if (orbit_to_var[i] < 0) continue;
    const CodeOrbit& o = catalog.orbits[i];
    std::ostringstream id;
    const std::vector<int> exps = Monomial{o.canonical_key}.exponents(catalog.patterns.size());
    bool first = true;
    for (size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (!first) id << "*";
      id << catalog.patterns.name(static_cast<int>(v));
      if (exps[v] > 1) id << "^" << exps[v];
      first = false;
    }
    problem.vars.push_back(VarInfo{id.str(), o.cardinality, o.min_distance});
  }

  problem.objective_var = orbit_to_var[static_cast<size_t>(catalog.pair_orbit(0))];
  problem.objective_coeff = 1;
  for (int i = 0; i < n; ++i) problem.objective_coeff *= q;

  std::vector<RepIndex> reps = representative_index(q, n, d);
  problem.blocks.resize(reps.size());

  unsigned hw = std::thread::hardware_concurrency();
  int nthreads = threads > 0 ? threads : static_cast<int>(hw ? hw : 1);
  nthreads = std::min<int>(nthreads, static_cast<int>(reps.size()));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    DetCache cache;
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= reps.size()) break;
      Block b = assemble_block(n, d, reps[idx], catalog, table, orbit_to_var, &cache);
      if (reps[idx].trivial)
        b = augment_empty_block(b, q, n, d, reps[idx], catalog, orbit_to_var);
      gcd_normalize(b);
      problem.blocks[idx] = std::move(b);
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return problem;
}

SdpProblem assemble_problem(int q, int n, int d, int threads) {
  OrbitCatalog catalog = enumerate_orbits(q, n);
  PairingTable table = pairing_table(build_basis(q));
  return assemble_problem(q, n, d, catalog, table, threads);
}

}  // namespace quadcode
