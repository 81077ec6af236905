#include "quadcode/young.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quadcode {

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("compositions: need n >= 0, k >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == k - 1) {
      cur[static_cast<size_t>(pos)] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

Partition dual_partition(const Partition& p) {
  Partition d;
  for (int j = 1; j <= p.part(1); ++j) {
    int h = 0;
    for (int part : p.parts)
      if (part >= j) ++h;
    d.parts.push_back(h);
  }
  return d;
}

namespace {
size_t row_offset(const Partition& shape, int row) {
  size_t off = 0;
  for (int r = 0; r < row; ++r) off += static_cast<size_t>(shape.parts[static_cast<size_t>(r)]);
  return off;
}
}  // namespace

int Tableau::at(int row, int col) const {
  return entries[row_offset(shape, row) + static_cast<size_t>(col)];
}

bool Tableau::semistandard() const {
  for (int r = 0; r < shape.height(); ++r) {
    for (int c = 0; c < shape.part(r + 1); ++c) {
      if (c > 0 && at(r, c) < at(r, c - 1)) return false;
      if (r > 0 && c < shape.part(r) && at(r, c) <= at(r - 1, c)) return false;
    }
  }
  return true;
}

int Tableau::count_entry(int value) const {
  return static_cast<int>(std::count(entries.begin(), entries.end(), value));
}

int Tableau::count_in_row(int row, int value) const {
  size_t off = row_offset(shape, row);
  size_t len = static_cast<size_t>(shape.parts[static_cast<size_t>(row)]);
  return static_cast<int>(std::count(entries.begin() + static_cast<long>(off),
                                     entries.begin() + static_cast<long>(off + len), value));
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int m) {
  if (!shape.valid()) throw std::invalid_argument("semistandard_tableaux: invalid shape");
  if (m < 1) throw std::invalid_argument("semistandard_tableaux: m must be positive");
  std::vector<Tableau> out;
  int cells = shape.weight();
  std::vector<int> fill(static_cast<size_t>(cells), 0);

  // Cell order is row-major, so the row predecessor is fill[pos-1] and the
  // column predecessor sits one row up at the same column.
  auto rec = [&](auto&& self, int pos, int row, int col) -> void {
    if (pos == cells) {
      out.push_back(Tableau{shape, fill});
      return;
    }
    if (col == shape.part(row + 1)) {
      self(self, pos, row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, fill[static_cast<size_t>(pos - 1)]);
    if (row > 0) {
      size_t above = row_offset(shape, row - 1) + static_cast<size_t>(col);
      lo = std::max(lo, fill[above] + 1);
    }
    for (int v = lo; v <= m; ++v) {
      fill[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, row, col + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

BigInt column_stabilizer_order(const Partition& shape) {
  Partition dual = dual_partition(shape);
  BigInt order = 1;
  for (int h : dual.parts) order *= factorial(h);
  return order;
}

std::vector<Tableau> row_equivalents(const Tableau& t) {
  std::vector<std::vector<std::vector<int>>> row_arrangements;
  for (int r = 0; r < t.shape.height(); ++r) {
    std::vector<int> row(static_cast<size_t>(t.shape.part(r + 1)));
    for (int c = 0; c < t.shape.part(r + 1); ++c) row[static_cast<size_t>(c)] = t.at(r, c);
    std::sort(row.begin(), row.end());
    std::vector<std::vector<int>> arr;
    do {
      arr.push_back(row);
    } while (std::next_permutation(row.begin(), row.end()));
    row_arrangements.push_back(std::move(arr));
  }
  std::vector<Tableau> out;
  std::vector<size_t> pick(row_arrangements.size(), 0);
  while (true) {
    Tableau cur{t.shape, {}};
    for (size_t r = 0; r < row_arrangements.size(); ++r) {
      const auto& row = row_arrangements[r][pick[r]];
      cur.entries.insert(cur.entries.end(), row.begin(), row.end());
    }
    out.push_back(std::move(cur));
    size_t r = 0;
    for (; r < pick.size(); ++r) {
      if (++pick[r] < row_arrangements[r].size()) break;
      pick[r] = 0;
    }
    if (r == pick.size()) break;
  }
  if (row_arrangements.empty()) out.assign(1, t);  // empty shape: just itself
  return out;
}

long long CountFunction::kappa(int height, const std::vector<int>& v,
                               const std::vector<int>& w) const {
  for (const Entry& e : entries)
    if (e.height == height && e.v == v && e.w == w) return e.count;
  return 0;
}

namespace {

struct KappaEnumerator {
  const Partition& shape;
  int m;
  int h;
  // Remaining letter demand per (row, letter); rows 0-based, letters 1..m.
  std::vector<std::vector<int>> rem_t, rem_s;
  std::vector<CountFunction::Entry> chosen;
  const std::function<void(const std::vector<CountFunction::Entry>&)>& fn;

  KappaEnumerator(const Partition& sh, int m_, const Tableau& tau, const Tableau& sigma,
                  const std::function<void(const std::vector<CountFunction::Entry>&)>& f)
      : shape(sh), m(m_), h(sh.height()), fn(f) {
    rem_t.assign(static_cast<size_t>(h), std::vector<int>(static_cast<size_t>(m + 1), 0));
    rem_s = rem_t;
    for (int r = 0; r < h; ++r)
      for (int s = 1; s <= m; ++s) {
        rem_t[static_cast<size_t>(r)][static_cast<size_t>(s)] = tau.count_in_row(r, s);
        rem_s[static_cast<size_t>(r)][static_cast<size_t>(s)] = sigma.count_in_row(r, s);
      }
  }

  void decode(int code, int t, std::vector<int>& word) const {
    word.resize(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
      word[static_cast<size_t>(i)] = code % m + 1;
      code /= m;
    }
  }

  bool row_done(int row) const {
    for (int s = 1; s <= m; ++s)
      if (rem_t[static_cast<size_t>(row)][static_cast<size_t>(s)] != 0 ||
          rem_s[static_cast<size_t>(row)][static_cast<size_t>(s)] != 0)
        return false;
    return true;
  }

  void run() { height_rec(h); }

  void height_rec(int t) {
    if (t == 0) {
      fn(chosen);
      return;
    }
    int seg = shape.part(t) - shape.part(t + 1);
    int npairs = 1;
    for (int i = 0; i < 2 * t; ++i) npairs *= m;
    pair_rec(t, 0, npairs, seg);
  }

  void pair_rec(int t, int pair, int npairs, int remaining) {
    if (pair == npairs) {
      if (remaining == 0 && row_done(t - 1)) height_rec(t - 1);
      return;
    }
    int words = npairs;  // m^{2t}
    int wsize = 1;
    for (int i = 0; i < t; ++i) wsize *= m;
    (void)words;
    int vcode = pair / wsize, wcode = pair % wsize;
    std::vector<int> v, w;
    decode(vcode, t, v);
    decode(wcode, t, w);

    int cmax = remaining;
    for (int i = 0; i < t && cmax > 0; ++i) {
      cmax = std::min(cmax, rem_t[static_cast<size_t>(i)][static_cast<size_t>(v[static_cast<size_t>(i)])]);
      cmax = std::min(cmax, rem_s[static_cast<size_t>(i)][static_cast<size_t>(w[static_cast<size_t>(i)])]);
    }
    for (int c = cmax; c >= 0; --c) {
      for (int i = 0; i < t; ++i) {
        rem_t[static_cast<size_t>(i)][static_cast<size_t>(v[static_cast<size_t>(i)])] -= c;
        rem_s[static_cast<size_t>(i)][static_cast<size_t>(w[static_cast<size_t>(i)])] -= c;
      }
      if (c > 0) chosen.push_back(CountFunction::Entry{t, v, w, c});
      pair_rec(t, pair + 1, npairs, remaining - c);
      if (c > 0) chosen.pop_back();
      for (int i = 0; i < t; ++i) {
        rem_t[static_cast<size_t>(i)][static_cast<size_t>(v[static_cast<size_t>(i)])] += c;
        rem_s[static_cast<size_t>(i)][static_cast<size_t>(w[static_cast<size_t>(i)])] += c;
      }
    }
  }
};

}  // namespace

void for_each_count_function(
    const Partition& shape, int m, const Tableau& tau, const Tableau& sigma,
    const std::function<void(const std::vector<CountFunction::Entry>&)>& fn) {
  KappaEnumerator e(shape, m, tau, sigma, fn);
  e.run();
}

std::vector<CountFunction> count_functions(const Partition& shape, int m,
                                           const Tableau& tau, const Tableau& sigma) {
  std::vector<CountFunction> out;
  for_each_count_function(shape, m, tau, sigma,
                          [&](const std::vector<CountFunction::Entry>& entries) {
                            CountFunction k{shape, m, entries};
                            std::sort(k.entries.begin(), k.entries.end(),
                                      [](const CountFunction::Entry& a, const CountFunction::Entry& b) {
                                        return std::tie(a.height, a.v, a.w) < std::tie(b.height, b.v, b.w);
                                      });
                            out.push_back(std::move(k));
                          });
  return out;
}

BigInt kappa_multiplicity(const Partition& shape, const CountFunction& kappa) {
  BigInt mult = 1;
  for (int t = 1; t <= shape.height(); ++t) {
    long long seg = shape.part(t) - shape.part(t + 1);
    long long total = 0;
    BigInt denom = 1;
    for (const CountFunction::Entry& e : kappa.entries) {
      if (e.height != t) continue;
      total += e.count;
      denom *= factorial(static_cast<int>(e.count));
    }
    if (total != seg)
      throw std::invalid_argument("kappa_multiplicity: height totals do not match the shape");
    mult *= factorial(static_cast<int>(seg)) / denom;
  }
  return mult;
}

}  // namespace quadcode
