#include "quadcode/basis.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace quadcode {

std::vector<int> BasisFamily::dims() const {
  std::vector<int> d;
  for (const auto& cls : classes) d.push_back(static_cast<int>(cls.size()));
  return d;
}

BasisFamily build_basis(int q) {
  if (q < 2) throw std::invalid_argument("build_basis: q must be at least 2");
  using M = Eigen::MatrixXi;
  auto unit = [q](int r, int c) {
    M e = M::Zero(q, q);
    e(r, c) = 1;
    return e;
  };
  M I = M::Identity(q, q);
  M J = M::Ones(q, q);
  M N = M::Zero(q, q);  // (e1 - e2) 1^T
  for (int c = 0; c < q; ++c) {
    N(0, c) = 1;
    N(1, c) = -1;
  }
  M E11_E22 = unit(0, 0) - unit(1, 1);

  BasisFamily f;
  f.q = q;
  f.classes.push_back({I, J - I});
  std::vector<M> b2{E11_E22, N - N.transpose(), N + N.transpose() - 2 * E11_E22};
  if (q == 2) b2.pop_back();  // third column is identically zero
  f.classes.push_back(std::move(b2));
  if (q >= 3) {
    f.classes.push_back({unit(0, 1) + unit(1, 2) + unit(2, 0) - unit(1, 0) - unit(2, 1) - unit(0, 2)});
  }
  if (q >= 4) {
    f.classes.push_back({unit(0, 2) - unit(2, 1) + unit(1, 3) - unit(3, 0) + unit(2, 0) -
                         unit(1, 2) + unit(3, 1) - unit(0, 3)});
  }
  return f;
}

long long pairing_value(const BasisFamily& basis, int i, int j, int h, const SetPartition& P) {
  const Eigen::MatrixXi& A = basis.matrix(i, j);
  const Eigen::MatrixXi& B = basis.matrix(i, h);
  int q = basis.q;
  long long sum = 0;
  std::array<int, 4> letters{};
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (A(a, b) == 0) continue;
      for (int c = 0; c < q; ++c)
        for (int e = 0; e < q; ++e) {
          if (B(c, e) == 0) continue;
          letters = {a, b, c, e};
          if (pattern_of(letters) == P) sum += static_cast<long long>(A(a, b)) * B(c, e);
        }
    }
  return sum;
}

PairingTable::PairingTable(int q, PartitionSet patterns, std::vector<int> dims,
                           std::vector<long long> values)
    : q_(q), patterns_(std::move(patterns)), dims_(std::move(dims)), values_(std::move(values)) {
  size_t off = 0;
  for (int d : dims_) {
    class_offset_.push_back(off);
    off += static_cast<size_t>(d) * static_cast<size_t>(d) * static_cast<size_t>(patterns_.size());
  }
}

long long PairingTable::value(int i, int j, int h, int pattern_index) const {
  int d = dim(i);
  size_t idx = class_offset_[static_cast<size_t>(i - 1)] +
               (static_cast<size_t>(j - 1) * static_cast<size_t>(d) + static_cast<size_t>(h - 1)) *
                   static_cast<size_t>(patterns_.size()) +
               static_cast<size_t>(pattern_index);
  return values_[idx];
}

PairingTable pairing_table(const BasisFamily& basis) {
  PartitionSet patterns = PartitionSet::for_q(basis.q);
  std::vector<long long> values;
  std::vector<int> dims = basis.dims();
  for (int i = 1; i <= basis.k(); ++i)
    for (int j = 1; j <= basis.dim(i); ++j)
      for (int h = 1; h <= basis.dim(i); ++h)
        for (int p = 0; p < patterns.size(); ++p)
          values.push_back(pairing_value(basis, i, j, h, patterns.at(p)));
  return PairingTable(basis.q, std::move(patterns), std::move(dims), std::move(values));
}

namespace {

// One golden expansion line: coefficients on named patterns, each a polynomial
// in q (ascending powers). Patterns absent from a line have coefficient zero.
struct GoldenTerm {
  const char* pattern;
  std::vector<long long> qpoly;
};
struct GoldenLine {
  int i, j, h;
  std::vector<GoldenTerm> terms;
};

const std::vector<GoldenLine>& golden_lines() {
  // q(q-1) = -q + q^2 -> {0,-1,1}; q(q-1)(q-2) -> {0,2,-3,1};
  // q(q-1)(q-2)(q-3) -> {0,-6,11,-6,1}.
  static const std::vector<GoldenLine> lines = {
      {1, 1, 1, {{"1234", {0, 1}}, {"12,34", {0, -1, 1}}}},
      {1, 1, 2, {{"123,4", {0, -1, 1}}, {"124,3", {0, -1, 1}}, {"12,3,4", {0, 2, -3, 1}}}},
      {1, 2, 1, {{"1,234", {0, -1, 1}}, {"134,2", {0, -1, 1}}, {"1,2,34", {0, 2, -3, 1}}}},
      {1, 2, 2,
       {{"13,24", {0, -1, 1}},
        {"14,23", {0, -1, 1}},
        {"13,2,4", {0, 2, -3, 1}},
        {"14,2,3", {0, 2, -3, 1}},
        {"1,23,4", {0, 2, -3, 1}},
        {"1,24,3", {0, 2, -3, 1}},
        {"1,2,3,4", {0, -6, 11, -6, 1}}}},
      {2, 1, 1, {{"1234", {2}}, {"12,34", {-2}}}},
      {2, 1, 2, {{"123,4", {0, 2}}, {"124,3", {0, -2}}}},
      {2, 1, 3, {{"124,3", {-4, 2}}, {"123,4", {-4, 2}}, {"12,3,4", {8, -4}}}},
      {2, 2, 1, {{"134,2", {0, 2}}, {"1,234", {0, -2}}}},
      {2, 2, 2,
       {{"13,24", {0, 4}},
        {"14,23", {0, -4}},
        {"13,2,4", {0, -4, 2}},
        {"14,2,3", {0, 4, -2}},
        {"1,23,4", {0, 4, -2}},
        {"1,24,3", {0, -4, 2}}}},
      {2, 2, 3,
       {{"13,2,4", {0, -4, 2}},
        {"14,2,3", {0, -4, 2}},
        {"1,23,4", {0, 4, -2}},
        {"1,24,3", {0, 4, -2}}}},
      {2, 3, 1, {{"1,234", {-4, 2}}, {"134,2", {-4, 2}}, {"1,2,34", {8, -4}}}},
      {2, 3, 2,
       {{"13,2,4", {0, -4, 2}},
        {"14,2,3", {0, 4, -2}},
        {"1,23,4", {0, -4, 2}},
        {"1,24,3", {0, 4, -2}}}},
      {2, 3, 3,
       {{"13,24", {-8, 4}},
        {"14,23", {-8, 4}},
        {"13,2,4", {16, -12, 2}},
        {"14,2,3", {16, -12, 2}},
        {"1,23,4", {16, -12, 2}},
        {"1,24,3", {16, -12, 2}},
        {"1,2,3,4", {48, -40, 8}}}},
      {3, 1, 1,
       {{"13,24", {6}},
        {"14,23", {-6}},
        {"13,2,4", {-6}},
        {"14,2,3", {6}},
        {"1,23,4", {6}},
        {"1,24,3", {-6}}}},
      {4, 1, 1,
       {{"13,24", {8}},
        {"14,23", {8}},
        {"13,2,4", {-8}},
        {"14,2,3", {-8}},
        {"1,23,4", {-8}},
        {"1,24,3", {-8}},
        {"1,2,3,4", {16}}}},
  };
  return lines;
}

long long eval_qpoly(const std::vector<long long>& coeffs, int q) {
  long long v = 0;
  for (size_t d = coeffs.size(); d-- > 0;) v = v * q + coeffs[d];
  return v;
}

}  // namespace

ReferenceExpansionReport verify_reference_expansions(int q) {
  if (q < 2) throw std::invalid_argument("verify_reference_expansions: q must be at least 2");
  BasisFamily basis = build_basis(q);
  PairingTable table = pairing_table(basis);
  const PartitionSet& patterns = table.patterns();

  ReferenceExpansionReport report;
  for (const GoldenLine& line : golden_lines()) {
    ReferenceExpansionReport::Line res;
    res.i = line.i;
    res.j = line.j;
    res.h = line.h;
    bool applicable = line.i <= basis.k() && line.j <= basis.dim(line.i) && line.h <= basis.dim(line.i);
    res.applicable = applicable;
    if (!applicable) {
      res.pass = true;
      res.detail = "skipped (basis element removed by the q-truncation rules)";
      ++report.skipped;
      report.lines.push_back(std::move(res));
      continue;
    }
    ++report.checked;
    std::vector<long long> expected(static_cast<size_t>(patterns.size()), 0);
    bool representable = true;
    std::ostringstream bad;
    for (const GoldenTerm& term : line.terms) {
      long long value = eval_qpoly(term.qpoly, q);
      int idx = patterns.index_of_name(term.pattern);
      if (idx >= 0) {
        expected[static_cast<size_t>(idx)] = value;
      } else if (value != 0) {
        representable = false;
        bad << "coefficient " << value << " on pattern " << term.pattern
            << " which needs more than q blocks; ";
      }
    }
    res.pass = representable;
    for (int p = 0; p < patterns.size(); ++p) {
      long long got = table.value(line.i, line.j, line.h, p);
      if (got != expected[static_cast<size_t>(p)]) {
        res.pass = false;
        bad << "pattern " << patterns.name(p) << ": computed " << got << ", reference "
            << expected[static_cast<size_t>(p)] << "; ";
      }
    }
    res.detail = res.pass ? "ok" : bad.str();
    if (!res.pass) report.all_pass = false;
    report.lines.push_back(std::move(res));
  }
  return report;
}

}  // namespace quadcode
