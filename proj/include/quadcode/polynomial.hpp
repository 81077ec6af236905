// Exact sparse polynomial arithmetic over the dual pattern variables, and the
// tableau-pair polynomials whose coefficients are the reduced block entries.
#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "quadcode/basis.hpp"
#include "quadcode/bigint.hpp"
#include "quadcode/young.hpp"

namespace quadcode {

/// Monomial over the pattern variables of one Pi(q), packed four bits per
/// variable with variable 0 in the top nibble, so raw key comparison is
/// lexicographic comparison of exponent vectors. Supports up to 15 variables
/// and per-variable exponent 15 (total degree is the word length n <= 15).
struct Monomial {
  uint64_t key = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int idx, int exponent = 1) {
    return {static_cast<uint64_t>(exponent) << (4 * (14 - idx))};
  }
  static Monomial from_exponents(const std::vector<int>& exps);

  std::vector<int> exponents(int nvars) const;
  int degree() const;
  Monomial operator*(const Monomial& o) const { return {key + o.key}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key < b.key; }
};

/// Sparse polynomial with exact integer coefficients; zero coefficients are
/// never stored.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(BigInt c);

  void add_term(const Monomial& m, const BigInt& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const BigInt& c);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const BigInt* coefficient(const Monomial& m) const;
  bool homogeneous_of_degree(int d) const;
  int max_degree() const;

  /// Terms sorted by monomial key (deterministic iteration).
  std::vector<std::pair<Monomial, BigInt>> sorted_terms() const;
  const std::unordered_map<uint64_t, BigInt>& raw() const { return terms_; }

 private:
  std::unordered_map<uint64_t, BigInt> terms_;
};

/// Degree-one form over Pi(q): one tensor square B_i(j) (x) B_i(h) expressed
/// in the dual pattern basis. coeff[p] is the pairing value on pattern p.
struct LinearForm {
  std::vector<long long> coeff;
};

LinearForm linear_form(const PairingTable& table, int i, int j, int h);
Polynomial to_polynomial(const LinearForm& f);

/// Exact Leibniz expansion of det(entries); entries must be square, order <= 4.
Polynomial determinant_of_forms(const std::vector<std::vector<LinearForm>>& entries);

/// Cache for column determinants, keyed by (class, height, column words).
/// One per worker thread; always optional.
class DetCache {
 public:
  Polynomial* find(uint32_t key);
  void store(uint32_t key, Polynomial value);

 private:
  std::unordered_map<uint32_t, Polynomial> map_;
};

/// The polynomial of one tableau pair in class i: |C_lambda| times the sum
/// over count functions of the multinomial multiplicity times the product of
/// column-determinant powers. Homogeneous of degree weight(lambda).
Polynomial pair_polynomial(const PairingTable& table, int i, const Partition& lambda,
                           const Tableau& tau, const Tableau& sigma, DetCache* cache = nullptr);

/// Direct quadruple sum over row-equivalent tableaux and column permutation
/// pairs. Test oracle only; rejects weights above the limit.
Polynomial pair_polynomial_bruteforce(const PairingTable& table, int i, const Partition& lambda,
                                      const Tableau& tau, const Tableau& sigma, int limit = 5);

/// Product of the component pair polynomials over all classes; homogeneous of
/// total degree n.
Polynomial tuple_polynomial(const PairingTable& table, const std::vector<Partition>& lambdas,
                            const std::vector<Tableau>& taus, const std::vector<Tableau>& sigmas,
                            DetCache* cache = nullptr);

/// Monomial with every pattern conjugated by the (1,2)<->(3,4) role swap.
Monomial conjugate_role_swap(const Monomial& m, const PartitionSet& patterns);

}  // namespace quadcode
