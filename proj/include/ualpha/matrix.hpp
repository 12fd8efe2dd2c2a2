#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "ualpha/algebra.hpp"
#include "ualpha/monomial.hpp"
#include "ualpha/pentad.hpp"

namespace ualpha::matrix {

/// Gaussian rational re + im*i.
struct Complex {
  Rational re;
  Rational im;

  Complex() = default;
  Complex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  static Complex i() { return {0, 1}; }

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] Complex conj() const { return {re, -im}; }
  [[nodiscard]] Complex inverse() const;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

/// Square matrix with exact complex rational entries, row-major.
class ExactComplexMatrix {
 public:
  ExactComplexMatrix() = default;
  explicit ExactComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static ExactComplexMatrix identity(std::size_t dim);
  static ExactComplexMatrix zero(std::size_t dim) { return ExactComplexMatrix(dim); }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] Complex& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  [[nodiscard]] const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  [[nodiscard]] const std::vector<Complex>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool is_zero() const;

  /// Kronecker product this (x) other.
  [[nodiscard]] ExactComplexMatrix kron(const ExactComplexMatrix& other) const;

  friend ExactComplexMatrix operator*(const ExactComplexMatrix& a, const ExactComplexMatrix& b);
  friend ExactComplexMatrix operator+(const ExactComplexMatrix& a, const ExactComplexMatrix& b);
  friend ExactComplexMatrix operator*(const Complex& s, const ExactComplexMatrix& a);
  friend bool operator==(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

inline constexpr int kMaxRepresentedLevel = 6;

/// 2^(number of complete generator pairs).
std::size_t rep_dimension(int level);

/// Matrix images for one level: i_n -> i*sigma_x and j_n -> i*sigma_y on
/// tensor factor n, an unpaired trailing generator -> i*identity.
class Representation {
 public:
  explicit Representation(int level);

  [[nodiscard]] int level() const noexcept { return level_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const ExactComplexMatrix& generator_image(int position) const { return generators_.at(position); }
  [[nodiscard]] ExactComplexMatrix image(Monomial m) const;
  [[nodiscard]] ExactComplexMatrix image(const AlgebraElement& x) const;

 private:
  int level_;
  std::size_t dim_;
  std::vector<ExactComplexMatrix> generators_;
};

/// Images of every element of the level, keyed by monomial.
std::map<Monomial, ExactComplexMatrix> represent(int level);

struct OracleReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_counterexample;
  /// Check-specific value: distinct images for faithfulness, span dimension
  /// for gamma relations; zero otherwise.
  std::size_t value = 0;

  void record(bool ok, const std::string& what);
};

/// Distinct monomials have distinct images.
OracleReport verify_faithful(int level);
/// matrix(ab) == matrix(a) * matrix(b) for every ordered pair.
OracleReport verify_homomorphism(int level);
/// Anticommutators equal 2 * signature * delta * identity; value = complex
/// dimension of the span of all subset products of the images.
OracleReport gamma_relations_check(const Pentad& p);

/// Rank over the Gaussian rationals of the matrices flattened to vectors.
std::size_t span_dimension(const std::vector<ExactComplexMatrix>& matrices);

nlohmann::ordered_json to_json(const ExactComplexMatrix& m);
nlohmann::ordered_json to_json(const OracleReport& r);

}  // namespace ualpha::matrix
