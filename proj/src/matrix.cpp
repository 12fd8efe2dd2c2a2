#include "ualpha/matrix.hpp"

#include <algorithm>

#include "ualpha/group.hpp"

namespace ualpha::matrix {

Complex Complex::inverse() const {
  const Rational norm = re * re + im * im;
  return {re / norm, -im / norm};
}

ExactComplexMatrix ExactComplexMatrix::identity(std::size_t dim) {
  ExactComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = Complex(1);
  return m;
}

bool ExactComplexMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& c) { return c.is_zero(); });
}

ExactComplexMatrix ExactComplexMatrix::kron(const ExactComplexMatrix& other) const {
  const std::size_t n = dim_ * other.dim_;
  ExactComplexMatrix out(n);
  for (std::size_t r1 = 0; r1 < dim_; ++r1)
    for (std::size_t c1 = 0; c1 < dim_; ++c1) {
      const Complex& a = at(r1, c1);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < other.dim_; ++r2)
        for (std::size_t c2 = 0; c2 < other.dim_; ++c2)
          out.at(r1 * other.dim_ + r2, c1 * other.dim_ + c2) = a * other.at(r2, c2);
    }
  return out;
}

ExactComplexMatrix operator*(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
  const std::size_t n = a.dim_;
  ExactComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const Complex& y = b.at(k, c);
        if (!y.is_zero()) out.at(r, c) = out.at(r, c) + x * y;
      }
    }
  return out;
}

ExactComplexMatrix operator+(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
  ExactComplexMatrix out(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

ExactComplexMatrix operator*(const Complex& s, const ExactComplexMatrix& a) {
  ExactComplexMatrix out(a.dim_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = s * a.entries_[k];
  return out;
}

std::size_t rep_dimension(int level) {
  if (level < 0) throw ResourceBoundError("level must be non-negative");
  return std::size_t{1} << (level / 2);
}

namespace {

ExactComplexMatrix i_sigma_x() {
  ExactComplexMatrix m(2);
  m.at(0, 1) = Complex::i();
  m.at(1, 0) = Complex::i();
  return m;
}

// i * sigma_y = [[0, 1], [-1, 0]]
ExactComplexMatrix i_sigma_y() {
  ExactComplexMatrix m(2);
  m.at(0, 1) = Complex(1);
  m.at(1, 0) = Complex(-1);
  return m;
}

}  // namespace

Representation::Representation(int level) : level_(level), dim_(0) {
  if (level < 0 || level > kMaxRepresentedLevel) {
    throw ResourceBoundError("matrix representation level must be in [0, 6], got " + std::to_string(level));
  }
  dim_ = rep_dimension(level);
  const int pairs = level / 2;
  for (int position = 0; position < level; ++position) {
    const int pair = position / 2;
    if (pair >= pairs) {
      generators_.push_back(Complex::i() * ExactComplexMatrix::identity(dim_));
      continue;
    }
    const ExactComplexMatrix factor = position % 2 == 0 ? i_sigma_x() : i_sigma_y();
    const ExactComplexMatrix left = ExactComplexMatrix::identity(std::size_t{1} << pair);
    const ExactComplexMatrix right = ExactComplexMatrix::identity(std::size_t{1} << (pairs - pair - 1));
    generators_.push_back(left.kron(factor).kron(right));
  }
}

ExactComplexMatrix Representation::image(Monomial m) const {
  if ((m.mask >> level_) != 0) throw std::invalid_argument("monomial " + m.name() + " outside level");
  ExactComplexMatrix out = ExactComplexMatrix::identity(dim_);
  for (const Generator& g : m.generators()) out = out * generators_.at(g.position());
  return m.negative ? Complex(-1) * out : out;
}

ExactComplexMatrix Representation::image(const AlgebraElement& x) const {
  ExactComplexMatrix out(dim_);
  for (const auto& [mask, coeff] : x.terms()) out = out + Complex(coeff) * image(Monomial{false, mask});
  return out;
}

std::map<Monomial, ExactComplexMatrix> represent(int level) {
  const Representation rep(level);
  std::map<Monomial, ExactComplexMatrix> out;
  for (const Monomial& m : GroupLevel::enumerate(level).elements()) out.emplace(m, rep.image(m));
  return out;
}

void OracleReport::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  if (failures++ == 0) first_counterexample = what;
  passed = false;
}

OracleReport verify_faithful(int level) {
  OracleReport report{"faithfulness"};
  const auto images = represent(level);
  std::vector<std::pair<Monomial, const ExactComplexMatrix*>> list;
  for (const auto& [m, mat] : images) list.emplace_back(m, &mat);
  std::size_t distinct = 0;
  for (std::size_t b = 0; b < list.size(); ++b) {
    bool fresh = true;
    for (std::size_t a = 0; a < b; ++a) {
      const bool differs = !(*list[a].second == *list[b].second);
      report.record(differs, list[a].first.name() + " ~ " + list[b].first.name());
      fresh = fresh && differs;
    }
    if (fresh) ++distinct;
  }
  report.value = distinct;
  return report;
}

OracleReport verify_homomorphism(int level) {
  OracleReport report{"homomorphism"};
  const auto images = represent(level);
  for (const auto& [a, ma] : images)
    for (const auto& [b, mb] : images) {
      const Monomial ab = multiply(a, b);
      report.record(images.at(ab) == ma * mb, a.name() + "*" + b.name());
    }
  return report;
}

std::size_t span_dimension(const std::vector<ExactComplexMatrix>& matrices) {
  if (matrices.empty()) return 0;
  const std::size_t cols = matrices.front().entries().size();
  std::vector<std::vector<Complex>> rows;
  rows.reserve(matrices.size());
  for (const auto& m : matrices) rows.push_back(m.entries());

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Complex inv = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x = x * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Complex factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] - factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

OracleReport gamma_relations_check(const Pentad& p) {
  OracleReport report{"gamma-relations"};
  const Representation rep(p.level());
  std::vector<ExactComplexMatrix> gammas;
  for (const auto& m : p.members()) gammas.push_back(rep.image(m));
  const auto id = ExactComplexMatrix::identity(rep.dim());

  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = u; v < 5; ++v) {
      const auto anti = gammas[u] * gammas[v] + gammas[v] * gammas[u];
      const auto expected =
          u == v ? Complex(2 * p.signature()[u]) * id : ExactComplexMatrix::zero(rep.dim());
      report.record(anti == expected, "{G" + std::to_string(u) + ",G" + std::to_string(v) + "}");
    }

  std::vector<ExactComplexMatrix> products;
  for (unsigned subset = 0; subset < 32; ++subset) {
    ExactComplexMatrix prod = id;
    for (std::size_t u = 0; u < 5; ++u)
      if (subset & (1u << u)) prod = prod * gammas[u];
    products.push_back(std::move(prod));
  }
  report.value = span_dimension(products);
  return report;
}

namespace {

nlohmann::ordered_json rational_pair(const Rational& q) {
  return {q.get_num().get_si(), q.get_den().get_si()};
}

}  // namespace

nlohmann::ordered_json to_json(const ExactComplexMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const auto re = rational_pair(m.at(r, c).re);
      const auto im = rational_pair(m.at(r, c).im);
      row.push_back({re[0], re[1], im[0], im[1]});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json to_json(const OracleReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.name;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  if (r.value != 0) j["value"] = r.value;
  if (!r.first_counterexample.empty()) j["first_counterexample"] = r.first_counterexample;
  return j;
}

}  // namespace ualpha::matrix
