#include "monobar/graded_complex.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "monobar/error.hpp"

namespace monobar {

namespace {

void check_shape(const IntMatrix& d, std::size_t degree, std::size_t source, std::size_t target) {
  if (d.cols() != source || d.rows() != target)
    throw StructuralError("differential d_" + std::to_string(degree) + " is " +
                          std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                          ", expected " + std::to_string(target) + "x" + std::to_string(source));
}

} // namespace

GradedComplex::GradedComplex(std::vector<std::vector<BasisLabel>> basis,
                             std::vector<IntMatrix> differentials)
    : basis_(std::move(basis)), differentials_(std::move(differentials)) {
  const std::size_t expected = basis_.empty() ? 0 : basis_.size() - 1;
  if (differentials_.size() != expected)
    throw StructuralError("complex with " + std::to_string(basis_.size()) + " degrees needs " +
                          std::to_string(expected) + " differentials, got " +
                          std::to_string(differentials_.size()));
  for (std::size_t g = 0; g < differentials_.size(); ++g) {
    check_shape(differentials_[g], g, basis_[g].size(), basis_[g + 1].size());
    for (const auto& e : differentials_[g].entries())
      if (e.value != 1 && e.value != -1)
        throw StructuralError("differential entry " + std::to_string(e.value) + " is not +-1");
  }
}

GradedComplex GradedComplex::with_differential(std::size_t degree, IntMatrix d) const {
  check_shape(d, degree, dim(degree), dim(degree + 1));
  GradedComplex copy = *this;
  copy.differentials_.at(degree) = std::move(d);
  return copy;
}

std::vector<std::size_t> GradedComplex::dims() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.size());
  return out;
}

std::size_t GradedComplex::total_dim() const {
  std::size_t total = 0;
  for (const auto& b : basis_) total += b.size();
  return total;
}

HomologyProfile HomologyProfile::from_dims(std::vector<std::size_t> dims) {
  HomologyProfile p;
  p.dims = std::move(dims);
  for (std::size_t g = 0; g < p.dims.size(); ++g) {
    p.total += p.dims[g];
    p.euler += (g % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(p.dims[g]);
  }
  return p;
}

long HomologyProfile::concentrated_degree() const {
  long found = -1;
  for (std::size_t g = 0; g < dims.size(); ++g) {
    if (dims[g] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<long>(g);
  }
  return found;
}

bool validate_complex(const GradedComplex& c) {
  const auto& ds = c.differentials();
  for (std::size_t g = 0; g < ds.size(); ++g)
    check_shape(ds[g], g, c.dim(g), c.dim(g + 1));
  for (std::size_t g = 0; g + 1 < ds.size(); ++g)
    if (!multiply(ds[g + 1], ds[g]).is_zero()) return false;
  return true;
}

HomologyProfile homology_dims(const GradedComplex& c, const FieldSpec& field,
                              std::size_t rank_work_limit) {
  const std::size_t n = c.degree_count();
  std::vector<std::size_t> ranks(n, 0);
  for (std::size_t g = 0; g + 1 < n; ++g) ranks[g] = rank(c.differential(g), field, rank_work_limit);

  std::vector<std::size_t> dims(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t incoming = g > 0 ? ranks[g - 1] : 0;
    const std::size_t used = ranks[g] + incoming;
    if (used > c.dim(g))
      throw InternalError("negative homology dimension in degree " + std::to_string(g) +
                          "; the input is not a complex");
    dims[g] = c.dim(g) - used;
  }
  return HomologyProfile::from_dims(std::move(dims));
}

std::int64_t euler_characteristic(const GradedComplex& c) {
  std::int64_t e = 0;
  for (std::size_t g = 0; g < c.degree_count(); ++g)
    e += (g % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.dim(g));
  return e;
}

} // namespace monobar
