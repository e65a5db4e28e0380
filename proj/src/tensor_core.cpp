#include "sixvertex/tensor_core.hpp"

#include <array>
#include <bit>
#include <string>

#include "sixvertex/errors.hpp"

namespace sixvertex {

namespace {

void check_sites(int sites) {
  if (sites < 1 || sites > kMaxSites) {
    throw InvalidArgument("site count must be in 1.." + std::to_string(kMaxSites) +
                          ", got " + std::to_string(sites));
  }
}

void check_site(int site, int sites) {
  if (site < 1 || site > sites) {
    throw InvalidArgument("site " + std::to_string(site) + " out of range 1.." +
                          std::to_string(sites));
  }
}

Eigen::Index dimension(int sites) { return Eigen::Index{1} << sites; }

// Basis indices of the four states sharing `base` outside sites (i, j), in
// gate order |00>,|01>,|10>,|11> (first slot = site i).
std::array<Eigen::Index, 4> gate_block(std::uint32_t base, std::uint32_t mi, std::uint32_t mj) {
  return {Eigen::Index(base), Eigen::Index(base | mj), Eigen::Index(base | mi),
          Eigen::Index(base | mi | mj)};
}

void check_pair(int i, int j, int sites) {
  check_site(i, sites);
  check_site(j, sites);
  if (i == j) throw InvalidArgument("two-site gate needs distinct sites, got i = j = " + std::to_string(i));
}

}  // namespace

std::uint32_t site_mask(int site, int sites) {
  check_site(site, sites);
  return std::uint32_t{1} << (sites - site);
}

StateIndex::StateIndex(int sites, std::uint32_t bits) : sites_(sites), bits_(bits) {
  check_sites(sites);
  if (bits >= (std::uint32_t{1} << sites)) {
    throw InvalidArgument("bitstring " + std::to_string(bits) + " does not fit " +
                          std::to_string(sites) + " sites");
  }
}

StateIndex StateIndex::from_occupations(const std::vector<int>& occupations) {
  const int sites = static_cast<int>(occupations.size());
  check_sites(sites);
  std::uint32_t bits = 0;
  for (int k = 0; k < sites; ++k) {
    if (occupations[k] != 0 && occupations[k] != 1) throw InvalidArgument("occupation must be 0 or 1");
    if (occupations[k] == 1) bits |= site_mask(k + 1, sites);
  }
  return {sites, bits};
}

StateIndex StateIndex::from_occupied_sites(int sites, const std::vector<int>& occupied) {
  check_sites(sites);
  std::uint32_t bits = 0;
  for (int site : occupied) {
    const auto mask = site_mask(site, sites);
    if (bits & mask) throw InvalidArgument("site " + std::to_string(site) + " listed twice");
    bits |= mask;
  }
  return {sites, bits};
}

bool StateIndex::occupied(int site) const { return (bits_ & site_mask(site, sites_)) != 0; }

int StateIndex::occupation_count() const { return std::popcount(bits_); }

std::vector<int> StateIndex::occupations() const {
  std::vector<int> out(sites_);
  for (int k = 0; k < sites_; ++k) out[k] = occupied(k + 1) ? 1 : 0;
  return out;
}

std::vector<int> StateIndex::occupied_sites() const {
  std::vector<int> out;
  for (int site = 1; site <= sites_; ++site) {
    if (occupied(site)) out.push_back(site);
  }
  return out;
}

LinearOperator::LinearOperator(int sites) : sites_(sites) {
  check_sites(sites);
  matrix_ = Matrix::Zero(dimension(sites), dimension(sites));
}

LinearOperator::LinearOperator(int sites, Matrix entries) : sites_(sites), matrix_(std::move(entries)) {
  check_sites(sites);
  if (matrix_.rows() != dimension(sites) || matrix_.cols() != dimension(sites)) {
    throw InvalidArgument("operator matrix must be 2^L x 2^L");
  }
}

LinearOperator LinearOperator::identity(int sites) {
  check_sites(sites);
  return {sites, Matrix::Identity(dimension(sites), dimension(sites))};
}

LinearOperator LinearOperator::diagonal(int sites, const Vector& diag) {
  check_sites(sites);
  if (diag.size() != dimension(sites)) throw InvalidArgument("diagonal must have 2^L entries");
  return {sites, diag.asDiagonal().toDenseMatrix()};
}

LinearOperator LinearOperator::operator*(const LinearOperator& rhs) const {
  if (rhs.sites_ != sites_) throw InvalidArgument("composing operators on different chains");
  return {sites_, matrix_ * rhs.matrix_};
}

LinearOperator LinearOperator::operator+(const LinearOperator& rhs) const {
  if (rhs.sites_ != sites_) throw InvalidArgument("adding operators on different chains");
  return {sites_, matrix_ + rhs.matrix_};
}

LinearOperator LinearOperator::operator-(const LinearOperator& rhs) const {
  if (rhs.sites_ != sites_) throw InvalidArgument("subtracting operators on different chains");
  return {sites_, matrix_ - rhs.matrix_};
}

LinearOperator LinearOperator::operator*(cplx scalar) const { return {sites_, matrix_ * scalar}; }

Vector LinearOperator::operator*(const Vector& ket) const {
  if (ket.size() != dim()) throw InvalidArgument("state vector has wrong dimension");
  return matrix_ * ket;
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& rhs) {
  if (rhs.sites_ != sites_) throw InvalidArgument("adding operators on different chains");
  matrix_ += rhs.matrix_;
  return *this;
}

void LinearOperator::right_multiply_gate(const Gate& gate, int i, int j) {
  check_pair(i, j, sites_);
  const auto mi = site_mask(i, sites_);
  const auto mj = site_mask(j, sites_);
  Eigen::Matrix<cplx, Eigen::Dynamic, 4> cols(dim(), 4);
  for (std::uint32_t base = 0; base < std::uint32_t(dim()); ++base) {
    if (base & (mi | mj)) continue;
    const auto idx = gate_block(base, mi, mj);
    for (int k = 0; k < 4; ++k) cols.col(k) = matrix_.col(idx[k]);
    cols = cols * gate;
    for (int k = 0; k < 4; ++k) matrix_.col(idx[k]) = cols.col(k);
  }
}

void LinearOperator::left_multiply_gate(const Gate& gate, int i, int j) {
  check_pair(i, j, sites_);
  const auto mi = site_mask(i, sites_);
  const auto mj = site_mask(j, sites_);
  Eigen::Matrix<cplx, 4, Eigen::Dynamic> rows(4, dim());
  for (std::uint32_t base = 0; base < std::uint32_t(dim()); ++base) {
    if (base & (mi | mj)) continue;
    const auto idx = gate_block(base, mi, mj);
    for (int k = 0; k < 4; ++k) rows.row(k) = matrix_.row(idx[k]);
    rows = gate * rows;
    for (int k = 0; k < 4; ++k) matrix_.row(idx[k]) = rows.row(k);
  }
}

Vector vacuum_state(int sites) {
  check_sites(sites);
  Vector v = Vector::Zero(dimension(sites));
  v(0) = 1.0;
  return v;
}

Vector basis_state(const StateIndex& state) {
  Vector v = Vector::Zero(dimension(state.sites()));
  v(state.bits()) = 1.0;
  return v;
}

LinearOperator site_operator(SiteOp kind, int site, int sites) {
  check_sites(sites);
  const auto mask = site_mask(site, sites);
  LinearOperator out(sites);
  Matrix m = Matrix::Zero(dimension(sites), dimension(sites));
  for (std::uint32_t s = 0; s < std::uint32_t(dimension(sites)); ++s) {
    const bool occ = (s & mask) != 0;
    switch (kind) {
      case SiteOp::Raise:
        if (!occ) m(s | mask, s) = 1.0;
        break;
      case SiteOp::Lower:
        if (occ) m(s & ~mask, s) = 1.0;
        break;
      case SiteOp::Number:
        if (occ) m(s, s) = 1.0;
        break;
    }
  }
  return {sites, std::move(m)};
}

LinearOperator apply_two_site(const Gate& gate, int i, int j, int sites) {
  check_sites(sites);
  check_pair(i, j, sites);
  const auto mi = site_mask(i, sites);
  const auto mj = site_mask(j, sites);
  Matrix m = Matrix::Zero(dimension(sites), dimension(sites));
  for (std::uint32_t base = 0; base < std::uint32_t(dimension(sites)); ++base) {
    if (base & (mi | mj)) continue;
    const auto idx = gate_block(base, mi, mj);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m(idx[r], idx[c]) = gate(r, c);
    }
  }
  return {sites, std::move(m)};
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("shape mismatch");
  return max_abs(a - b);
}

double max_abs_diff(const LinearOperator& a, const LinearOperator& b) {
  if (a.sites() != b.sites()) throw InvalidArgument("operators on different chains");
  return max_abs_diff(a.matrix(), b.matrix());
}

Gate permutation_gate() {
  Gate p = Gate::Zero();
  p(0, 0) = 1.0;
  p(1, 2) = 1.0;
  p(2, 1) = 1.0;
  p(3, 3) = 1.0;
  return p;
}

}  // namespace sixvertex
