#pragma once

// Occupation-basis indexing and dense operators on (C^2)^{⊗L}.
//
// Basis convention: a basis state of an L-site chain is an L-bit integer.
// Site i (1-based) is stored at bit position L - i, so site 1 is the most
// significant bit and site L the least significant one. Bit value 1 means
// the site is occupied (spin up), 0 means empty (spin down). The
// pseudovacuum |00...0> is index 0.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace sixvertex {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Gate = Eigen::Matrix4cd;

/// Largest chain handled by the dense kernels.
inline constexpr int kMaxSites = 14;

/// Occupation bitstring of a chain of `sites` sites.
class StateIndex {
 public:
  StateIndex(int sites, std::uint32_t bits);

  /// Build from a 0/1 occupation list, entry k describing site k+1.
  static StateIndex from_occupations(const std::vector<int>& occupations);
  /// Build from the 1-based list of occupied sites.
  static StateIndex from_occupied_sites(int sites, const std::vector<int>& occupied);

  int sites() const { return sites_; }
  std::uint32_t bits() const { return bits_; }
  bool occupied(int site) const;
  int occupation_count() const;
  std::vector<int> occupations() const;
  std::vector<int> occupied_sites() const;

  friend bool operator==(const StateIndex&, const StateIndex&) = default;

 private:
  int sites_;
  std::uint32_t bits_;
};

/// Bit mask of `site` (1-based) in a chain of `sites` sites.
std::uint32_t site_mask(int site, int sites);

/// Dense complex operator on the 2^L occupation basis.
/// Rows index the out-state, columns the in-state.
class LinearOperator {
 public:
  explicit LinearOperator(int sites);  // zero operator
  LinearOperator(int sites, Matrix entries);

  static LinearOperator identity(int sites);
  static LinearOperator diagonal(int sites, const Vector& diag);

  int sites() const { return sites_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  cplx operator()(Eigen::Index row, Eigen::Index col) const { return matrix_(row, col); }

  LinearOperator operator*(const LinearOperator& rhs) const;
  LinearOperator operator+(const LinearOperator& rhs) const;
  LinearOperator operator-(const LinearOperator& rhs) const;
  LinearOperator operator*(cplx scalar) const;
  Vector operator*(const Vector& ket) const;
  LinearOperator& operator+=(const LinearOperator& rhs);

  /// In-place composition this <- this * embed(gate, i, j), in O(dim^2).
  void right_multiply_gate(const Gate& gate, int i, int j);
  /// In-place composition this <- embed(gate, i, j) * this, in O(dim^2).
  void left_multiply_gate(const Gate& gate, int i, int j);

 private:
  int sites_;
  Matrix matrix_;
};

enum class SiteOp { Raise, Lower, Number };

/// Unit vector on the all-empty bitstring.
Vector vacuum_state(int sites);

/// Basis vector |s>.
Vector basis_state(const StateIndex& state);

/// Single-site operator embedded as identity elsewhere.
LinearOperator site_operator(SiteOp kind, int site, int sites);

/// Embed a 4x4 gate on sites (i, j). The gate is indexed in the order
/// |00>,|01>,|10>,|11> with the first slot belonging to site i.
LinearOperator apply_two_site(const Gate& gate, int i, int j, int sites);

/// Max-abs entrywise difference.
double max_abs_diff(const LinearOperator& a, const LinearOperator& b);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& a);

/// Two-site permutation gate.
Gate permutation_gate();

}  // namespace sixvertex
