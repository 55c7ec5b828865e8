#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unmix/error.hpp"

namespace unmix {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// p-band image of n = height*width reflectance pixels. Column j of
/// `values` is the spectrum of pixel j; pixels are ordered row-major
/// over (row, col).
struct HsiCube {
  Index height = 0;
  Index width = 0;
  Matrix values;  // p x n

  HsiCube() = default;
  HsiCube(Index h, Index w, Matrix vals);

  Index bands() const { return values.rows(); }
  Index pixels() const { return values.cols(); }

  // Throws InvalidValue / ShapeMismatch on a violated invariant.
  void validate() const;
};

/// p x r matrix of endmember spectra, one endmember per column.
struct EndmemberMatrix {
  Matrix spectra;  // p x r
  std::vector<std::string> names;  // empty or size r
  bool reflectance_domain = false;

  EndmemberMatrix() = default;
  explicit EndmemberMatrix(Matrix s, std::vector<std::string> n = {},
                           bool reflectance = false);

  Index bands() const { return spectra.rows(); }
  Index count() const { return spectra.cols(); }
  void validate() const;
};

/// r x n fractional abundances with spatial shape. Flags record which
/// constraints the producing solver enforced.
struct AbundanceMap {
  Matrix coeffs;  // r x n
  Index height = 0;
  Index width = 0;
  bool asc_enforced = false;
  bool anc_enforced = false;

  AbundanceMap() = default;
  AbundanceMap(Matrix c, Index h, Index w, bool asc, bool anc);

  Index count() const { return coeffs.rows(); }
  Index pixels() const { return coeffs.cols(); }
  void validate() const;
};

/// Shared solver knobs. lambda1/lambda2/beta take the solver-specific
/// meaning documented on each operation.
struct SolverOptions {
  int max_iter = 1000;
  double tol = 1e-6;
  double rho = 1.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Per-solve trace: objective per (outer) iteration plus convergence flag.
struct SolverDiag {
  std::vector<double> objective;
  int iterations = 0;
  bool converged = true;
};

}  // namespace unmix
