#include "unmix/types.hpp"

namespace unmix {

namespace {
bool all_finite(const Matrix& m) { return m.allFinite(); }
}  // namespace

HsiCube::HsiCube(Index h, Index w, Matrix vals)
    : height(h), width(w), values(std::move(vals)) {
  validate();
}

void HsiCube::validate() const {
  if (height < 1 || width < 1)
    throw Error(ErrorCode::InvalidValue, "cube spatial dimensions must be >= 1");
  if (values.cols() != height * width)
    throw Error(ErrorCode::ShapeMismatch, "pixel count != height*width");
  if (values.rows() < 2)
    throw Error(ErrorCode::InvalidValue, "cube needs p >= 2 bands");
  if (!all_finite(values))
    throw Error(ErrorCode::InvalidValue, "cube contains NaN/Inf");
}

EndmemberMatrix::EndmemberMatrix(Matrix s, std::vector<std::string> n, bool reflectance)
    : spectra(std::move(s)), names(std::move(n)), reflectance_domain(reflectance) {
  validate();
}

void EndmemberMatrix::validate() const {
  if (spectra.cols() < 1)
    throw Error(ErrorCode::InvalidValue, "endmember matrix needs r >= 1 columns");
  if (!all_finite(spectra))
    throw Error(ErrorCode::InvalidValue, "endmember matrix contains NaN/Inf");
  if (!names.empty() && static_cast<Index>(names.size()) != spectra.cols())
    throw Error(ErrorCode::ShapeMismatch, "name list length != endmember count");
  if (reflectance_domain) {
    const double lo = spectra.minCoeff();
    const double hi = spectra.maxCoeff();
    if (lo < -1e-9 || hi > 1.0 + 1e-9)
      throw Error(ErrorCode::InvalidValue, "reflectance-domain spectra outside [0,1]");
  }
}

AbundanceMap::AbundanceMap(Matrix c, Index h, Index w, bool asc, bool anc)
    : coeffs(std::move(c)), height(h), width(w), asc_enforced(asc), anc_enforced(anc) {
  validate();
}

void AbundanceMap::validate() const {
  if (coeffs.cols() != height * width)
    throw Error(ErrorCode::ShapeMismatch, "abundance pixel count != height*width");
  if (!all_finite(coeffs))
    throw Error(ErrorCode::InvalidValue, "abundances contain NaN/Inf");
  if (anc_enforced && coeffs.minCoeff() < -1e-9)
    throw Error(ErrorCode::InvalidValue, "ANC flagged but abundances < -1e-9");
  if (asc_enforced) {
    const Vector sums = coeffs.colwise().sum();
    if (((sums.array() - 1.0).abs() > 1e-6).any())
      throw Error(ErrorCode::InvalidValue, "ASC flagged but column sums deviate from 1");
  }
}

void SolverOptions::validate() const {
  if (max_iter < 1) throw Error(ErrorCode::InvalidValue, "max_iter must be >= 1");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidValue, "tol must be > 0");
  if (!(rho > 0)) throw Error(ErrorCode::InvalidValue, "rho must be > 0");
  if (lambda1 < 0 || lambda2 < 0 || beta < 0)
    throw Error(ErrorCode::InvalidValue, "regularization weights must be >= 0");
}

}  // namespace unmix
