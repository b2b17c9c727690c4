// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sggc/spectral.h"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "sggc/error.h"
#include "sggc/operators.h"

namespace sggc {

void FixEigenvectorSigns(Eigen::MatrixXd& vectors) {
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    Eigen::Index best = 0;
    for (Eigen::Index r = 1; r < vectors.rows(); ++r) {
      if (std::abs(vectors(r, k)) > std::abs(vectors(best, k))) best = r;
    }
    if (vectors.rows() > 0 && vectors(best, k) < 0) vectors.col(k) *= -1.0;
  }
}

EigenBasis EigDense(const Eigen::MatrixXd& l, int cap) {
  Require(l.rows() == l.cols(), ErrorCode::kInvalidInput,
          "eigendecomposition needs a square matrix");
  Require(l.rows() <= cap, ErrorCode::kInvalidInput,
          "matrix size " + std::to_string(l.rows()) +
              " exceeds dense eigensolver cap " + std::to_string(cap));
  Require((l - l.transpose()).cwiseAbs().maxCoeff() <= 1e-10 || l.size() == 0,
          ErrorCode::kInvalidInput, "matrix is not symmetric");
  EigenBasis basis;
  if (l.rows() == 0) return basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
  Require(solver.info() == Eigen::Success, ErrorCode::kNumerical,
          "eigensolver did not converge");
  basis.eigenvalues = solver.eigenvalues();
  basis.vectors = solver.eigenvectors();
  FixEigenvectorSigns(basis.vectors);
  return basis;
}

Eigen::MatrixXd SpectralTransform(const EigenBasis& basis,
                                  const Eigen::MatrixXd& x) {
  Require(x.rows() == basis.vectors.rows(), ErrorCode::kInvalidInput,
          "spectral transform dimension mismatch");
  return basis.vectors.transpose() * x;
}

double Rsd(std::span<const Eigen::MatrixXd> embeddings, RsdVariant variant) {
  Require(!embeddings.empty(), ErrorCode::kInvalidInput, "no embeddings");
  const auto rows = embeddings.front().rows(), cols = embeddings.front().cols();
  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(rows, cols);
  for (const auto& z : embeddings) {
    Require(z.rows() == rows && z.cols() == cols, ErrorCode::kInvalidInput,
            "embeddings differ in shape");
    mean += z;
  }
  mean /= static_cast<double>(embeddings.size());
  const double mean_norm = mean.norm();
  Require(mean_norm > 1e-12, ErrorCode::kNumerical,
          "degenerate mean embedding");
  double total = 0.0;
  for (const auto& z : embeddings) {
    const double dev = (z - mean).norm();
    total += variant == RsdVariant::kMeanNorm ? dev : dev * dev;
  }
  return std::sqrt(total / static_cast<double>(embeddings.size())) / mean_norm;
}

std::vector<SpectralPair> SpectralResponse(const EigenBasis& basis,
                                           const Eigen::MatrixXd& input,
                                           const Eigen::MatrixXd& output) {
  Require(input.rows() == output.rows(), ErrorCode::kInvalidInput,
          "response input and output row counts differ");
  const Eigen::MatrixXd tin = SpectralTransform(basis, input);
  const Eigen::MatrixXd tout = SpectralTransform(basis, output);
  std::vector<SpectralPair> pairs;
  pairs.reserve(basis.size());
  for (int k = 0; k < basis.size(); ++k) {
    const double denom = tin.row(k).norm();
    const double value = denom < 1e-12
                             ? std::numeric_limits<double>::quiet_NaN()
                             : tout.row(k).norm() / denom;
    pairs.push_back({basis.eigenvalues[k], value});
  }
  return pairs;
}

std::vector<SpectralPair> SpectralResponse(const GraphBundle& g,
                                           const Eigen::MatrixXd& output) {
  Require(output.rows() == g.num_nodes(), ErrorCode::kInvalidInput,
          "response output must have one row per node");
  const EigenBasis basis = EigDense(BuildNormalizedLaplacian(g).Dense());
  return SpectralResponse(basis, g.features().cast<double>(), output);
}

DecayProfile SpectralDecayProfile(const EigenBasis& full_basis,
                                  const Eigen::MatrixXd& signals, int depth) {
  Require(signals.rows() == full_basis.vectors.rows(),
          ErrorCode::kInvalidInput, "decay signals need one row per node");
  Require(signals.cols() > 0, ErrorCode::kInvalidInput, "no decay signals");
  const Eigen::MatrixXd proj = full_basis.vectors.transpose() * signals;
  DecayProfile profile;
  for (int k = 0; k < full_basis.size(); ++k) {
    const double lambda = full_basis.eigenvalues[k];
    profile.measured.push_back({lambda, proj.row(k).cwiseAbs().mean()});
    profile.reference.push_back({lambda, std::pow(1.0 - 0.5 * lambda, depth)});
  }
  return profile;
}

double PearsonCorrelation(std::span<const double> a,
                          std::span<const double> b) {
  Require(a.size() == b.size() && a.size() > 1, ErrorCode::kInvalidInput,
          "correlation needs two equal-length series");
  const Eigen::Map<const Eigen::VectorXd> x(a.data(), a.size());
  const Eigen::Map<const Eigen::VectorXd> y(b.data(), b.size());
  const Eigen::VectorXd dx = x.array() - x.mean();
  const Eigen::VectorXd dy = y.array() - y.mean();
  const double denom = dx.norm() * dy.norm();
  Require(denom > 0, ErrorCode::kNumerical, "constant series");
  return dx.dot(dy) / denom;
}

void WritePairsCsv(std::ostream& out, std::string_view header,
                   std::span<const SpectralPair> pairs) {
  out << header << '\n';
  out.precision(17);
  for (const auto& [lambda, value] : pairs) {
    out << lambda << ',';
    if (std::isnan(value)) {
      out << "nan";
    } else {
      out << value;
    }
    out << '\n';
  }
}

}  // namespace sggc
