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

// Dense eigendecomposition of graph Laplacians and spectral diagnostics:
// relative standard deviation of ego spectral embeddings, per-eigenvalue
// response of a GNN, and the decay profile of ego spectral features.

#ifndef SGGC_SPECTRAL_H_
#define SGGC_SPECTRAL_H_

#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "sggc/graph.h"

namespace sggc {

inline constexpr int kDenseEigenCap = 4096;

struct EigenBasis {
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXd vectors;      // column k pairs with eigenvalues[k]

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

// Flips each column so its largest-magnitude entry (lowest index on ties) is
// nonnegative. Idempotent.
void FixEigenvectorSigns(Eigen::MatrixXd& vectors);

// Throws kInvalidInput when `l` is not square, asymmetric beyond 1e-10 or
// larger than `cap`.
EigenBasis EigDense(const Eigen::MatrixXd& l, int cap = kDenseEigenCap);

// U^T x.
Eigen::MatrixXd SpectralTransform(const EigenBasis& basis,
                                  const Eigen::MatrixXd& x);

enum class RsdVariant {
  kMeanNorm,     // sqrt(mean_i ||Z_i - Zbar||_F) / ||Zbar||_F
  kMeanSquared,  // sqrt(mean_i ||Z_i - Zbar||_F^2) / ||Zbar||_F
};

// Throws kNumerical ("degenerate mean embedding") when Zbar vanishes.
double Rsd(std::span<const Eigen::MatrixXd> embeddings,
           RsdVariant variant = RsdVariant::kMeanNorm);

struct SpectralPair {
  double lambda;
  double value;
};

// For each eigenpair of the full normalized Laplacian of `g`, the ratio
// ||[U^T output]_k|| / ||[U^T X]_k||, or NaN when the denominator is below
// 1e-12.
std::vector<SpectralPair> SpectralResponse(const GraphBundle& g,
                                           const Eigen::MatrixXd& output);
std::vector<SpectralPair> SpectralResponse(const EigenBasis& basis,
                                           const Eigen::MatrixXd& input,
                                           const Eigen::MatrixXd& output);

struct DecayProfile {
  std::vector<SpectralPair> measured;   // (lambda_k, mean |<x_col, u_k>|)
  std::vector<SpectralPair> reference;  // (lambda_k, (1 - lambda_k / 2)^L)
};

// `signals` is n x m: each column is one per-center signal (a fixed entry of
// every center's spectral feature matrix). The measured profile averages the
// magnitude of its projection on each full-graph eigenvector.
DecayProfile SpectralDecayProfile(const EigenBasis& full_basis,
                                  const Eigen::MatrixXd& signals, int depth);

double PearsonCorrelation(std::span<const double> a, std::span<const double> b);

// Writes a header line followed by "lambda,value" style rows.
void WritePairsCsv(std::ostream& out, std::string_view header,
                   std::span<const SpectralPair> pairs);

}  // namespace sggc

#endif  // SGGC_SPECTRAL_H_
