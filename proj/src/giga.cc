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

#include "sggc/giga.h"

#include <algorithm>
#include <cmath>

#include "sggc/error.h"

namespace sggc {

GigaState::GigaState(const DiffusionMatrix& diff, std::span<const NodeId> train)
    : diff_(&diff), train_(train.begin(), train.end()) {
  const NodeId n = diff.size();
  Require(n > 0 && !train_.empty(), ErrorCode::kInvalidInput,
          "GIGA needs a nonempty graph and training set");
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t k = 0; k < train_.size(); ++k) {
    const NodeId i = train_[k];
    Require(i >= 0 && i < n, ErrorCode::kInvalidInput, "training id out of range");
    const double inv = 1.0 / diff.col_norms[i];
    for (SparseMatrix::InnerIterator it(diff.p_columns, i); it; ++it) {
      triplets.emplace_back(static_cast<int>(k), it.col(), it.value() * inv);
    }
  }
  columns_.resize(static_cast<Eigen::Index>(train_.size()), n);
  columns_.setFromTriplets(triplets.begin(), triplets.end());
  w_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(train_.size()));
  pw_ = Eigen::VectorXd::Zero(n);
  inv_sqrt_n_ = 1.0 / std::sqrt(static_cast<double>(n));
}

Eigen::VectorXd GigaState::Direction() const {
  const Eigen::Index n = pw_.size();
  Eigen::VectorXd a = Eigen::VectorXd::Constant(n, inv_sqrt_n_);
  if (support_size_ == 0) return a;
  a -= a.dot(pw_) * pw_;
  const double norm = a.norm();
  if (norm < 1e-12) return Eigen::VectorXd::Zero(n);
  return a / norm;
}

std::vector<double> GigaState::Alignments(std::span<const char> excluded) const {
  std::vector<double> out(size(), kNoAlignment);
  const Eigen::VectorXd a = Direction();
  if (a.isZero(0.0)) return out;
  const double a_pw = a.dot(pw_);
  const double pw_sq = pw_.squaredNorm();
  for (int j = 0; j < size(); ++j) {
    if (!excluded.empty() && excluded[j]) continue;
    double c = 0.0, a_l = 0.0;
    for (SparseMatrix::InnerIterator it(columns_, j); it; ++it) {
      c += it.value() * pw_[it.col()];
      a_l += it.value() * a[it.col()];
    }
    // ||l_j - c P(w)||^2 split into the support of l_j and the rest.
    double on_support = 0.0, pw_on_support = 0.0;
    for (SparseMatrix::InnerIterator it(columns_, j); it; ++it) {
      const double p = pw_[it.col()];
      const double r = it.value() - c * p;
      on_support += r * r;
      pw_on_support += p * p;
    }
    const double res_sq = on_support + c * c * std::max(0.0, pw_sq - pw_on_support);
    const double res = std::sqrt(std::max(0.0, res_sq));
    if (res < 1e-12) continue;
    out[j] = (a_l - c * a_pw) / res;
  }
  return out;
}

double GigaState::StepSize(int j) const {
  if (support_size_ == 0) return 1.0;
  double zeta0 = 0.0, zeta2 = 0.0;
  for (SparseMatrix::InnerIterator it(columns_, j); it; ++it) {
    zeta0 += it.value() * inv_sqrt_n_;
    zeta2 += it.value() * pw_[it.col()];
  }
  const double zeta1 = TargetAlignment();
  const double num = zeta0 - zeta1 * zeta2;
  const double den = num + (zeta1 - zeta0 * zeta2);
  double eta = den > 1e-15 ? num / den : kStepFloor;
  if (!std::isfinite(eta)) eta = kStepFloor;
  return std::clamp(eta, kStepFloor, 1.0 - kStepFloor);
}

void GigaState::Update(int j, double eta) {
  Require(j >= 0 && j < size(), ErrorCode::kInvalidInput,
          "GIGA candidate out of range");
  if (w_[j] == 0.0) ++support_size_;
  w_ *= 1.0 - eta;
  w_[j] += eta;
  pw_ *= 1.0 - eta;
  for (SparseMatrix::InnerIterator it(columns_, j); it; ++it) {
    pw_[it.col()] += eta * it.value();
  }
  const double norm = pw_.norm();
  Require(norm > 1e-300, ErrorCode::kNumerical, "GIGA iterate collapsed");
  w_ /= norm;
  pw_ /= norm;
}

double GigaState::TargetAlignment() const { return pw_.sum() * inv_sqrt_n_; }

double GigaState::Objective() const {
  const double n = static_cast<double>(pw_.size());
  if (support_size_ == 0) return std::sqrt(1.0 / n);
  const double s = TargetAlignment();
  return std::sqrt(std::max(0.0, 1.0 - s * s) / n);
}

Eigen::VectorXd GigaState::RescaledWeights() const {
  Eigen::VectorXd raw_combination = Eigen::VectorXd::Zero(pw_.size());
  for (int k = 0; k < size(); ++k) {
    if (w_[k] == 0.0) continue;
    for (SparseMatrix::InnerIterator it(diff_->p_columns, train_[k]); it; ++it) {
      raw_combination[it.col()] += w_[k] * it.value();
    }
  }
  const double norm = raw_combination.norm();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(size());
  if (norm == 0.0) return out;
  const double n = static_cast<double>(pw_.size());
  for (int k = 0; k < size(); ++k) {
    out[k] = w_[k] / (n * diff_->col_norms[train_[k]] * norm);
  }
  return out;
}

}  // namespace sggc
