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

// Offline acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "oracles.h"
#include "sggc/compress.h"
#include "sggc/coreset.h"
#include "sggc/ego.h"
#include "sggc/facility_location.h"
#include "sggc/giga.h"
#include "sggc/gnn.h"
#include "sggc/operators.h"
#include "sggc/pipeline.h"
#include "sggc/random.h"
#include "sggc/spectral.h"
#include "sggc/synthetic.h"
#include "sggc/train.h"

namespace sggc {
namespace {

// Tolerances and budgets.
constexpr double kRfTolerance = 1e-6;
constexpr double kRfSeconds = 10;
constexpr double kSrfTolerance = 1e-8;
constexpr double kGradTolerance = 1e-4;
constexpr double kGradSeconds = 30;
constexpr double kSubmodularSlack = 1e-12;
constexpr double kSubmodularSeconds = 60;
constexpr double kGigaTolerance = 1e-10;
constexpr double kSphereTolerance = 1e-12;
constexpr double kWeightSumTolerance = 1e-9;
constexpr double kTailRelative = 1e-9;
constexpr double kTailAbsolute = 1e-12;  // times ||X||_F^2, for tails near 0
constexpr double kRsdSeconds = 120;
constexpr double kDecayThreshold = 0.5;
constexpr double kUniformMargin = 0.01;
constexpr double kEndToEndSeconds = 600;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void Report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

GraphBundle Instance(int index) {
  return testing::RandomGraph(60 + 10 * index, 0.06, 5, 500 + index, 3);
}

std::vector<NodeId> SampleNodes(const GraphBundle& g, int count, std::uint64_t seed) {
  std::vector<NodeId> ids(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) ids[i] = i;
  Rng rng(seed);
  Shuffle(ids, rng);
  ids.resize(std::min<std::size_t>(count, ids.size()));
  return ids;
}

void ReceptiveField() {
  const auto start = Clock::now();
  double worst = 0;
  for (int k = 0; k < 5; ++k) {
    const GraphBundle g = Instance(k);
    const GraphInput full = MakeGraphInput(g);
    const GnnModel model = InitModel(Arch::kGcn, g.feature_dim(), 16,
                                     g.num_classes(), 2, 0.5, 40 + k);
    for (NodeId c : SampleNodes(g, 20, k)) {
      worst = std::max(worst, ReceptiveFieldCheck(g, full, model, c, 2));
    }
  }
  const double t = Seconds(start);
  Report(1, worst < kRfTolerance && t < kRfSeconds,
         "ego-graph center embedding equals the full-graph embedding",
         Fmt("max diff %.3g, %.2fs", worst, t));
}

void SpectralReceptiveField() {
  double worst = 0;
  for (int k = 0; k < 5; ++k) {
    const GraphBundle g = Instance(k);
    const GraphInput full = MakeGraphInput(g);
    const GnnModel model = InitModel(Arch::kGcn, g.feature_dim(), 16,
                                     g.num_classes(), 2, 0.5, 40 + k);
    const Eigen::MatrixXd logits = Forward(model, full);
    for (NodeId c : SampleNodes(g, 20, k)) {
      const EgoGraph ego = ExtractStandardEgo(g, c, 2);
      const SpectralEgo spectral = ComputeSpectralEgo(ego, ego.size());
      const Eigen::MatrixXd z = Forward(model, EgoGraphInput(ego));
      const Eigen::MatrixXd zt = SpectralTransform(spectral.basis, z);
      const Eigen::MatrixXd center = spectral.v.transpose() * zt;
      const std::vector<int> label = {g.Label(c)};
      const std::vector<NodeId> first = {0};
      const double direct =
          WeightedLoss(logits.row(c), label, first, {});
      const double spectral_loss = WeightedLoss(center, label, first, {});
      worst = std::max(worst, std::abs(direct - spectral_loss));
    }
  }
  Report(2, worst < kSrfTolerance,
         "center loss equals the loss of v^T times the spectral embedding",
         Fmt("max diff %.3g", worst));
}

void Gradients() {
  const auto start = Clock::now();
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const GraphBundle g = testing::RandomGraph(12, 0.3, 4, 900 + seed);
    const GraphInput input = MakeGraphInput(g);
    const std::vector<NodeId> ids = {0, 1, 4, 6, 9, 11};
    std::vector<double> w = {0.1, 0.3, 0.05, 0.2, 0.15, 0.2};
    struct Case {
      Arch arch;
      int layers;
      double dropout;
    };
    for (const Case& c : {Case{Arch::kGcn, 1, 0.0}, Case{Arch::kGcn, 2, 0.0},
                          Case{Arch::kGcn, 2, 0.5}, Case{Arch::kGcn, 3, 0.2},
                          Case{Arch::kSgc, 2, 0.0}, Case{Arch::kSgc, 3, 0.0}}) {
      GnnModel model = InitModel(c.arch, 4, 7, g.num_classes(), c.layers,
                                 c.dropout, seed);
      const DropoutKey key{c.dropout > 0, seed, 1};
      const double wd = 5e-4;
      ForwardCache cache;
      Forward(model, input, key, &cache);
      const auto grads = Backward(model, input, cache, g.labels(), ids, w, wd);
      for (std::size_t k = 0; k < model.weights.size(); ++k) {
        const Eigen::MatrixXd numeric = testing::NumericGradient(model.weights[k], [&] {
          double reg = 0;
          for (const auto& m : model.weights) reg += 0.5 * wd * m.squaredNorm();
          return WeightedLoss(Forward(model, input, key), g.labels(), ids, w) + reg;
        });
        const double scale = std::max(
            1e-8, std::max(numeric.cwiseAbs().maxCoeff(), grads[k].cwiseAbs().maxCoeff()));
        worst = std::max(worst, (numeric - grads[k]).cwiseAbs().maxCoeff() / scale);
      }
    }
  }
  const double t = Seconds(start);
  Report(3, worst < kGradTolerance && t < kGradSeconds,
         "analytic gradients match central finite differences",
         Fmt("max relative error %.3g, %.2fs", worst, t));
}

LossDistanceOracle RandomOracle(int n, int classes, Rng& rng) {
  Eigen::MatrixXd vs(n, 4);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(UniformIndex(rng, classes));
    for (int j = 0; j < 4; ++j) vs(i, j) = StandardNormal(rng);
  }
  return LossDistanceOracle(vs, labels);
}

void Submodularity() {
  const auto start = Clock::now();
  Rng rng(77);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 8 + static_cast<int>(UniformIndex(rng, 20));
    const LossDistanceOracle o = RandomOracle(n, 1 + trial % 4, rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Shuffle(perm, rng);
    const int t_size = 1 + static_cast<int>(UniformIndex(rng, n - 1));
    const int s_size = static_cast<int>(UniformIndex(rng, t_size + 1));
    const int x = perm[n - 1];
    FacilityLocation s(o), t(o);
    for (int k = 0; k < t_size; ++k) {
      if (k < s_size) s.Add(perm[k]);
      t.Add(perm[k]);
    }
    const bool monotone = s.Gain(x) >= -kSubmodularSlack &&
                          t.Gain(x) >= -kSubmodularSlack &&
                          t.Value() >= s.Value() - kSubmodularSlack;
    const bool diminishing = s.Gain(x) >= t.Gain(x) - kSubmodularSlack;
    violations += !(monotone && diminishing);
  }
  double worst_ratio = 2;
  for (int inst = 0; inst < 10; ++inst) {
    const LossDistanceOracle o = RandomOracle(10, 2 + inst % 3, rng);
    FacilityLocation greedy(o);
    std::vector<int> all(10);
    for (int i = 0; i < 10; ++i) all[i] = i;
    for (int step = 0; step < 3; ++step) {
      std::vector<int> candidates;
      for (int j : all) {
        if (!greedy.Contains(j)) candidates.push_back(j);
      }
      greedy.Add(greedy.LazyArgmax(candidates));
    }
    double best = 0;
    for (int a = 0; a < 10; ++a) {
      for (int b = a + 1; b < 10; ++b) {
        for (int c = b + 1; c < 10; ++c) {
          const std::vector<int> set = {a, b, c};
          best = std::max(best, FacilityValue(o, set));
        }
      }
    }
    worst_ratio = std::min(worst_ratio, greedy.Value() / best);
  }
  const double t = Seconds(start);
  const double bound = 1 - std::exp(-1.0);
  Report(4, violations == 0 && worst_ratio >= bound && t < kSubmodularSeconds,
         "facility location is monotone submodular and greedy meets 1-1/e",
         Fmt("%.0f violations, worst greedy/opt %.4f, %.2fs", violations,
             worst_ratio, t));
}

void Giga() {
  double oracle_gap = 0, sphere_gap = 0;
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GraphBundle g = testing::RandomGraph(30 + 4 * static_cast<int>(seed),
                                               0.1, 3, 600 + seed);
    const DiffusionMatrix diff = BuildDiffusion(g);
    const auto& train = g.splits().train;
    GigaState state(diff, train);
    testing::DenseGiga dense(testing::DenseLazyWalk(g), train);
    std::vector<char> excluded(train.size(), 0);
    std::vector<NodeId> pure;
    const int steps = std::min<int>(10, static_cast<int>(train.size()));
    for (int step = 0; step < steps; ++step) {
      const std::vector<double> align = state.Alignments(excluded);
      const std::vector<double> ref = dense.Alignments();
      int j = -1;
      for (int k = 0; k < static_cast<int>(align.size()); ++k) {
        if (excluded[k] || align[k] == kNoAlignment) continue;
        oracle_gap = std::max(oracle_gap, std::abs(align[k] - ref[k]));
        if (j < 0 || align[k] > align[j]) j = k;
      }
      if (j < 0) break;
      const double eta = state.StepSize(j);
      oracle_gap = std::max(oracle_gap, std::abs(eta - dense.StepSize(j)));
      state.Update(j, eta);
      dense.Update(j, eta);
      excluded[j] = 1;
      pure.push_back(train[j]);
      sphere_gap = std::max(sphere_gap, std::abs(state.combination().norm() - 1));
      oracle_gap = std::max(
          oracle_gap, (state.weights() - dense.weights()).cwiseAbs().maxCoeff());
      oracle_gap = std::max(
          oracle_gap, (state.combination() - dense.combination()).cwiseAbs().maxCoeff());
    }
    CoresetConfig cfg;
    cfg.method = Method::kSggc;
    cfg.kappa = 1.0;
    cfg.size_c = static_cast<int>(pure.size());
    cfg.ego_size_p = 8;
    mismatches += SelectCoreset(g, cfg).selected != pure;
  }
  Report(5,
         sphere_gap < kSphereTolerance && mismatches == 0 &&
             oracle_gap < kGigaTolerance,
         "geodesic ascent stays on the sphere, matches the dense oracle and "
         "the kappa=1 trajectory",
         Fmt("sphere %.3g, oracle %.3g, %.0f trajectory mismatches", sphere_gap,
             oracle_gap, mismatches));
}

std::set<Eigen::Index> Support(const Eigen::VectorXd& v) {
  std::set<Eigen::Index> out;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v[k] != 0.0) out.insert(k);
  }
  return out;
}

void WeightContract() {
  Rng rng(31);
  const Method methods[] = {Method::kSggc,    Method::kScgiga,  Method::kCraigLinear,
                            Method::kUniform, Method::kHerding, Method::kKCenter};
  int bad = 0, configs = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const GraphBundle g = testing::RandomGraph(
        40 + static_cast<int>(UniformIndex(rng, 40)), 0.05 + 0.1 * UniformUnit(rng),
        3, 700 + trial, 2 + trial % 3);
    const int n_t = static_cast<int>(g.splits().train.size());
    CoresetConfig cfg;
    cfg.size_c = 1 + static_cast<int>(UniformIndex(rng, n_t / 2));
    cfg.kappa = trial % 10 == 0 ? 0.0 : UniformUnit(rng);
    cfg.ego_size_p = 4 + static_cast<int>(UniformIndex(rng, 8));
    cfg.depth_L = 1 + trial % 3;
    cfg.max_budget_s = 1 + static_cast<int>(UniformIndex(rng, 3));
    cfg.seed = trial;
    for (Method m : methods) {
      cfg.method = m;
      const CoresetResult r = SelectCoreset(g, cfg);
      ++configs;
      const bool ok = r.w.minCoeff() >= 0.0 &&
                      std::abs(r.w.sum() - 1) <= kWeightSumTolerance &&
                      static_cast<int>(Support(r.w).size()) <= cfg.size_c &&
                      Support(r.w_a) == Support(r.w_c);
      bad += !ok;
    }
  }
  Report(6, bad == 0, "coreset weights are a distribution on at most c nodes",
         Fmt("%.0f of %.0f selections violate", bad, configs));
}

void CompressionBudget() {
  Rng rng(47);
  int over_budget = 0, tail_mismatch = 0, strata = 0, ranked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + static_cast<int>(UniformIndex(rng, 10));
    const GraphBundle g = testing::RandomGraph(
        50 + static_cast<int>(UniformIndex(rng, 80)), 0.03 + 0.05 * UniformUnit(rng),
        d, 800 + trial);
    const auto& train = g.splits().train;
    const int c = 1 + static_cast<int>(UniformIndex(rng, train.size()));
    const std::vector<NodeId> centers(train.begin(), train.begin() + c);
    const std::vector<double> w(c, 1.0 / c);
    const bool centered = trial % 2 == 1;
    const CompressedCoreset cc =
        Compress(g, centers, w, 1 + static_cast<int>(UniformIndex(rng, 3)), centered);
    std::int64_t values = 0;
    for (const auto& s : cc.strata) {
      values += static_cast<std::int64_t>(s.nodes.size() + d + 1) * s.rank;
      if (s.nodes.empty()) continue;
      Eigen::MatrixXd x(static_cast<Eigen::Index>(s.nodes.size()), d);
      for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        x.row(static_cast<Eigen::Index>(k)) = g.features().row(s.nodes[k]).cast<double>();
      }
      if (centered) x.rowwise() -= x.colwise().mean();
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(x).singularValues();
      const double tail = sv.tail(sv.size() - s.rank).squaredNorm();
      ++strata;
      ranked += s.rank > 0;
      tail_mismatch += std::abs(s.error_pre - tail) >
                       kTailRelative * tail + kTailAbsolute * x.squaredNorm();
    }
    const std::int64_t means = centered ? static_cast<std::int64_t>(d) *
                                              std::count_if(cc.strata.begin(), cc.strata.end(),
                                                            [](const auto& s) {
                                                              return !s.nodes.empty();
                                                            })
                                        : 0;
    over_budget += values + means > static_cast<std::int64_t>(c) * d;
  }
  Report(7, over_budget == 0 && tail_mismatch == 0,
         "stratum storage fits c*d and errors equal the singular-value tail",
         Fmt("%.0f over budget, %.0f of %.0f strata off the tail", over_budget,
             tail_mismatch, strata) +
             Fmt(", %.0f with rank > 0", ranked));
}

void RsdTrend() {
  const auto start = Clock::now();
  SbmSpec spec;
  spec.num_nodes = 300;
  spec.num_classes = 4;
  spec.p_in = 0.05;
  spec.p_out = 0.005;
  spec.num_train = 100;
  spec.num_val = 50;
  spec.seed = 12;
  const GraphBundle g = MakeSbm(spec);
  RsdOptions opt;
  opt.depth = 2;
  opt.draws = 10;
  opt.seed = 3;
  const auto rsd = RsdSweep(g, {4, 32}, opt);
  auto mean = [](const std::vector<double>& v) {
    double total = 0;
    for (double x : v) total += x;
    return total / static_cast<double>(v.size());
  };
  const double small = mean(rsd[0]), large = mean(rsd[1]);
  const double t = Seconds(start);
  Report(8, large < small && t < kRsdSeconds,
         "mean RSD drops from p=4 to p=32",
         Fmt("p=4 %.4f, p=32 %.4f, %.1fs", small, large, t));
}

void SpectralDecay() {
  SbmSpec spec;
  spec.num_nodes = 200;
  spec.num_classes = 4;
  spec.feature_dim = 4;
  spec.mean_scale = 0.0;  // i.i.d. unit Gaussian features
  spec.num_train = 50;
  spec.num_val = 50;
  spec.seed = 1;
  const GraphBundle base = MakeSbm(spec);
  const int depth = 2, p = 16, draws = 20;
  const EigenBasis full = EigDense(BuildNormalizedLaplacian(base).Dense());
  const DiffusionMatrix diff = BuildDiffusion(base);
  const Eigen::MatrixXd pl = [&] {
    const Eigen::MatrixXd dense(diff.p);
    return Eigen::MatrixXd(dense * dense);
  }();
  std::vector<double> ego_profile(full.size(), 0.0), filter_profile(full.size(), 0.0),
      reference;
  for (int draw = 0; draw < draws; ++draw) {
    spec.seed = 100 + draw;
    const GraphBundle g = GraphBundle::Create("decay", base.num_nodes(),
                                              base.UndirectedEdges(),
                                              MakeSbm(spec).features(), base.labels(),
                                              base.num_classes(), base.splits());
    // Entry (a, b) of every center's diffusion-ego spectral features.
    Eigen::MatrixXd signals(g.num_nodes(), p * spec.feature_dim);
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      const EgoGraph ego = ExtractDiffusionEgo(diff, g, i, depth, p);
      const Eigen::MatrixXd z = EgoSpectralFeatures(ComputeSpectralEgo(ego, p), ego, p);
      for (int a = 0; a < p; ++a) {
        for (int b = 0; b < spec.feature_dim; ++b) {
          signals(i, a * spec.feature_dim + b) = z(a, b);
        }
      }
    }
    const DecayProfile ego_decay = SpectralDecayProfile(full, signals, depth);
    // Global-basis form: column k is (P^L)^T diag(x) u_k for one feature x.
    const Eigen::VectorXd x = g.features().col(0).cast<double>();
    const DecayProfile filter_decay =
        SpectralDecayProfile(full, pl.transpose() * x.asDiagonal() * full.vectors, depth);
    reference.clear();
    for (int k = 0; k < full.size(); ++k) {
      ego_profile[k] += ego_decay.measured[k].value;
      filter_profile[k] += filter_decay.measured[k].value;
      reference.push_back(ego_decay.reference[k].value);
    }
  }
  const double ego_corr = PearsonCorrelation(ego_profile, reference);
  const double filter_corr = PearsonCorrelation(filter_profile, reference);
  std::printf("INFO criterion 9: per-ego eigenbasis profile correlation %.4f\n",
              ego_corr);
  Report(9, filter_corr > kDecayThreshold,
         "decay profile in the global eigenbasis tracks (1-lambda/2)^L",
         Fmt("correlation %.4f, L=%.0f", filter_corr, depth));
}

void EndToEnd() {
  const auto start = Clock::now();
  int beats_uniform = 0, beats_herding = 0;
  std::string detail;
  for (int ds = 0; ds < 3; ++ds) {
    SbmSpec spec;
    spec.num_nodes = 400;
    spec.num_classes = 4;
    spec.p_in = 0.05;
    spec.p_out = 0.01;
    spec.feature_dim = 16;
    spec.mean_scale = 0.3;
    spec.num_train = 200;
    spec.num_val = 50;
    spec.seed = 1000 + ds;
    const GraphBundle g = MakeSbm(spec);
    PipelineConfig cfg;
    cfg.ratio = 0.15;
    cfg.kappa = 0.1;
    cfg.ego_size_p = 16;
    cfg.train.hidden_dim = 64;
    cfg.train.epochs = 200;
    cfg.seeds = SeedRange(0, 10);
    cfg.method = Method::kSggc;
    const double sggc = RunCoresetExperiment(g, g, cfg).mean;
    cfg.method = Method::kUniform;
    const double uniform = RunCoresetExperiment(g, g, cfg).mean;
    cfg.method = Method::kHerding;
    const double herding = RunCoresetExperiment(g, g, cfg).mean;
    const bool ok_u = sggc >= uniform - kUniformMargin;
    const bool ok_h = sggc >= herding;
    beats_uniform += ok_u;
    beats_herding += ok_h;
    detail += Fmt("seed %.0f: sggc %.3f uniform ", ds, sggc) +
              Fmt("%.3f herding %.3f; ", uniform, herding);
  }
  const double t = Seconds(start);
  Report(10, beats_uniform >= 2 && beats_herding >= 2 && t < kEndToEndSeconds,
         "sggc at 15% holds against uniform and herding on most dataset seeds",
         detail + Fmt("%.0fs", t));
}

}  // namespace
}  // namespace sggc

int main() {
  const std::vector<std::function<void()>> criteria = {
      sggc::ReceptiveField, sggc::SpectralReceptiveField, sggc::Gradients,
      sggc::Submodularity,  sggc::Giga,                   sggc::WeightContract,
      sggc::CompressionBudget, sggc::RsdTrend,            sggc::SpectralDecay,
      sggc::EndToEnd};
  for (const auto& run : criteria) run();
  std::printf("%d criteria failed\n", sggc::failures);
  return sggc::failures == 0 ? 0 : 1;
}
