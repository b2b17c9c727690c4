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

// sggc: ingest graphs, select and compress coresets, train and evaluate.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fetch.h"
#include "json.hpp"
#include "sggc/compress.h"
#include "sggc/coreset.h"
#include "sggc/error.h"
#include "sggc/graph.h"
#include "sggc/graph_io.h"
#include "sggc/pipeline.h"
#include "sggc/planetoid.h"
#include "sggc/random.h"
#include "sggc/synthetic.h"
#include "sggc/train.h"

namespace sggc::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out = ".";
  std::string config;
};

// Selection and training flags shared by select, train and sweep.
struct Flags {
  std::string bundle;
  std::string method = "sggc";
  double ratio = 0.25;
  double kappa = 0.999;
  int ego_size = 16;
  int depth = 2;
  int budget = 1;
  std::string ego_degree_source = "original";
  std::string coreset_graph = "union";
  bool compress = false;
  bool centered = false;
  std::string arch = "gcn";
  int layers = 2;
  int hidden = 256;
  double dropout = 0.5;
  int epochs = 600;
  double lr = 0.01;
  double weight_decay = 5e-4;
  bool decoupled_wd = false;
  int runs = 10;
};

struct Options {
  CLI::Option* kappa = nullptr;
  CLI::Option* budget = nullptr;
  CLI::Option* ego_size = nullptr;
};

void AddBundle(CLI::App* app, Flags& f) {
  app->add_option("--bundle", f.bundle, "GraphBundle directory")
      ->required()
      ->check(CLI::ExistingDirectory);
}

Options AddSelectionFlags(CLI::App* app, Flags& f) {
  Options o;
  app->add_option("--method", f.method, "Selection method")
      ->check(CLI::IsMember({"sggc", "scgiga", "craig_linear", "uniform",
                             "herding", "kcenter"}));
  app->add_option("--ratio", f.ratio, "Coreset size over training nodes")
      ->check(CLI::Range(0.0, 1.0));
  o.kappa = app->add_option("--kappa", f.kappa, "Slab factor in [0, 1]")
                ->check(CLI::Range(0.0, 1.0));
  o.ego_size = app->add_option("--ego-size", f.ego_size, "Diffusion ego size p")
                   ->check(CLI::PositiveNumber);
  app->add_option("--depth", f.depth, "Ego depth L")->check(CLI::NonNegativeNumber);
  o.budget = app->add_option("--budget", f.budget, "Nodes added per iteration")
                 ->check(CLI::PositiveNumber);
  app->add_option("--ego-degree-source", f.ego_degree_source,
                  "Degrees for ego Laplacians")
      ->check(CLI::IsMember({"original", "induced"}));
  return o;
}

void AddTrainingFlags(CLI::App* app, Flags& f) {
  app->add_option("--coreset-graph", f.coreset_graph,
                  "Training graph built from a coreset")
      ->check(CLI::IsMember({"union", "centers"}));
  app->add_flag("--compress", f.compress, "Train on the decompressed coreset");
  app->add_flag("--centered", f.centered, "Center strata before compression");
  app->add_option("--arch", f.arch)->check(CLI::IsMember({"gcn", "sgc"}));
  app->add_option("--layers", f.layers)->check(CLI::NonNegativeNumber);
  app->add_option("--hidden", f.hidden)->check(CLI::PositiveNumber);
  app->add_option("--dropout", f.dropout)->check(CLI::Range(0.0, 0.99));
  app->add_option("--epochs", f.epochs)->check(CLI::PositiveNumber);
  app->add_option("--lr", f.lr)->check(CLI::PositiveNumber);
  app->add_option("--weight-decay", f.weight_decay)->check(CLI::NonNegativeNumber);
  app->add_flag("--decoupled-wd", f.decoupled_wd,
                "Apply weight decay outside the gradient");
  app->add_option("--runs", f.runs, "Seeds per experiment")
      ->check(CLI::PositiveNumber);
}

// Applies the dataset preset for options the user left unset.
void ApplyPreset(const std::string& dataset, const Options& o, Flags& f) {
  const auto preset = FindPreset(dataset);
  if (!preset) return;
  if (o.kappa->count() == 0) f.kappa = preset->kappa;
  if (o.budget->count() == 0) f.budget = preset->budget_s;
  if (o.ego_size->count() == 0) f.ego_size = preset->ego_size_p;
  std::cout << "preset " << preset->dataset << ": kappa=" << f.kappa
            << " budget=" << f.budget << " ego_size=" << f.ego_size << "\n";
}

PipelineConfig MakePipeline(const Flags& f, const Globals& g) {
  PipelineConfig cfg;
  cfg.method = ParseMethod(f.method);
  cfg.ratio = f.ratio;
  cfg.kappa = f.kappa;
  cfg.ego_size_p = f.ego_size;
  cfg.depth_L = f.depth;
  cfg.budget_s = f.budget;
  cfg.ego_degrees = f.ego_degree_source == "induced" ? DegreeSource::kInduced
                                                     : DegreeSource::kOriginal;
  cfg.coreset_graph = f.coreset_graph == "centers" ? CoresetGraphMode::kCentersOnly
                                                   : CoresetGraphMode::kEgoUnion;
  cfg.compress = f.compress;
  cfg.centered = f.centered;
  cfg.train.arch = ParseArch(f.arch);
  cfg.train.layers = f.layers;
  cfg.train.hidden_dim = f.hidden;
  cfg.train.dropout = f.dropout;
  cfg.train.epochs = f.epochs;
  cfg.train.learning_rate = f.lr;
  cfg.train.weight_decay = f.weight_decay;
  cfg.train.decoupled_weight_decay = f.decoupled_wd;
  cfg.seeds = SeedRange(g.seed, f.runs);
  cfg.jobs = g.jobs;
  return cfg;
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  Require(out.good(), ErrorCode::kIo, "cannot write " + path.string());
}

Json ReadJson(const fs::path& path) {
  std::ifstream in(path);
  Require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kInvalidInput, path.string() + ": " + e.what());
  }
}

std::string Percent(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << v << "%";
  return s.str();
}

void PrintStats(const GraphBundle& g) {
  const DatasetStats s = ComputeStats(g);
  std::cout << "| Dataset | Nodes | Edges | Features | Classes | Train/Val/Test |\n"
            << "|---|---|---|---|---|---|\n"
            << "| " << s.name << " | " << s.nodes << " | " << s.directed_edges
            << " | " << s.features << " | " << s.classes << " | "
            << Percent(s.train_pct) << "/" << Percent(s.val_pct) << "/"
            << Percent(s.test_pct) << " |\n";
}

std::vector<int> ReadLabelFile(const fs::path& path, NodeId n) {
  std::ifstream in(path);
  Require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
  std::vector<int> labels(n, kUnlabeled);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long node = -1, label = -1;
    Require(static_cast<bool>(fields >> node >> label) && node >= 0 &&
                node < n && label >= 0,
            ErrorCode::kInvalidInput,
            path.string() + ":" + std::to_string(line_no) +
                ": expected \"node<TAB>class\" with node < " + std::to_string(n));
    labels[node] = static_cast<int>(label);
  }
  return labels;
}

// ---------------------------------------------------------------------------

struct IngestArgs {
  std::string format;
  std::string input;
  std::string name;
  std::string labels;
  std::string features;
  std::string test_split = "rest";
  int train_per_class = 20;
  int num_val = 500;
  SbmSpec sbm;
};

int RunIngest(const IngestArgs& a, const Globals& g) {
  GraphBundle bundle;
  if (a.format == "planetoid") {
    bundle = ConvertPlanetoid(a.input, a.name,
                              a.test_split == "planetoid" ? TestSplit::kPlanetoid
                                                          : TestSplit::kRest);
  } else if (a.format == "linqs") {
    const fs::path dir(a.input);
    bundle = ConvertLinqs(dir / (a.name + ".content"), dir / (a.name + ".cites"),
                          a.name, a.train_per_class, a.num_val, g.seed);
  } else if (a.format == "edgelist") {
    Require(!a.labels.empty(), ErrorCode::kUsage,
            "edgelist ingest needs --labels");
    const std::vector<Edge> edges = ReadEdgeList(a.input);
    NodeId n = 0;
    for (const Edge& e : edges) n = std::max({n, e.u + 1, e.v + 1});
    FeatureMatrix x;
    if (!a.features.empty()) {
      x = ReadFeatureBlob(a.features);
      n = std::max(n, static_cast<NodeId>(x.rows()));
      Require(x.rows() == n, ErrorCode::kInvalidInput,
              "feature rows do not cover every edge endpoint");
    } else {
      x = FeatureMatrix::Ones(n, 1);
    }
    std::vector<int> labels = ReadLabelFile(a.labels, n);
    int k = 0;
    for (int y : labels) k = std::max(k, y + 1);
    Splits splits = RandomSplits(labels, k, a.train_per_class, a.num_val,
                                 SubSeed(g.seed, "edgelist-split"));
    bundle = GraphBundle::Create(a.name.empty() ? "edgelist" : a.name, n, edges,
                                 std::move(x), std::move(labels), k,
                                 std::move(splits));
  } else {
    SbmSpec spec = a.sbm;
    spec.seed = g.seed;
    bundle = MakeSbm(spec);
  }
  WriteBundle(bundle, g.out);
  PrintStats(bundle);
  std::cout << "wrote " << g.out << "\n";
  return 0;
}

int RunSelect(Flags f, const Options& o, const Globals& g) {
  const GraphBundle bundle = ReadBundle(f.bundle);
  ApplyPreset(bundle.name(), o, f);
  const PipelineConfig cfg = MakePipeline(f, g);
  const int n_t = static_cast<int>(bundle.splits().train.size());
  const CoresetResult result =
      SelectCoreset(bundle, MakeCoresetConfig(cfg, n_t, g.seed));
  const fs::path out(g.out);
  WriteText(out / "coreset.json", CoresetToJson(result).dump(2) + "\n");
  std::ostringstream trace;
  WriteTraceCsv(trace, result);
  WriteText(out / "trace.csv", trace.str());
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  const auto c = static_cast<double>(result.selected.size());
  std::cout << "method " << MethodName(result.method) << ": c=" << c
            << " n_t=" << n_t << " n=" << bundle.num_nodes()
            << " c/n_t=" << c / n_t << " c/n=" << c / bundle.num_nodes() << "\n"
            << "||P w_a - 1/n|| initial=" << result.initial_objective
            << " final=" << result.final_objective << "\n"
            << "F(V_w)=" << result.facility_value << "\n"
            << "wrote " << (out / "coreset.json").string() << "\n";
  return 0;
}

struct CompressArgs {
  std::string bundle;
  std::string coreset;
  int depth = 2;
  bool centered = false;
  bool report = false;
};

int RunCompress(const CompressArgs& a, const Globals& g) {
  const GraphBundle bundle = ReadBundle(a.bundle);
  const CoresetResult result = CoresetFromJson(ReadJson(a.coreset));
  const CompressedCoreset cc = Compress(bundle, result.selected,
                                        result.SelectedWeights(), a.depth,
                                        a.centered);
  const fs::path path = fs::path(g.out) / "coreset.gcc";
  fs::create_directories(g.out);
  WriteCompressed(path, cc);
  if (a.report) {
    PrintCompressionReport(std::cout, cc);
  } else {
    std::cout << "feature bytes " << cc.CompressedFeatureBytes() << " vs "
              << cc.UncompressedFeatureBytes() << " uncompressed\n";
  }
  std::cout << "wrote " << path.string() << "\n";
  return 0;
}

struct TrainArgs {
  std::string coreset;
  std::string compressed;
};

int RunTrain(const Flags& f, const TrainArgs& a, const Globals& g) {
  const GraphBundle bundle = ReadBundle(f.bundle);
  PipelineConfig cfg = MakePipeline(f, g);
  cfg.train.record_history = true;
  std::optional<CoresetGraph> coreset;
  if (!a.compressed.empty()) {
    coreset = Decompress(ReadCompressed(a.compressed));
  } else if (!a.coreset.empty()) {
    coreset = MakeTrainingGraph(bundle, CoresetFromJson(ReadJson(a.coreset)), cfg);
  }
  const fs::path out(g.out);
  std::vector<double> acc(cfg.seeds.size());
  ParallelFor(static_cast<int>(cfg.seeds.size()), cfg.jobs, [&](int k) {
    TrainConfig train = cfg.train;
    train.seed = cfg.seeds[k];
    const GraphInput eval_input = MakeGraphInput(bundle);
    TrainResult trained;
    if (coreset) {
      const GraphInput input = MakeGraphInput(
          coreset->adjacency, coreset->original_degrees, coreset->features);
      trained = Train(train, {&input, coreset->labels, coreset->train,
                              coreset->weights},
                      coreset->num_classes);
    } else {
      const EvalTarget val{&eval_input, bundle.labels(), bundle.splits().val};
      trained = Train(train, {&eval_input, bundle.labels(),
                              bundle.splits().train, {}},
                      bundle.num_classes(), &val);
    }
    acc[k] = Evaluate(trained.model,
                      {&eval_input, bundle.labels(), bundle.splits().test});
    const std::string tag = "seed" + std::to_string(cfg.seeds[k]);
    WriteText(out / "models" / ("model_" + tag + ".json"),
              ModelToJson(trained.model).dump() + "\n");
    std::ostringstream history;
    WriteHistoryCsv(history, trained.history);
    WriteText(out / ("history_" + tag + ".csv"), history.str());
  });
  const RunSummary summary = Summarize(acc);
  Json json = SummaryToJson(summary);
  json["arch"] = f.arch;
  json["source"] = !a.compressed.empty() ? "compressed"
                   : !a.coreset.empty()  ? "coreset"
                                         : "full";
  json["seeds"] = cfg.seeds;
  WriteText(out / "summary.json", json.dump(2) + "\n");
  std::cout << std::fixed << std::setprecision(1) << "test accuracy "
            << 100 * summary.mean << " +- " << 100 * summary.std << " over "
            << summary.runs.size() << " seeds\n";
  return 0;
}

struct EvalArgs {
  std::string bundle;
  std::vector<std::string> models;
};

int RunEval(const EvalArgs& a, const Globals& g) {
  const GraphBundle bundle = ReadBundle(a.bundle);
  std::vector<double> acc(a.models.size());
  ParallelFor(static_cast<int>(a.models.size()), g.jobs, [&](int k) {
    const GnnModel model = ModelFromJson(ReadJson(a.models[k]));
    Require(model.weights.front().rows() == bundle.feature_dim(),
            ErrorCode::kInvalidInput,
            a.models[k] + ": input width does not match the bundle");
    const GraphInput input = MakeGraphInput(bundle);
    acc[k] = Evaluate(model, {&input, bundle.labels(), bundle.splits().test});
  });
  const RunSummary summary = Summarize(acc);
  Json json = SummaryToJson(summary);
  json["models"] = a.models;
  const fs::path path = fs::path(g.out) / "eval.json";
  WriteText(path, json.dump(2) + "\n");
  std::cout << std::fixed << std::setprecision(1) << "test accuracy "
            << 100 * summary.mean << " +- " << 100 * summary.std << "\n";
  return 0;
}

struct SweepArgs {
  std::string axis;
  std::vector<std::string> values;
  int draws = 10;
  int rsd_hidden = 64;
  int rsd_centers = 0;
  std::string rsd_variant = "mean-norm";
};

int RunSweep(Flags f, const Options& o, const SweepArgs& a, const Globals& g) {
  Require(!a.values.empty(), ErrorCode::kUsage, "sweep needs --values");
  const GraphBundle bundle = ReadBundle(f.bundle);
  ApplyPreset(bundle.name(), o, f);
  std::ostringstream csv;
  csv << std::setprecision(10);

  auto parse_double = [](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    Fail(ErrorCode::kUsage, "bad sweep value '" + s + "'");
  };
  auto parse_int = [&](const std::string& s) {
    const double v = parse_double(s);
    Require(v == std::floor(v), ErrorCode::kUsage,
            "sweep value '" + s + "' is not an integer");
    return static_cast<int>(v);
  };

  if (a.axis == "rsd") {
    RsdOptions options;
    options.depth = f.depth;
    options.hidden_dim = a.rsd_hidden;
    options.draws = a.draws;
    options.seed = g.seed;
    options.variant = a.rsd_variant == "mean-squared" ? RsdVariant::kMeanSquared
                                                      : RsdVariant::kMeanNorm;
    options.degrees = f.ego_degree_source == "induced" ? DegreeSource::kInduced
                                                       : DegreeSource::kOriginal;
    const auto& train = bundle.splits().train;
    if (a.rsd_centers > 0) {
      options.centers.assign(
          train.begin(),
          train.begin() + std::min<std::size_t>(a.rsd_centers, train.size()));
    }
    std::vector<int> sizes;
    for (const auto& v : a.values) sizes.push_back(parse_int(v));
    const auto table = RsdSweep(bundle, sizes, options);
    csv << "p,mean_rsd,std_rsd\n";
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      const RunSummary s = Summarize(table[k]);
      csv << sizes[k] << "," << s.mean << "," << s.std << "\n";
    }
  } else {
    const bool homophily = a.axis == "homophily";
    csv << (homophily ? "value,added_edges,homophily,mean,std\n"
                      : "value,mean,std\n");
    for (const auto& v : a.values) {
      Flags run = f;
      if (a.axis == "ego_size") run.ego_size = parse_int(v);
      if (a.axis == "kappa") run.kappa = parse_double(v);
      if (a.axis == "budget") run.budget = parse_int(v);
      const PipelineConfig cfg = MakePipeline(run, g);
      RunSummary s;
      if (homophily) {
        const double fraction = parse_double(v);
        Require(fraction >= 0, ErrorCode::kUsage,
                "homophily values are non-negative edge fractions");
        const auto added = static_cast<std::int64_t>(
            std::llround(fraction * static_cast<double>(bundle.num_edges())));
        const GraphBundle degraded =
            AddRandomEdges(bundle, added, SubSeed(g.seed, "edge-addition"));
        s = RunCoresetExperiment(degraded, bundle, cfg);
        csv << v << "," << added << "," << Homophily(degraded) << ",";
      } else {
        s = RunCoresetExperiment(bundle, bundle, cfg);
        csv << v << ",";
      }
      csv << s.mean << "," << s.std << "\n";
      std::cout << a.axis << "=" << v << ": " << std::fixed
                << std::setprecision(1) << 100 * s.mean << " +- "
                << 100 * s.std << std::defaultfloat << "\n";
    }
  }
  const fs::path path = fs::path(g.out) / ("sweep_" + a.axis + ".csv");
  WriteText(path, csv.str());
  std::cout << "wrote " << path.string() << "\n";
  return 0;
}

struct ReportArgs {
  std::string bundle;
  std::vector<std::string> inputs;
  bool presets = false;
};

int RunReport(const ReportArgs& a) {
  if (!a.bundle.empty()) PrintStats(ReadBundle(a.bundle));
  if (a.presets) {
    std::cout << "| Dataset | kappa | s | p |\n|---|---|---|---|\n";
    for (const Preset& p : AllPresets()) {
      std::cout << "| " << p.dataset << " | " << p.kappa << " | " << p.budget_s
                << " | " << p.ego_size_p << " |\n";
    }
  }
  if (!a.inputs.empty()) {
    std::cout << "| Run | Accuracy | Seeds |\n|---|---|---|\n";
    for (const auto& input : a.inputs) {
      const Json j = ReadJson(input);
      double mean = 0, std = 0;
      std::size_t runs = 0;
      try {
        mean = j.at("mean").get<double>();
        std = j.at("std").get<double>();
        runs = j.at("runs").size();
      } catch (const Json::exception& e) {
        Fail(ErrorCode::kInvalidInput, input + ": not a summary: " + e.what());
      }
      std::cout << "| " << input << " | " << std::fixed << std::setprecision(1)
                << 100 * mean << " +- " << 100 * std << std::defaultfloat
                << " | " << runs << " |\n";
    }
  }
  return 0;
}

// Appends key=value pairs from the config file as flags of the selected
// subcommand (or the top level) unless already given on the command line.
std::vector<std::string> MergeConfig(CLI::App& app,
                                     std::vector<std::string> args) {
  std::string config;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) config = args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) config = args[k].substr(9);
  }
  if (config.empty()) return args;
  CLI::App* sub = nullptr;
  for (const auto& a : args) {
    for (CLI::App* s : app.get_subcommands({})) {
      if (s->get_name() == a) sub = s;
    }
    if (sub) break;
  }
  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  for (auto [key, value] : ReadConfigFile(config)) {
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string flag = "--" + key;
    if (flag == "--config") continue;
    const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
    if (!opt) opt = app.get_option_no_throw(flag);
    Require(opt != nullptr, ErrorCode::kUsage,
            config + ": unknown key '" + key + "'");
    if (given(flag)) continue;
    if (opt->get_type_size() == 0) {
      if (value == "true" || value == "1") extra.push_back(flag);
    } else {
      extra.push_back(flag);
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

int Main(int argc, char** argv) {
  CLI::App app{"Graph coreset selection, compression and training"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Base seed for every random stream");
  app.add_option("--jobs", g.jobs, "Parallel training runs")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--config", g.config, "key=value file; flags override it");

  std::string fetch_dataset = "cora";
  std::string fetch_url = kPlanetoidMirror;
  auto* fetch = app.add_subcommand("fetch", "Download raw Planetoid files");
  fetch->add_option("--dataset", fetch_dataset)
      ->check(CLI::IsMember({"cora", "citeseer", "pubmed"}));
  fetch->add_option("--base-url", fetch_url);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "Convert raw data to a bundle");
  ingest->add_option("--format", ingest_args.format)
      ->required()
      ->check(CLI::IsMember({"planetoid", "linqs", "edgelist", "sbm"}));
  ingest->add_option("--input", ingest_args.input,
                     "Raw directory, or the edge file for edgelist");
  ingest->add_option("--name", ingest_args.name, "Dataset name");
  ingest->add_option("--labels", ingest_args.labels, "node<TAB>class file");
  ingest->add_option("--features", ingest_args.features, "GFB1 feature file");
  ingest->add_option("--test-split", ingest_args.test_split)
      ->check(CLI::IsMember({"rest", "planetoid"}));
  ingest->add_option("--train-per-class", ingest_args.train_per_class)
      ->check(CLI::PositiveNumber);
  ingest->add_option("--num-val", ingest_args.num_val)
      ->check(CLI::NonNegativeNumber);
  SbmSpec& sbm = ingest_args.sbm;
  ingest->add_option("--nodes", sbm.num_nodes)->check(CLI::PositiveNumber);
  ingest->add_option("--classes", sbm.num_classes)->check(CLI::PositiveNumber);
  ingest->add_option("--p-in", sbm.p_in)->check(CLI::Range(0.0, 1.0));
  ingest->add_option("--p-out", sbm.p_out)->check(CLI::Range(0.0, 1.0));
  ingest->add_option("--dim", sbm.feature_dim)->check(CLI::PositiveNumber);
  ingest->add_option("--mean-scale", sbm.mean_scale);
  ingest->add_option("--noise", sbm.noise);
  ingest->add_option("--num-train", sbm.num_train)->check(CLI::PositiveNumber);
  ingest->add_option("--sbm-num-val", sbm.num_val)->check(CLI::NonNegativeNumber);

  Flags select_flags;
  auto* select = app.add_subcommand("select", "Select a weighted coreset");
  AddBundle(select, select_flags);
  const Options select_opts = AddSelectionFlags(select, select_flags);

  CompressArgs compress_args;
  auto* compress = app.add_subcommand("compress", "Compress a coreset graph");
  compress->add_option("--bundle", compress_args.bundle)
      ->required()
      ->check(CLI::ExistingDirectory);
  compress->add_option("--coreset", compress_args.coreset, "coreset.json")
      ->required()
      ->check(CLI::ExistingFile);
  compress->add_option("--depth", compress_args.depth)
      ->check(CLI::NonNegativeNumber);
  compress->add_flag("--centered", compress_args.centered);
  compress->add_flag("--report", compress_args.report, "Print per-stratum table");

  Flags train_flags;
  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Train per seed and evaluate");
  AddBundle(train, train_flags);
  train->add_option("--depth", train_flags.depth, "Coreset ego depth")
      ->check(CLI::NonNegativeNumber);
  AddTrainingFlags(train, train_flags);
  auto* coreset_opt = train->add_option("--coreset", train_args.coreset)
                          ->check(CLI::ExistingFile);
  train->add_option("--compressed", train_args.compressed, "GCC1 file")
      ->check(CLI::ExistingFile)
      ->excludes(coreset_opt);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate saved models");
  eval->add_option("--bundle", eval_args.bundle)
      ->required()
      ->check(CLI::ExistingDirectory);
  eval->add_option("--models", eval_args.models)->required()->check(
      CLI::ExistingFile);

  Flags sweep_flags;
  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "One experiment per axis value");
  AddBundle(sweep, sweep_flags);
  const Options sweep_opts = AddSelectionFlags(sweep, sweep_flags);
  AddTrainingFlags(sweep, sweep_flags);
  sweep->add_option("--axis", sweep_args.axis)
      ->required()
      ->check(CLI::IsMember({"ego_size", "kappa", "budget", "homophily", "rsd"}));
  sweep->add_option("--values", sweep_args.values)->delimiter(',');
  sweep->add_option("--draws", sweep_args.draws, "Random networks (rsd)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--rsd-hidden", sweep_args.rsd_hidden)
      ->check(CLI::PositiveNumber);
  sweep->add_option("--rsd-centers", sweep_args.rsd_centers,
                    "Training nodes used as centers, 0 for all nodes")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--rsd-variant", sweep_args.rsd_variant)
      ->check(CLI::IsMember({"mean-norm", "mean-squared"}));

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Print dataset and result tables");
  report->add_option("--bundle", report_args.bundle)->check(CLI::ExistingDirectory);
  report->add_option("--inputs", report_args.inputs, "Summary JSON files")
      ->check(CLI::ExistingFile);
  report->add_flag("--presets", report_args.presets);

  try {
    std::vector<std::string> args =
        MergeConfig(app, std::vector<std::string>(argv + 1, argv + argc));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*fetch) {
    FetchPlanetoid(fetch_dataset, fetch_url, g.out);
    return 0;
  }
  if (*ingest) {
    Require(ingest_args.format == "sbm" || !ingest_args.input.empty(),
            ErrorCode::kUsage, "ingest needs --input");
    Require(ingest_args.format == "sbm" || ingest_args.format == "edgelist" ||
                !ingest_args.name.empty(),
            ErrorCode::kUsage, "ingest needs --name");
    if (ingest_args.format == "sbm" && ingest_args.name.empty()) {
      ingest_args.name = "sbm";
    }
    return RunIngest(ingest_args, g);
  }
  if (*select) return RunSelect(select_flags, select_opts, g);
  if (*compress) return RunCompress(compress_args, g);
  if (*train) return RunTrain(train_flags, train_args, g);
  if (*eval) return RunEval(eval_args, g);
  if (*sweep) return RunSweep(sweep_flags, sweep_opts, sweep_args, g);
  return RunReport(report_args);
}

}  // namespace
}  // namespace sggc::cli

int main(int argc, char** argv) {
  try {
    return sggc::cli::Main(argc, argv);
  } catch (const sggc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == sggc::ErrorCode::kNumerical ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
