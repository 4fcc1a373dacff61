// Copyright 2026 The wavelearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "wavelearn/analysis.hpp"
#include "wavelearn/classical.hpp"
#include "wavelearn/datagen.hpp"
#include "wavelearn/errors.hpp"
#include "wavelearn/formats.hpp"
#include "wavelearn/log.hpp"
#include "wavelearn/plot.hpp"
#include "wavelearn/training.hpp"
#include "wavelearn/transform.hpp"
#include "wavelearn/wav.hpp"

#ifndef WAVELEARN_VERSION
#define WAVELEARN_VERSION "unknown"
#endif

namespace wavelearn::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

bool WritesDirectory(const std::string& command) {
  return command == "synth" || command == "train" || command == "cascade" ||
         command == "wav-ingest";
}

std::string JoinPath(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

// A filter argument names either a filter file or a database entry.
FilterFile LoadFilter(const std::string& spec) {
  if (fs::exists(spec)) return ReadFilterFile(spec);
  try {
    const auto id = ParseWaveletName(spec);
    return {ShortName(id), ClassicalFilter(id)};
  } catch (const LookupError&) {
    throw IoError("'" + spec + "' is neither a readable filter file nor a known "
                  "wavelet name");
  }
}

std::string Stem(const std::string& path) {
  return fs::path(path).stem().string();
}

// What a command produced, for the manifest.
struct Outcome {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string out;
};

struct SynthOptions {
  std::string base = "sine";
  std::size_t length = 1024;
  std::size_t count = 32000;
  int harmonics = 5;
  double probability = 0.5;
  int cycles = 4;
  bool windowed = false;
  int windows_min = 1;
  int windows_max = 3;
  double window_std = 0.1;
};

struct TrainOptions {
  std::string dataset;
  std::string init = "random";
  TrainingConfig config;
};

struct TransformOptions {
  std::string signal;
  std::string filter;
  int levels = 0;
};

struct ReconstructOptions {
  std::string coefficients;
  std::string filter;
};

struct CascadeOptions {
  std::string filter;
  int iterations = 8;
};

struct SampleCliOptions {
  std::string filter;
  SampleOptions sample;
};

struct PlotOptions {
  std::vector<std::string> inputs;
  std::string title;
};

struct WavIngestOptions {
  std::string wav;
  std::size_t length = 1024;
  std::size_t hop = 0;
};

struct FilterOptions {
  std::string name;
};

struct RerunOptions {
  std::string manifest;
};

Outcome RunSynth(const SynthOptions& o, const CommonOptions& c) {
  SynthConfig config;
  config.base = ParseBaseWave(o.base);
  config.length = o.length;
  config.count = o.count;
  config.harmonics = o.harmonics;
  config.probability = o.probability;
  config.cycles = o.cycles;
  config.windowed = o.windowed;
  config.window_count_min = o.windows_min;
  config.window_count_max = o.windows_max;
  config.window_std_fraction = o.window_std;
  config.seed = c.seed;
  const auto signals = MakeDataset(config);
  const KeyValues kv{{"base", o.base},
                     {"harmonics", std::to_string(o.harmonics)},
                     {"p", FormatReal(o.probability)},
                     {"cycles", std::to_string(o.cycles)},
                     {"windowed", o.windowed ? "true" : "false"},
                     {"windows_min", std::to_string(o.windows_min)},
                     {"windows_max", std::to_string(o.windows_max)},
                     {"window_std", FormatReal(o.window_std)},
                     {"seed", std::to_string(c.seed)}};
  WriteDataset(c.out, signals, kv);
  return {{}, {c.out}};
}

Outcome RunWavIngest(const WavIngestOptions& o, const CommonOptions& c) {
  const WavAudio audio = ReadWav16(o.wav);
  const std::size_t hop = o.hop == 0 ? o.length : o.hop;
  const auto signals = Segment(audio.mono, o.length, hop);
  if (signals.empty()) {
    throw InvalidArgument("'" + o.wav + "' holds " +
                          std::to_string(audio.mono.size()) +
                          " samples, fewer than one segment of " +
                          std::to_string(o.length));
  }
  const KeyValues kv{{"source", o.wav},
                     {"hop", std::to_string(hop)},
                     {"sample_rate", std::to_string(audio.sample_rate)},
                     {"channels", std::to_string(audio.channels)}};
  WriteDataset(c.out, signals, kv);
  return {{o.wav}, {c.out}};
}

KeyValues TrainingKeyValues(const TrainingConfig& t, const std::string& init) {
  return {{"k", std::to_string(t.filter_length)},
          {"levels", std::to_string(t.levels)},
          {"lambda1", FormatReal(t.lambda1)},
          {"lambda2", FormatReal(t.lambda2)},
          {"batch_size", std::to_string(t.batch_size)},
          {"lr", FormatReal(t.learning_rate)},
          {"beta1", FormatReal(t.adam_beta1)},
          {"beta2", FormatReal(t.adam_beta2)},
          {"eps", FormatReal(t.adam_eps)},
          {"max_steps", std::to_string(t.max_steps)},
          {"tol", FormatReal(t.convergence_tol)},
          {"window", std::to_string(t.convergence_window)},
          {"seed", std::to_string(t.seed)},
          {"init", init}};
}

Outcome RunTrain(TrainOptions o, const CommonOptions& c, std::ostream& out) {
  o.config.seed = c.seed;
  Validate(o.config);
  const auto dataset = ReadDataset(o.dataset);
  std::optional<ScalingFilter> initial;
  if (o.init == "haar") {
    initial = HaarPadded(o.config.filter_length);
  } else if (o.init != "random") {
    initial = LoadFilter(o.init).h;
  }
  const TrainingHistory history = Train(dataset, o.config, initial);

  fs::create_directories(c.out);
  WriteFileAtomic(JoinPath(c.out, "config"),
                  EncodeKeyValues(TrainingKeyValues(o.config, o.init)));
  WriteFileAtomic(JoinPath(c.out, "history.csv"), EncodeHistoryCsv(history));
  WriteFilterFile(JoinPath(c.out, "filter.json"), {"learned", history.final_h});
  WriteFileAtomic(JoinPath(c.out, "seed"), std::to_string(c.seed) + "\n");

  const TrainingRecord& last = history.records.back();
  char line[256];
  std::snprintf(line, sizeof line,
                "final loss %.6e (recon %.6e, sparsity %.6e, constraint %.6e) "
                "after %zu steps%s\n",
                last.total, last.reconstruction, last.sparsity, last.constraint,
                history.records.size(), history.converged ? ", converged" : "");
  out << line;
  Outcome outcome{{o.dataset}, {c.out}};
  if (o.init != "random" && o.init != "haar") outcome.inputs.push_back(o.init);
  return outcome;
}

Outcome RunTransform(const TransformOptions& o, const CommonOptions& c) {
  const FilterFile filter = LoadFilter(o.filter);
  const Signal x(ReadSamples(o.signal));
  const FilterPair pair(filter.h);
  const auto flat = Flatten(Dwt(x, pair, o.levels));
  WriteCoefficientFile(c.out, {x.size(), o.levels, filter.h.size(), filter.name,
                               flat.values});
  return {{o.signal, o.filter}, {c.out}};
}

Outcome RunReconstruct(const ReconstructOptions& o, const CommonOptions& c) {
  const CoefficientFile coeffs = ReadCoefficientFile(o.coefficients);
  const FilterFile filter = LoadFilter(o.filter);
  if (filter.h.size() != coeffs.filter_size) {
    throw InvalidArgument("'" + o.coefficients + "' was produced with a " +
                          std::to_string(coeffs.filter_size) +
                          "-tap filter but '" + o.filter + "' has " +
                          std::to_string(filter.h.size()) + " taps");
  }
  const FilterPair pair(filter.h);
  const Signal x = Idwt(Unflatten(coeffs.values, coeffs.levels), pair);
  WriteSamples(c.out, x.samples());
  return {{o.coefficients, o.filter}, {c.out}};
}

Outcome RunCascade(const CascadeOptions& o, const CommonOptions& c,
                   std::ostream& out) {
  const FilterFile filter = LoadFilter(o.filter);
  const CascadeResult r = Cascade(filter.h, o.iterations);
  fs::create_directories(c.out);
  WriteFileAtomic(JoinPath(c.out, "phi.csv"), EncodeSampledFunction(r.phi));
  WriteFileAtomic(JoinPath(c.out, "psi.csv"), EncodeSampledFunction(r.psi));
  char line[128];
  std::snprintf(line, sizeof line, "convergence delta %.6e after %d iterations\n",
                r.convergence_delta, o.iterations);
  out << line;
  return {{o.filter}, {c.out}};
}

Outcome RunCompare(const std::string& filter_spec, const CommonOptions& c,
                   std::ostream& out) {
  const FilterFile filter = LoadFilter(filter_spec);
  const std::string table = FormatMatchTable(ClosestWavelet(filter.h.coeffs()));
  if (c.out.empty()) {
    out << table;
    return {{filter_spec}, {}};
  }
  WriteFileAtomic(c.out, table);
  return {{filter_spec}, {c.out}};
}

Outcome RunSample(SampleCliOptions o, const CommonOptions& c) {
  const FilterFile filter = LoadFilter(o.filter);
  o.sample.seed = c.seed;
  const Signal x = SampleSignal(FilterPair(filter.h), o.sample);
  WriteSamples(c.out, x.samples());
  return {{o.filter}, {c.out}};
}

Outcome RunPlot(const PlotOptions& o, const CommonOptions& c) {
  std::vector<PlotSeries> series;
  for (const auto& path : o.inputs) {
    const CsvTable table = DecodeCsvTable(ReadFile(path), path);
    if (table.columns.empty() || table.columns[0].empty()) {
      throw InvalidArgument("'" + path + "' has no numeric rows");
    }
    if (table.columns.size() == 1) {
      PlotSeries s{Stem(path), {}, table.columns[0]};
      for (std::size_t i = 0; i < s.y.size(); ++i) s.x.push_back(static_cast<double>(i));
      series.push_back(std::move(s));
      continue;
    }
    for (std::size_t col = 1; col < table.columns.size(); ++col) {
      std::string label = Stem(path);
      if (table.columns.size() > 2) {
        label += ":" + (col < table.header.size() ? table.header[col]
                                                  : std::to_string(col));
      }
      series.push_back({label, table.columns[0], table.columns[col]});
    }
  }
  WriteFileAtomic(c.out, RenderSvg(series, o.title));
  return {o.inputs, {c.out}};
}

Outcome RunFilter(const FilterOptions& o, const CommonOptions& c) {
  const auto id = ParseWaveletName(o.name);
  WriteFilterFile(c.out, {ShortName(id), ClassicalFilter(id)});
  return {{}, {c.out}};
}

// Routes library warnings to the command's diagnostic stream while alive.
class WarningRedirect {
 public:
  explicit WarningRedirect(std::ostream& err)
      : previous_(SetWarningSink([&err](std::string_view msg) {
          err << "warning: " << msg << "\n";
        })) {}
  ~WarningRedirect() { SetWarningSink(std::move(previous_)); }
  WarningRedirect(const WarningRedirect&) = delete;
  WarningRedirect& operator=(const WarningRedirect&) = delete;

 private:
  WarningSink previous_;
};

bool IsFlag(const CLI::Option* opt) { return opt->get_items_expected_max() == 0; }

// The subcommand's arguments with every default made explicit.
std::vector<std::string> ResolvedArgs(const CLI::App& sub,
                                      const CLI::Option* help) {
  std::vector<std::string> args{sub.get_name()};
  std::vector<std::string> positionals;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt == help) continue;
    if (opt->get_positional()) {
      for (const auto& v : opt->results()) positionals.push_back(v);
      continue;
    }
    const std::string name = "--" + opt->get_lnames().front();
    if (IsFlag(opt)) {
      if (opt->count() > 0) args.push_back(name);
      continue;
    }
    std::vector<std::string> values = opt->results();
    if (values.empty() && !opt->get_default_str().empty()) {
      values.push_back(opt->get_default_str());
    }
    for (const auto& v : values) {
      args.push_back(name);
      args.push_back(v);
    }
  }
  if (!positionals.empty()) args.emplace_back("--");
  args.insert(args.end(), positionals.begin(), positionals.end());
  return args;
}

json ResolvedConfig(const CLI::App& sub, const CLI::Option* help) {
  json config = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt == help) continue;
    const std::string key = opt->get_positional() ? opt->get_name()
                                                  : opt->get_lnames().front();
    if (IsFlag(opt)) {
      config[key] = opt->count() > 0;
      continue;
    }
    std::vector<std::string> values = opt->results();
    if (values.empty()) values.push_back(opt->get_default_str());
    config[key] = values.size() == 1 && opt->get_expected_max() <= 1
                      ? json(values.front())
                      : json(values);
  }
  return config;
}

void WriteManifest(const std::string& command, const CLI::App& sub,
                   const CLI::Option* help, const CommonOptions& common,
                   const Outcome& outcome, double seconds) {
  json m;
  m["command"] = command;
  m["args"] = ResolvedArgs(sub, help);
  m["config"] = ResolvedConfig(sub, help);
  m["inputs"] = outcome.inputs;
  m["outputs"] = outcome.outputs;
  m["seed"] = common.seed;
  m["version"] = WAVELEARN_VERSION;
  m["duration_seconds"] = seconds;
  WriteFileAtomic(ManifestPathFor(command, common.out), m.dump(2) + "\n");
}

std::vector<std::string> ArgsFromManifest(const std::string& path,
                                          const std::string& out_override) {
  json m;
  try {
    m = json::parse(ReadFile(path));
  } catch (const json::exception& e) {
    throw IoError(path + ": malformed manifest: " + e.what());
  }
  if (!m.contains("args") || !m["args"].is_array() || m["args"].empty()) {
    throw IoError(path + ": manifest has no 'args' list");
  }
  std::vector<std::string> args;
  for (const auto& v : m["args"]) {
    if (!v.is_string()) throw IoError(path + ": non-string entry in 'args'");
    args.push_back(v.get<std::string>());
  }
  if (args.front() == "rerun") throw IoError(path + ": cannot rerun a rerun");
  if (!out_override.empty()) {
    bool replaced = false;
    for (std::size_t i = 1; i + 1 < args.size() && args[i] != "--"; ++i) {
      if (args[i] == "--out") {
        args[i + 1] = out_override;
        replaced = true;
      }
    }
    if (!replaced) {
      args.insert(args.begin() + 1, {"--out", out_override});
    }
  }
  return args;
}

}  // namespace

std::string ManifestPathFor(const std::string& command, const std::string& out) {
  return WritesDirectory(command) ? JoinPath(out, "manifest.json")
                                  : out + ".manifest.json";
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Learn wavelet filters from data and inspect them", "wavelearn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", WAVELEARN_VERSION);
  app.option_defaults()->always_capture_default();

  CommonOptions common;
  auto add_common = [&common](CLI::App* sub, bool out_required) {
    sub->add_option("--seed", common.seed, "Random seed");
    auto* o = sub->add_option("--out", common.out, "Output path");
    if (out_required) o->required();
  };

  SynthOptions synth;
  auto* s = app.add_subcommand("synth", "Generate a synthetic harmonic dataset");
  s->add_option("--base", synth.base, "sine, sawtooth or square");
  s->add_option("--n", synth.length, "Signal length (power of two)");
  s->add_option("--m", synth.count, "Number of signals");
  s->add_option("--harmonics", synth.harmonics, "Octave count K");
  s->add_option("--p", synth.probability, "Probability an octave is active");
  s->add_option("--cycles", synth.cycles, "Base cycles per signal");
  s->add_flag("--windowed", synth.windowed, "Gaussian-windowed octaves");
  s->add_option("--windows-min", synth.windows_min, "Minimum windows per octave");
  s->add_option("--windows-max", synth.windows_max, "Maximum windows per octave");
  s->add_option("--window-std", synth.window_std, "Window std as a fraction of N");
  add_common(s, true);

  TrainOptions train;
  TrainingConfig& tc = train.config;
  auto* t = app.add_subcommand("train", "Train a scaling filter on a dataset");
  t->add_option("dataset", train.dataset, "Dataset directory")->required();
  t->add_option("--k", tc.filter_length, "Filter length (even)");
  t->add_option("--levels", tc.levels, "Decomposition depth J");
  t->add_option("--lambda1", tc.lambda1, "Sparsity weight");
  t->add_option("--lambda2", tc.lambda2, "Wavelet-constraint weight");
  t->add_option("--batch-size", tc.batch_size, "Minibatch size");
  t->add_option("--lr", tc.learning_rate, "Adam learning rate");
  t->add_option("--beta1", tc.adam_beta1, "Adam beta1");
  t->add_option("--beta2", tc.adam_beta2, "Adam beta2");
  t->add_option("--eps", tc.adam_eps, "Adam epsilon");
  t->add_option("--max-steps", tc.max_steps, "Step budget");
  t->add_option("--tol", tc.convergence_tol, "Relative improvement threshold");
  t->add_option("--window", tc.convergence_window, "Convergence window (steps)");
  t->add_option("--init", train.init, "random, haar, or a filter file");
  add_common(t, true);

  TransformOptions transform;
  auto* tr = app.add_subcommand("transform", "Forward transform of a signal file");
  tr->add_option("signal", transform.signal, "CSV or WAV signal")->required();
  tr->add_option("--filter", transform.filter, "Filter file or wavelet name")
      ->required();
  tr->add_option("--levels", transform.levels, "Decomposition depth J")->required();
  add_common(tr, true);

  ReconstructOptions reconstruct;
  auto* rc = app.add_subcommand("reconstruct", "Inverse transform of a coefficient file");
  rc->add_option("coefficients", reconstruct.coefficients, "Coefficient file")
      ->required();
  rc->add_option("--filter", reconstruct.filter, "Filter file or wavelet name")
      ->required();
  add_common(rc, true);

  CascadeOptions cascade;
  auto* ca = app.add_subcommand("cascade", "Render scaling and wavelet functions");
  ca->add_option("--filter", cascade.filter, "Filter file or wavelet name")->required();
  ca->add_option("--iterations", cascade.iterations, "Cascade iterations");
  add_common(ca, true);

  std::string compare_filter;
  auto* co = app.add_subcommand("compare", "Rank classical wavelets by distance");
  co->add_option("--filter", compare_filter, "Filter file or wavelet name")->required();
  add_common(co, false);

  SampleCliOptions sample;
  auto* sa = app.add_subcommand("sample", "Synthesize a signal from sparse coefficients");
  sa->add_option("--filter", sample.filter, "Filter file or wavelet name")->required();
  sa->add_option("--n", sample.sample.length, "Signal length");
  sa->add_option("--levels", sample.sample.levels, "Decomposition depth J");
  sa->add_option("--density", sample.sample.density, "Probability of a nonzero coefficient");
  sa->add_option("--zero-top-scales", sample.sample.zero_top_scales,
                 "Finest detail levels forced to zero");
  add_common(sa, true);

  PlotOptions plot;
  auto* pl = app.add_subcommand("plot", "Render CSV series as an SVG line chart");
  pl->add_option("inputs", plot.inputs, "CSV files")->required();
  pl->add_option("--title", plot.title, "Chart title");
  add_common(pl, true);

  WavIngestOptions wav;
  auto* wi = app.add_subcommand("wav-ingest", "Segment a 16-bit WAV file into a dataset");
  wi->add_option("wav", wav.wav, "WAV file")->required();
  wi->add_option("--n", wav.length, "Segment length (power of two)");
  wi->add_option("--hop", wav.hop, "Hop between segments (0 = n)");
  add_common(wi, true);

  FilterOptions filter;
  auto* fi = app.add_subcommand("filter", "Export a classical filter as a filter file");
  fi->add_option("name", filter.name, "Wavelet name, e.g. db4 or sym5")->required();
  add_common(fi, true);

  RerunOptions rerun;
  std::string rerun_out;
  auto* rr = app.add_subcommand("rerun", "Repeat a command from its manifest");
  rr->add_option("manifest", rerun.manifest, "manifest.json")->required();
  rr->add_option("--out", rerun_out, "Write to this path instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "rerun") {
    std::vector<std::string> replay;
    try {
      replay = ArgsFromManifest(rerun.manifest, rerun_out);
    } catch (const IoError& e) {
      err << "wavelearn rerun: " << e.what() << "\n";
      return kExitUsage;
    }
    return RunCli(replay, out, err);
  }
  const auto start = std::chrono::steady_clock::now();
  const WarningRedirect redirect(err);
  try {
    Outcome outcome;
    if (command == "synth") {
      outcome = RunSynth(synth, common);
    } else if (command == "train") {
      outcome = RunTrain(train, common, out);
    } else if (command == "transform") {
      outcome = RunTransform(transform, common);
    } else if (command == "reconstruct") {
      outcome = RunReconstruct(reconstruct, common);
    } else if (command == "cascade") {
      outcome = RunCascade(cascade, common, out);
    } else if (command == "compare") {
      outcome = RunCompare(compare_filter, common, out);
    } else if (command == "sample") {
      outcome = RunSample(sample, common);
    } else if (command == "plot") {
      outcome = RunPlot(plot, common);
    } else if (command == "wav-ingest") {
      outcome = RunWavIngest(wav, common);
    } else if (command == "filter") {
      outcome = RunFilter(filter, common);
    }
    if (!common.out.empty()) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      WriteManifest(command, *sub, sub->get_help_ptr(), common, outcome,
                    elapsed.count());
    }
  } catch (const InvalidArgument& e) {
    err << "wavelearn " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const LookupError& e) {
    err << "wavelearn " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "wavelearn " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "wavelearn " << command << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace wavelearn::cli
