// Copyright 2026 The inkmatch Authors
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


// inkmatch command line: synth, train, recognize, eval, serve.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "inkmatch/eval.hpp"
#include "inkmatch/ink_io.hpp"
#include "inkmatch/model.hpp"
#include "inkmatch/recognizer.hpp"
#include "inkmatch/service.hpp"
#include "inkmatch/synth.hpp"
#include "inkmatch/templates.hpp"

namespace {

using namespace inkmatch;

Config config_or_default(const std::string& path) { return path.empty() ? Config{} : load_config(path); }

void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

int run_train(const std::string& data, const std::string& out, std::optional<double> threshold,
              const std::string& config_path, std::size_t classes) {
  Config config = config_or_default(config_path);
  if (threshold) config.cluster.threshold = *threshold;
  const Dataset dataset = load_dataset(data, classes);
  std::cerr << "loaded " << dataset.symbols.size() << " symbols, " << dataset.class_count << " classes, "
            << dataset.writer_ids.size() << " writers\n";
  const Model model = build_model(dataset, config);
  save_model(model, out);
  std::cout << "class\tstrokes\tregion\ttemplates\n";
  for (const ClassTemplates& c : model.classes) {
    for (const auto& [count, group] : c.groups) {
      for (Region r : kAllRegions) {
        if (group.at(r).empty()) continue;
        std::cout << c.label << '\t' << count << '\t' << region_name(r) << '\t' << group.at(r).size() << '\n';
      }
    }
  }
  std::cout << "total templates: " << model.template_count() << '\n';
  return 0;
}

int run_recognize(const std::string& model_path, const std::string& ink_path, std::size_t topk) {
  const Model model = load_model(model_path);
  std::ifstream in(ink_path);
  if (!in) throw Error("cannot open " + ink_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ink_path + ": " + e.what());
  }
  nlohmann::json out = recognition_to_json(recognize(symbol_from_json(j), model, topk));
  out["model_version"] = Model::kFormatVersion;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_eval(const std::string& data, const std::string& protocol, const EvalOptions& options,
             const std::string& report_path, std::size_t classes) {
  const Dataset dataset = load_dataset(data, classes);
  Report report;
  if (protocol == "dichotomous") {
    report = dichotomous_eval(dataset, options);
  } else {
    report = kfold_cv(dataset, options);
  }
  std::cout << report.protocol << ": " << report.total << " test symbols, " << report.misrecognized
            << " misrecognized, " << report.rejected << " rejected, error " << report.error_rate << " %, "
            << report.mean_time_per_char << " s/char, " << report.dtw_calls << " DTW calls over "
            << report.candidates << " candidates\n";
  for (std::size_t f = 0; f < report.folds.size(); ++f)
    std::cout << "  fold " << f << ": error " << report.folds[f].error_rate << " %\n";
  if (!report_path.empty()) write_json(report_to_json(report), report_path);
  return 0;
}

int run_serve(std::string model_path, const std::string& bind, bool dev) {
  if (model_path.empty()) {
    if (const char* env = std::getenv("INKMATCH_MODEL")) model_path = env;
  }
  if (model_path.empty()) throw Error("no model: pass --model or set INKMATCH_MODEL");
  const BindAddress address = parse_bind_address(bind);
  const RecognitionService service(load_model(model_path), dev);
  HttpServer server(service);
  const int port = server.bind(address);
  std::cerr << "serving " << model_path << " on " << address.host << ':' << port << (dev ? " (dev mode)" : "")
            << '\n';
  server.listen();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-line handwritten character recognition with DTW stroke templates"};
  app.require_subcommand(1);

  std::string data, out, config_path, model_path, ink_path, report_path;
  std::size_t classes = 0;

  auto* synth = app.add_subcommand("synth", "Write a synthetic ink dataset");
  SynthOptions synth_options;
  synth->add_option("--out", out, "Output ink file")->required();
  synth->add_option("--classes", synth_options.classes, "Class count");
  synth->add_option("--writers", synth_options.writers, "Writer count");
  synth->add_option("--repeats", synth_options.repeats, "Samples per writer and class");
  synth->add_option("--noise", synth_options.noise, "Seed vertex noise (unit-square units)");
  synth->add_option("--seed", synth_options.seed, "Random seed");

  auto* train = app.add_subcommand("train", "Learn stroke templates from an ink file");
  std::optional<double> threshold;
  train->add_option("--data", data, "Ink file")->required()->check(CLI::ExistingFile);
  train->add_option("--out", out, "Model file to write")->required();
  train->add_option("--threshold", threshold, "Cluster threshold (Delta units)");
  train->add_option("--config", config_path, "JSON config")->check(CLI::ExistingFile);
  train->add_option("--classes", classes, "Class count (default: max label + 1)");

  auto* rec = app.add_subcommand("recognize", "Classify one symbol");
  std::size_t topk = kDefaultTopK;
  rec->add_option("--model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  rec->add_option("--ink", ink_path, "Symbol JSON file")->required()->check(CLI::ExistingFile);
  rec->add_option("--topk", topk, "Ranked classes to report")->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "Writer-independent evaluation");
  std::string protocol = "kfold";
  EvalOptions eval_options;
  bool exhaustive = false;
  bool sequential = false;
  eval->add_option("--data", data, "Ink file")->required()->check(CLI::ExistingFile);
  eval->add_option("--protocol", protocol, "dichotomous or kfold")
      ->check(CLI::IsMember({"dichotomous", "kfold"}));
  eval->add_option("--k", eval_options.folds, "Fold count");
  eval->add_option("--seed", eval_options.seed, "Writer shuffle seed");
  eval->add_option("--train-writers", eval_options.train_writers, "Dichotomous: training writers");
  eval->add_option("--test-writers", eval_options.test_writers, "Dichotomous: test writers (0 = rest)");
  eval->add_option("--report", report_path, "Write the JSON report here");
  eval->add_option("--config", config_path, "JSON config")->check(CLI::ExistingFile);
  eval->add_option("--classes", classes, "Class count (default: max label + 1)");
  eval->add_flag("--exhaustive", exhaustive, "Unconstrained DTW against every template, no lower bound");
  eval->add_flag("--sequential", sequential, "Run folds one after another");

  auto* serve = app.add_subcommand("serve", "HTTP recognition service");
  std::string bind = "127.0.0.1:8080";
  bool dev = false;
  serve->add_option("--model", model_path, "Model file (default: $INKMATCH_MODEL)");
  serve->add_option("--bind", bind, "host:port");
  serve->add_flag("--dev", dev, "Enable POST /echo");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      const Dataset d = make_synthetic_dataset(synth_options);
      save_dataset(d, out);
      std::cerr << "wrote " << d.symbols.size() << " symbols to " << out << '\n';
      return 0;
    }
    if (*train) return run_train(data, out, threshold, config_path, classes);
    if (*rec) return run_recognize(model_path, ink_path, topk);
    if (*eval) {
      eval_options.config = config_or_default(config_path);
      if (exhaustive) eval_options.config.match.lower_bound = false;
      eval_options.parallel = !sequential;
      return run_eval(data, protocol, eval_options, report_path, classes);
    }
    if (*serve) return run_serve(model_path, bind, dev);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
