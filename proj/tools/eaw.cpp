// eaw: effect algebra workbench.
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ea/analysis.hpp"
#include "ea/constructors.hpp"
#include "ea/enumerate.hpp"
#include "ea/errors.hpp"
#include "ea/model_io.hpp"
#include "ea/suite.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    ea::write_text_file(path, text);
  }
}

int cmd_validate(const std::string& file) {
  const auto result = ea::validate(ea::read_model_file(file));
  if (!result.ok()) {
    for (const auto& e : result.errors) std::cerr << file << ": " << ea::describe(e) << "\n";
    return kExitInput;
  }
  std::cout << file << ": ok, " << result.model->size() << " elements, model_id " << result.model->model_id() << "\n";
  return 0;
}

int cmd_gen(const std::string& recipe, const std::string& out) {
  emit(ea::serialize_model(ea::build_recipe(recipe, fs::current_path())), out);
  return 0;
}

int cmd_enumerate(std::size_t size, bool allow_long, int workers, const std::string& dir) {
  ea::EnumerationStats stats;
  const auto forms = ea::enumerate_models({size, allow_long, workers}, &stats);
  if (dir.empty()) {
    for (const auto& f : forms) std::cout << f.iso_hash << "\n";
  } else {
    fs::create_directories(dir);
    json models = json::array();
    for (const auto& f : forms) {
      const std::string file = f.iso_hash + ".json";
      ea::write_model_file(fs::path(dir) / file, ea::model_from_canonical(f));
      models.push_back({{"iso_hash", f.iso_hash}, {"size", f.size}, {"file", file}});
    }
    ea::write_text_file(fs::path(dir) / "manifest.json", json{{"models", models}}.dump(2) + "\n");
  }
  std::cerr << "size " << size << ": " << forms.size() << " isomorphism classes (" << stats.labeled_models
            << " labeled tables, " << stats.search_nodes << " search nodes)\n";
  return 0;
}

int cmd_check(const std::string& file, const std::string& properties, std::size_t subset_cap, std::uint64_t seed) {
  const auto result = ea::validate(ea::read_model_file(file));
  if (!result.ok()) {
    for (const auto& e : result.errors) std::cerr << file << ": " << ea::describe(e) << "\n";
    return kExitInput;
  }
  ea::AnalysisOptions opts;
  opts.subsets.subset_cap = subset_cap;
  opts.subsets.seed = ea::model_seed(seed, result.model->model_id());
  ea::ModelAnalysis analysis(*result.model, opts);
  const auto filter = split_list(properties);
  for (const auto& p : filter) {
    const auto& names = ea::ModelAnalysis::property_names();
    if (std::find(names.begin(), names.end(), p) == names.end()) {
      std::cerr << "unknown property: " << p << "\n";
      return kExitInput;
    }
  }
  std::cout << analysis.report(filter).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& manifest_path, const std::string& theorems, int workers, const std::string& out,
               bool require_substantive) {
  const auto manifest = ea::load_manifest(manifest_path);
  ea::SuiteOptions options;
  options.theorems = split_list(theorems);
  for (const auto& id : options.theorems) (void)ea::find_theorem(id);
  options.workers = workers;
  options.require_substantive = require_substantive;
  const json report = ea::run_suite(manifest, options);
  emit(ea::render_report(report), out);

  const auto& s = report["summary"];
  std::cerr << s["models"] << " models, " << s["verdicts"] << " verdicts, " << s["counterexamples"]
            << " counterexamples, " << s["inconclusive"] << " inconclusive, " << s["input_errors"]
            << " input errors\n";
  return ea::exit_status(report, manifest.inconclusive_threshold, require_substantive);
}

int cmd_report(const std::string& file, const std::string& format) {
  json report;
  try {
    report = json::parse(ea::read_text_file(file));
  } catch (const json::parse_error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kExitInput;
  }
  std::cout << (format == "markdown" ? ea::render_markdown(report) : ea::render_report(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effect algebra workbench: validate, construct, enumerate and check finite effect algebras"};
  app.require_subcommand(1);

  std::string file, recipe, out, properties, manifest, theorems, format = "json";
  std::size_t size = 0, subset_cap = 16;
  std::uint64_t seed = 0;
  bool allow_long = false, require_substantive = false;
  int workers = 0;

  auto* validate = app.add_subcommand("validate", "Check a model file against the axioms");
  validate->add_option("file", file, "Model JSON")->required();

  auto* gen = app.add_subcommand("gen", "Build a model from a recipe, e.g. hsum(boolean:2,boolean:2)");
  gen->add_option("recipe", recipe)->required();
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "List all models of a size up to isomorphism");
  enumerate->add_option("--size", size)->required();
  enumerate->add_flag("--long", allow_long, "Allow sizes 7 and 8");
  enumerate->add_option("--workers", workers);
  enumerate->add_option("-o,--output", out, "Directory for model files and manifest.json");

  auto* check = app.add_subcommand("check", "Compute properties of one model");
  check->add_option("file", file)->required();
  check->add_option("--properties", properties, "Comma-separated property names");
  check->add_option("--subset-cap", subset_cap);
  check->add_option("--seed", seed);

  auto* verify = app.add_subcommand("verify", "Run the theorem suite over a corpus manifest");
  verify->add_option("--manifest", manifest)->required();
  verify->add_option("--theorems", theorems, "Comma-separated ids, e.g. T1,T3");
  verify->add_option("--workers", workers);
  verify->add_option("-o,--output", out, "Report file (default stdout)");
  verify->add_flag("--require-substantive", require_substantive, "Fail when a theorem never has a true premise");

  auto* report = app.add_subcommand("report", "Render a verify report");
  report->add_option("file", file)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*gen) return cmd_gen(recipe, out);
    if (*enumerate) return cmd_enumerate(size, allow_long, workers, out);
    if (*check) return cmd_check(file, properties, subset_cap, seed);
    if (*verify) return cmd_verify(manifest, theorems, workers, out, require_substantive);
    if (*report) return cmd_report(file, format);
  } catch (const ea::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
