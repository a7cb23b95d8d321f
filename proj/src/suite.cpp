#include "ea/suite.hpp"

#include <sstream>

#include <omp.h>

#include "ea/constructors.hpp"
#include "ea/enumerate.hpp"
#include "ea/errors.hpp"
#include "ea/model_io.hpp"

namespace ea {

using nlohmann::json;

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ShapeError(std::string("manifest field '") + key + "': " + e.what());
  }
}

json analyse_one(const CorpusEntry& entry, const CorpusManifest& manifest, const std::vector<Theorem>& theorems) {
  const EffectAlgebraModel& m = *entry.model;
  AnalysisOptions opts;
  opts.family_budget = manifest.family_budget;
  opts.subsets.subset_cap = manifest.subset_cap;
  opts.subsets.samples = manifest.subset_samples;
  opts.subsets.seed = model_seed(manifest.seed, m.model_id());

  ModelAnalysis analysis(m, opts);
  json out = analysis.report();
  out["source"] = entry.source;
  json verdicts = json::array();
  for (const auto& t : theorems) verdicts.push_back(evaluate(t, analysis).to_json());
  out["verdicts"] = verdicts;
  return out;
}

json summarize(const json& models, const std::vector<Theorem>& theorems, std::size_t input_errors) {
  json per = json::object();
  for (const auto& t : theorems) {
    per[t.id] = {{"substantive", 0}, {"vacuous", 0}, {"counterexample", 0}, {"inconclusive", 0}};
  }
  std::size_t counterexamples = 0, inconclusive = 0, verdicts = 0, invariant_failures = 0;
  for (const auto& m : models) {
    if (m.contains("invariant_failure")) {
      ++invariant_failures;
      continue;
    }
    for (const auto& v : m["verdicts"]) {
      const std::string status = v["status"];
      const std::string key = status == "pass" ? "substantive" : status;
      auto& slot = per[v["theorem_id"].get<std::string>()][key];
      slot = slot.get<std::size_t>() + 1;
      ++verdicts;
      if (status == "counterexample") ++counterexamples;
      if (status == "inconclusive") ++inconclusive;
    }
  }
  return {{"models", models.size()},
          {"input_errors", input_errors},
          {"invariant_failures", invariant_failures},
          {"verdicts", verdicts},
          {"counterexamples", counterexamples},
          {"inconclusive", inconclusive},
          {"theorems", per}};
}

std::vector<Theorem> select_theorems(const std::vector<std::string>& ids) {
  if (ids.empty()) return theorem_registry();
  std::vector<Theorem> out;
  for (const auto& id : ids) out.push_back(find_theorem(id));
  return out;
}

std::string truth_cell(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::uint64_t model_seed(std::uint64_t manifest_seed, const std::string& model_id) {
  // splitmix64 over the seed xor the id hash
  std::uint64_t z = manifest_seed ^ std::stoull(model_id, nullptr, 16);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CorpusManifest parse_manifest(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ShapeError("manifest must be a JSON object");
  CorpusManifest m;
  m.base_dir = base_dir;
  if (j.contains("models")) {
    if (!j["models"].is_array()) throw ShapeError("manifest 'models' must be an array");
    for (const auto& e : j["models"]) {
      if (e.is_string()) {
        m.models.push_back(e.get<std::string>());
      } else if (e.is_object() && e.contains("file") && e["file"].is_string()) {
        m.models.push_back(e["file"].get<std::string>());
      } else {
        throw ShapeError("manifest model entries must be paths or {\"file\": path} objects");
      }
    }
  }
  m.recipes = get_or<std::vector<std::string>>(j, "recipes", {});
  m.enumerate_sizes = get_or<std::vector<std::size_t>>(j, "enumerate_sizes", {});
  if (j.contains("budgets")) m.family_budget = get_or<std::uint64_t>(j["budgets"], "families", m.family_budget);
  m.subset_cap = get_or<std::size_t>(j, "subset_cap", m.subset_cap);
  m.subset_samples = get_or<std::size_t>(j, "subset_samples", m.subset_samples);
  m.seed = get_or<std::uint64_t>(j, "seed", m.seed);
  m.inconclusive_threshold = get_or<double>(j, "inconclusive_threshold", m.inconclusive_threshold);
  return m;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ShapeError(path.string() + ": " + e.what());
  }
  return parse_manifest(j, path.parent_path());
}

std::vector<CorpusEntry> collect_corpus(const CorpusManifest& manifest, int workers) {
  std::vector<CorpusEntry> out;
  for (const auto& file : manifest.models) {
    CorpusEntry e{"file:" + file, std::nullopt, {}};
    try {
      const auto path = std::filesystem::path(file).is_absolute() ? std::filesystem::path(file) : manifest.base_dir / file;
      const auto result = validate(read_model_file(path));
      if (result.ok()) {
        e.model = *result.model;
      } else {
        for (const auto& err : result.errors) e.error += (e.error.empty() ? "" : "; ") + describe(err);
      }
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  for (const auto& recipe : manifest.recipes) {
    CorpusEntry e{"recipe:" + recipe, std::nullopt, {}};
    try {
      e.model = build_recipe(recipe, manifest.base_dir);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  for (std::size_t size : manifest.enumerate_sizes) {
    try {
      const auto forms = enumerate_models({size, true, workers});
      for (const auto& f : forms) {
        out.push_back({"enumerate:" + std::to_string(size) + "/" + f.iso_hash, model_from_canonical(f), {}});
      }
    } catch (const std::exception& ex) {
      out.push_back({"enumerate:" + std::to_string(size), std::nullopt, ex.what()});
    }
  }
  return out;
}

json run_suite_on(const std::vector<CorpusEntry>& corpus, const CorpusManifest& manifest,
                  const std::vector<Theorem>& theorems, int workers) {
  json input_errors = json::array();
  std::vector<const CorpusEntry*> ready;
  for (const auto& e : corpus) {
    if (e.model) {
      ready.push_back(&e);
    } else {
      input_errors.push_back({{"source", e.source}, {"error", e.error}});
    }
  }

  std::vector<json> slots(ready.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < ready.size(); ++i) {
    try {
      slots[i] = analyse_one(*ready[i], manifest, theorems);
    } catch (const std::exception& ex) {
      slots[i] = {{"source", ready[i]->source},
                  {"model_id", ready[i]->model->model_id()},
                  {"size", ready[i]->model->size()},
                  {"invariant_failure", ex.what()}};
    }
  }

  json models = json::array();
  for (auto& s : slots) models.push_back(std::move(s));
  json ids = json::array();
  for (const auto& t : theorems) ids.push_back(t.id);
  json summary = summarize(models, theorems, input_errors.size());
  return {{"input_errors", input_errors},
          {"models", models},
          {"summary", summary},
          {"settings",
           {{"seed", manifest.seed},
            {"subset_cap", manifest.subset_cap},
            {"subset_samples", manifest.subset_samples},
            {"family_budget", manifest.family_budget},
            {"theorems", ids}}}};
}

json run_suite(const CorpusManifest& manifest, const SuiteOptions& options) {
  return run_suite_on(collect_corpus(manifest, options.workers), manifest, select_theorems(options.theorems),
                      options.workers);
}

json run_suite_serial(const CorpusManifest& manifest, const SuiteOptions& options) {
  return run_suite_on(collect_corpus(manifest, 1), manifest, select_theorems(options.theorems), 1);
}

int exit_status(const json& report, double inconclusive_threshold, bool require_substantive) {
  const auto& s = report.at("summary");
  bool failed = s.at("counterexamples").get<std::size_t>() > 0 || s.at("invariant_failures").get<std::size_t>() > 0;
  if (require_substantive) {
    for (const auto& [id, counts] : s.at("theorems").items()) {
      if (counts.at("substantive").get<std::size_t>() == 0) failed = true;
    }
  }
  if (failed) return 1;
  if (s.at("input_errors").get<std::size_t>() > 0) return 2;
  const auto verdicts = s.at("verdicts").get<std::size_t>();
  const auto inconclusive = s.at("inconclusive").get<std::size_t>();
  if (verdicts > 0 && static_cast<double>(inconclusive) > inconclusive_threshold * static_cast<double>(verdicts)) {
    return 3;
  }
  return 0;
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

std::string render_markdown(const json& report) {
  std::ostringstream out;
  const auto& s = report.at("summary");
  out << "# Verification report\n\n## Settings\n\n";
  for (const auto& [k, v] : report.at("settings").items()) out << "- " << k << ": " << truth_cell(v) << "\n";

  out << "\n## Summary\n\n";
  for (const auto& [k, v] : s.items()) {
    if (k != "theorems") out << "- " << k << ": " << truth_cell(v) << "\n";
  }
  out << "\n| theorem | substantive | vacuous | counterexample | inconclusive |\n|---|---|---|---|---|\n";
  for (const auto& [id, c] : s.at("theorems").items()) {
    out << "| " << id << " | " << c.at("substantive") << " | " << c.at("vacuous") << " | " << c.at("counterexample")
        << " | " << c.at("inconclusive") << " |\n";
  }

  out << "\n## Input errors\n\n";
  if (report.at("input_errors").empty()) out << "none\n";
  for (const auto& e : report.at("input_errors")) {
    out << "- `" << e.at("source").get<std::string>() << "`: " << e.at("error").get<std::string>() << "\n";
  }

  out << "\n## Models\n";
  for (const auto& m : report.at("models")) {
    out << "\n### " << m.at("model_id").get<std::string>() << "\n\n";
    out << "- source: `" << m.at("source").get<std::string>() << "`\n- size: " << m.at("size") << "\n";
    if (m.contains("invariant_failure")) {
      out << "- invariant_failure: " << m.at("invariant_failure").get<std::string>() << "\n";
      continue;
    }
    out << "\n| property | value |\n|---|---|\n";
    for (const auto& [k, v] : m.at("properties").items()) out << "| " << k << " | " << truth_cell(v) << " |\n";
    out << "\n| stat | value |\n|---|---|\n";
    for (const auto& [k, v] : m.at("stats").items()) out << "| " << k << " | " << truth_cell(v) << " |\n";
    out << "\n| theorem | premise | conclusion | status | counterexample |\n|---|---|---|---|---|\n";
    for (const auto& v : m.at("verdicts")) {
      out << "| " << v.at("theorem_id").get<std::string>() << " | " << truth_cell(v.at("premise")) << " | "
          << truth_cell(v.at("conclusion")) << " | " << v.at("status").get<std::string>() << " | "
          << (v.contains("counterexample") ? "`" + v.at("counterexample").dump() + "`" : std::string("-")) << " |\n";
    }
    out << "\nwitnesses:\n\n";
    for (const auto& [k, v] : m.at("witnesses").items()) out << "- " << k << ": `" << v.dump() << "`\n";
  }
  return out.str();
}

}  // namespace ea
