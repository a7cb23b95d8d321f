#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ea/analysis.hpp"
#include "ea/theorems.hpp"
#include "json.hpp"

namespace ea {

struct CorpusManifest {
  std::vector<std::string> models;  // paths, relative to base_dir
  std::vector<std::string> recipes;
  std::vector<std::size_t> enumerate_sizes;
  std::uint64_t family_budget = kDefaultFamilyBudget;
  std::size_t subset_cap = 16;
  std::size_t subset_samples = 4096;
  std::uint64_t seed = 0;
  // Largest tolerated share of inconclusive verdicts.
  double inconclusive_threshold = 0.0;
  std::filesystem::path base_dir;
};

// "models" entries may be plain paths or {"file": path, ...} objects, so the
// manifest written by `enumerate -o` loads directly. Throws ShapeError.
CorpusManifest parse_manifest(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
CorpusManifest load_manifest(const std::filesystem::path& path);

struct SuiteOptions {
  std::vector<std::string> theorems;  // empty = all registered
  int workers = 0;                    // 0 = OpenMP default
  bool require_substantive = false;
};

// A model queued for the sweep, or the reason it could not be built.
struct CorpusEntry {
  std::string source;
  std::optional<EffectAlgebraModel> model;
  std::string error;
};

std::vector<CorpusEntry> collect_corpus(const CorpusManifest& manifest, int workers = 0);

// Runs validate, analysis, and every selected theorem per model. Models are
// spread over OpenMP threads; the report does not depend on the worker count.
nlohmann::json run_suite(const CorpusManifest& manifest, const SuiteOptions& options = {});

// One model at a time, in order. Reference for run_suite.
nlohmann::json run_suite_serial(const CorpusManifest& manifest, const SuiteOptions& options = {});

// Same, over an already collected corpus; `theorems` overrides the registry.
nlohmann::json run_suite_on(const std::vector<CorpusEntry>& corpus, const CorpusManifest& manifest,
                            const std::vector<Theorem>& theorems, int workers);

// 1 counterexample or invariant failure (or a theorem with no substantive
// pass when required), else 2 input error, else 3 too many inconclusive,
// else 0.
int exit_status(const nlohmann::json& report, double inconclusive_threshold, bool require_substantive);

std::string render_report(const nlohmann::json& report);  // pretty JSON + newline
std::string render_markdown(const nlohmann::json& report);

std::uint64_t model_seed(std::uint64_t manifest_seed, const std::string& model_id);

}  // namespace ea
