#pragma once

#include <filesystem>
#include <vector>

#include "ea/constructors.hpp"
#include "ea/suite.hpp"

namespace testing_support {

inline std::filesystem::path source_dir() { return EA_SOURCE_DIR; }

inline ea::CorpusManifest default_manifest() { return ea::load_manifest(source_dir() / "corpus/default_manifest.json"); }

// Every model the default manifest produces, in manifest order.
inline const std::vector<ea::EffectAlgebraModel>& corpus() {
  static const std::vector<ea::EffectAlgebraModel> models = [] {
    std::vector<ea::EffectAlgebraModel> out;
    for (auto& e : ea::collect_corpus(default_manifest(), 1)) {
      if (e.model) out.push_back(*e.model);
    }
    return out;
  }();
  return models;
}

// -1 for undefined; zero is index 0, one is the last index.
inline ea::RawTable raw(const std::vector<std::vector<int>>& rows) {
  ea::RawTable r;
  r.zero = 0;
  r.one = static_cast<std::int64_t>(rows.size()) - 1;
  for (const auto& row : rows) {
    std::vector<std::optional<std::int64_t>> out;
    for (int v : row) out.push_back(v < 0 ? std::nullopt : std::optional<std::int64_t>(v));
    r.sum.push_back(out);
  }
  return r;
}

inline ea::EffectAlgebraModel mo2() { return ea::build_recipe("hsum(boolean:2,boolean:2)"); }

}  // namespace testing_support
