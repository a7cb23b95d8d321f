#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ea/model.hpp"

namespace ea {

// Model files:
//   {"ea_version":1,"size":n,"zero":0,"one":n-1,"labels":[...],"sum":[[...],...]}
// with null for undefined entries. serialize_model() emits the canonical
// layout; parsing a canonical file and serializing it again reproduces the
// bytes exactly.
std::string serialize_model(const EffectAlgebraModel& m);

// Throws ShapeError on malformed JSON or schema mismatch. Axiom violations are
// left for validate().
RawTable parse_model_json(std::string_view text);

RawTable read_model_file(const std::filesystem::path& path);
void write_model_file(const std::filesystem::path& path, const EffectAlgebraModel& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ea
