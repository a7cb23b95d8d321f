#include "ea/model_io.hpp"

#include <fstream>
#include <sstream>

#include "ea/errors.hpp"
#include "json.hpp"

namespace ea {

using nlohmann::json;

std::string serialize_model(const EffectAlgebraModel& m) {
  const std::size_t n = m.size();
  std::string out;
  out += "{\n";
  out += "  \"ea_version\": 1,\n";
  out += "  \"size\": " + std::to_string(n) + ",\n";
  out += "  \"zero\": 0,\n";
  out += "  \"one\": " + std::to_string(n - 1) + ",\n";
  if (!m.labels().empty()) {
    out += "  \"labels\": [";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ", ";
      out += json(m.labels()[i]).dump();
    }
    out += "],\n";
  }
  out += "  \"sum\": [\n";
  for (std::size_t x = 0; x < n; ++x) {
    out += "    [";
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out += ", ";
      const Element v = m.sum(static_cast<Element>(x), static_cast<Element>(y));
      out += v == kUndefined ? std::string("null") : std::to_string(v);
    }
    out += x + 1 < n ? "],\n" : "]\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

RawTable parse_model_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ShapeError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ShapeError("model file must be a JSON object");
  if (!doc.contains("ea_version") || doc["ea_version"] != 1) throw ShapeError("unsupported or missing ea_version");
  for (const char* key : {"size", "zero", "one", "sum"}) {
    if (!doc.contains(key)) throw ShapeError(std::string("missing key: ") + key);
  }
  if (!doc["size"].is_number_integer() || !doc["zero"].is_number_integer() || !doc["one"].is_number_integer()) {
    throw ShapeError("size, zero and one must be integers");
  }
  RawTable raw;
  raw.zero = doc["zero"].get<std::int64_t>();
  raw.one = doc["one"].get<std::int64_t>();
  const auto size = doc["size"].get<std::int64_t>();
  const json& rows = doc["sum"];
  if (!rows.is_array()) throw ShapeError("sum must be an array of rows");
  if (static_cast<std::int64_t>(rows.size()) != size) throw ShapeError("size does not match the number of rows");
  for (const json& row : rows) {
    if (!row.is_array()) throw ShapeError("each row of sum must be an array");
    std::vector<std::optional<std::int64_t>> parsed;
    for (const json& v : row) {
      if (v.is_null()) {
        parsed.emplace_back();
      } else if (v.is_number_integer()) {
        parsed.emplace_back(v.get<std::int64_t>());
      } else {
        throw ShapeError("table entries must be integers or null");
      }
    }
    raw.sum.push_back(std::move(parsed));
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ShapeError("labels must be an array of strings");
    for (const json& l : doc["labels"]) {
      if (!l.is_string()) throw ShapeError("labels must be an array of strings");
      raw.labels.push_back(l.get<std::string>());
    }
  }
  return raw;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ShapeError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

RawTable read_model_file(const std::filesystem::path& path) { return parse_model_json(read_text_file(path)); }

void write_model_file(const std::filesystem::path& path, const EffectAlgebraModel& m) {
  write_text_file(path, serialize_model(m));
}

}  // namespace ea
