#include "admcm/document.hpp"

#include <cstdio>
#include <unordered_set>

#include "json.hpp"

#include "admcm/errors.hpp"

namespace admcm {

using json = nlohmann::ordered_json;

namespace {

// Finds the byte offset of the value at a JSON pointer in already-valid JSON,
// so semantic errors can point at a line.
class Locator {
 public:
  explicit Locator(std::string_view text) : t_(text) {}

  std::size_t find(const std::vector<std::string>& path) {
    pos_ = 0;
    ws();
    for (const std::string& key : path) {
      if (pos_ >= t_.size()) return 0;
      if (t_[pos_] == '{') {
        ++pos_;
        while (true) {
          ws();
          if (pos_ >= t_.size() || t_[pos_] == '}') return 0;
          const std::string k = string_token();
          ws();
          ++pos_;  // ':'
          ws();
          if (k == key) break;
          skip_value();
          ws();
          if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
        }
      } else if (t_[pos_] == '[') {
        ++pos_;
        const std::size_t want = std::stoul(key);
        for (std::size_t i = 0; i < want; ++i) {
          ws();
          skip_value();
          ws();
          if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
        }
        ws();
      } else {
        return pos_;
      }
    }
    return pos_;
  }

 private:
  void ws() {
    while (pos_ < t_.size() && (t_[pos_] == ' ' || t_[pos_] == '\n' || t_[pos_] == '\r' || t_[pos_] == '\t')) ++pos_;
  }

  std::string string_token() {
    std::string out;
    ++pos_;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\\') ++pos_;
      if (pos_ < t_.size()) out += t_[pos_++];
    }
    ++pos_;
    return out;
  }

  void skip_value() {
    if (pos_ >= t_.size()) return;
    const char c = t_[pos_];
    if (c == '"') {
      string_token();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      while (pos_ < t_.size()) {
        const char d = t_[pos_];
        if (d == '"') {
          string_token();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++pos_;
        if (depth == 0) return;
      }
    } else {
      while (pos_ < t_.size() && t_[pos_] != ',' && t_[pos_] != '}' && t_[pos_] != ']') ++pos_;
    }
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

std::string where(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text), loc_(text) {}

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& what) {
    std::string ptr;
    for (const auto& p : path) ptr += "/" + p;
    throw InputError(where(text_, loc_.find(path)) + " (" + (ptr.empty() ? "/" : ptr) + "): " + what);
  }

  std::size_t offset_of(const std::vector<std::string>& path) { return loc_.find(path); }

 private:
  std::string_view text_;
  Locator loc_;
};

std::vector<VertexSet> read_set_list(Reader& r, const json& doc, const std::string& key, const Clutter& names) {
  const json& arr = doc.at(key);
  if (!arr.is_array()) r.fail({key}, "expected an array of label arrays");
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& item = arr[i];
    if (!item.is_array()) r.fail({key, std::to_string(i)}, "expected an array of labels");
    VertexSet s;
    for (std::size_t k = 0; k < item.size(); ++k) {
      const std::vector<std::string> path{key, std::to_string(i), std::to_string(k)};
      if (!item[k].is_string()) r.fail(path, "labels must be strings");
      const auto idx = names.index_of(item[k].get<std::string>());
      if (!idx) r.fail(path, "unknown vertex label '" + item[k].get<std::string>() + "'");
      if (s.contains(*idx)) r.fail(path, "label '" + item[k].get<std::string>() + "' repeated");
      s.insert(*idx);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

ClutterDocument parse_document(std::string_view text, bool minimalize) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(where(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON: " + e.what());
  }
  Reader r(text);
  if (!doc.is_object()) r.fail({}, "document must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "vertices" && it.key() != "edges" && it.key() != "colors" && it.key() != "matching")
      r.fail({it.key()}, "unknown field '" + it.key() + "'");
  if (!doc.contains("vertices")) r.fail({}, "missing field 'vertices'");
  if (!doc.contains("edges")) r.fail({}, "missing field 'edges'");

  const json& vs = doc["vertices"];
  if (!vs.is_array()) r.fail({"vertices"}, "expected an array of labels");
  if (vs.size() > static_cast<std::size_t>(VertexSet::kMaxVertices))
    r.fail({"vertices"}, "at most 64 vertices are supported");
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) r.fail({"vertices", std::to_string(i)}, "labels must be strings");
    const std::string l = vs[i].get<std::string>();
    if (!seen.insert(l).second) r.fail({"vertices", std::to_string(i)}, "duplicate vertex label '" + l + "'");
    labels.push_back(l);
  }
  // Label lookup only; edges are attached below.
  const Clutter names(labels, {});

  ClutterDocument out;
  std::vector<VertexSet> edges = read_set_list(r, doc, "edges", names);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) r.fail({"edges", std::to_string(i)}, "empty edge");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k == i || edges[k] == edges[i] || !edges[k].subset_of(edges[i])) continue;
      if (!minimalize)
        r.fail({"edges", std::to_string(i)}, "edge " + names.format(edges[i]) + " contains edge " +
                                                 names.format(edges[k]) + " (use --minimalize to drop it)");
      out.warnings.push_back(where(text, r.offset_of({"edges", std::to_string(i)})) + ": dropped edge " +
                             names.format(edges[i]) + ", it contains " + names.format(edges[k]));
      break;
    }
  }
  out.clutter = Clutter::minimalized(labels, edges);

  if (doc.contains("colors")) out.colors = read_set_list(r, doc, "colors", names);
  if (doc.contains("matching")) out.matching = read_set_list(r, doc, "matching", names);
  if (out.colors && out.matching) {
    GridStructure grid(*out.colors, *out.matching);
    const auto problems = validate_grid(out.clutter, grid);
    if (!problems.empty()) r.fail({"colors"}, "invalid grid: " + problems.front());
    out.grid = std::move(grid);
  }
  return out;
}

std::string serialize_document(const Clutter& clutter, const GridStructure* grid) {
  json doc;
  doc["vertices"] = clutter.labels();
  auto lists = [&](const std::vector<VertexSet>& sets) {
    json arr = json::array();
    for (VertexSet s : sets) arr.push_back(clutter.labels_of(s));
    return arr;
  };
  doc["edges"] = lists(clutter.edges());
  if (grid) {
    doc["colors"] = lists(grid->colors());
    doc["matching"] = lists(grid->matching());
  }
  return doc.dump(2) + "\n";
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace admcm
