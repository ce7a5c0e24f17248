#include "pairmine/corpus_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "pairmine/utf8.hpp"

namespace pairmine {
namespace {

using nlohmann::json;

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

std::vector<CorpusManifest> load_manifest(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<CorpusManifest> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (utf8::trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error("manifest " + path + " line " + std::to_string(lineno) +
                               ": " + e.what());
    }
    if (!j.is_object() || !j.contains("corpus_id") || !j["corpus_id"].is_string() ||
        !j.contains("genre") || !j["genre"].is_string() || !j.contains("source_path") ||
        !j["source_path"].is_string())
      throw std::runtime_error("manifest " + path + " line " + std::to_string(lineno) +
                               ": record needs corpus_id, genre, source_path");
    CorpusManifest m;
    m.corpus_id = j["corpus_id"].get<std::string>();
    const auto genre = genre_from_string(j["genre"].get<std::string>());
    if (!genre)
      throw std::runtime_error("manifest " + path + " line " + std::to_string(lineno) +
                               ": unknown genre \"" + j["genre"].get<std::string>() + "\"");
    m.genre = *genre;
    m.test_only = j.value("test_only", false);
    std::filesystem::path src = j["source_path"].get<std::string>();
    if (src.is_relative()) src = base / src;
    m.source_path = src.string();
    out.push_back(std::move(m));
  }
  return out;
}

LoadResult load_corpus(const CorpusManifest& manifest) {
  std::ifstream in = open_or_throw(manifest.source_path);
  LoadResult result;
  std::string line;
  while (std::getline(in, line)) {
    if (utf8::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("doc_id") ||
        !j["doc_id"].is_string() || !j.contains("paragraphs") ||
        !j["paragraphs"].is_array()) {
      ++result.skipped_records;
      continue;
    }
    Document doc;
    doc.doc_id = j["doc_id"].get<std::string>();
    doc.corpus_id = manifest.corpus_id;
    doc.genre = manifest.genre;
    bool bad = false;
    for (const auto& p : j["paragraphs"]) {
      if (!p.is_string()) {
        bad = true;
        break;
      }
      std::string text = utf8::collapse_whitespace(
          utf8::trim(utf8::nfc(p.get<std::string>())));
      if (!text.empty()) doc.paragraphs.push_back(std::move(text));
    }
    if (bad || doc.paragraphs.empty()) {
      ++result.skipped_records;
      continue;
    }
    result.documents.push_back(std::move(doc));
  }
  return result;
}

}  // namespace pairmine
