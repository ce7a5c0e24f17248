#include "pairmine/annotations.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "pairmine/utf8.hpp"

namespace pairmine {

using nlohmann::json;

AnnotationLoad load_annotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open annotations file: " + path);
  AnnotationLoad out;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (utf8::trim(line).empty()) continue;
    const auto fail = [&](const std::string& why) {
      throw std::runtime_error("annotations " + path + " line " +
                               std::to_string(lineno) + ": " + why);
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(e.what());
    }
    if (!j.is_object() || !j.contains("pair_id") || !j["pair_id"].is_string() ||
        !j.contains("annotator_id") || !j["annotator_id"].is_string() ||
        !j.contains("label") || !j["label"].is_string())
      fail("record needs pair_id, annotator_id, label");
    const auto label = label_from_string(j["label"].get<std::string>());
    if (!label) fail("unknown label \"" + j["label"].get<std::string>() + "\"");
    AnnotationRecord rec;
    rec.pair_id = j["pair_id"].get<std::string>();
    rec.annotator_id = j["annotator_id"].get<std::string>();
    rec.label = *label;
    if (!seen.insert({rec.pair_id, rec.annotator_id}).second) {
      ++out.duplicate_votes;
      continue;
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

FilterResult majority_filter(const std::vector<LabeledPair>& pairs,
                             const std::vector<AnnotationRecord>& annotations) {
  std::unordered_set<std::string> known;
  known.reserve(pairs.size());
  for (const auto& p : pairs) known.insert(p.pair_id);

  std::unordered_map<std::string, std::array<std::int64_t, 4>> votes;
  FilterResult result;
  for (const auto& a : annotations) {
    if (!known.count(a.pair_id)) {
      ++result.unknown_pair_warnings;
      continue;
    }
    ++votes[a.pair_id][static_cast<std::size_t>(a.label)];
  }

  for (const auto& p : pairs) {
    const auto it = votes.find(p.pair_id);
    if (it == votes.end()) {
      ++result.dropped_no_annotations;
      continue;
    }
    const auto& v = it->second;
    ++result.seen_per_class[static_cast<std::size_t>(p.label)];
    const auto own = static_cast<std::size_t>(p.label);
    bool strict_winner = true;
    for (std::size_t c = 0; c < 4; ++c)
      if (c != own && v[c] >= v[own]) strict_winner = false;
    if (!strict_winner) {
      std::int64_t top = 0;
      for (const auto count : v) top = std::max(top, count);
      int at_top = 0;
      for (const auto count : v)
        if (count == top) ++at_top;
      if (at_top > 1 && v[own] == top)
        ++result.dropped_no_majority;
      else
        ++result.dropped_majority_differs;
      continue;
    }
    result.kept.push_back(p);
    ++result.kept_per_class[own];
    ++result.kept_per_genre[p.genre];
  }
  return result;
}

}  // namespace pairmine
