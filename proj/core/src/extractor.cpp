#include "pairmine/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "pairmine/rng.hpp"
#include "pairmine/utf8.hpp"

namespace pairmine {

using nlohmann::json;

ExternalTags ExternalTags::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tags file: " + path);
  ExternalTags tags;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (utf8::trim(line).empty()) continue;
    const auto fail = [&](const std::string& why) {
      throw std::runtime_error("tags " + path + " line " + std::to_string(lineno) +
                               ": " + why);
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(e.what());
    }
    if (!j.is_object() || !j.contains("doc_id") || !j["doc_id"].is_string() ||
        !j.contains("paragraph_index") || !j["paragraph_index"].is_number_integer() ||
        !j.contains("sentence_index") || !j["sentence_index"].is_number_integer() ||
        !j.contains("tokens") || !j["tokens"].is_array() || !j.contains("tags") ||
        !j["tags"].is_array())
      fail("record needs doc_id, paragraph_index, sentence_index, tokens, tags");
    if (j["tokens"].size() != j["tags"].size())
      fail("tokens and tags differ in length");
    std::vector<TaggedToken> toks;
    for (std::size_t i = 0; i < j["tokens"].size(); ++i) {
      if (!j["tokens"][i].is_string() || !j["tags"][i].is_string())
        fail("tokens and tags must be strings");
      const auto tag = pos_tag_from_string(j["tags"][i].get<std::string>());
      if (!tag) fail("unknown tag \"" + j["tags"][i].get<std::string>() + "\"");
      toks.push_back({j["tokens"][i].get<std::string>(), *tag});
    }
    tags.by_loc_[{j["doc_id"].get<std::string>(), j["paragraph_index"].get<int>(),
                  j["sentence_index"].get<int>()}] = std::move(toks);
  }
  return tags;
}

const std::vector<TaggedToken>* ExternalTags::find(const std::string& doc_id,
                                                   int paragraph, int sentence) const {
  const auto it = by_loc_.find(std::tuple(doc_id, paragraph, sentence));
  return it == by_loc_.end() ? nullptr : &it->second;
}

ExtractionStats& ExtractionStats::operator+=(const ExtractionStats& o) {
  documents += o.documents;
  linked_candidates += o.linked_candidates;
  emitted_linked += o.emitted_linked;
  emitted_neutral += o.emitted_neutral;
  dropped_degenerate += o.dropped_degenerate;
  dropped_premise_incomplete += o.dropped_premise_incomplete;
  dropped_hypothesis_incomplete += o.dropped_hypothesis_incomplete;
  dropped_duplicate_text += o.dropped_duplicate_text;
  neutral_shortfall += o.neutral_shortfall;
  skipped_records += o.skipped_records;
  return *this;
}

namespace {

std::string without_whitespace(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto d = utf8::decode(s, i);
    if (!utf8::is_space(d.cp)) out.append(s.substr(i, static_cast<std::size_t>(d.len)));
    i += static_cast<std::size_t>(d.len);
  }
  return out;
}

// Tags for the part of an externally tagged sentence that remains after the
// matched span is stripped; nullopt when the token stream cannot be aligned
// with the span boundary.
std::optional<std::vector<TaggedToken>> tags_after_span(
    const std::vector<TaggedToken>& tokens, std::string_view sentence,
    std::size_t span_end) {
  const std::string span_chars = without_whitespace(sentence.substr(0, span_end));
  std::string acc;
  std::size_t consumed = 0;
  while (consumed < tokens.size() && acc.size() < span_chars.size()) {
    acc += without_whitespace(tokens[consumed].token);
    ++consumed;
  }
  if (acc != span_chars) return std::nullopt;
  return std::vector<TaggedToken>(tokens.begin() + static_cast<std::ptrdiff_t>(consumed),
                                  tokens.end());
}

struct DocSentences {
  // paragraph -> sentences in order
  std::vector<std::vector<std::string>> text;
  bool complete(const Document& doc, int p, int s, const ExtractorConfig& cfg) const {
    if (cfg.external_tags) {
      if (const auto* toks = cfg.external_tags->find(doc.doc_id, p, s))
        return is_complete(*toks);
    }
    return is_complete(text[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)],
                       *cfg.tagger);
  }
};

}  // namespace

DocumentPairs extract_document(const Document& doc, const Segmenter& segmenter,
                               const ExtractorConfig& config) {
  DocumentPairs out;
  out.stats.documents = 1;

  DocSentences sent;
  sent.text.reserve(doc.paragraphs.size());
  for (const auto& para : doc.paragraphs) sent.text.push_back(segmenter.split(para));

  std::set<SentenceLoc> used_premises;
  std::map<SentenceLoc, std::string> used_hypotheses;  // loc -> pair hypothesis text

  const auto emit = [&](SentenceLoc ploc, std::string premise, SentenceLoc hloc,
                        std::string hypothesis, Label label,
                        std::optional<std::string> phrase,
                        std::optional<NeutralStrategy> strategy) {
    LabeledPair pair;
    pair.pair_id = make_pair_id(doc.corpus_id, doc.doc_id, ploc, hloc, label);
    pair.premise = std::move(premise);
    pair.hypothesis = std::move(hypothesis);
    pair.label = label;
    pair.corpus_id = doc.corpus_id;
    pair.genre = doc.genre;
    pair.doc_id = doc.doc_id;
    pair.premise_loc = ploc;
    pair.hypothesis_loc = hloc;
    pair.matched_phrase = std::move(phrase);
    pair.neutral_strategy = strategy;
    out.pairs.push_back(std::move(pair));
  };

  for (int p = 0; p < static_cast<int>(sent.text.size()); ++p) {
    const auto& sentences = sent.text[static_cast<std::size_t>(p)];
    for (int i = 1; i < static_cast<int>(sentences.size()); ++i) {
      const auto& raw = sentences[static_cast<std::size_t>(i)];
      const auto match = config.lexicon->match_sentence_start(raw);
      if (!match) continue;
      ++out.stats.linked_candidates;
      const auto stripped = LinkingLexicon::strip_match(raw, *match);
      if (!stripped) {
        ++out.stats.dropped_degenerate;
        continue;
      }
      const SentenceLoc ploc{p, i - 1};
      const SentenceLoc hloc{p, i};
      if (!sent.complete(doc, p, i - 1, config)) {
        ++out.stats.dropped_premise_incomplete;
        continue;
      }
      bool hyp_ok = false;
      if (config.external_tags) {
        if (const auto* toks = config.external_tags->find(doc.doc_id, p, i)) {
          if (const auto rest = tags_after_span(*toks, raw, match->span_end))
            hyp_ok = is_complete(*rest);
          else
            hyp_ok = is_complete(*stripped, *config.tagger);
        } else {
          hyp_ok = is_complete(*stripped, *config.tagger);
        }
      } else {
        hyp_ok = is_complete(*stripped, *config.tagger);
      }
      if (!hyp_ok) {
        ++out.stats.dropped_hypothesis_incomplete;
        continue;
      }
      const auto& premise = sentences[static_cast<std::size_t>(i - 1)];
      if (premise == *stripped) {
        ++out.stats.dropped_duplicate_text;
        continue;
      }
      emit(ploc, premise, hloc, *stripped, match->label, match->phrase, std::nullopt);
      ++out.stats.emitted_linked;
      used_premises.insert(ploc);
      used_hypotheses[hloc] = *stripped;
    }
  }

  const auto target = static_cast<std::int64_t>(
      std::llround(config.neutral_ratio * static_cast<double>(out.stats.emitted_linked)));
  if (target > 0 && sent.text.size() > 1) {
    std::mt19937_64 rng(rng::hash64(config.seed, {doc.doc_id}));

    // Locations usable in a fresh slot: complete and untouched so far.
    std::vector<SentenceLoc> all_locs;
    std::map<SentenceLoc, bool> complete_cache;
    for (int p = 0; p < static_cast<int>(sent.text.size()); ++p)
      for (int s = 0; s < static_cast<int>(sent.text[static_cast<std::size_t>(p)].size());
           ++s) {
        const SentenceLoc loc{p, s};
        all_locs.push_back(loc);
        complete_cache[loc] = sent.complete(doc, p, s, config);
      }

    std::set<std::pair<SentenceLoc, SentenceLoc>> emitted_locs;
    const auto fresh = [&](SentenceLoc loc) {
      return complete_cache[loc] && !used_premises.count(loc) &&
             !used_hypotheses.count(loc);
    };
    const auto text_at = [&](SentenceLoc loc) -> const std::string& {
      return sent.text[static_cast<std::size_t>(loc.paragraph)]
                      [static_cast<std::size_t>(loc.sentence)];
    };

    std::int64_t emitted = 0;
    int strategy_idx = 0;
    int consecutive_empty = 0;
    while (emitted < target && consecutive_empty < 4) {
      const NeutralStrategy strategy = kAllStrategies[static_cast<std::size_t>(
          strategy_idx % 4)];
      ++strategy_idx;

      std::vector<SentenceLoc> premise_pool;
      std::vector<SentenceLoc> hypothesis_pool;
      const bool premise_used = strategy == NeutralStrategy::first_random ||
                                strategy == NeutralStrategy::both_entailed;
      const bool hypothesis_used = strategy == NeutralStrategy::second_random ||
                                   strategy == NeutralStrategy::both_entailed;
      if (premise_used) {
        premise_pool.assign(used_premises.begin(), used_premises.end());
      } else {
        for (SentenceLoc loc : all_locs)
          if (fresh(loc)) premise_pool.push_back(loc);
      }
      if (hypothesis_used) {
        for (const auto& [loc, text] : used_hypotheses) hypothesis_pool.push_back(loc);
      } else {
        for (SentenceLoc loc : all_locs)
          if (fresh(loc)) hypothesis_pool.push_back(loc);
      }

      std::vector<std::pair<SentenceLoc, SentenceLoc>> pool;
      for (SentenceLoc ploc : premise_pool)
        for (SentenceLoc hloc : hypothesis_pool) {
          if (ploc.paragraph == hloc.paragraph) continue;
          if (emitted_locs.count({ploc, hloc})) continue;
          pool.emplace_back(ploc, hloc);
        }
      if (pool.empty()) {
        ++consecutive_empty;
        continue;
      }
      consecutive_empty = 0;
      const auto& [ploc, hloc] = pool[static_cast<std::size_t>(
          rng::bounded(rng, pool.size()))];

      const std::string premise = text_at(ploc);
      const auto hit = used_hypotheses.find(hloc);
      const std::string hypothesis = hit != used_hypotheses.end() ? hit->second
                                                                  : text_at(hloc);
      if (premise == hypothesis) {
        // location pair is burned either way so the draw loop terminates
        emitted_locs.insert({ploc, hloc});
        continue;
      }
      emit(ploc, premise, hloc, hypothesis, Label::neutral, std::nullopt, strategy);
      ++emitted;
      emitted_locs.insert({ploc, hloc});
      used_premises.insert(ploc);
      if (hit == used_hypotheses.end()) used_hypotheses[hloc] = hypothesis;
    }
    out.stats.emitted_neutral = emitted;
    if (emitted < target) out.stats.neutral_shortfall = target - emitted;
  } else if (target > 0) {
    out.stats.neutral_shortfall = target;
  }

  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const LabeledPair& a, const LabeledPair& b) {
              return std::tuple(a.hypothesis_loc, a.premise_loc, a.label) <
                     std::tuple(b.hypothesis_loc, b.premise_loc, b.label);
            });
  return out;
}

CorpusPairs extract_corpus(const std::vector<Document>& documents,
                           const Segmenter& segmenter, const ExtractorConfig& config,
                           int threads) {
  std::vector<const Document*> ordered;
  ordered.reserve(documents.size());
  for (const auto& d : documents) ordered.push_back(&d);
  std::sort(ordered.begin(), ordered.end(),
            [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });

  std::vector<DocumentPairs> slots(ordered.size());
  if (threads < 1) threads = 1;
  const auto worker = [&](int t) {
    for (std::size_t i = static_cast<std::size_t>(t); i < ordered.size();
         i += static_cast<std::size_t>(threads))
      slots[i] = extract_document(*ordered[i], segmenter, config);
  };
  if (threads == 1 || ordered.size() < 2) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  CorpusPairs out;
  for (auto& slot : slots) {
    out.stats += slot.stats;
    for (auto& p : slot.pairs) out.pairs.push_back(std::move(p));
  }
  return out;
}

}  // namespace pairmine
