#include "pairmine/lexicon.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "pairmine/utf8.hpp"

namespace pairmine {
namespace {

using nlohmann::json;

// Normalized view of a sentence plus, for every normalized byte, the end
// offset of the source bytes it came from.
struct NormalizedView {
  std::string text;
  std::vector<std::size_t> src_end;
};

NormalizedView normalized_view(std::string_view s) {
  NormalizedView v;
  std::size_t i = 0;
  const std::size_t n = s.size();
  bool pending_space = false;
  while (i < n) {
    const auto d = utf8::decode(s, i);
    const std::size_t end = i + static_cast<std::size_t>(d.len);
    if (utf8::is_space(d.cp)) {
      if (!v.text.empty()) pending_space = true;
      i = end;
      continue;
    }
    if (pending_space) {
      v.text.push_back(' ');
      v.src_end.push_back(i);
      pending_space = false;
    }
    const std::size_t before = v.text.size();
    utf8::append(v.text, utf8::strip_accent(utf8::to_lower(d.cp)));
    for (std::size_t b = before; b < v.text.size(); ++b) v.src_end.push_back(end);
    i = end;
  }
  return v;
}

}  // namespace

std::string normalize_phrase(std::string_view text) {
  return normalized_view(text).text;
}

void LinkingLexicon::add(Label label, std::string phrase) {
  phrase = normalize_phrase(phrase);
  if (phrase.empty()) throw std::runtime_error("empty linking phrase");
  for (Label l : {Label::contrasting, Label::entailment, Label::reasoning})
    for (const auto& p : phrases(l))
      if (p == phrase)
        throw std::runtime_error("duplicate linking phrase: " + phrase);
  switch (label) {
    case Label::contrasting: contrasting_.push_back(std::move(phrase)); break;
    case Label::entailment: entailment_.push_back(std::move(phrase)); break;
    case Label::reasoning: reasoning_.push_back(std::move(phrase)); break;
    case Label::neutral:
      throw std::runtime_error("neutral admits no linking phrases");
  }
}

const std::vector<std::string>& LinkingLexicon::phrases(Label label) const {
  switch (label) {
    case Label::contrasting: return contrasting_;
    case Label::entailment: return entailment_;
    case Label::reasoning: return reasoning_;
    case Label::neutral: return empty_;
  }
  return empty_;
}

std::size_t LinkingLexicon::size() const {
  return contrasting_.size() + entailment_.size() + reasoning_.size();
}

LinkingLexicon LinkingLexicon::builtin() {
  LinkingLexicon lx;
  for (const char* p : {"sin embargo", "no obstante", "por otra parte", "por otro lado",
                        "en cambio", "por el contrario", "al contrario", "en contraste"})
    lx.add(Label::contrasting, p);
  for (const char* p :
       {"en concreto", "concretamente", "especificamente", "precisamente",
        "en particular", "particularmente", "en especial", "es decir",
        "en otras palabras", "dicho de otra manera", "dicho de otro modo",
        "en otros terminos", "de hecho", "esto es", "o sea", "mejor dicho",
        "sobre todo", "justamente", "en resumidas cuentas", "en resumen", "en breve",
        "por ejemplo", "en sintesis", "en efecto", "en pocas palabras",
        "en una palabra", "recapitulando", "brevemente",
        "recogiendo lo mas importante", "como se ha dicho", "para ilustrar"})
    lx.add(Label::entailment, p);
  for (const char* p : {"por lo tanto", "por tanto", "en consecuencia",
                        "por consiguiente", "por ende", "por esa razon", "por eso",
                        "de ahi que", "como resultado", "como consecuencia"})
    lx.add(Label::reasoning, p);
  return lx;
}

LinkingLexicon LinkingLexicon::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  LinkingLexicon lx;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (utf8::trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error("lexicon " + path + " line " + std::to_string(lineno) +
                               ": " + e.what());
    }
    if (!j.is_object() || !j.contains("class") || !j["class"].is_string() ||
        !j.contains("phrase") || !j["phrase"].is_string())
      throw std::runtime_error("lexicon " + path + " line " + std::to_string(lineno) +
                               ": record needs class and phrase");
    const auto label = label_from_string(j["class"].get<std::string>());
    if (!label || *label == Label::neutral)
      throw std::runtime_error("lexicon " + path + " line " + std::to_string(lineno) +
                               ": invalid class \"" + j["class"].get<std::string>() + "\"");
    lx.add(*label, j["phrase"].get<std::string>());
  }
  if (lx.size() == 0)
    throw std::runtime_error("lexicon " + path + ": no phrases");
  return lx;
}

std::optional<PhraseMatch> LinkingLexicon::match_sentence_start(
    std::string_view sentence) const {
  const NormalizedView view = normalized_view(sentence);
  const std::string_view norm = view.text;
  const std::string* best = nullptr;
  Label best_label = Label::contrasting;
  for (Label l : {Label::contrasting, Label::entailment, Label::reasoning}) {
    for (const auto& p : phrases(l)) {
      if (best && p.size() <= best->size()) continue;
      if (norm.size() < p.size() || norm.substr(0, p.size()) != p) continue;
      if (norm.size() > p.size() && norm[p.size()] != ',' && norm[p.size()] != ' ')
        continue;
      best = &p;
      best_label = l;
    }
  }
  if (!best) return std::nullopt;

  PhraseMatch m;
  m.label = best_label;
  m.phrase = *best;
  m.span_begin = 0;
  std::size_t end = view.src_end[best->size() - 1];

  // Extend over whitespace, one optional comma, and trailing whitespace.
  const std::size_t n = sentence.size();
  std::size_t k = end;
  while (k < n) {
    const auto d = utf8::decode(sentence, k);
    if (!utf8::is_space(d.cp)) break;
    k += static_cast<std::size_t>(d.len);
  }
  if (k < n) {
    const auto d = utf8::decode(sentence, k);
    if (d.cp == U',') {
      k += static_cast<std::size_t>(d.len);
      while (k < n) {
        const auto ds = utf8::decode(sentence, k);
        if (!utf8::is_space(ds.cp)) break;
        k += static_cast<std::size_t>(ds.len);
      }
      end = k;
    } else {
      end = k;
    }
  } else {
    end = n;
  }
  m.span_end = end;
  return m;
}

std::optional<std::string> LinkingLexicon::strip_match(std::string_view sentence,
                                                       const PhraseMatch& match) {
  std::string_view rest = sentence.substr(match.span_end);
  if (rest.empty()) return std::nullopt;
  const auto d = utf8::decode(rest, 0);
  std::string out;
  utf8::append(out, utf8::to_upper(d.cp));
  out.append(rest.substr(static_cast<std::size_t>(d.len)));
  return out;
}

}  // namespace pairmine
