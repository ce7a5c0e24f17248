#include "pairmine/tagger.hpp"

#include <array>
#include <unordered_map>

#include "pairmine/utf8.hpp"

namespace pairmine {

std::string_view to_string(PosTag t) {
  switch (t) {
    case PosTag::NOUN: return "NOUN";
    case PosTag::PRON: return "PRON";
    case PosTag::PROPN: return "PROPN";
    case PosTag::AUX: return "AUX";
    case PosTag::VERB: return "VERB";
    case PosTag::ADJ: return "ADJ";
    case PosTag::ADV: return "ADV";
    case PosTag::DET: return "DET";
    case PosTag::ADP: return "ADP";
    case PosTag::NUM: return "NUM";
    case PosTag::PUNCT: return "PUNCT";
    case PosTag::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> pos_tag_from_string(std::string_view s) {
  static const std::array<PosTag, 12> all = {
      PosTag::NOUN, PosTag::PRON, PosTag::PROPN, PosTag::AUX,
      PosTag::VERB, PosTag::ADJ,  PosTag::ADV,   PosTag::DET,
      PosTag::ADP,  PosTag::NUM,  PosTag::PUNCT, PosTag::OTHER};
  for (PosTag t : all)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

namespace {

const std::unordered_map<std::string, PosTag>& closed_class() {
  static const std::unordered_map<std::string, PosTag> map = [] {
    std::unordered_map<std::string, PosTag> m;
    auto put = [&m](std::initializer_list<const char*> words, PosTag tag) {
      for (const char* w : words) m.emplace(w, tag);
    };
    put({"el", "la", "los", "las", "un", "una", "unos", "unas", "mi", "mis",
         "tu", "tus", "su", "sus", "nuestro", "nuestra", "nuestros", "nuestras",
         "vuestro", "vuestra", "vuestros", "vuestras", "cada", "cualquier",
         "algún", "algun", "alguna", "algunos", "algunas", "ningún", "ningun",
         "ninguna", "otro", "otra", "otros", "otras", "todo", "toda", "todos",
         "todas", "ambos", "ambas", "varios", "varias"},
        PosTag::DET);
    put({"yo", "tú", "él", "ella", "ello", "usted", "ustedes", "nosotros",
         "nosotras", "vosotros", "vosotras", "ellos", "ellas", "me", "te", "se",
         "nos", "os", "le", "les", "lo", "esto", "eso", "aquello", "este",
         "esta", "estos", "estas", "ese", "esa", "esos", "esas", "aquel",
         "aquella", "aquellos", "aquellas", "alguien", "nadie", "quien",
         "quién", "quienes", "cual", "cuál", "algo", "nada"},
        PosTag::PRON);
    put({"soy", "eres", "es", "somos", "sois", "son", "era", "eras", "éramos",
         "erais", "eran", "fui", "fuiste", "fue", "fuimos", "fuisteis",
         "fueron", "seré", "serás", "será", "seremos", "serán", "sería",
         "serías", "seríamos", "serían", "sea", "seas", "seamos", "sean",
         "fuera", "fueras", "fuéramos", "fueran", "fuese", "fuesen", "siendo",
         "sido", "ser", "estoy", "estás", "está", "estamos", "estáis", "están",
         "estaba", "estabas", "estábamos", "estaban", "estuve", "estuviste",
         "estuvo", "estuvimos", "estuvieron", "estaré", "estará", "estarán",
         "estaría", "estarían", "esté", "estés", "estén", "estando", "estado",
         "estar", "he", "has", "ha", "hemos", "habéis", "han", "había",
         "habías", "habíamos", "habían", "hube", "hubo", "hubieron", "habré",
         "habrá", "habrán", "habría", "habrían", "haya", "hayan", "hubiera",
         "hubieran", "hubiese", "hubiesen", "habiendo", "habido", "haber",
         "hay"},
        PosTag::AUX);
    put({"a", "ante", "bajo", "cabe", "con", "contra", "de", "desde",
         "durante", "en", "entre", "hacia", "hasta", "mediante", "para", "por",
         "según", "segun", "sin", "so", "sobre", "tras", "del", "al"},
        PosTag::ADP);
    put({"y", "e", "o", "u", "ni", "pero", "sino", "aunque", "porque", "pues",
         "si", "que", "como", "cuando", "mientras", "donde", "mas"},
        PosTag::OTHER);
    put({"no", "sí", "muy", "más", "menos", "también", "tampoco", "bien",
         "mal", "hoy", "ayer", "mañana", "aquí", "ahí", "allí", "allá",
         "entonces", "luego", "después", "despues", "antes", "siempre",
         "nunca", "jamás", "ahora", "casi", "solo", "sólo", "ya", "aún", "aun",
         "además", "ademas"},
        PosTag::ADV);
    put({"corre", "corren", "come", "comen", "vive", "viven", "dice", "dicen",
         "hace", "hacen", "tiene", "tienen", "puede", "pueden", "debe",
         "deben", "quiere", "quieren", "va", "van", "da", "dan", "ve", "ven",
         "sabe", "saben", "pone", "ponen", "sale", "salen", "viene", "vienen",
         "sigue", "siguen", "parece", "parecen", "existe", "existen",
         "incluye", "incluyen", "permite", "permiten", "requiere",
         "requieren", "contiene", "contienen", "muestra", "muestran",
         "presenta", "presentan", "produce", "producen", "ocurre", "ocurren",
         "surge", "surgen", "crece", "crecen", "busca", "buscan", "deja",
         "dejan", "lleva", "llevan", "llega", "llegan", "queda", "quedan",
         "toma", "toman", "usa", "usan", "crea", "crean"},
        PosTag::VERB);
    return m;
  }();
  return map;
}

bool ends_with(const std::vector<char32_t>& cps, std::u32string_view suffix) {
  if (cps.size() < suffix.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i)
    if (cps[cps.size() - suffix.size() + i] != suffix[i]) return false;
  return true;
}

int letter_stem(const std::vector<char32_t>& cps, std::size_t suffix_len) {
  int letters = 0;
  for (std::size_t i = 0; i + suffix_len < cps.size(); ++i)
    if (utf8::is_alpha(cps[i])) ++letters;
  return letters;
}

bool verb_by_suffix(const std::vector<char32_t>& cps) {
  static const std::u32string_view suffixes[] = {
      U"ieron", U"iendo", U"ando", U"aron", U"aba", U"ado", U"ido",
      U"ía",    U"ar",    U"er",   U"ir",   U"ó",   U"é"};
  for (auto sfx : suffixes)
    if (ends_with(cps, sfx) && letter_stem(cps, sfx.size()) >= 2) return true;
  return false;
}

bool adverb_by_suffix(const std::vector<char32_t>& cps) {
  return ends_with(cps, U"mente") && letter_stem(cps, 5) >= 3;
}

std::string lower_of(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t c : cps) utf8::append(out, utf8::to_lower(c));
  return out;
}

PosTag tag_word(const std::vector<char32_t>& cps, bool sentence_initial) {
  bool any_digit = false;
  bool any_alpha = false;
  bool all_digit = true;
  for (char32_t c : cps) {
    if (utf8::is_digit(c)) {
      any_digit = true;
    } else {
      all_digit = false;
      if (utf8::is_alpha(c)) any_alpha = true;
    }
  }
  if (all_digit && any_digit) return PosTag::NUM;
  if (!any_alpha) return PosTag::PUNCT;

  const auto& closed = closed_class();
  if (auto it = closed.find(lower_of(cps)); it != closed.end()) return it->second;

  if (utf8::is_upper(cps[0])) {
    if (!sentence_initial) return PosTag::PROPN;
    if (adverb_by_suffix(cps)) return PosTag::ADV;
    return PosTag::NOUN;
  }
  if (adverb_by_suffix(cps)) return PosTag::ADV;
  if (verb_by_suffix(cps)) return PosTag::VERB;
  return PosTag::NOUN;
}

}  // namespace

std::vector<TaggedToken> RuleTagger::tag_tokens(std::string_view sentence) const {
  std::vector<TaggedToken> out;
  std::size_t i = 0;
  const std::size_t n = sentence.size();
  bool first_word = true;
  while (i < n) {
    const auto d = utf8::decode(sentence, i);
    if (utf8::is_space(d.cp)) {
      i += static_cast<std::size_t>(d.len);
      continue;
    }
    if (utf8::is_alpha(d.cp) || utf8::is_digit(d.cp)) {
      std::vector<char32_t> cps;
      std::string token;
      std::size_t j = i;
      while (j < n) {
        const auto dj = utf8::decode(sentence, j);
        if (!utf8::is_alpha(dj.cp) && !utf8::is_digit(dj.cp)) break;
        cps.push_back(dj.cp);
        j += static_cast<std::size_t>(dj.len);
      }
      token.assign(sentence.substr(i, j - i));
      out.push_back({std::move(token), tag_word(cps, first_word)});
      first_word = false;
      i = j;
      continue;
    }
    std::string token(sentence.substr(i, static_cast<std::size_t>(d.len)));
    out.push_back({std::move(token), PosTag::PUNCT});
    i += static_cast<std::size_t>(d.len);
  }
  return out;
}

bool is_complete(const std::vector<TaggedToken>& tokens) {
  bool subject = false;
  bool predicate = false;
  for (const auto& t : tokens) {
    if (t.tag == PosTag::NOUN || t.tag == PosTag::PRON || t.tag == PosTag::PROPN)
      subject = true;
    else if (t.tag == PosTag::AUX || t.tag == PosTag::VERB)
      predicate = true;
    if (subject && predicate) return true;
  }
  return subject && predicate;
}

bool is_complete(std::string_view sentence, const Tagger& tagger) {
  return is_complete(tagger.tag_tokens(sentence));
}

}  // namespace pairmine
