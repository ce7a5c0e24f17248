#include <string>
#include <vector>

#include "doctest.h"
#include "pairmine/tagger.hpp"

using namespace pairmine;

namespace {

PosTag tag_of(const std::vector<TaggedToken>& toks, const std::string& word) {
  for (const auto& t : toks)
    if (t.token == word) return t.tag;
  FAIL("token not found: ", word);
  return PosTag::OTHER;
}

}  // namespace

TEST_CASE("closed-class lookups") {
  RuleTagger tagger;
  const auto t1 = tagger.tag_tokens("él corre");
  REQUIRE(t1.size() == 2);
  CHECK(t1[0].tag == PosTag::PRON);
  CHECK(t1[1].tag == PosTag::VERB);

  const auto t2 = tagger.tag_tokens("de");
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].tag == PosTag::ADP);

  const auto t3 = tagger.tag_tokens("el perro");
  CHECK(t3[0].tag == PosTag::DET);  // "el" without accent is the article
  CHECK(t3[1].tag == PosTag::NOUN);
}

TEST_CASE("sentence-initial capitalized words are not proper nouns") {
  RuleTagger tagger;
  const auto toks = tagger.tag_tokens("María cantaba");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].tag == PosTag::NOUN);
  CHECK(toks[1].tag == PosTag::VERB);
}

TEST_CASE("capitalized words off sentence start are proper nouns") {
  RuleTagger tagger;
  const auto toks = tagger.tag_tokens("Vi a Madrid desde lejos.");
  CHECK(tag_of(toks, "Madrid") == PosTag::PROPN);
  CHECK(tag_of(toks, "a") == PosTag::ADP);
}

TEST_CASE("verb suffix heuristics") {
  RuleTagger tagger;
  CHECK(tag_of(tagger.tag_tokens("ya cantaron"), "cantaron") == PosTag::VERB);
  CHECK(tag_of(tagger.tag_tokens("ya subieron"), "subieron") == PosTag::VERB);
  CHECK(tag_of(tagger.tag_tokens("sigue comiendo"), "comiendo") == PosTag::VERB);
  CHECK(tag_of(tagger.tag_tokens("ha hablado"), "hablado") == PosTag::VERB);
  CHECK(tag_of(tagger.tag_tokens("ella vivía"), "vivía") == PosTag::VERB);
  CHECK(tag_of(tagger.tag_tokens("el coche frenó"), "frenó") == PosTag::VERB);
  CHECK(tag_of(tagger.tag_tokens("quiere cantar"), "cantar") == PosTag::VERB);
  // suffix needs a stem of at least two letters
  CHECK(tag_of(tagger.tag_tokens("un ido"), "ido") == PosTag::NOUN);
}

TEST_CASE("mente adverbs, digits, punctuation") {
  RuleTagger tagger;
  CHECK(tag_of(tagger.tag_tokens("pasó lentamente"), "lentamente") == PosTag::ADV);
  const auto toks = tagger.tag_tokens("El perro corre.");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0].tag == PosTag::DET);
  CHECK(toks[1].tag == PosTag::NOUN);
  CHECK(toks[2].tag == PosTag::VERB);
  CHECK(toks[3].tag == PosTag::PUNCT);

  const auto nums = tagger.tag_tokens("Pesa 3,14 kilos");
  CHECK(tag_of(nums, "3") == PosTag::NUM);
  CHECK(tag_of(nums, "14") == PosTag::NUM);
  CHECK(tag_of(nums, ",") == PosTag::PUNCT);
}

TEST_CASE("ser estar haber forms are auxiliaries") {
  RuleTagger tagger;
  CHECK(tag_of(tagger.tag_tokens("el cielo es azul"), "es") == PosTag::AUX);
  CHECK(tag_of(tagger.tag_tokens("la casa está lejos"), "está") == PosTag::AUX);
  CHECK(tag_of(tagger.tag_tokens("lo ha dicho"), "ha") == PosTag::AUX);
}

TEST_CASE("completeness filter") {
  RuleTagger tagger;
  CHECK(is_complete("El perro corre.", tagger));
  CHECK(is_complete("Siglo 21 sobrevivió a ese intento", tagger));
  CHECK(is_complete("El cielo es azul", tagger));
  CHECK(!is_complete("Rápidamente y sin más.", tagger));
  CHECK(!is_complete("El perro grande", tagger));  // no predicate
  CHECK(!is_complete("¡!", tagger));

  // the external-tag overload applies the same rule to supplied tags
  CHECK(is_complete({{"zzz", PosTag::NOUN}, {"qqq", PosTag::VERB}}));
  CHECK(is_complete({{"yo", PosTag::PRON}, {"soy", PosTag::AUX}}));
  CHECK(!is_complete({{"zzz", PosTag::NOUN}, {"qqq", PosTag::ADJ}}));
  CHECK(!is_complete({{"qqq", PosTag::VERB}}));
}

TEST_CASE("token concatenation reproduces the sentence without whitespace") {
  RuleTagger tagger;
  const std::string sentence = "¿Vio a J. Pérez, el núm. 1, corriendo rápidamente?";
  std::string glued;
  for (const auto& t : tagger.tag_tokens(sentence)) glued += t.token;
  std::string expected;
  for (char c : sentence)
    if (c != ' ') expected += c;
  CHECK(glued == expected);
}

TEST_CASE("tag names round-trip") {
  for (PosTag t : {PosTag::NOUN, PosTag::PRON, PosTag::PROPN, PosTag::AUX,
                   PosTag::VERB, PosTag::ADJ, PosTag::ADV, PosTag::DET, PosTag::ADP,
                   PosTag::NUM, PosTag::PUNCT, PosTag::OTHER}) {
    const auto rt = pos_tag_from_string(to_string(t));
    REQUIRE(rt.has_value());
    CHECK(*rt == t);
  }
  CHECK(!pos_tag_from_string("VERBO").has_value());
}
