#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "pairmine/extractor.hpp"
#include "pairmine/lexicon.hpp"
#include "pairmine/linear_model.hpp"
#include "pairmine/segmenter.hpp"
#include "pairmine/tagger.hpp"
#include "pairmine/types.hpp"
#include "pairmine/vocab.hpp"

using namespace pairmine;

namespace {

const char kParagraph[] =
    "Formado en el diario El País de Madrid, fundó y dirigió el periódico "
    "Siglo 21 de Guadalajara desde su fundación en 1991 hasta el 30 de abril "
    "de 1997, día en el que renunció, para crear el diario Público. Un día "
    "antes de que Zepeda anunció el primer número de Público, hubo una "
    "operación que buscó cerrar a Siglo 21, mediante la salida masiva de sus "
    "empleados. Sin embargo, Siglo 21 sobrevivió a ese intento de "
    "desaparecerlo y, finalmente, Zepeda se vio obligado a vender 66.66 por "
    "ciento de Público a los propietarios de Grupo Multimedios, (que "
    "posteriormente renombraron a Público como Milenio Jalisco, denominación "
    "que mantiene hasta la fecha). En 1999 deja Público para asumir la "
    "subdirección de El Universal en la Ciudad de México, cargo que "
    "desempeñaría hasta 2001.";

Document synthetic_document(int paragraphs) {
  static const char* nouns[] = {"equipo", "grupo", "museo", "consejo", "sector"};
  static const char* verbs[] = {"avanzó", "trabajó", "creció", "continuó", "empezó"};
  static const char* phrases[] = {"Sin embargo", "Es decir", "Por lo tanto"};
  Document doc;
  doc.doc_id = "bench";
  doc.corpus_id = "c__bench";
  doc.genre = Genre::articles;
  int serial = 0;
  for (int p = 0; p < paragraphs; ++p) {
    std::string para = std::string("El ") + nouns[p % 5] + " " +
                       std::to_string(++serial) + " " + verbs[p % 5] + ".";
    for (int s = 0; s < 3; ++s) {
      para += std::string(" ") + phrases[(p + s) % 3] + ", el " +
              nouns[(p + s + 1) % 5] + " " + std::to_string(++serial) + " " +
              verbs[(p + s + 2) % 5] + ".";
    }
    doc.paragraphs.push_back(para);
  }
  return doc;
}

std::vector<LabeledPair> synthetic_pairs(int n) {
  std::vector<LabeledPair> pairs;
  for (int i = 0; i < n; ++i) {
    LabeledPair p;
    p.pair_id = "b" + std::to_string(i);
    p.premise = "el dato " + std::to_string(i % 40) + " salió y el cuadro " +
                std::to_string(i % 17) + " quedó listo";
    p.hypothesis = "la serie " + std::to_string(i % 23) + " siguió su curso " +
                   std::to_string(i % 7);
    p.label = kAllLabels[i % 4];
    p.corpus_id = "c__bench";
    p.genre = Genre::articles;
    p.doc_id = "bench";
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void BM_SegmentParagraph(benchmark::State& state) {
  const Segmenter segmenter;
  for (auto _ : state) {
    auto sentences = segmenter.split(kParagraph);
    benchmark::DoNotOptimize(sentences);
  }
}
BENCHMARK(BM_SegmentParagraph);

void BM_PhraseMatch(benchmark::State& state) {
  const LinkingLexicon lexicon = LinkingLexicon::builtin();
  const std::string hit = "Sin embargo, Siglo 21 sobrevivió a ese intento.";
  const std::string miss = "El equipo avanzó durante la primera mitad del año.";
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexicon.match_sentence_start(hit));
    benchmark::DoNotOptimize(lexicon.match_sentence_start(miss));
  }
}
BENCHMARK(BM_PhraseMatch);

void BM_TagSentence(benchmark::State& state) {
  const RuleTagger tagger;
  const std::string sentence =
      "Un día antes de que Zepeda anunció el primer número de Público, hubo "
      "una operación que buscó cerrar a Siglo 21.";
  for (auto _ : state) {
    auto tokens = tagger.tag_tokens(sentence);
    benchmark::DoNotOptimize(tokens);
  }
}
BENCHMARK(BM_TagSentence);

void BM_ExtractDocument(benchmark::State& state) {
  const Document doc = synthetic_document(static_cast<int>(state.range(0)));
  const Segmenter segmenter;
  const LinkingLexicon lexicon = LinkingLexicon::builtin();
  const RuleTagger tagger;
  ExtractorConfig config;
  config.seed = 7;
  config.lexicon = &lexicon;
  config.tagger = &tagger;
  for (auto _ : state) {
    auto result = extract_document(doc, segmenter, config);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ExtractDocument)->Arg(4)->Arg(16);

void BM_Featurize(benchmark::State& state) {
  const auto pairs = synthetic_pairs(512);
  const Vocabulary vocab = Vocabulary::build(pairs, VocabConfig{});
  std::size_t i = 0;
  for (auto _ : state) {
    auto x = featurize(pairs[i++ % pairs.size()], vocab, false);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Featurize);

void BM_Train(benchmark::State& state) {
  const auto pairs = synthetic_pairs(256);
  const Vocabulary vocab = Vocabulary::build(pairs, VocabConfig{});
  std::vector<SparseVector> xs;
  std::vector<Label> ys;
  for (const auto& p : pairs) {
    xs.push_back(featurize(p, vocab, false));
    ys.push_back(p.label);
  }
  TrainConfig config;
  config.epochs = static_cast<int>(state.range(0));
  config.seed = 7;
  for (auto _ : state) {
    auto result = train(xs, ys, 2 * vocab.size(), false, config);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Train)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
