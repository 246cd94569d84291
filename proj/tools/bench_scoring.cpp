// Benchmark: serial reference vs OpenMP corpus scoring and agreement
// matrix fill on a synthetic corpus. Also cross-checks that both paths
// produce identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "sentilex/agreement.hpp"
#include "sentilex/scorer.hpp"

using namespace sentilex;

namespace {

Lexicon synthetic_lexicon(const std::string& name, std::mt19937& rng) {
    Lexicon lex(name, "xx", LexiconKind::Categorical);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 400; ++i) {
        LexiconEntry e;
        Term t;
        t.tokens = {"w" + std::to_string(i)};
        e.term = t;
        e.polarity = coin(rng) ? Polarity::Positive : Polarity::Negative;
        lex.add(std::move(e));
    }
    return lex;
}

std::vector<Document> synthetic_corpus(std::size_t docs, std::size_t words,
                                       std::mt19937& rng) {
    std::uniform_int_distribution<int> word(0, 799);
    std::vector<Document> corpus;
    for (std::size_t d = 0; d < docs; ++d) {
        std::ostringstream os;
        for (std::size_t w = 0; w < words; ++w)
            os << "w" << word(rng) << ' ';
        corpus.emplace_back("doc" + std::to_string(d), os.str());
    }
    return corpus;
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t docs = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
    std::size_t words = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 300;

    std::mt19937 rng(12345);
    Lexicon lex = synthetic_lexicon("bench", rng);
    auto corpus = synthetic_corpus(docs, words, rng);

    std::vector<ScoreResult> serial, parallel;
    double t_serial = time_ms([&] { serial = score_corpus_serial(corpus, lex); });
    double t_parallel = time_ms([&] { parallel = score_corpus(corpus, lex); });

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
        equal = serial[i].polarity == parallel[i].polarity &&
                serial[i].valence_sum == parallel[i].valence_sum &&
                serial[i].matches.size() == parallel[i].matches.size();

    std::vector<Lexicon> lexicons;
    std::mt19937 rng2(999);
    lexicons.push_back(synthetic_lexicon("a", rng2));
    lexicons.push_back(synthetic_lexicon("b", rng2));
    lexicons.push_back(synthetic_lexicon("c", rng2));
    AgreementReport rep_serial, rep_parallel;
    double t_rep_serial =
        time_ms([&] { rep_serial = build_report_serial(corpus, lexicons); });
    double t_rep_parallel =
        time_ms([&] { rep_parallel = build_report(corpus, lexicons); });
    bool rep_equal = rep_serial.matrix == rep_parallel.matrix &&
                     rep_serial.average_hundredths ==
                         rep_parallel.average_hundredths;

    std::cout << "corpus: " << docs << " docs x " << words << " words\n"
              << "score_corpus   serial " << t_serial << " ms, parallel "
              << t_parallel << " ms, speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x\n"
              << "build_report   serial " << t_rep_serial << " ms, parallel "
              << t_rep_parallel << " ms, speedup "
              << (t_rep_parallel > 0 ? t_rep_serial / t_rep_parallel : 0)
              << "x\n"
              << "results identical: " << (equal && rep_equal ? "yes" : "NO")
              << "\n";
    return equal && rep_equal ? 0 : 1;
}
