#ifndef SENTILEX_AGREEMENT_HPP_
#define SENTILEX_AGREEMENT_HPP_

#include <string>
#include <vector>

#include "sentilex/lexicon.hpp"
#include "sentilex/scorer.hpp"

namespace sentilex {

struct AgreementReport {
    std::vector<std::string> lexicon_names;
    std::vector<std::string> document_ids;
    // matrix[l][d]: polarity of document d under lexicon l.
    std::vector<std::vector<Polarity>> matrix;
    std::vector<int> per_document_percent;
    long long average_hundredths = 0;  // average percent scaled by 100

    // "95.75"-style rendering of the average with 2 decimals.
    std::string average_display() const;
};

// floor(100 * largest same-polarity group / |labels|).
int per_document_agreement(const std::vector<Polarity>& labels);

// Exact rational mean of the per-document percents, half-up to 2
// decimals, returned scaled by 100 (95.75% -> 9575).
long long average_agreement(const std::vector<int>& percents);

std::string format_hundredths(long long hundredths);

// Scores every (lexicon, document) cell and fills the report. Needs at
// least two lexicons with distinct names and one document. The default
// entry point fills cells in parallel; the _serial variant is the
// reference implementation.
AgreementReport build_report(const std::vector<Document>& corpus,
                             const std::vector<Lexicon>& lexicons,
                             std::size_t skip_window = kDefaultSkipWindow);
AgreementReport build_report_serial(const std::vector<Document>& corpus,
                                    const std::vector<Lexicon>& lexicons,
                                    std::size_t skip_window =
                                        kDefaultSkipWindow);

// Report emitters used by the CLI.
std::string render_table(const AgreementReport& report);
std::string render_json(const AgreementReport& report);
std::string render_csv(const AgreementReport& report);

}  // namespace sentilex

#endif  // SENTILEX_AGREEMENT_HPP_
