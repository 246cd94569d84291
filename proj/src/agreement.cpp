#include "sentilex/agreement.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sentilex/error.hpp"

namespace sentilex {

int per_document_agreement(const std::vector<Polarity>& labels) {
    if (labels.empty())
        throw error("per_document_agreement: empty label list");
    std::array<std::size_t, 3> counts{};
    for (Polarity p : labels) counts[static_cast<std::size_t>(p)]++;
    std::size_t largest = *std::max_element(counts.begin(), counts.end());
    return static_cast<int>(100 * largest / labels.size());
}

long long average_agreement(const std::vector<int>& percents) {
    if (percents.empty()) throw error("average_agreement: empty list");
    long long sum = 0;
    for (int p : percents) sum += p;
    // Exact mean in hundredths of a percent, half-up.
    const long long numer = sum * 10000;
    const long long denom = static_cast<long long>(percents.size()) * 100;
    return (2 * numer + denom) / (2 * denom);
}

std::string format_hundredths(long long hundredths) {
    std::ostringstream os;
    os << hundredths / 100 << '.';
    long long frac = hundredths % 100;
    os << frac / 10 << frac % 10;
    return os.str();
}

std::string AgreementReport::average_display() const {
    return format_hundredths(average_hundredths);
}

namespace {

void validate_inputs(const std::vector<Document>& corpus,
                     const std::vector<Lexicon>& lexicons) {
    if (lexicons.size() < 2) throw error("need at least two lexicons");
    if (corpus.empty()) throw error("empty corpus");
    std::set<std::string> names;
    for (const auto& lex : lexicons)
        if (!names.insert(lex.name()).second)
            throw error("duplicate lexicon name '" + lex.name() + "'");
}

AgreementReport finish_report(const std::vector<Document>& corpus,
                              const std::vector<Lexicon>& lexicons,
                              AgreementReport report) {
    for (const auto& lex : lexicons) report.lexicon_names.push_back(lex.name());
    for (const auto& [id, text] : corpus) report.document_ids.push_back(id);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        std::vector<Polarity> column;
        for (std::size_t l = 0; l < lexicons.size(); ++l)
            column.push_back(report.matrix[l][d]);
        report.per_document_percent.push_back(per_document_agreement(column));
    }
    report.average_hundredths = average_agreement(report.per_document_percent);
    return report;
}

}  // namespace

AgreementReport build_report_serial(const std::vector<Document>& corpus,
                                    const std::vector<Lexicon>& lexicons,
                                    std::size_t skip_window) {
    validate_inputs(corpus, lexicons);
    AgreementReport report;
    report.matrix.assign(lexicons.size(),
                         std::vector<Polarity>(corpus.size(),
                                               Polarity::Neutral));
    for (std::size_t l = 0; l < lexicons.size(); ++l) {
        auto results = score_corpus_serial(corpus, lexicons[l], skip_window);
        for (std::size_t d = 0; d < corpus.size(); ++d)
            report.matrix[l][d] = results[d].polarity;
    }
    return finish_report(corpus, lexicons, std::move(report));
}

AgreementReport build_report(const std::vector<Document>& corpus,
                             const std::vector<Lexicon>& lexicons,
                             std::size_t skip_window) {
    validate_inputs(corpus, lexicons);
    AgreementReport report;
    report.matrix.assign(lexicons.size(),
                         std::vector<Polarity>(corpus.size(),
                                               Polarity::Neutral));
    const std::size_t cells = lexicons.size() * corpus.size();
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < cells; ++c) {
        const std::size_t l = c / corpus.size();
        const std::size_t d = c % corpus.size();
        try {
            report.matrix[l][d] =
                score_document(corpus[d].second, corpus[d].first, lexicons[l],
                               skip_window)
                    .polarity;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return finish_report(corpus, lexicons, std::move(report));
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) out.push_back(' ');
    return out;
}

}  // namespace

std::string render_table(const AgreementReport& report) {
    const auto& docs = report.document_ids;
    bool any_neutral = false;
    for (const auto& row : report.matrix)
        for (Polarity p : row)
            if (p == Polarity::Neutral) any_neutral = true;

    std::vector<std::string> row_labels = {"Positive", "Negative"};
    std::vector<Polarity> row_polarity = {Polarity::Positive,
                                          Polarity::Negative};
    if (any_neutral) {
        row_labels.push_back("Neutral");
        row_polarity.push_back(Polarity::Neutral);
    }

    std::size_t name_w = std::string("Sentiment Lexica").size();
    for (const auto& n : report.lexicon_names) name_w = std::max(name_w, n.size());
    std::size_t label_w = std::string("Corpus ID/Polarity").size();
    std::vector<std::size_t> col_w(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d)
        col_w[d] = std::max<std::size_t>(3, docs[d].size());

    std::ostringstream os;
    os << pad("Sentiment Lexica", name_w + 2)
       << pad("Corpus ID/Polarity", label_w + 2);
    for (std::size_t d = 0; d < docs.size(); ++d)
        os << pad(docs[d], col_w[d] + 2);
    os << "\n";

    for (std::size_t l = 0; l < report.lexicon_names.size(); ++l) {
        for (std::size_t r = 0; r < row_labels.size(); ++r) {
            os << pad(r == 0 ? report.lexicon_names[l] : "", name_w + 2)
               << pad(row_labels[r], label_w + 2);
            for (std::size_t d = 0; d < docs.size(); ++d)
                os << pad(report.matrix[l][d] == row_polarity[r] ? "Yes" : "No",
                          col_w[d] + 2);
            os << "\n";
        }
    }

    const std::string percent_label =
        "Percentage polarity agreement per corpus (%)";
    os << pad(percent_label,
              std::max(name_w + label_w + 4, percent_label.size() + 2));
    for (std::size_t d = 0; d < docs.size(); ++d)
        os << pad(std::to_string(report.per_document_percent[d]), col_w[d] + 2);
    os << "\n";
    os << "Average polarity agreement (%): " << report.average_display()
       << "\n";
    return os.str();
}

std::string render_json(const AgreementReport& report) {
    nlohmann::ordered_json j;
    j["lexicons"] = report.lexicon_names;
    j["documents"] = report.document_ids;
    auto matrix = nlohmann::ordered_json::array();
    for (const auto& row : report.matrix) {
        auto jrow = nlohmann::ordered_json::array();
        for (Polarity p : row) jrow.push_back(to_string(p));
        matrix.push_back(std::move(jrow));
    }
    j["matrix"] = std::move(matrix);
    j["per_document_percent"] = report.per_document_percent;
    j["average_percent"] = report.average_display();
    return j.dump(2) + "\n";
}

std::string render_csv(const AgreementReport& report) {
    std::ostringstream os;
    os << "lexicon";
    for (const auto& d : report.document_ids) os << ',' << d;
    os << "\n";
    for (std::size_t l = 0; l < report.lexicon_names.size(); ++l) {
        os << report.lexicon_names[l];
        for (Polarity p : report.matrix[l]) os << ',' << to_string(p);
        os << "\n";
    }
    os << "agreement_percent";
    for (int p : report.per_document_percent) os << ',' << p;
    os << "\n";
    os << "average_percent," << report.average_display() << "\n";
    return os.str();
}

}  // namespace sentilex
