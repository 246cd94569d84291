#include "sentilex/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sentilex/error.hpp"

namespace sentilex {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot read file: " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw error("read failure: " + path.string());
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error("cannot write file: " + path.string());
    out << content;
    out.flush();
    if (!out) throw error("write failure: " + path.string());
}

namespace {

std::vector<Document> load_corpus_dir(const fs::path& dir) {
    std::vector<Document> docs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".txt") continue;
        docs.emplace_back(entry.path().stem().string(),
                          read_file(entry.path()));
    }
    std::sort(docs.begin(), docs.end(),
              [](const Document& a, const Document& b) {
                  return a.first < b.first;
              });
    return docs;
}

std::vector<Document> load_corpus_records(const fs::path& file) {
    std::vector<Document> docs;
    std::istringstream in(read_file(file));
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(number,
                              std::string("bad corpus record: ") + e.what());
        }
        if (!rec.contains("id") || !rec.contains("text"))
            throw parse_error(number, "corpus record needs `id` and `text`");
        docs.emplace_back(rec["id"].get<std::string>(),
                          rec["text"].get<std::string>());
    }
    std::sort(docs.begin(), docs.end(),
              [](const Document& a, const Document& b) {
                  return a.first < b.first;
              });
    return docs;
}

}  // namespace

std::vector<Document> load_corpus(const fs::path& path) {
    std::vector<Document> docs;
    if (fs::is_directory(path))
        docs = load_corpus_dir(path);
    else if (fs::is_regular_file(path))
        docs = load_corpus_records(path);
    else
        throw error("corpus path does not exist: " + path.string());

    if (docs.empty()) throw error("empty corpus: " + path.string());
    std::set<std::string> ids;
    for (const auto& [id, text] : docs)
        if (!ids.insert(id).second)
            throw error("duplicate document id '" + id + "' in corpus " +
                        path.string());
    return docs;
}

}  // namespace sentilex
