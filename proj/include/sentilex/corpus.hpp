#ifndef SENTILEX_CORPUS_HPP_
#define SENTILEX_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "sentilex/scorer.hpp"

namespace sentilex {

// Reads a whole file; throws with the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

// Loads a corpus from either a directory of UTF-8 `.txt` files
// (document id = filename stem) or a line-delimited records file where
// each line is an object with `id` and `text` fields. Documents are
// sorted by id; duplicate ids and an empty corpus are hard errors.
std::vector<Document> load_corpus(const std::filesystem::path& path);

}  // namespace sentilex

#endif  // SENTILEX_CORPUS_HPP_
