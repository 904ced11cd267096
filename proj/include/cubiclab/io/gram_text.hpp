#ifndef CUBICLAB_IO_GRAM_TEXT_HPP
#define CUBICLAB_IO_GRAM_TEXT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubiclab/io/example_file.hpp"
#include "cubiclab/lattice/gram.hpp"

namespace cubiclab::io {

/// A Gram matrix as JSON ("[[3,1],[1,3]]") or as rows split by ';' or
/// newlines with entries split by ',' or blanks ("3,1;1,3").
inline lattice::GramMatrix parse_gram(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw FormatError("empty Gram matrix");
  if (text[first] == '[') {
    try {
      rows = nlohmann::json::parse(text).get<std::vector<std::vector<long long>>>();
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("bad Gram matrix: ") + e.what());
    }
  } else {
    std::string norm = text;
    for (auto& ch : norm) {
      if (ch == ';') ch = '\n';
      if (ch == ',') ch = ' ';
    }
    std::istringstream lines(norm);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream in(line);
      std::vector<long long> row;
      std::string tok;
      while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
          v = std::stoll(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size()) throw FormatError("bad Gram entry '" + tok + "'");
        row.push_back(v);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw FormatError("empty Gram matrix");
  lattice::IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw FormatError("Gram matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  try {
    return lattice::GramMatrix(std::move(m));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace cubiclab::io

#endif  // CUBICLAB_IO_GRAM_TEXT_HPP
