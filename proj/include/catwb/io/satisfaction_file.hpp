#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catwb/enriched/consequence.hpp"
#include "catwb/io/text.hpp"

namespace catwb::io {

// Tab-delimited: header row is a corner cell then sentence names; each
// further row is a model name then 0/1 cells. Blank lines and lines starting
// with # are ignored.

inline enriched::SatisfactionRelation parse_satisfaction(std::string_view text, const std::string& source = "<input>") {
  std::vector<std::string> models, sentences;
  std::vector<std::vector<bool>> matrix;
  bool have_header = false;
  std::size_t number = 0, pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::pair<std::string, std::size_t>> cells;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      cells.emplace_back(std::string(line.substr(start, tab == std::string_view::npos ? tab : tab - start)), start + 1);
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (!have_header) {
      have_header = true;
      for (std::size_t k = 1; k < cells.size(); ++k) {
        if (cells[k].first.empty()) throw ParseError(source, number, cells[k].second, "empty sentence name");
        if (std::find(sentences.begin(), sentences.end(), cells[k].first) != sentences.end())
          throw ParseError(source, number, cells[k].second, "duplicate sentence '" + cells[k].first + "'");
        sentences.push_back(cells[k].first);
      }
      if (sentences.size() > enriched::kMaxSentences) throw ParseError(source, number, 1, "more than 64 sentences");
      continue;
    }
    if (cells.size() != sentences.size() + 1)
      throw ParseError(source, number, 1,
                       "expected " + std::to_string(sentences.size() + 1) + " cells, got " + std::to_string(cells.size()));
    if (cells[0].first.empty()) throw ParseError(source, number, 1, "empty model name");
    if (std::find(models.begin(), models.end(), cells[0].first) != models.end())
      throw ParseError(source, number, 1, "duplicate model '" + cells[0].first + "'");
    models.push_back(cells[0].first);
    std::vector<bool> row;
    for (std::size_t k = 1; k < cells.size(); ++k) {
      if (cells[k].first != "0" && cells[k].first != "1")
        throw ParseError(source, number, cells[k].second, "cell must be 0 or 1, got '" + cells[k].first + "'");
      row.push_back(cells[k].first == "1");
    }
    matrix.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(source, number, 0, "missing header row");
  return {models, sentences, matrix};
}

inline enriched::SatisfactionRelation load_satisfaction(const std::string& path) {
  return parse_satisfaction(read_file(path), path);
}

inline std::string serialize_satisfaction(const enriched::SatisfactionRelation& sat) {
  std::string out = "model";
  for (const auto& s : sat.sentences) out += "\t" + s;
  out += "\n";
  for (std::size_t m = 0; m < sat.models.size(); ++m) {
    out += sat.models[m];
    for (std::size_t k = 0; k < sat.sentences.size(); ++k) out += sat.satisfies(m, k) ? "\t1" : "\t0";
    out += "\n";
  }
  return out;
}

}  // namespace catwb::io
