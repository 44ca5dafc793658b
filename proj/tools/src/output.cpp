// Copyright 2026 The Watermelon Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace melon {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json json_cell(const std::string& s) {
  long long v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec == std::errc() && ptr == end && !s.empty()) return v;
  return s;
}

}  // namespace

std::string render(const Table& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << csv_cell(table.columns[i]);
      }
      os << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
      }
      break;
    }
    case Format::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) {
          const auto& col = table.columns[i];
          const bool as_int = std::find(table.int_columns.begin(), table.int_columns.end(), col) !=
                              table.int_columns.end();
          obj[col] = as_int ? json_cell(row[i]) : nlohmann::ordered_json(row[i]);
        }
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::table: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
          os << (i ? "  " : "") << cells[i];
          if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
        }
        os << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      for (const auto& f : table.footer) os << f << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace melon
