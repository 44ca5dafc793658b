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

#ifndef MELON_OUTPUT_HPP_
#define MELON_OUTPUT_HPP_

#include <string>
#include <vector>

namespace melon {

enum class Format { table, csv, json };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // Summary lines shown under the table format only.
  std::vector<std::string> footer;
  // Columns emitted as JSON numbers; all other cells are strings.
  std::vector<std::string> int_columns{"n", "p", "h", "a", "b"};
};

// csv: comma separated, header row, LF endings.
// json: one object per row with the csv columns as keys.
std::string render(const Table& table, Format format);

}  // namespace melon

#endif  // MELON_OUTPUT_HPP_
