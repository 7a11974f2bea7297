// Copyright 2026 The icobat Authors
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace icobat::app {

/// Accumulates comma-separated rows. Undefined values become empty cells,
/// booleans become 1/0.
class CsvWriter {
  public:
    explicit CsvWriter(std::initializer_list<std::string_view> header);

    CsvWriter& cell(double v);
    CsvWriter& cell(const std::optional<double>& v);
    CsvWriter& cell(bool v);
    CsvWriter& cell(std::int64_t v);
    CsvWriter& cell(std::uint64_t v);
    CsvWriter& cell(int v) { return cell(static_cast<std::int64_t>(v)); }
    CsvWriter& cell(std::string_view v);
    void end_row();

    const std::string& str() const { return text_; }

  private:
    void sep();

    std::string text_;
    bool row_open_ = false;
};

/// Writes `text` to `path`, or to stdout when `path` is empty.
void write_text(const std::string& path, const std::string& text);

}  // namespace icobat::app
