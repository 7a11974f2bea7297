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

#include "icobat/app/csv.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "icobat/qasm.hpp"

namespace icobat::app {

using qasm::format_double;

CsvWriter::CsvWriter(std::initializer_list<std::string_view> header) {
    for (std::string_view h : header) cell(h);
    end_row();
}

void CsvWriter::sep() {
    if (row_open_) text_ += ',';
    row_open_ = true;
}

CsvWriter& CsvWriter::cell(double v) {
    sep();
    text_ += format_double(v);
    return *this;
}

CsvWriter& CsvWriter::cell(const std::optional<double>& v) {
    sep();
    if (v) text_ += format_double(*v);
    return *this;
}

CsvWriter& CsvWriter::cell(bool v) {
    sep();
    text_ += v ? '1' : '0';
    return *this;
}

CsvWriter& CsvWriter::cell(std::int64_t v) {
    sep();
    text_ += std::to_string(v);
    return *this;
}

CsvWriter& CsvWriter::cell(std::uint64_t v) {
    sep();
    text_ += std::to_string(v);
    return *this;
}

CsvWriter& CsvWriter::cell(std::string_view v) {
    sep();
    text_ += v;
    return *this;
}

void CsvWriter::end_row() {
    text_ += '\n';
    row_open_ = false;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace icobat::app
