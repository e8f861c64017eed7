// SPDX-License-Identifier: Apache-2.0
//
// fdaris - range-angle secrecy toolkit for RIS-assisted FDA links
// Copyright (C) 2026 The fdaris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FDARIS_CSV_HPP
#define FDARIS_CSV_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

namespace fdaris
{
    // Shortest round-trip text for a double; independent of the global locale
    inline std::string format_number(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }

    inline std::string format_number(std::int64_t v) { return std::to_string(v); }

    class CsvWriter
    {
    public:
        CsvWriter(std::ostream &os, std::vector<std::string> header) : os_(os), columns_(header.size())
        {
            write_row(header);
        }

        void row(const std::vector<double> &values)
        {
            if (values.size() != columns_)
                throw std::invalid_argument("CsvWriter: row width does not match the header.");
            std::string line;
            for (std::size_t i = 0; i < values.size(); ++i)
            {
                if (i)
                    line += ',';
                line += format_number(values[i]);
            }
            os_ << line << '\n';
        }

    private:
        void write_row(const std::vector<std::string> &cells)
        {
            std::string line;
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i)
                    line += ',';
                line += cells[i];
            }
            os_ << line << '\n';
        }

        std::ostream &os_;
        std::size_t columns_;
    };

} // namespace fdaris

#endif
