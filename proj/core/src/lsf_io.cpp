// SPDX-License-Identifier: Apache-2.0
//
// lislink: link-level simulation of large-intelligent-surface uplinks
// Copyright (C) 2026 The lislink Authors
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

#include "lislink/assoc.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace lis
{

void write_lsf(std::ostream &out, const LsfMatrix &lsf)
{
    char buf[40];
    for (std::size_t k = 0; k < lsf.users(); ++k)
    {
        for (std::size_t m = 0; m < lsf.units(); ++m)
        {
            std::snprintf(buf, sizeof buf, "%.17g", lsf(k, m));
            if (m)
                out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

LsfMatrix read_lsf(std::istream &in)
{
    std::vector<double> values;
    std::size_t cols = 0, rows = 0;
    std::string line;
    while (std::getline(in, line))
    {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::size_t count = 0;
        std::string token;
        while (fields >> token)
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(token, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used != token.size())
                throw std::runtime_error("LSF dump line " + std::to_string(rows + 1) + ": bad value '" + token + "'");
            values.push_back(v);
            ++count;
        }
        if (rows == 0)
            cols = count;
        else if (count != cols)
            throw std::runtime_error("LSF dump: ragged row " + std::to_string(rows + 1));
        ++rows;
    }
    if (rows == 0)
        throw std::runtime_error("LSF dump is empty");
    return LsfMatrix(rows, cols, std::move(values));
}

} // namespace lis
