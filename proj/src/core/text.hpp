// Copyright 2026 The Pastel Authors
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

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Small line-oriented helpers shared by the text parsers.
namespace pastel::text {

inline std::vector<std::string_view> split_lines(std::string_view s) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t nl = s.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < s.size()) {
                lines.push_back(s.substr(pos));
            }
            break;
        }
        lines.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::string_view strip_comment(std::string_view s) {
    auto pos = s.find('#');
    return pos == std::string_view::npos ? s : s.substr(0, pos);
}

// Leading keyword made of letters, digits and '-', and the remainder.
inline std::pair<std::string_view, std::string_view> split_keyword(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '-' || line[i] == '_')) {
        ++i;
    }
    return {line.substr(0, i), line.substr(i)};
}

// "<id>: <body>" -> id, body. The id is nullopt when no colon is present.
inline std::pair<std::optional<std::string>, std::string_view> split_colon(std::string_view s) {
    auto pos = s.find(':');
    if (pos == std::string_view::npos) {
        return {std::nullopt, s};
    }
    return {std::string(trim(s.substr(0, pos))), s.substr(pos + 1)};
}

// Splits on `sep`, trimming pieces and dropping empty ones.
inline std::vector<std::string> split_list(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        std::string_view piece =
            trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (!piece.empty()) {
            out.emplace_back(piece);
        }
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    return out;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            ++j;
        }
        if (j > i) {
            out.emplace_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

} // namespace pastel::text
