// Copyright 2026 The primegap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <concepts>
#include <string>
#include <string_view>

namespace primegap {

/// Locale-independent CSV row builder. Doubles use the shortest
/// representation that round-trips.
class CsvRow
{
public:
    CsvRow& operator<<(std::string_view s)
    {
        sep();
        buf_.append(s);
        return *this;
    }

    CsvRow& operator<<(bool b) { return *this << std::string_view(b ? "true" : "false"); }

    template <std::integral T>
        requires(!std::same_as<T, bool>)
    CsvRow& operator<<(T v)
    {
        char tmp[32];
        auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, v);
        return *this << std::string_view(tmp, static_cast<std::size_t>(end - tmp));
    }

    CsvRow& operator<<(double v)
    {
        char tmp[64];
        auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, v);
        return *this << std::string_view(tmp, static_cast<std::size_t>(end - tmp));
    }

    const std::string& str() const { return buf_; }
    void clear()
    {
        buf_.clear();
        first_ = true;
    }

private:
    void sep()
    {
        if (!first_)
            buf_.push_back(',');
        first_ = false;
    }

    std::string buf_;
    bool first_ = true;
};

} // namespace primegap
