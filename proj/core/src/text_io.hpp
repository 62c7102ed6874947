#pragma once

// Line/token helpers shared by the text formats. Internal to the library.

#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "splitclust/errors.hpp"

namespace splitclust::detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Advances to the next line that is neither blank nor a '#' comment and
    // splits it on whitespace. Returns false at end of input.
    bool next(std::vector<std::string_view>& tokens) {
        tokens.clear();
        while (std::getline(in_, buffer_)) {
            ++line_;
            if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
            split(buffer_, tokens);
            if (tokens.empty() || tokens.front().front() == '#') {
                tokens.clear();
                continue;
            }
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return line_; }

    [[noreturn]] void fail(const std::string& what) const { throw format_error(line_, what); }

    std::uint64_t parse_uint(std::string_view token, const char* what) const {
        std::uint64_t value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || token.empty())
            fail(std::string("expected non-negative integer for ") + what + ", got '" + std::string(token) + "'");
        return value;
    }

private:
    static void split(std::string_view s, std::vector<std::string_view>& out) {
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
            if (j > i) out.push_back(s.substr(i, j - i));
            i = j;
        }
    }

    std::istream& in_;
    std::string buffer_;
    std::size_t line_ = 0;
};

}  // namespace splitclust::detail
