#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lcais/core.hpp"
#include "lcais/generate.hpp"

namespace lcais {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(std::move(message)), line(line), column(column) {}

    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
};

// Whitespace-separated signed decimal integers; LF or CRLF line endings.
// Rejects non-integer tokens and 64-bit overflow, naming line and column.
Sequence parse_sequence_text(std::string_view text, std::size_t first_line = 1);

// Instance format: line 1 = A, line 2 = B. A missing or blank second line is
// an empty B; anything after line 2 must be blank.
Instance parse_instance_text(std::string_view text);

Sequence load_sequence_file(const std::filesystem::path& path);
Instance load_instance_file(const std::filesystem::path& path);

// Two LF-terminated lines of space-separated values.
std::string format_instance(const Instance& inst);

}  // namespace lcais
