#include "lcais/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lcais {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string load_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

}  // namespace

Sequence parse_sequence_text(std::string_view text, std::size_t first_line) {
    Sequence out;
    std::size_t line = first_line;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (is_space(c)) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t start = i;
        const std::size_t start_col = col;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
            ++col;
        }
        const std::string_view token = text.substr(start, i - start);
        Value v{};
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        if (first != last && *first == '+') ++first;  // from_chars takes no leading plus
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range)
            throw ParseError("integer overflows 64 bits at line " + std::to_string(line) +
                                 ", column " + std::to_string(start_col) + ": '" + std::string(token) + "'",
                             line, start_col);
        if (ec != std::errc{} || ptr != last)
            throw ParseError("invalid integer at line " + std::to_string(line) + ", column " +
                                 std::to_string(start_col) + ": '" + std::string(token) + "'",
                             line, start_col);
        out.push_back(v);
    }
    return out;
}

Instance parse_instance_text(std::string_view text) {
    // Split off the first line; everything after the second newline must be blank.
    const std::size_t nl1 = text.find('\n');
    const std::string_view line1 = text.substr(0, nl1 == std::string_view::npos ? text.size() : nl1);
    std::string_view rest = nl1 == std::string_view::npos ? std::string_view{} : text.substr(nl1 + 1);
    const std::size_t nl2 = rest.find('\n');
    const std::string_view line2 = rest.substr(0, nl2 == std::string_view::npos ? rest.size() : nl2);
    const std::string_view tail = nl2 == std::string_view::npos ? std::string_view{} : rest.substr(nl2 + 1);

    for (std::size_t i = 0, line = 3, col = 1; i < tail.size(); ++i) {
        const char c = tail[i];
        if (c == '\n') {
            ++line;
            col = 1;
            continue;
        }
        if (!is_space(c)) throw ParseError("unexpected content at line " + std::to_string(line) +
                                               ", column " + std::to_string(col),
                                           line, col);
        ++col;
    }

    Instance inst;
    inst.a = parse_sequence_text(line1, 1);
    inst.b = parse_sequence_text(line2, 2);
    return inst;
}

Sequence load_sequence_file(const std::filesystem::path& path) {
    return parse_sequence_text(load_text(path));
}

Instance load_instance_file(const std::filesystem::path& path) {
    return parse_instance_text(load_text(path));
}

std::string format_instance(const Instance& inst) {
    std::string out;
    auto emit = [&out](const Sequence& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(s[i]);
        }
        out += '\n';
    };
    emit(inst.a);
    emit(inst.b);
    return out;
}

}  // namespace lcais
