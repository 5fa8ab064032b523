#include <lonet/format.hpp>

#include <charconv>
#include <cmath>
#include <limits>

namespace lonet {

std::string shortestDecimal(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line), column_(column) {}

TokenStream::TokenStream(std::string_view text, std::string_view commentPrefixes) {
    std::size_t line = 1;
    std::size_t lineBegin = 0;
    std::size_t i = 0;
    bool lineStart = true;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
            lineBegin = i;
            lineStart = true;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (lineStart && commentPrefixes.find(c) != std::string_view::npos) {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        lineStart = false;
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
               text[i] != '\n') {
            ++i;
        }
        tokens_.push_back({text.substr(start, i - start), line, start - lineBegin + 1});
    }
    endLine_ = line;
}

const TokenStream::Token& TokenStream::peek() const {
    if (done()) {
        throw ParseError("unexpected end of input", endLine_, 1);
    }
    return tokens_[pos_];
}

TokenStream::Token TokenStream::next(std::string_view expecting) {
    if (done()) {
        throw ParseError("unexpected end of input, expected " + std::string(expecting), endLine_, 1);
    }
    return tokens_[pos_++];
}

std::int64_t TokenStream::nextInt(std::string_view what) {
    const Token t = next(what);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError("expected integer " + std::string(what) + ", got '" +
                             std::string(t.text) + "'",
                         t.line, t.column);
    }
    return value;
}

std::uint64_t TokenStream::nextUnsigned(std::string_view what) {
    const Token t = next(what);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError("expected unsigned integer " + std::string(what) + ", got '" +
                             std::string(t.text) + "'",
                         t.line, t.column);
    }
    return value;
}

double TokenStream::nextDouble(std::string_view what) {
    const Token t = next(what);
    if (t.text == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    double value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError("expected number " + std::string(what) + ", got '" +
                             std::string(t.text) + "'",
                         t.line, t.column);
    }
    return value;
}

void TokenStream::expectWord(std::string_view word) {
    const Token t = next(word);
    if (t.text != word) {
        throw ParseError("expected '" + std::string(word) + "', got '" + std::string(t.text) + "'",
                         t.line, t.column);
    }
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace lonet
