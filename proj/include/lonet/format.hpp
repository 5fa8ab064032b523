#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lonet {

/// Shortest decimal string that reads back to exactly `value`.
/// Locale independent; infinities print as `inf`/`-inf`, NaN as `nan`.
std::string shortestDecimal(double value);

/// Malformed textual input, with the 1-based line and column of the fault.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Whitespace tokenizer that remembers token positions and skips `#` or `%`
/// comment lines when asked.
class TokenStream {
  public:
    struct Token {
        std::string_view text;
        std::size_t line;
        std::size_t column;
    };

    explicit TokenStream(std::string_view text, std::string_view commentPrefixes = "");

    bool done() const { return pos_ >= tokens_.size(); }
    std::size_t remaining() const { return tokens_.size() - pos_; }
    const Token& peek() const;
    Token next(std::string_view expecting);

    std::int64_t nextInt(std::string_view what);
    std::uint64_t nextUnsigned(std::string_view what);
    double nextDouble(std::string_view what);
    void expectWord(std::string_view word);
    /// Position just past the last token, for end-of-input diagnostics.
    std::size_t endLine() const { return endLine_; }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t endLine_ = 1;
};

/// 64-bit FNV-1a, used for command-line hashes in provenance headers.
std::uint64_t fnv1a64(std::string_view text);

} // namespace lonet
