#include "graphitron/token.hpp"

#include <array>
#include <cctype>

namespace graphitron {

std::string Diagnostic::format(const std::string& file) const {
    std::string sev = severity == Severity::Error ? "error" : "warning";
    return file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) +
           ": " + sev + ": " + message;
}

namespace {

const std::array<const char*, 16> kKeywords = {
    "element", "end",   "const",     "var",     "func",   "if",
    "else",    "while", "for",       "in",      "true",   "false",
    "int",     "float", "bool",      "vertexset",
};

// Type constructor words that take braces; lexed as keywords too.
const std::array<const char*, 2> kTypeKeywords = {"edgeset", "vector"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    LexResult run() {
        LexResult result;
        while (true) {
            std::string trivia = skip_trivia();
            if (pos_ >= src_.size()) {
                Token eof;
                eof.kind = TokenKind::EndOfFile;
                eof.leading_trivia = std::move(trivia);
                eof.span = {line_, col_, 1, pos_};
                result.tokens.push_back(std::move(eof));
                return result;
            }
            Token tok;
            tok.leading_trivia = std::move(trivia);
            if (!next_token(tok, result.error)) {
                return result;
            }
            result.tokens.push_back(std::move(tok));
        }
    }

private:
    std::string skip_trivia() {
        size_t start = pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
        return src_.substr(start, pos_ - start);
    }

    void advance() {
        if (src_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }

    bool next_token(Token& tok, std::optional<Diagnostic>& error) {
        size_t start = pos_;
        uint32_t line = line_, col = col_;
        char c = src_[pos_];

        auto finish = [&](TokenKind kind) {
            tok.kind = kind;
            tok.text = src_.substr(start, pos_ - start);
            tok.span = {line, col, static_cast<uint32_t>(pos_ - start), start};
            return true;
        };

        if (ident_start(c)) {
            while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
            std::string word = src_.substr(start, pos_ - start);
            // "min=" / "max=" form a single reduction operator when the '='
            // follows directly ("min ==" stays a comparison).
            if ((word == "min" || word == "max") && pos_ + 1 < src_.size() &&
                src_[pos_] == '=' && src_[pos_ + 1] != '=') {
                advance();
                return finish(TokenKind::Operator);
            }
            if (pos_ == src_.size() && (word == "min" || word == "max")) {
                // fallthrough: identifier at EOF
            }
            return finish(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier);
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            bool is_float = false;
            if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                is_float = true;
                advance();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                size_t save_pos = pos_;
                uint32_t save_line = line_, save_col = col_;
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    is_float = true;
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
                } else {
                    pos_ = save_pos;
                    line_ = save_line;
                    col_ = save_col;
                }
            }
            return finish(is_float ? TokenKind::FloatLiteral : TokenKind::IntegerLiteral);
        }

        if (c == '"') {
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                error = Diagnostic{Severity::Error, "unclosed string constant",
                                   {line, col, static_cast<uint32_t>(pos_ - start), start}};
                return false;
            }
            advance();
            return finish(TokenKind::StringLiteral);
        }

        switch (c) {
            case '+': case '-': case '*': case '/':
            case '<': case '>': case '=': case '!':
            case '&': case '|': {
                advance();
                bool two = pos_ < src_.size() && src_[pos_] == '=' &&
                           (c == '<' || c == '>' || c == '=' || c == '!' || c == '+');
                if (two) advance();
                if (c == '!' && !two) {
                    error = Diagnostic{Severity::Error, "illegal character `!`",
                                       {line, col, 1, start}};
                    return false;
                }
                return finish(TokenKind::Operator);
            }
            case '(': case ')': case '{': case '}':
            case '[': case ']': case ',': case ';':
            case ':': case '.':
                advance();
                return finish(TokenKind::Punctuation);
            default:
                break;
        }
        error = Diagnostic{Severity::Error, std::string("illegal character `") + c + "`",
                           {line, col, 1, start}};
        return false;
    }

    const std::string& src_;
    size_t pos_ = 0;
    uint32_t line_ = 1;
    uint32_t col_ = 1;
};

} // namespace

bool is_keyword(const std::string& word) {
    for (const char* k : kKeywords)
        if (word == k) return true;
    for (const char* k : kTypeKeywords)
        if (word == k) return true;
    return false;
}

LexResult tokenize(const std::string& source) {
    return Lexer(source).run();
}

std::string reconstruct_source(const std::vector<Token>& tokens) {
    std::string out;
    for (const Token& t : tokens) {
        out += t.leading_trivia;
        if (t.kind != TokenKind::EndOfFile) out += t.text;
    }
    return out;
}

} // namespace graphitron
