#include "graphitron/parser.hpp"

#include <cstdlib>
#include <stdexcept>

namespace graphitron {

using namespace fir;

namespace {

// Recursive-descent parser. Errors unwind with an exception carrying the
// diagnostic; the public entry point converts it into a ParseResult.
struct ParseError {
    Diagnostic diag;
};

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    Program parse_program() {
        Program prog;
        while (!at_eof()) {
            prog.declarations.push_back(parse_declaration());
        }
        return prog;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& cur() const { return peek(0); }
    bool at_eof() const { return cur().kind == TokenKind::EndOfFile; }

    Token advance() {
        Token t = cur();
        if (pos_ + 1 < toks_.size()) pos_++;
        return t;
    }

    [[noreturn]] void fail(const std::string& message, const SourceSpan& span) {
        throw ParseError{Diagnostic{Severity::Error, message, span}};
    }

    [[noreturn]] void unexpected(const std::string& expected) {
        std::string got = at_eof() ? "end of file" : "`" + cur().text + "`";
        fail("unexpected token " + got + ", expected " + expected, cur().span);
    }

    Token expect(TokenKind kind, const std::string& text, const std::string& what) {
        if (cur().kind == kind && cur().text == text) return advance();
        unexpected(what);
    }

    Token expect_ident(const std::string& what) {
        if (cur().kind == TokenKind::Identifier) return advance();
        unexpected(what);
    }

    bool match(TokenKind kind, const std::string& text) {
        if (cur().kind == kind && cur().text == text) {
            advance();
            return true;
        }
        return false;
    }

    bool is_kw(const std::string& text) const {
        return cur().kind == TokenKind::Keyword && cur().text == text;
    }

    // --- declarations -----------------------------------------------------

    std::unique_ptr<Decl> parse_declaration() {
        if (is_kw("element")) return parse_element();
        if (is_kw("const")) return parse_const();
        if (is_kw("func")) return parse_func();
        unexpected("`element`, `const`, or `func`");
    }

    std::unique_ptr<Decl> parse_element() {
        Token kw = advance();
        auto decl = std::make_unique<Decl>(DeclKind::Element);
        decl->span = kw.span;
        decl->name = expect_ident("element name").text;
        expect(TokenKind::Keyword, "end", "`end`");
        return decl;
    }

    std::unique_ptr<Decl> parse_const() {
        Token kw = advance();
        auto decl = std::make_unique<Decl>(DeclKind::Const);
        decl->span = kw.span;
        decl->name = expect_ident("constant name").text;
        expect(TokenKind::Punctuation, ":", "`:`");
        decl->type = parse_type();
        if (match(TokenKind::Operator, "=")) {
            decl->init = parse_expr();
        }
        expect(TokenKind::Punctuation, ";", "`;`");
        return decl;
    }

    std::unique_ptr<Decl> parse_func() {
        Token kw = advance();
        auto decl = std::make_unique<Decl>(DeclKind::Func);
        decl->span = kw.span;
        decl->name = expect_ident("function name").text;
        expect(TokenKind::Punctuation, "(", "`(`");
        if (!match(TokenKind::Punctuation, ")")) {
            do {
                Param p;
                Token name = expect_ident("parameter name");
                p.name = name.text;
                p.span = name.span;
                expect(TokenKind::Punctuation, ":", "`:`");
                p.type = parse_type();
                decl->params.push_back(std::move(p));
            } while (match(TokenKind::Punctuation, ","));
            expect(TokenKind::Punctuation, ")", "`)` or `,`");
        }
        decl->body = parse_block();
        expect(TokenKind::Keyword, "end", "`end`");
        return decl;
    }

    // --- types --------------------------------------------------------------

    ScalarType parse_scalar_type() {
        if (is_kw("int")) { advance(); return ScalarType::Int; }
        if (is_kw("float")) { advance(); return ScalarType::Float; }
        if (is_kw("bool")) { advance(); return ScalarType::Bool; }
        unexpected("a scalar type (`int`, `float`, or `bool`)");
    }

    TypeExpr parse_type() {
        TypeExpr t;
        t.span = cur().span;
        if (is_kw("int") || is_kw("float") || is_kw("bool")) {
            t.kind = TypeExpr::Kind::Scalar;
            t.scalar = parse_scalar_type();
            return t;
        }
        if (is_kw("vertexset")) {
            advance();
            t.kind = TypeExpr::Kind::VertexSet;
            expect(TokenKind::Punctuation, "{", "`{`");
            t.element = expect_ident("element name").text;
            expect(TokenKind::Punctuation, "}", "`}`");
            return t;
        }
        if (is_kw("edgeset")) {
            advance();
            t.kind = TypeExpr::Kind::EdgeSet;
            expect(TokenKind::Punctuation, "{", "`{`");
            t.element = expect_ident("element name").text;
            expect(TokenKind::Punctuation, "}", "`}`");
            expect(TokenKind::Punctuation, "(", "`(`");
            t.src_element = expect_ident("source element").text;
            expect(TokenKind::Punctuation, ",", "`,`");
            t.dst_element = expect_ident("destination element").text;
            if (match(TokenKind::Punctuation, ",")) {
                expect(TokenKind::Keyword, "int", "`int` (edge weight type)");
                t.weighted = true;
            }
            expect(TokenKind::Punctuation, ")", "`)`");
            return t;
        }
        if (is_kw("vector")) {
            advance();
            t.kind = TypeExpr::Kind::Vector;
            expect(TokenKind::Punctuation, "{", "`{`");
            t.element = expect_ident("element name").text;
            expect(TokenKind::Punctuation, "}", "`}`");
            expect(TokenKind::Punctuation, "(", "`(`");
            t.scalar = parse_scalar_type();
            expect(TokenKind::Punctuation, ")", "`)`");
            return t;
        }
        unexpected("a type");
    }

    // --- statements ---------------------------------------------------------

    std::vector<StmtPtr> parse_block() {
        std::vector<StmtPtr> stmts;
        while (!is_kw("end") && !is_kw("else")) {
            if (at_eof()) fail("missing `end`", cur().span);
            stmts.push_back(parse_stmt());
        }
        return stmts;
    }

    StmtPtr parse_stmt() {
        if (is_kw("var")) return parse_var_decl();
        if (is_kw("if")) return parse_if();
        if (is_kw("while")) return parse_while();
        if (is_kw("for")) return parse_for();
        return parse_assign_or_expr();
    }

    StmtPtr parse_var_decl() {
        Token kw = advance();
        auto stmt = std::make_unique<Stmt>(StmtKind::VarDecl);
        stmt->span = kw.span;
        stmt->name = expect_ident("variable name").text;
        expect(TokenKind::Punctuation, ":", "`:`");
        stmt->type = parse_type();
        if (match(TokenKind::Operator, "=")) {
            stmt->init = parse_expr();
        }
        expect(TokenKind::Punctuation, ";", "`;`");
        return stmt;
    }

    StmtPtr parse_if() {
        Token kw = advance();
        auto stmt = std::make_unique<Stmt>(StmtKind::If);
        stmt->span = kw.span;
        expect(TokenKind::Punctuation, "(", "`(`");
        stmt->value = parse_expr();
        expect(TokenKind::Punctuation, ")", "`)`");
        stmt->body = parse_block();
        if (match(TokenKind::Keyword, "else")) {
            stmt->else_body = parse_block();
        }
        expect(TokenKind::Keyword, "end", "`end`");
        return stmt;
    }

    StmtPtr parse_while() {
        Token kw = advance();
        auto stmt = std::make_unique<Stmt>(StmtKind::While);
        stmt->span = kw.span;
        expect(TokenKind::Punctuation, "(", "`(`");
        stmt->value = parse_expr();
        expect(TokenKind::Punctuation, ")", "`)`");
        stmt->body = parse_block();
        expect(TokenKind::Keyword, "end", "`end`");
        return stmt;
    }

    StmtPtr parse_for() {
        Token kw = advance();
        auto stmt = std::make_unique<Stmt>(StmtKind::ForIn);
        stmt->span = kw.span;
        stmt->name = expect_ident("loop variable").text;
        expect(TokenKind::Keyword, "in", "`in`");
        stmt->value = parse_expr();
        stmt->body = parse_block();
        expect(TokenKind::Keyword, "end", "`end`");
        return stmt;
    }

    StmtPtr parse_assign_or_expr() {
        SourceSpan span = cur().span;
        ExprPtr first = parse_expr();
        if (cur().kind == TokenKind::Operator &&
            (cur().text == "=" || cur().text == "+=" || cur().text == "min=" ||
             cur().text == "max=")) {
            Token op = advance();
            auto stmt = std::make_unique<Stmt>(StmtKind::Assign);
            stmt->span = span;
            if (op.text == "=") stmt->op = AssignOp::Assign;
            else if (op.text == "+=") stmt->op = AssignOp::PlusAssign;
            else if (op.text == "min=") stmt->op = AssignOp::ReduceMin;
            else stmt->op = AssignOp::ReduceMax;
            if (first->kind != ExprKind::Ident && first->kind != ExprKind::Index)
                fail("invalid assignment target", first->span);
            if ((stmt->op == AssignOp::ReduceMin || stmt->op == AssignOp::ReduceMax) &&
                first->kind != ExprKind::Index)
                fail("reduction operator applied to non-indexed lvalue", op.span);
            stmt->target = std::move(first);
            stmt->value = parse_expr();
            expect(TokenKind::Punctuation, ";", "`;`");
            return stmt;
        }
        auto stmt = std::make_unique<Stmt>(StmtKind::ExprStmt);
        stmt->span = span;
        stmt->value = std::move(first);
        expect(TokenKind::Punctuation, ";", "`;`");
        return stmt;
    }

    // --- expressions ----------------------------------------------------------
    // Precedence, loosest first: |  &  == !=  < <= > >=  + -  * /  unary -

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (cur().is(TokenKind::Operator, "|")) {
            SourceSpan span = advance().span;
            lhs = make_binary(BinaryOp::Or, std::move(lhs), parse_and(), span);
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_equality();
        while (cur().is(TokenKind::Operator, "&")) {
            SourceSpan span = advance().span;
            lhs = make_binary(BinaryOp::And, std::move(lhs), parse_equality(), span);
        }
        return lhs;
    }

    ExprPtr parse_equality() {
        ExprPtr lhs = parse_relational();
        while (cur().is(TokenKind::Operator, "==") || cur().is(TokenKind::Operator, "!=")) {
            BinaryOp op = cur().text == "==" ? BinaryOp::Eq : BinaryOp::Ne;
            SourceSpan span = advance().span;
            lhs = make_binary(op, std::move(lhs), parse_relational(), span);
        }
        return lhs;
    }

    ExprPtr parse_relational() {
        ExprPtr lhs = parse_additive();
        while (true) {
            BinaryOp op;
            if (cur().is(TokenKind::Operator, "<")) op = BinaryOp::Lt;
            else if (cur().is(TokenKind::Operator, "<=")) op = BinaryOp::Le;
            else if (cur().is(TokenKind::Operator, ">")) op = BinaryOp::Gt;
            else if (cur().is(TokenKind::Operator, ">=")) op = BinaryOp::Ge;
            else break;
            SourceSpan span = advance().span;
            lhs = make_binary(op, std::move(lhs), parse_additive(), span);
        }
        return lhs;
    }

    ExprPtr parse_additive() {
        ExprPtr lhs = parse_multiplicative();
        while (cur().is(TokenKind::Operator, "+") || cur().is(TokenKind::Operator, "-")) {
            BinaryOp op = cur().text == "+" ? BinaryOp::Add : BinaryOp::Sub;
            SourceSpan span = advance().span;
            lhs = make_binary(op, std::move(lhs), parse_multiplicative(), span);
        }
        return lhs;
    }

    ExprPtr parse_multiplicative() {
        ExprPtr lhs = parse_unary();
        while (cur().is(TokenKind::Operator, "*") || cur().is(TokenKind::Operator, "/")) {
            BinaryOp op = cur().text == "*" ? BinaryOp::Mul : BinaryOp::Div;
            SourceSpan span = advance().span;
            lhs = make_binary(op, std::move(lhs), parse_unary(), span);
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (cur().is(TokenKind::Operator, "-")) {
            SourceSpan span = advance().span;
            auto e = std::make_unique<Expr>(ExprKind::Unary);
            e->span = span;
            e->lhs = parse_unary();
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (true) {
            if (cur().is(TokenKind::Punctuation, "[")) {
                SourceSpan span = advance().span;
                auto idx = std::make_unique<Expr>(ExprKind::Index);
                idx->span = span;
                idx->lhs = std::move(e);
                idx->rhs = parse_expr();
                expect(TokenKind::Punctuation, "]", "`]`");
                e = std::move(idx);
            } else if (cur().is(TokenKind::Punctuation, ".")) {
                SourceSpan span = advance().span;
                auto call = std::make_unique<Expr>(ExprKind::MethodCall);
                call->span = span;
                call->lhs = std::move(e);
                call->text = expect_ident("method name").text;
                expect(TokenKind::Punctuation, "(", "`(`");
                if (!match(TokenKind::Punctuation, ")")) {
                    do {
                        call->args.push_back(parse_expr());
                    } while (match(TokenKind::Punctuation, ","));
                    expect(TokenKind::Punctuation, ")", "`)` or `,`");
                }
                e = std::move(call);
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_primary() {
        const Token& t = cur();
        switch (t.kind) {
            case TokenKind::IntegerLiteral: {
                auto e = std::make_unique<Expr>(ExprKind::IntLit);
                e->span = t.span;
                errno = 0;
                e->int_value = std::strtoll(t.text.c_str(), nullptr, 10);
                if (errno == ERANGE) fail("integer literal out of range", t.span);
                advance();
                return e;
            }
            case TokenKind::FloatLiteral: {
                auto e = std::make_unique<Expr>(ExprKind::FloatLit);
                e->span = t.span;
                e->float_value = std::strtod(t.text.c_str(), nullptr);
                advance();
                return e;
            }
            case TokenKind::StringLiteral: {
                auto e = std::make_unique<Expr>(ExprKind::StringLit);
                e->span = t.span;
                e->text = t.text.substr(1, t.text.size() - 2);
                advance();
                return e;
            }
            case TokenKind::Keyword: {
                if (t.text == "true" || t.text == "false") {
                    auto e = std::make_unique<Expr>(ExprKind::BoolLit);
                    e->span = t.span;
                    e->bool_value = t.text == "true";
                    advance();
                    return e;
                }
                unexpected("an expression");
            }
            case TokenKind::Identifier: {
                if (t.text == "argv" && peek(1).is(TokenKind::Punctuation, "[")) {
                    auto e = std::make_unique<Expr>(ExprKind::Argv);
                    e->span = t.span;
                    advance();
                    advance();
                    if (cur().kind != TokenKind::IntegerLiteral)
                        unexpected("an integer argv index");
                    e->argv_index = std::strtoll(cur().text.c_str(), nullptr, 10);
                    advance();
                    expect(TokenKind::Punctuation, "]", "`]`");
                    return e;
                }
                if (peek(1).is(TokenKind::Punctuation, "(")) {
                    auto e = std::make_unique<Expr>(ExprKind::Call);
                    e->span = t.span;
                    e->text = t.text;
                    advance();
                    advance();
                    if (!match(TokenKind::Punctuation, ")")) {
                        do {
                            e->args.push_back(parse_expr());
                        } while (match(TokenKind::Punctuation, ","));
                        expect(TokenKind::Punctuation, ")", "`)` or `,`");
                    }
                    return e;
                }
                auto e = std::make_unique<Expr>(ExprKind::Ident);
                e->span = t.span;
                e->text = t.text;
                advance();
                return e;
            }
            case TokenKind::Punctuation: {
                if (t.text == "(") {
                    advance();
                    ExprPtr inner = parse_expr();
                    expect(TokenKind::Punctuation, ")", "`)`");
                    return inner;
                }
                unexpected("an expression");
            }
            default:
                unexpected("an expression");
        }
    }

    ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourceSpan span) {
        auto e = std::make_unique<Expr>(ExprKind::Binary);
        e->span = span;
        e->op = op;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    const std::vector<Token>& toks_;
    size_t pos_ = 0;
};

} // namespace

ParseResult parse(const std::vector<Token>& tokens) {
    ParseResult result;
    if (tokens.empty()) return result;
    try {
        Parser p(tokens);
        result.program = p.parse_program();
    } catch (ParseError& e) {
        result.error = std::move(e.diag);
    }
    return result;
}

ParseResult parse_source(const std::string& source) {
    LexResult lexed = tokenize(source);
    if (!lexed.ok()) {
        ParseResult r;
        r.error = lexed.error;
        return r;
    }
    return parse(lexed.tokens);
}

} // namespace graphitron
