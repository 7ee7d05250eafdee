#include "graphitron/printer.hpp"

#include <charconv>
#include <sstream>

namespace graphitron {

using namespace fir;

namespace {

int precedence(BinaryOp op) {
    switch (op) {
        case BinaryOp::Or: return 1;
        case BinaryOp::And: return 2;
        case BinaryOp::Eq:
        case BinaryOp::Ne: return 3;
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge: return 4;
        case BinaryOp::Add:
        case BinaryOp::Sub: return 5;
        case BinaryOp::Mul:
        case BinaryOp::Div: return 6;
    }
    return 0;
}

std::string float_text(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, end);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

class Printer {
public:
    std::string print(const Program& prog) {
        for (size_t i = 0; i < prog.declarations.size(); i++) {
            print_decl(*prog.declarations[i]);
        }
        return out_.str();
    }

    std::string str() const { return out_.str(); }

    void print_expr(const Expr& e, int min_prec = 0) {
        switch (e.kind) {
            case ExprKind::IntLit: out_ << e.int_value; return;
            case ExprKind::FloatLit: out_ << float_text(e.float_value); return;
            case ExprKind::BoolLit: out_ << (e.bool_value ? "true" : "false"); return;
            case ExprKind::StringLit: out_ << '"' << e.text << '"'; return;
            case ExprKind::Ident: out_ << e.text; return;
            case ExprKind::Argv: out_ << "argv[" << e.argv_index << "]"; return;
            case ExprKind::Index:
                print_expr(*e.lhs, 8);
                out_ << "[";
                print_expr(*e.rhs);
                out_ << "]";
                return;
            case ExprKind::Unary: {
                out_ << "-";
                print_expr(*e.lhs, 7);
                return;
            }
            case ExprKind::Binary: {
                int prec = precedence(e.op);
                bool parens = prec < min_prec;
                if (parens) out_ << "(";
                print_expr(*e.lhs, prec);
                out_ << " " << to_string(e.op) << " ";
                print_expr(*e.rhs, prec + 1);
                if (parens) out_ << ")";
                return;
            }
            case ExprKind::Call: {
                out_ << e.text << "(";
                print_args(e.args);
                out_ << ")";
                return;
            }
            case ExprKind::MethodCall: {
                print_expr(*e.lhs, 8);
                out_ << "." << e.text << "(";
                print_args(e.args);
                out_ << ")";
                return;
            }
        }
    }

private:
    void print_args(const std::vector<ExprPtr>& args) {
        for (size_t i = 0; i < args.size(); i++) {
            if (i) out_ << ", ";
            print_expr(*args[i]);
        }
    }

    void print_decl(const Decl& d) {
        switch (d.kind) {
            case DeclKind::Element:
                out_ << "element " << d.name << " end\n";
                return;
            case DeclKind::Const:
                out_ << "const " << d.name << ": " << to_string(d.type);
                if (d.init) {
                    out_ << " = ";
                    print_expr(*d.init);
                }
                out_ << ";\n";
                return;
            case DeclKind::Func: {
                out_ << "func " << d.name << "(";
                for (size_t i = 0; i < d.params.size(); i++) {
                    if (i) out_ << ", ";
                    out_ << d.params[i].name << ": " << to_string(d.params[i].type);
                }
                out_ << ")\n";
                print_block(d.body, 1);
                out_ << "end\n";
                return;
            }
        }
    }

    void indent(int depth) {
        for (int i = 0; i < depth; i++) out_ << "    ";
    }

    void print_block(const std::vector<StmtPtr>& stmts, int depth) {
        for (const auto& s : stmts) print_stmt(*s, depth);
    }

    void print_stmt(const Stmt& s, int depth) {
        indent(depth);
        switch (s.kind) {
            case StmtKind::VarDecl:
                out_ << "var " << s.name << ": " << to_string(s.type);
                if (s.init) {
                    out_ << " = ";
                    print_expr(*s.init);
                }
                out_ << ";\n";
                return;
            case StmtKind::Assign:
                print_expr(*s.target);
                out_ << " " << to_string(s.op) << " ";
                print_expr(*s.value);
                out_ << ";\n";
                return;
            case StmtKind::If:
                out_ << "if (";
                print_expr(*s.value);
                out_ << ")\n";
                print_block(s.body, depth + 1);
                if (!s.else_body.empty()) {
                    indent(depth);
                    out_ << "else\n";
                    print_block(s.else_body, depth + 1);
                }
                indent(depth);
                out_ << "end\n";
                return;
            case StmtKind::While:
                out_ << "while (";
                print_expr(*s.value);
                out_ << ")\n";
                print_block(s.body, depth + 1);
                indent(depth);
                out_ << "end\n";
                return;
            case StmtKind::ForIn:
                out_ << "for " << s.name << " in ";
                print_expr(*s.value);
                out_ << "\n";
                print_block(s.body, depth + 1);
                indent(depth);
                out_ << "end\n";
                return;
            case StmtKind::ExprStmt:
                print_expr(*s.value);
                out_ << ";\n";
                return;
        }
    }

    std::ostringstream out_;
};

} // namespace

std::string pretty_print(const Program& program) {
    return Printer().print(program);
}

std::string pretty_print(const Expr& expr) {
    Printer p;
    p.print_expr(expr);
    return p.str();
}

} // namespace graphitron
