#include "graphitron/fir.hpp"

namespace graphitron::fir {

bool TypeExpr::equals(const TypeExpr& o) const {
    return kind == o.kind && scalar == o.scalar && element == o.element &&
           src_element == o.src_element && dst_element == o.dst_element &&
           weighted == o.weighted;
}

static bool ptr_equals(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return a->equals(*b);
}

bool Expr::equals(const Expr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case ExprKind::IntLit: return int_value == o.int_value;
        case ExprKind::FloatLit: return float_value == o.float_value;
        case ExprKind::BoolLit: return bool_value == o.bool_value;
        case ExprKind::StringLit:
        case ExprKind::Ident: return text == o.text;
        case ExprKind::Argv: return argv_index == o.argv_index;
        case ExprKind::Index:
        case ExprKind::Unary:
        case ExprKind::Binary:
            if (kind == ExprKind::Binary && op != o.op) return false;
            return ptr_equals(lhs, o.lhs) && ptr_equals(rhs, o.rhs);
        case ExprKind::Call:
        case ExprKind::MethodCall: {
            if (text != o.text || args.size() != o.args.size()) return false;
            if (!ptr_equals(lhs, o.lhs)) return false;
            for (size_t i = 0; i < args.size(); i++)
                if (!args[i]->equals(*o.args[i])) return false;
            return true;
        }
    }
    return false;
}

ExprPtr clone(const Expr& e) {
    auto out = std::make_unique<Expr>(e.kind);
    out->span = e.span;
    out->int_value = e.int_value;
    out->float_value = e.float_value;
    out->bool_value = e.bool_value;
    out->text = e.text;
    out->op = e.op;
    out->argv_index = e.argv_index;
    if (e.lhs) out->lhs = clone(*e.lhs);
    if (e.rhs) out->rhs = clone(*e.rhs);
    for (const auto& a : e.args) out->args.push_back(clone(*a));
    return out;
}

static bool stmts_equal(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++)
        if (!a[i]->equals(*b[i])) return false;
    return true;
}

bool Stmt::equals(const Stmt& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case StmtKind::VarDecl:
            return name == o.name && type.equals(o.type) && ptr_equals(init, o.init);
        case StmtKind::Assign:
            return op == o.op && ptr_equals(target, o.target) && ptr_equals(value, o.value);
        case StmtKind::If:
            return ptr_equals(value, o.value) && stmts_equal(body, o.body) &&
                   stmts_equal(else_body, o.else_body);
        case StmtKind::While:
            return ptr_equals(value, o.value) && stmts_equal(body, o.body);
        case StmtKind::ForIn:
            return name == o.name && ptr_equals(value, o.value) && stmts_equal(body, o.body);
        case StmtKind::ExprStmt:
            return ptr_equals(value, o.value);
    }
    return false;
}

bool Decl::equals(const Decl& o) const {
    if (kind != o.kind || name != o.name) return false;
    switch (kind) {
        case DeclKind::Element:
            return true;
        case DeclKind::Const:
            return type.equals(o.type) && ptr_equals(init, o.init);
        case DeclKind::Func: {
            if (params.size() != o.params.size()) return false;
            for (size_t i = 0; i < params.size(); i++) {
                if (params[i].name != o.params[i].name ||
                    !params[i].type.equals(o.params[i].type))
                    return false;
            }
            return stmts_equal(body, o.body);
        }
    }
    return false;
}

bool Program::equals(const Program& o) const {
    if (declarations.size() != o.declarations.size()) return false;
    for (size_t i = 0; i < declarations.size(); i++)
        if (!declarations[i]->equals(*o.declarations[i])) return false;
    return true;
}

const Decl* Program::find_func(const std::string& name) const {
    for (const auto& d : declarations)
        if (d->kind == DeclKind::Func && d->name == name) return d.get();
    return nullptr;
}

const char* to_string(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return "+";
        case BinaryOp::Sub: return "-";
        case BinaryOp::Mul: return "*";
        case BinaryOp::Div: return "/";
        case BinaryOp::Eq: return "==";
        case BinaryOp::Ne: return "!=";
        case BinaryOp::Lt: return "<";
        case BinaryOp::Le: return "<=";
        case BinaryOp::Gt: return ">";
        case BinaryOp::Ge: return ">=";
        case BinaryOp::And: return "&";
        case BinaryOp::Or: return "|";
    }
    return "?";
}

const char* to_string(AssignOp op) {
    switch (op) {
        case AssignOp::Assign: return "=";
        case AssignOp::PlusAssign: return "+=";
        case AssignOp::ReduceMin: return "min=";
        case AssignOp::ReduceMax: return "max=";
    }
    return "?";
}

const char* to_string(ScalarType t) {
    switch (t) {
        case ScalarType::Int: return "int";
        case ScalarType::Float: return "float";
        case ScalarType::Bool: return "bool";
    }
    return "?";
}

std::string to_string(const TypeExpr& t) {
    switch (t.kind) {
        case TypeExpr::Kind::Scalar:
            return to_string(t.scalar);
        case TypeExpr::Kind::VertexSet:
            return "vertexset{" + t.element + "}";
        case TypeExpr::Kind::EdgeSet: {
            std::string s = "edgeset{" + t.element + "}(" + t.src_element + ", " + t.dst_element;
            if (t.weighted) s += ", int";
            return s + ")";
        }
        case TypeExpr::Kind::Vector:
            return "vector{" + t.element + "}(" + to_string(t.scalar) + ")";
    }
    return "?";
}

} // namespace graphitron::fir
