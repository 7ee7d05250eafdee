#ifndef GRAPHITRON_FIR_HPP
#define GRAPHITRON_FIR_HPP

#include <memory>
#include <string>
#include <vector>

#include "graphitron/diagnostics.hpp"

// Front-end IR: the parsed syntax tree, one node per grammar production.
// Nodes keep their source spans; structural equality ignores spans so that
// pretty-print round trips can be compared.

namespace graphitron::fir {

enum class ScalarType { Int, Float, Bool };

// Syntactic type expression.
struct TypeExpr {
    enum class Kind { Scalar, VertexSet, EdgeSet, Vector };
    Kind kind = Kind::Scalar;
    ScalarType scalar = ScalarType::Int;  // Scalar and Vector payload type
    std::string element;                  // element name for VertexSet/EdgeSet/Vector
    std::string src_element;              // EdgeSet endpoint elements
    std::string dst_element;
    bool weighted = false;                // EdgeSet has a third int column
    SourceSpan span;

    bool equals(const TypeExpr& o) const;
};

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind {
    IntLit,
    FloatLit,
    BoolLit,
    StringLit,
    Ident,
    Index,
    Unary,
    Binary,
    Call,        // free call: load(...)
    MethodCall,  // recv.name(args)
    Argv,        // argv[k]
};

enum class BinaryOp { Add, Sub, Mul, Div, Eq, Ne, Lt, Le, Gt, Ge, And, Or };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    ExprKind kind;
    SourceSpan span;

    // Payload slots by kind; a variant of small structs buys little here and
    // the tree is only built by the parser.
    long long int_value = 0;
    double float_value = 0.0;
    bool bool_value = false;
    std::string text;      // Ident name, StringLit contents, Call/MethodCall name
    BinaryOp op = BinaryOp::Add;
    ExprPtr lhs;           // Unary/Binary operand, Index base, MethodCall receiver
    ExprPtr rhs;           // Binary rhs, Index subscript
    std::vector<ExprPtr> args;
    long long argv_index = 0;

    explicit Expr(ExprKind k) : kind(k) {}
    bool equals(const Expr& o) const;
};

ExprPtr clone(const Expr& e);

// ---------------------------------------------------------------------------
// Statements

enum class StmtKind { VarDecl, Assign, If, While, ForIn, ExprStmt };

// Assignment operators; Reduce* require an indexed lvalue, PlusAssign doubles
// as scalar compound assignment.
enum class AssignOp { Assign, PlusAssign, ReduceMin, ReduceMax };

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
    StmtKind kind;
    SourceSpan span;

    std::string name;  // VarDecl variable, ForIn loop variable
    TypeExpr type;     // VarDecl
    ExprPtr init;      // VarDecl initializer (may be null)
    AssignOp op = AssignOp::Assign;
    ExprPtr target;    // Assign lvalue
    ExprPtr value;     // Assign rhs, If/While condition, ForIn iterable, ExprStmt expr
    std::vector<StmtPtr> body;       // If-then, While, ForIn bodies
    std::vector<StmtPtr> else_body;  // If-else

    explicit Stmt(StmtKind k) : kind(k) {}
    bool equals(const Stmt& o) const;
};

// ---------------------------------------------------------------------------
// Declarations

enum class DeclKind { Element, Const, Func };

struct Param {
    std::string name;
    TypeExpr type;
    SourceSpan span;
};

struct Decl {
    DeclKind kind;
    SourceSpan span;
    std::string name;
    TypeExpr type;               // Const
    ExprPtr init;                // Const initializer (may be null)
    std::vector<Param> params;   // Func
    std::vector<StmtPtr> body;   // Func

    explicit Decl(DeclKind k) : kind(k) {}
    bool equals(const Decl& o) const;
};

struct Program {
    std::vector<std::unique_ptr<Decl>> declarations;

    bool equals(const Program& o) const;
    const Decl* find_func(const std::string& name) const;
};

const char* to_string(BinaryOp op);
const char* to_string(AssignOp op);
const char* to_string(ScalarType t);
std::string to_string(const TypeExpr& t);

} // namespace graphitron::fir

#endif
