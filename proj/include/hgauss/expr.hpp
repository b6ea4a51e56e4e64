#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgauss/jet.hpp"

namespace hgauss::expr {

enum class UnaryOp { Neg, Sqrt, Ln, Exp, Sin, Cos, Sinh, Cosh, Tanh, Coth };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

using ParamMap = std::map<std::string, double, std::less<>>;

/// Malformed input text. offset() is a byte offset into the parsed string.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string &what);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Evaluation hit ln/sqrt of a non-positive value, a zero divisor, or a
/// non-integer power of a non-positive base. node() is the offending subexpression.
class DomainError : public std::domain_error {
public:
    DomainError(std::string node, const std::string &what);
    const std::string &node() const noexcept { return node_; }

private:
    std::string node_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
    double value;
};
struct Variable {
    std::size_t index;
};
struct Parameter {
    std::size_t index;
};
struct Unary {
    UnaryOp op;
    NodePtr arg;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};

struct Node {
    std::variant<Constant, Variable, Parameter, Unary, Binary> data;
};

/// Immutable expression tree over a declared list of variables (at most two)
/// and named parameters. Copies share the tree.
class Expression {
public:
    Expression(NodePtr root, std::vector<std::string> variables,
               std::vector<std::string> parameters);

    static Expression constant(double c, std::vector<std::string> variables,
                               std::vector<std::string> parameters = {});
    static Expression variable(std::size_t index, std::vector<std::string> variables,
                               std::vector<std::string> parameters = {});

    const Node &root() const { return *root_; }
    const NodePtr &root_ptr() const { return root_; }
    const std::vector<std::string> &variables() const { return variables_; }
    const std::vector<std::string> &parameters() const { return parameters_; }

    std::size_t leaf_count() const;
    bool depends_on_variables() const;
    std::string to_string() const;

private:
    NodePtr root_;
    std::vector<std::string> variables_;
    std::vector<std::string> parameters_;
};

Expression parse(std::string_view text, std::vector<std::string> variables,
                 std::vector<std::string> parameters = {});

/// Plain value at a point. vars holds one value per declared variable.
double eval_value(const Expression &e, std::span<const double> vars, const ParamMap &params = {});
double eval_value(const Expression &e, double x, double y, const ParamMap &params = {});

/// Exact value and partials to order three. The first declared variable maps
/// to the x slot of the jet, the second to y.
Jet3 eval_jet3(const Expression &e, double x, double y, const ParamMap &params = {});

/// Replaces every parameter present in params by a constant node.
Expression bind(const Expression &e, const ParamMap &params);

/// Replaces variable i by replacements[i]. All replacements must share one
/// symbol table, which becomes the symbol table of the result.
Expression substitute(const Expression &e, std::span<const Expression> replacements);

Expression operator+(const Expression &a, const Expression &b);
Expression operator-(const Expression &a, const Expression &b);
Expression operator*(const Expression &a, const Expression &b);
Expression operator/(const Expression &a, const Expression &b);
Expression operator-(const Expression &a);
Expression operator*(double s, const Expression &a);

std::string_view op_name(UnaryOp op);

} // namespace hgauss::expr
