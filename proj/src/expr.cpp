#include "hgauss/expr.hpp"

#include <algorithm>

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>

namespace hgauss::expr {

ParseError::ParseError(std::size_t offset, const std::string &what)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what),
      offset_(offset)
{
}

DomainError::DomainError(std::string node, const std::string &what)
    : std::domain_error(what + " in '" + node + "'"), node_(std::move(node))
{
}

namespace {

constexpr std::array<std::pair<std::string_view, UnaryOp>, 9> kFunctions{{
    {"sqrt", UnaryOp::Sqrt},
    {"ln", UnaryOp::Ln},
    {"exp", UnaryOp::Exp},
    {"sin", UnaryOp::Sin},
    {"cos", UnaryOp::Cos},
    {"sinh", UnaryOp::Sinh},
    {"cosh", UnaryOp::Cosh},
    {"tanh", UnaryOp::Tanh},
    {"coth", UnaryOp::Coth},
}};

std::optional<UnaryOp> lookup_function(std::string_view name)
{
    for (const auto &[n, op] : kFunctions) {
        if (n == name) return op;
    }
    return std::nullopt;
}

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }
NodePtr make_constant(double c) { return make(Node{Constant{c}}); }
NodePtr make_unary(UnaryOp op, NodePtr a)
{
    if (op == UnaryOp::Neg) {
        if (const auto *c = std::get_if<Constant>(&a->data)) return make_constant(-c->value);
    }
    return make(Node{Unary{op, std::move(a)}});
}
NodePtr make_binary(BinaryOp op, NodePtr l, NodePtr r)
{
    return make(Node{Binary{op, std::move(l), std::move(r)}});
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

constexpr int kAtom = 5;

int precedence(const Node &n)
{
    if (const auto *u = std::get_if<Unary>(&n.data)) return u->op == UnaryOp::Neg ? 3 : kAtom;
    if (const auto *b = std::get_if<Binary>(&n.data)) {
        switch (b->op) {
        case BinaryOp::Add:
        case BinaryOp::Sub: return 1;
        case BinaryOp::Mul:
        case BinaryOp::Div: return 2;
        case BinaryOp::Pow: return 4;
        }
    }
    return kAtom;
}

bool is_neg(const Node &n)
{
    const auto *u = std::get_if<Unary>(&n.data);
    return u != nullptr && u->op == UnaryOp::Neg;
}

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    std::string s(buf.data(), end);
    if (v < 0.0) return "(" + s + ")";
    return s;
}

class Printer {
public:
    Printer(const std::vector<std::string> &vars, const std::vector<std::string> &params)
        : vars_(vars), params_(params)
    {
    }

    std::string print(const Node &n) const
    {
        return std::visit([this](const auto &d) { return this->print_data(d); }, n.data);
    }

private:
    std::string wrap(const Node &n, bool parens) const
    {
        return parens ? "(" + print(n) + ")" : print(n);
    }

    std::string print_data(const Constant &c) const { return format_number(c.value); }
    std::string print_data(const Variable &v) const { return vars_.at(v.index); }
    std::string print_data(const Parameter &p) const { return params_.at(p.index); }

    std::string print_data(const Unary &u) const
    {
        if (u.op == UnaryOp::Neg) return "-" + wrap(*u.arg, precedence(*u.arg) < 3);
        return std::string(op_name(u.op)) + "(" + print(*u.arg) + ")";
    }

    std::string print_data(const Binary &b) const
    {
        if (b.op == BinaryOp::Pow) {
            return wrap(*b.lhs, precedence(*b.lhs) != kAtom) + "^"
                   + wrap(*b.rhs, precedence(*b.rhs) != kAtom);
        }
        const int p = precedence(Node{b});
        const char *sym = b.op == BinaryOp::Add   ? "+"
                          : b.op == BinaryOp::Sub ? "-"
                          : b.op == BinaryOp::Mul ? "*"
                                                  : "/";
        return wrap(*b.lhs, precedence(*b.lhs) < p) + sym
               + wrap(*b.rhs, precedence(*b.rhs) <= p || is_neg(*b.rhs));
    }

    const std::vector<std::string> &vars_;
    const std::vector<std::string> &params_;
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string> &vars,
           const std::vector<std::string> &params)
        : text_(text), vars_(vars), params_(params)
    {
    }

    NodePtr run()
    {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(pos_, what); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_expr()
    {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+')) lhs = make_binary(BinaryOp::Add, lhs, parse_term());
            else if (accept('-')) lhs = make_binary(BinaryOp::Sub, lhs, parse_term());
            else return lhs;
        }
    }

    NodePtr parse_term()
    {
        NodePtr lhs = parse_factor();
        for (;;) {
            if (accept('*')) lhs = make_binary(BinaryOp::Mul, lhs, parse_factor());
            else if (accept('/')) lhs = make_binary(BinaryOp::Div, lhs, parse_factor());
            else return lhs;
        }
    }

    // Unary minus binds looser than '^': -x^2 is -(x^2).
    NodePtr parse_factor()
    {
        if (accept('-')) return make_unary(UnaryOp::Neg, parse_factor());
        NodePtr base = parse_primary();
        if (accept('^')) return make_binary(BinaryOp::Pow, base, parse_exponent());
        return base;
    }

    NodePtr parse_exponent()
    {
        if (accept('-')) return make_unary(UnaryOp::Neg, parse_exponent());
        return parse_primary();
    }

    NodePtr parse_primary()
    {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr parse_number()
    {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) fail("malformed number");
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) fail("malformed exponent");
        }
        double value = 0.0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc{}) {
            pos_ = start;
            fail("number out of range");
        }
        return make_constant(value);
    }

    NodePtr parse_identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto fn = lookup_function(name);
        skip_ws();
        const bool call = pos_ < text_.size() && text_[pos_] == '(';
        if (fn) {
            if (!call) {
                pos_ = start;
                fail("function '" + std::string(name) + "' takes exactly one argument in parentheses");
            }
            ++pos_;
            NodePtr arg = parse_expr();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                fail("arity mismatch: '" + std::string(name) + "' takes exactly one argument");
            }
            if (!accept(')')) fail("expected ')'");
            return make_unary(*fn, std::move(arg));
        }
        if (call) {
            pos_ = start;
            fail("unknown function '" + std::string(name) + "'");
        }
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == name) return make(Node{Variable{i}});
        }
        for (std::size_t i = 0; i < params_.size(); ++i) {
            if (params_[i] == name) return make(Node{Parameter{i}});
        }
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
    }

    std::string_view text_;
    const std::vector<std::string> &vars_;
    const std::vector<std::string> &params_;
    std::size_t pos_ = 0;
};

void validate_symbols(const std::vector<std::string> &vars, const std::vector<std::string> &params)
{
    if (vars.size() > 2) throw std::invalid_argument("at most two variables are supported");
    auto check = [](const std::string &s) {
        if (s.empty()) throw std::invalid_argument("empty symbol name");
        if (lookup_function(s)) throw std::invalid_argument("symbol '" + s + "' shadows a function");
    };
    std::vector<std::string> seen;
    for (const auto *list : {&vars, &params}) {
        for (const auto &s : *list) {
            check(s);
            if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
                throw std::invalid_argument("symbol '" + s + "' declared twice");
            }
            seen.push_back(s);
        }
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

std::vector<double> resolve_params(const Expression &e, const ParamMap &params)
{
    std::vector<double> out;
    out.reserve(e.parameters().size());
    for (const auto &name : e.parameters()) {
        const auto it = params.find(name);
        if (it == params.end()) throw std::invalid_argument("unbound parameter '" + name + "'");
        out.push_back(it->second);
    }
    return out;
}

bool has_variable(const Node &n)
{
    if (std::holds_alternative<Variable>(n.data)) return true;
    if (const auto *u = std::get_if<Unary>(&n.data)) return has_variable(*u->arg);
    if (const auto *b = std::get_if<Binary>(&n.data)) return has_variable(*b->lhs) || has_variable(*b->rhs);
    return false;
}

std::optional<long> as_integer(double v)
{
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) <= 1 << 30) return static_cast<long>(v);
    return std::nullopt;
}

template <typename T>
T integer_power(T base, long n, T one)
{
    T result = one;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

class Evaluator {
public:
    Evaluator(const Expression &e, std::vector<double> params) : e_(e), params_(std::move(params)) {}

    [[noreturn]] void domain(const Node &n, const std::string &what) const
    {
        throw DomainError(Printer(e_.variables(), e_.parameters()).print(n), what);
    }

    // --- plain values -----------------------------------------------------

    double value(const Node &n, std::span<const double> vars) const
    {
        if (const auto *c = std::get_if<Constant>(&n.data)) return c->value;
        if (const auto *v = std::get_if<Variable>(&n.data)) return vars[v->index];
        if (const auto *p = std::get_if<Parameter>(&n.data)) return params_[p->index];
        if (const auto *u = std::get_if<Unary>(&n.data)) {
            const double a = value(*u->arg, vars);
            switch (u->op) {
            case UnaryOp::Neg: return -a;
            case UnaryOp::Sqrt:
                if (a < 0.0) domain(n, "sqrt of negative value");
                return std::sqrt(a);
            case UnaryOp::Ln:
                if (a <= 0.0) domain(n, "ln of non-positive value");
                return std::log(a);
            case UnaryOp::Exp: return std::exp(a);
            case UnaryOp::Sin: return std::sin(a);
            case UnaryOp::Cos: return std::cos(a);
            case UnaryOp::Sinh: return std::sinh(a);
            case UnaryOp::Cosh: return std::cosh(a);
            case UnaryOp::Tanh: return std::tanh(a);
            case UnaryOp::Coth:
                if (a == 0.0) domain(n, "coth at zero");
                return 1.0 / std::tanh(a);
            }
        }
        const auto &b = std::get<Binary>(n.data);
        const double l = value(*b.lhs, vars);
        const double r = value(*b.rhs, vars);
        switch (b.op) {
        case BinaryOp::Add: return l + r;
        case BinaryOp::Sub: return l - r;
        case BinaryOp::Mul: return l * r;
        case BinaryOp::Div:
            if (r == 0.0) domain(n, "division by zero");
            return l / r;
        case BinaryOp::Pow: {
            if (const auto k = as_integer(r)) {
                if (*k < 0) {
                    if (l == 0.0) domain(n, "negative power of zero");
                    return 1.0 / integer_power(l, -*k, 1.0);
                }
                return integer_power(l, *k, 1.0);
            }
            if (l < 0.0 || (l == 0.0 && r < 0.0)) domain(n, "non-integer power of non-positive base");
            return std::pow(l, r);
        }
        }
        return 0.0;
    }

    // --- jets -------------------------------------------------------------

    Jet3 jet(const Node &n, const std::array<Jet3, 2> &vars) const
    {
        if (const auto *c = std::get_if<Constant>(&n.data)) return Jet3::constant(c->value);
        if (const auto *v = std::get_if<Variable>(&n.data)) return vars[v->index];
        if (const auto *p = std::get_if<Parameter>(&n.data)) return Jet3::constant(params_[p->index]);
        if (const auto *u = std::get_if<Unary>(&n.data)) return unary_jet(n, *u, jet(*u->arg, vars));
        const auto &b = std::get<Binary>(n.data);
        if (b.op == BinaryOp::Pow) return pow_jet(n, b, vars);
        const Jet3 l = jet(*b.lhs, vars);
        const Jet3 r = jet(*b.rhs, vars);
        switch (b.op) {
        case BinaryOp::Add: return l + r;
        case BinaryOp::Sub: return l - r;
        case BinaryOp::Mul: return l * r;
        case BinaryOp::Div: return l * reciprocal(n, r);
        case BinaryOp::Pow: break;
        }
        return {};
    }

private:
    Jet3 reciprocal(const Node &n, const Jet3 &a) const
    {
        if (a.f == 0.0) domain(n, "division by zero");
        const double i = 1.0 / a.f;
        return compose(a, i, -i * i, 2.0 * i * i * i, -6.0 * i * i * i * i);
    }

    Jet3 unary_jet(const Node &n, const Unary &u, const Jet3 &a) const
    {
        const double x = a.f;
        switch (u.op) {
        case UnaryOp::Neg: return -a;
        case UnaryOp::Sqrt: {
            if (x <= 0.0) domain(n, "sqrt jet needs a positive argument");
            const double s = std::sqrt(x);
            return compose(a, s, 0.5 / s, -0.25 / (x * s), 0.375 / (x * x * s));
        }
        case UnaryOp::Ln:
            if (x <= 0.0) domain(n, "ln of non-positive value");
            return compose(a, std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x));
        case UnaryOp::Exp: {
            const double e = std::exp(x);
            return compose(a, e, e, e, e);
        }
        case UnaryOp::Sin: {
            const double s = std::sin(x), c = std::cos(x);
            return compose(a, s, c, -s, -c);
        }
        case UnaryOp::Cos: {
            const double s = std::sin(x), c = std::cos(x);
            return compose(a, c, -s, -c, s);
        }
        case UnaryOp::Sinh: {
            const double s = std::sinh(x), c = std::cosh(x);
            return compose(a, s, c, s, c);
        }
        case UnaryOp::Cosh: {
            const double s = std::sinh(x), c = std::cosh(x);
            return compose(a, c, s, c, s);
        }
        case UnaryOp::Tanh: {
            const double t = std::tanh(x);
            const double d = 1.0 - t * t;
            return compose(a, t, d, -2.0 * t * d, d * (6.0 * t * t - 2.0));
        }
        case UnaryOp::Coth: {
            // Same derivative pattern as tanh, since coth' = 1 - coth^2.
            if (x == 0.0) domain(n, "coth at zero");
            const double t = 1.0 / std::tanh(x);
            const double d = 1.0 - t * t;
            return compose(a, t, d, -2.0 * t * d, d * (6.0 * t * t - 2.0));
        }
        }
        return {};
    }

    Jet3 pow_jet(const Node &n, const Binary &b, const std::array<Jet3, 2> &vars) const
    {
        const Jet3 base = jet(*b.lhs, vars);
        if (!has_variable(*b.rhs)) {
            const double r = value(*b.rhs, {});
            if (const auto k = as_integer(r)) {
                if (*k < 0) return reciprocal(n, integer_power(base, -*k, Jet3::constant(1.0)));
                return integer_power(base, *k, Jet3::constant(1.0));
            }
            const double x = base.f;
            if (x <= 0.0) domain(n, "non-integer power of non-positive base");
            const double g0 = std::pow(x, r);
            return compose(base, g0, r * g0 / x, r * (r - 1.0) * g0 / (x * x),
                           r * (r - 1.0) * (r - 2.0) * g0 / (x * x * x));
        }
        if (base.f <= 0.0) domain(n, "variable power of non-positive base");
        const Jet3 lnb = compose(base, std::log(base.f), 1.0 / base.f, -1.0 / (base.f * base.f),
                                 2.0 / (base.f * base.f * base.f));
        const Jet3 t = jet(*b.rhs, vars) * lnb;
        const double e = std::exp(t.f);
        return compose(t, e, e, e, e);
    }

    const Expression &e_;
    std::vector<double> params_;
};

std::size_t count_leaves(const Node &n)
{
    if (const auto *u = std::get_if<Unary>(&n.data)) return count_leaves(*u->arg);
    if (const auto *b = std::get_if<Binary>(&n.data)) return count_leaves(*b->lhs) + count_leaves(*b->rhs);
    return 1;
}

NodePtr bind_node(const NodePtr &n, const std::vector<std::optional<double>> &values,
                  const std::vector<std::size_t> &remap)
{
    if (const auto *p = std::get_if<Parameter>(&n->data)) {
        if (values[p->index]) return make_constant(*values[p->index]);
        return make(Node{Parameter{remap[p->index]}});
    }
    if (const auto *u = std::get_if<Unary>(&n->data)) return make(Node{Unary{u->op, bind_node(u->arg, values, remap)}});
    if (const auto *b = std::get_if<Binary>(&n->data)) {
        return make_binary(b->op, bind_node(b->lhs, values, remap), bind_node(b->rhs, values, remap));
    }
    return n;
}

NodePtr substitute_node(const NodePtr &n, std::span<const Expression> repl,
                        const std::vector<std::size_t> &param_remap)
{
    if (const auto *v = std::get_if<Variable>(&n->data)) return repl[v->index].root_ptr();
    if (const auto *p = std::get_if<Parameter>(&n->data)) return make(Node{Parameter{param_remap[p->index]}});
    if (const auto *u = std::get_if<Unary>(&n->data)) {
        return make(Node{Unary{u->op, substitute_node(u->arg, repl, param_remap)}});
    }
    if (const auto *b = std::get_if<Binary>(&n->data)) {
        return make_binary(b->op, substitute_node(b->lhs, repl, param_remap),
                           substitute_node(b->rhs, repl, param_remap));
    }
    return n;
}

Expression combine(BinaryOp op, const Expression &a, const Expression &b)
{
    if (a.variables() != b.variables() || a.parameters() != b.parameters()) {
        throw std::invalid_argument("cannot combine expressions over different symbol tables");
    }
    return Expression(make_binary(op, a.root_ptr(), b.root_ptr()), a.variables(), a.parameters());
}

} // namespace

std::string_view op_name(UnaryOp op)
{
    if (op == UnaryOp::Neg) return "-";
    for (const auto &[n, o] : kFunctions) {
        if (o == op) return n;
    }
    return "?";
}

Expression::Expression(NodePtr root, std::vector<std::string> variables,
                       std::vector<std::string> parameters)
    : root_(std::move(root)), variables_(std::move(variables)), parameters_(std::move(parameters))
{
    validate_symbols(variables_, parameters_);
}

Expression Expression::constant(double c, std::vector<std::string> variables,
                                std::vector<std::string> parameters)
{
    return {make_constant(c), std::move(variables), std::move(parameters)};
}

Expression Expression::variable(std::size_t index, std::vector<std::string> variables,
                                std::vector<std::string> parameters)
{
    if (index >= variables.size()) throw std::out_of_range("variable index");
    return {make(Node{Variable{index}}), std::move(variables), std::move(parameters)};
}

std::size_t Expression::leaf_count() const { return count_leaves(*root_); }
bool Expression::depends_on_variables() const { return has_variable(*root_); }
std::string Expression::to_string() const { return Printer(variables_, parameters_).print(*root_); }

Expression parse(std::string_view text, std::vector<std::string> variables,
                 std::vector<std::string> parameters)
{
    validate_symbols(variables, parameters);
    NodePtr root = Parser(text, variables, parameters).run();
    return {std::move(root), std::move(variables), std::move(parameters)};
}

double eval_value(const Expression &e, std::span<const double> vars, const ParamMap &params)
{
    if (vars.size() != e.variables().size()) throw std::invalid_argument("variable count mismatch");
    return Evaluator(e, resolve_params(e, params)).value(e.root(), vars);
}

double eval_value(const Expression &e, double x, double y, const ParamMap &params)
{
    const std::array<double, 2> xy{x, y};
    return eval_value(e, std::span<const double>(xy.data(), e.variables().size()), params);
}

Jet3 eval_jet3(const Expression &e, double x, double y, const ParamMap &params)
{
    const std::array<Jet3, 2> vars{Jet3::variable_x(x), Jet3::variable_y(y)};
    return Evaluator(e, resolve_params(e, params)).jet(e.root(), vars);
}

Expression bind(const Expression &e, const ParamMap &params)
{
    std::vector<std::optional<double>> values;
    std::vector<std::size_t> remap;
    std::vector<std::string> remaining;
    for (const auto &name : e.parameters()) {
        const auto it = params.find(name);
        values.push_back(it == params.end() ? std::nullopt : std::optional<double>(it->second));
        remap.push_back(remaining.size());
        if (it == params.end()) remaining.push_back(name);
    }
    return {bind_node(e.root_ptr(), values, remap), e.variables(), std::move(remaining)};
}

Expression substitute(const Expression &e, std::span<const Expression> replacements)
{
    if (replacements.size() != e.variables().size()) {
        throw std::invalid_argument("one replacement per variable is required");
    }
    if (replacements.empty()) return e;
    const auto &vars = replacements.front().variables();
    std::vector<std::string> params = replacements.front().parameters();
    for (const auto &r : replacements) {
        if (r.variables() != vars || r.parameters() != params) {
            throw std::invalid_argument("replacements must share one symbol table");
        }
    }
    std::vector<std::size_t> remap;
    for (const auto &name : e.parameters()) {
        std::size_t idx = params.size();
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (params[i] == name) idx = i;
        }
        if (idx == params.size()) params.push_back(name);
        remap.push_back(idx);
    }
    return {substitute_node(e.root_ptr(), replacements, remap), vars, std::move(params)};
}

Expression operator+(const Expression &a, const Expression &b) { return combine(BinaryOp::Add, a, b); }
Expression operator-(const Expression &a, const Expression &b) { return combine(BinaryOp::Sub, a, b); }
Expression operator*(const Expression &a, const Expression &b) { return combine(BinaryOp::Mul, a, b); }
Expression operator/(const Expression &a, const Expression &b) { return combine(BinaryOp::Div, a, b); }

Expression operator-(const Expression &a)
{
    return {make_unary(UnaryOp::Neg, a.root_ptr()), a.variables(), a.parameters()};
}

Expression operator*(double s, const Expression &a)
{
    return Expression::constant(s, a.variables(), a.parameters()) * a;
}

} // namespace hgauss::expr
