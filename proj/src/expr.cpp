#include <intervalkit/expr.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace intervalkit {

namespace {

// ---- Lexer -----------------------------------------------------------------

enum class Tok { Number, Ident, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::string_view text;
    double number = 0.0;
    bool integral = false; ///< digits only, usable as an exponent
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
            bool integral = true;
            while (i < src.size() && is_digit(src[i]))
                ++i;
            if (i < src.size() && src[i] == '.') {
                integral = false;
                ++i;
                while (i < src.size() && is_digit(src[i]))
                    ++i;
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < src.size() && (src[j] == '+' || src[j] == '-'))
                    ++j;
                if (j < src.size() && is_digit(src[j])) {
                    integral = false;
                    i = j;
                    while (i < src.size() && is_digit(src[i]))
                        ++i;
                }
            }
            Token tok{Tok::Number, start, src.substr(start, i - start)};
            auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.number);
            if (res.ec != std::errc() || !std::isfinite(tok.number))
                throw SyntaxError(start, "number out of range");
            tok.integral = integral;
            out.push_back(tok);
            continue;
        }
        if (is_alpha(c)) {
            while (i < src.size() && (is_alpha(src[i]) || is_digit(src[i])))
                ++i;
            out.push_back({Tok::Ident, start, src.substr(start, i - start)});
            continue;
        }
        static constexpr std::string_view punct = "+-*/^()[]<>,;";
        if (punct.find(c) == std::string_view::npos)
            throw SyntaxError(start, std::string("unexpected character '") + c + "'");
        out.push_back({Tok::Punct, start, src.substr(start, 1)});
        ++i;
    }
    out.push_back({Tok::End, src.size(), {}});
    return out;
}

// ---- Functions ---------------------------------------------------------------

struct FuncInfo {
    std::string_view name;
    Func fn;
    std::size_t arity;
};

constexpr std::array<FuncInfo, 12> functions{{
    {"sin", Func::Sin, 1},
    {"cos", Func::Cos, 1},
    {"exp", Func::Exp, 1},
    {"ln", Func::Ln, 1},
    {"abs", Func::Abs, 1},
    {"madd", Func::Madd, 2},
    {"msub", Func::Msub, 2},
    {"hsub", Func::Hsub, 2},
    {"ghsub", Func::Ghsub, 2},
    {"mmul", Func::Mmul, 2},
    {"mdiv", Func::Mdiv, 2},
    {"smul", Func::Smul, 2},
}};

const FuncInfo* find_function(std::string_view name)
{
    for (const auto& f : functions)
        if (f.name == name)
            return &f;
    return nullptr;
}

std::string_view function_name(Func fn)
{
    for (const auto& f : functions)
        if (f.fn == fn)
            return f.name;
    return "?";
}

bool is_transcendental(Func fn)
{
    return fn == Func::Sin || fn == Func::Cos || fn == Func::Exp || fn == Func::Ln || fn == Func::Abs;
}

// ---- Parser ------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Expr parse_all()
    {
        Expr e = expr();
        if (peek().kind != Tok::End)
            fail("unexpected '" + std::string(peek().text) + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    bool at_punct(char c) const
    {
        const Token& t = peek();
        return t.kind == Tok::Punct && t.text[0] == c;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(peek().offset, msg); }

    void expect(char c)
    {
        if (!at_punct(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    static std::shared_ptr<ExprNode> node(NodeKind kind, std::size_t offset)
    {
        auto n = std::make_shared<ExprNode>();
        n->kind = kind;
        n->offset = offset;
        return n;
    }

    Expr expr()
    {
        Expr lhs = term();
        while (at_punct('+') || at_punct('-')) {
            auto n = node(NodeKind::Binary, peek().offset);
            n->op = at_punct('+') ? BinaryOp::Add : BinaryOp::Sub;
            ++pos_;
            n->children = {lhs, term()};
            lhs = n;
        }
        return lhs;
    }

    Expr term()
    {
        Expr lhs = factor();
        while (at_punct('*') || at_punct('/')) {
            auto n = node(NodeKind::Binary, peek().offset);
            n->op = at_punct('*') ? BinaryOp::Mul : BinaryOp::Div;
            ++pos_;
            n->children = {lhs, factor()};
            lhs = n;
        }
        return lhs;
    }

    Expr factor()
    {
        Expr base = unary();
        if (!at_punct('^'))
            return base;
        auto n = node(NodeKind::Power, peek().offset);
        ++pos_;
        const Token& tok = peek();
        if (tok.kind != Tok::Number || !tok.integral)
            fail("exponent must be a non-negative integer");
        unsigned value = 0;
        auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (res.ec != std::errc())
            fail("exponent too large");
        ++pos_;
        n->exponent = value;
        n->children = {base};
        return n;
    }

    Expr unary()
    {
        if (at_punct('-')) {
            auto n = node(NodeKind::Neg, peek().offset);
            ++pos_;
            n->children = {atom()};
            return n;
        }
        return atom();
    }

    // Optional sign followed by a number token.
    std::optional<double> signed_number()
    {
        std::size_t save = pos_;
        double sign = 1.0;
        if (at_punct('-') || at_punct('+')) {
            sign = at_punct('-') ? -1.0 : 1.0;
            ++pos_;
        }
        if (peek().kind != Tok::Number) {
            pos_ = save;
            return std::nullopt;
        }
        double v = sign * peek().number;
        ++pos_;
        return v;
    }

    // '[' num ',' num ']' or '<' num ';' num '>'; restores the position and
    // returns null when the contents are not plain numbers.
    Expr try_literal(char open, char sep, char close)
    {
        std::size_t save = pos_;
        std::size_t offset = peek().offset;
        ++pos_;
        auto a = signed_number();
        if (a && at_punct(sep)) {
            ++pos_;
            auto b = signed_number();
            if (b && at_punct(close)) {
                ++pos_;
                auto n = node(NodeKind::IntervalLit, offset);
                n->first = *a;
                n->second = *b;
                n->center_radius = open == '<';
                n->interval = n->center_radius ? Interval::from_center_radius(*a, *b)
                                               : Interval::from_endpoints(*a, *b);
                n->param_id = next_param_++;
                return n;
            }
        }
        pos_ = save;
        return nullptr;
    }

    Expr bracket(char open, char sep, char close)
    {
        if (Expr lit = try_literal(open, sep, close))
            return lit;
        auto n = node(NodeKind::EndpointPair, peek().offset);
        n->center_radius = open == '<';
        ++pos_;
        Expr a = expr();
        expect(sep);
        Expr b = expr();
        expect(close);
        n->children = {a, b};
        return n;
    }

    Expr atom()
    {
        const Token& tok = peek();
        switch (tok.kind) {
        case Tok::Number: {
            auto n = node(NodeKind::RealLit, tok.offset);
            n->value = tok.number;
            ++pos_;
            return n;
        }
        case Tok::Ident:
            return identifier();
        case Tok::Punct:
            if (at_punct('(')) {
                ++pos_;
                Expr e = expr();
                expect(')');
                return e;
            }
            if (at_punct('['))
                return bracket('[', ',', ']');
            if (at_punct('<'))
                return bracket('<', ';', '>');
            fail("unexpected '" + std::string(tok.text) + "'");
        case Tok::End:
            fail("unexpected end of input");
        }
        fail("unexpected token");
    }

    Expr identifier()
    {
        const Token& tok = peek();
        std::string_view name = tok.text;
        if (name == "t" || name == "x") {
            auto n = node(NodeKind::Var, tok.offset);
            n->var = name[0];
            ++pos_;
            return n;
        }
        if (name == "pi" || name == "e") {
            auto n = node(NodeKind::RealLit, tok.offset);
            n->value = name == "pi" ? std::numbers::pi : std::numbers::e;
            ++pos_;
            return n;
        }
        const FuncInfo* info = find_function(name);
        if (info == nullptr)
            fail("unknown identifier '" + std::string(name) + "'");
        auto n = node(NodeKind::Call, tok.offset);
        n->fn = info->fn;
        ++pos_;
        expect('(');
        n->children.push_back(expr());
        while (at_punct(',')) {
            ++pos_;
            n->children.push_back(expr());
        }
        if (n->children.size() != info->arity)
            throw SyntaxError(n->offset, std::string(name) + " takes " + std::to_string(info->arity)
                                             + " argument(s)");
        expect(')');
        return n;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t next_param_ = 0;
};

// ---- Shared helpers ------------------------------------------------------------

double finite_or_throw(double v, const ExprNode& n)
{
    if (!std::isfinite(v))
        throw Error(ErrorCode::NonFinite, "non-finite value at offset " + std::to_string(n.offset));
    return v;
}

double apply_real(Func fn, double v, const ExprNode& n)
{
    switch (fn) {
    case Func::Sin: return std::sin(v);
    case Func::Cos: return std::cos(v);
    case Func::Exp: return finite_or_throw(std::exp(v), n);
    case Func::Ln:
        if (!(v > 0.0))
            throw Error(ErrorCode::MathDomain, "ln of non-positive value " + format_real(v));
        return std::log(v);
    case Func::Abs: return std::abs(v);
    default: break;
    }
    throw Error(ErrorCode::TypeError, "not a unary real function");
}

double real_binary(BinaryOp op, double a, double b, const ExprNode& n)
{
    switch (op) {
    case BinaryOp::Add: return finite_or_throw(a + b, n);
    case BinaryOp::Sub: return finite_or_throw(a - b, n);
    case BinaryOp::Mul: return finite_or_throw(a * b, n);
    case BinaryOp::Div:
        if (b == 0.0)
            throw Error(ErrorCode::DivisionUndefined, "division by zero at offset " + std::to_string(n.offset));
        return finite_or_throw(a / b, n);
    }
    return 0.0;
}

// Classical two-argument functions applied to points reduce to real arithmetic.
double real_classical(Func fn, double a, double b, const ExprNode& n)
{
    switch (fn) {
    case Func::Madd: return real_binary(BinaryOp::Add, a, b, n);
    case Func::Msub:
    case Func::Hsub:
    case Func::Ghsub: return real_binary(BinaryOp::Sub, a, b, n);
    case Func::Mmul:
    case Func::Smul: return real_binary(BinaryOp::Mul, a, b, n);
    case Func::Mdiv:
        if (b == 0.0)
            throw Error(ErrorCode::MooreDivByZeroSpanning, "mdiv by zero");
        return finite_or_throw(a / b, n);
    default: break;
    }
    throw Error(ErrorCode::TypeError, "not a classical function");
}

ExtendedInterval moore_classical(Func fn, const ExtendedInterval& a, const ExtendedInterval& b)
{
    switch (fn) {
    case Func::Madd: return moore_add(a, b);
    case Func::Msub: return moore_sub(a, b);
    case Func::Hsub: return h_sub(a, b);
    case Func::Ghsub: return gh_sub(a, b);
    case Func::Mmul: return moore_mul(a, b);
    case Func::Mdiv: return moore_div(a, b);
    default: break;
    }
    throw Error(ErrorCode::TypeError, "not a classical function");
}

ExtendedInterval literal_endpoints(const ExprNode& n)
{
    if (n.center_radius)
        return {n.first - n.second, n.first + n.second};
    return {n.first, n.second};
}

// ---- New-arithmetic evaluator ----------------------------------------------------

struct NewEval {
    const Env& env;

    static Interval as_interval(const EvalValue& v)
    {
        if (const auto* r = std::get_if<double>(&v))
            return from_real(*r);
        return std::get<Interval>(v);
    }

    static ExtendedInterval as_pair(const EvalValue& v)
    {
        if (const auto* r = std::get_if<double>(&v))
            return ExtendedInterval::point(*r);
        return std::get<Interval>(v).endpoints();
    }

    double real_arg(const Expr& e, const ExprNode& call) const
    {
        EvalValue v = eval(e);
        if (const auto* r = std::get_if<double>(&v))
            return *r;
        throw Error(ErrorCode::TypeError, std::string(function_name(call.fn))
                                              + " does not accept an interval argument");
    }

    EvalValue eval(const Expr& e) const
    {
        const ExprNode& n = *e;
        switch (n.kind) {
        case NodeKind::RealLit: return n.value;
        case NodeKind::IntervalLit: return n.interval;
        case NodeKind::EndpointPair: {
            EvalValue a = eval(n.children[0]);
            EvalValue b = eval(n.children[1]);
            if (!std::holds_alternative<double>(a) || !std::holds_alternative<double>(b))
                throw Error(ErrorCode::TypeError, "interval bounds must be real");
            double p = std::get<double>(a);
            double q = std::get<double>(b);
            return n.center_radius ? Interval::from_center_radius(p, q) : Interval::from_endpoints(p, q);
        }
        case NodeKind::Var:
            if (n.var == 't') {
                if (!env.t)
                    throw Error(ErrorCode::UnboundVariable, "variable t is not bound");
                return *env.t;
            }
            if (!env.x)
                throw Error(ErrorCode::UnboundVariable, "variable x is not bound");
            return *env.x;
        case NodeKind::Neg: {
            EvalValue v = eval(n.children[0]);
            if (const auto* r = std::get_if<double>(&v))
                return -*r;
            return neg(std::get<Interval>(v));
        }
        case NodeKind::Binary: {
            EvalValue a = eval(n.children[0]);
            EvalValue b = eval(n.children[1]);
            if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b))
                return real_binary(n.op, std::get<double>(a), std::get<double>(b), n);
            Interval x = as_interval(a);
            Interval y = as_interval(b);
            switch (n.op) {
            case BinaryOp::Add: return add(x, y);
            case BinaryOp::Sub: return sub(x, y);
            case BinaryOp::Mul: return mul(x, y);
            case BinaryOp::Div: return div(x, y);
            }
            break;
        }
        case NodeKind::Power: {
            EvalValue v = eval(n.children[0]);
            if (const auto* r = std::get_if<double>(&v))
                return finite_or_throw(std::pow(*r, static_cast<double>(n.exponent)), n);
            return pow_n(std::get<Interval>(v), n.exponent);
        }
        case NodeKind::Call: {
            if (is_transcendental(n.fn))
                return apply_real(n.fn, real_arg(n.children[0], n), n);
            EvalValue a = eval(n.children[0]);
            EvalValue b = eval(n.children[1]);
            bool ra = std::holds_alternative<double>(a);
            bool rb = std::holds_alternative<double>(b);
            if (ra && rb)
                return real_classical(n.fn, std::get<double>(a), std::get<double>(b), n);
            ExtendedInterval r;
            if (n.fn == Func::Smul) {
                if (!ra && !rb)
                    throw Error(ErrorCode::TypeError, "smul needs a real factor");
                r = ra ? moore_scalar(std::get<double>(a), as_pair(b))
                       : moore_scalar(std::get<double>(b), as_pair(a));
            } else {
                r = moore_classical(n.fn, as_pair(a), as_pair(b));
            }
            return Interval::from_endpoints(r.lo, r.hi);
        }
        }
        throw Error(ErrorCode::TypeError, "malformed expression");
    }
};

// ---- Parametric evaluator ---------------------------------------------------------

struct ParamEval {
    double t;
    double x;
    const std::vector<double>& params;

    double eval(const Expr& e) const
    {
        const ExprNode& n = *e;
        switch (n.kind) {
        case NodeKind::RealLit: return n.value;
        case NodeKind::IntervalLit: return params[n.param_id];
        case NodeKind::EndpointPair:
            throw Error(ErrorCode::TypeError, "computed interval bounds have no parametric form");
        case NodeKind::Var: return n.var == 't' ? t : x;
        case NodeKind::Neg: return -eval(n.children[0]);
        case NodeKind::Binary: return real_binary(n.op, eval(n.children[0]), eval(n.children[1]), n);
        case NodeKind::Power:
            return finite_or_throw(std::pow(eval(n.children[0]), static_cast<double>(n.exponent)), n);
        case NodeKind::Call:
            if (is_transcendental(n.fn))
                return apply_real(n.fn, eval(n.children[0]), n);
            return real_classical(n.fn, eval(n.children[0]), eval(n.children[1]), n);
        }
        throw Error(ErrorCode::TypeError, "malformed expression");
    }
};

// ---- Moore evaluator ------------------------------------------------------------------

struct MooreValue {
    ExtendedInterval v;
    bool real = false;
};

struct MooreEval {
    double t;
    std::optional<ExtendedInterval> x;

    static MooreValue real(double v) { return {ExtendedInterval::point(v), true}; }

    MooreValue eval(const Expr& e) const
    {
        const ExprNode& n = *e;
        switch (n.kind) {
        case NodeKind::RealLit: return real(n.value);
        case NodeKind::IntervalLit: return {literal_endpoints(n), false};
        case NodeKind::EndpointPair: {
            MooreValue a = eval(n.children[0]);
            MooreValue b = eval(n.children[1]);
            if (!a.real || !b.real)
                throw Error(ErrorCode::TypeError, "interval bounds must be real");
            double p = a.v.lo;
            double q = b.v.lo;
            if (n.center_radius) {
                if (q < 0.0)
                    throw Error(ErrorCode::InvalidInterval, "negative radius " + format_real(q));
                return {{p - q, p + q}, false};
            }
            return {ExtendedInterval(p, q), false};
        }
        case NodeKind::Var:
            if (n.var == 't')
                return real(t);
            if (!x)
                throw Error(ErrorCode::UnboundVariable, "variable x is not bound");
            return {*x, false};
        case NodeKind::Neg: {
            MooreValue v = eval(n.children[0]);
            return {moore_neg(v.v), v.real};
        }
        case NodeKind::Binary: {
            MooreValue a = eval(n.children[0]);
            MooreValue b = eval(n.children[1]);
            if (a.real && b.real)
                return real(real_binary(n.op, a.v.lo, b.v.lo, n));
            switch (n.op) {
            case BinaryOp::Add: return {moore_add(a.v, b.v), false};
            case BinaryOp::Sub: return {moore_sub(a.v, b.v), false};
            case BinaryOp::Mul: return {moore_mul(a.v, b.v), false};
            case BinaryOp::Div: return {moore_div(a.v, b.v), false};
            }
            break;
        }
        case NodeKind::Power: {
            MooreValue base = eval(n.children[0]);
            if (base.real)
                return real(finite_or_throw(std::pow(base.v.lo, static_cast<double>(n.exponent)), n));
            ExtendedInterval acc = ExtendedInterval::point(1.0);
            for (unsigned i = 0; i < n.exponent; ++i)
                acc = moore_mul(acc, base.v);
            return {acc, false};
        }
        case NodeKind::Call: {
            if (is_transcendental(n.fn)) {
                MooreValue a = eval(n.children[0]);
                if (!a.real)
                    throw Error(ErrorCode::TypeError, std::string(function_name(n.fn))
                                                          + " does not accept an interval argument");
                return real(apply_real(n.fn, a.v.lo, n));
            }
            MooreValue a = eval(n.children[0]);
            MooreValue b = eval(n.children[1]);
            if (a.real && b.real)
                return real(real_classical(n.fn, a.v.lo, b.v.lo, n));
            if (n.fn == Func::Smul) {
                if (a.real)
                    return {moore_scalar(a.v.lo, b.v), false};
                if (b.real)
                    return {moore_scalar(b.v.lo, a.v), false};
                throw Error(ErrorCode::TypeError, "smul needs a real factor");
            }
            return {moore_classical(n.fn, a.v, b.v), false};
        }
        }
        throw Error(ErrorCode::TypeError, "malformed expression");
    }
};

void collect_literals(const Expr& e, std::vector<const ExprNode*>& out)
{
    if (e->kind == NodeKind::IntervalLit)
        out.push_back(e.get());
    for (const auto& c : e->children)
        collect_literals(c, out);
}

std::string_view op_text(BinaryOp op)
{
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    }
    return "?";
}

} // namespace

Expr parse(std::string_view src)
{
    Parser p(src);
    return p.parse_all();
}

std::string render(const Expr& e)
{
    const ExprNode& n = *e;
    switch (n.kind) {
    case NodeKind::RealLit: return format_real(n.value);
    case NodeKind::IntervalLit:
        if (n.center_radius)
            return "<" + format_real(n.first) + ";" + format_real(n.second) + ">";
        return "[" + format_real(n.first) + "," + format_real(n.second) + "]";
    case NodeKind::EndpointPair: {
        // Parenthesised parts never re-read as a numeric literal.
        std::string a = "(" + render(n.children[0]) + ")";
        std::string b = "(" + render(n.children[1]) + ")";
        return n.center_radius ? "<" + a + ";" + b + ">" : "[" + a + "," + b + "]";
    }
    case NodeKind::Var: return std::string(1, n.var);
    case NodeKind::Neg: return "(-" + render(n.children[0]) + ")";
    case NodeKind::Binary:
        return "(" + render(n.children[0]) + std::string(op_text(n.op)) + render(n.children[1]) + ")";
    case NodeKind::Power: return "((" + render(n.children[0]) + ")^" + std::to_string(n.exponent) + ")";
    case NodeKind::Call: {
        std::string out(function_name(n.fn));
        out += "(";
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i > 0)
                out += ",";
            out += render(n.children[i]);
        }
        return out + ")";
    }
    }
    return {};
}

bool same_tree(const Expr& a, const Expr& b)
{
    if (a->kind != b->kind || a->children.size() != b->children.size())
        return false;
    switch (a->kind) {
    case NodeKind::RealLit:
        if (a->value != b->value)
            return false;
        break;
    case NodeKind::IntervalLit:
        if (a->first != b->first || a->second != b->second || a->center_radius != b->center_radius
            || a->param_id != b->param_id)
            return false;
        break;
    case NodeKind::EndpointPair:
        if (a->center_radius != b->center_radius)
            return false;
        break;
    case NodeKind::Var:
        if (a->var != b->var)
            return false;
        break;
    case NodeKind::Binary:
        if (a->op != b->op)
            return false;
        break;
    case NodeKind::Power:
        if (a->exponent != b->exponent)
            return false;
        break;
    case NodeKind::Call:
        if (a->fn != b->fn)
            return false;
        break;
    case NodeKind::Neg: break;
    }
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!same_tree(a->children[i], b->children[i]))
            return false;
    return true;
}

std::size_t count_interval_literals(const Expr& e)
{
    std::vector<const ExprNode*> lits;
    collect_literals(e, lits);
    return lits.size();
}

bool mentions_var(const Expr& e, char var)
{
    if (e->kind == NodeKind::Var && e->var == var)
        return true;
    for (const auto& c : e->children)
        if (mentions_var(c, var))
            return true;
    return false;
}

ExtendedInterval literal_range(const Expr& e, std::size_t param_id)
{
    std::vector<const ExprNode*> lits;
    collect_literals(e, lits);
    for (const auto* n : lits)
        if (n->param_id == param_id)
            return literal_endpoints(*n);
    throw Error(ErrorCode::ParamArityMismatch, "no interval literal #" + std::to_string(param_id));
}

EvalValue evaluate(const Expr& e, const Env& env) { return NewEval{env}.eval(e); }

Interval eval_interval(const Expr& e, const Env& env) { return to_interval(evaluate(e, env)); }

Interval eval_interval(const Expr& e, double t, const Interval& x)
{
    Env env;
    env.t = t;
    env.x = x;
    return eval_interval(e, env);
}

double eval_param(const Expr& e, double t, double x, const std::vector<double>& params)
{
    std::vector<const ExprNode*> lits;
    collect_literals(e, lits);
    if (lits.size() != params.size())
        throw Error(ErrorCode::ParamArityMismatch, "expression has " + std::to_string(lits.size())
                                                       + " interval literal(s), got "
                                                       + std::to_string(params.size()) + " parameter(s)");
    for (const auto* n : lits) {
        ExtendedInterval range = literal_endpoints(*n);
        double p = params[n->param_id];
        if (!range.contains(p))
            throw Error(ErrorCode::ParamOutOfRange, "parameter " + format_real(p) + " outside "
                                                        + render_endpoints(range));
    }
    return ParamEval{t, x, params}.eval(e);
}

ExtendedInterval eval_endpoint_pair(const Expr& e, double t, double x_lo, double x_hi)
{
    return MooreEval{t, ExtendedInterval(x_lo, x_hi)}.eval(e).v;
}

ExtendedInterval eval_endpoint_pair(const Expr& e, double t)
{
    return MooreEval{t, std::nullopt}.eval(e).v;
}

Interval to_interval(const EvalValue& v)
{
    if (const auto* r = std::get_if<double>(&v))
        return from_real(*r);
    return std::get<Interval>(v);
}

std::string render_value(const EvalValue& v)
{
    if (const auto* r = std::get_if<double>(&v))
        return format_real(*r);
    const auto& a = std::get<Interval>(v);
    return render_endpoints(a) + " " + render_center_radius(a);
}

} // namespace intervalkit
