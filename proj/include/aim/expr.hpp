#ifndef AIM_EXPR_HPP
#define AIM_EXPR_HPP

// Parser and evaluator for user-supplied coefficient definitions: rational
// arithmetic expressions in x, E, and named parameters, interpreted either
// over the series ring (for the recurrence) or numerically (for quadrature).

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "aim/algebra.hpp"
#include "aim/engine.hpp"
#include "aim/errors.hpp"

namespace aim::expr {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    double number = 0.0;
    std::string text;
    std::size_t pos = 0;
};

inline std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            std::size_t end = i;
            while (end < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '.'))
                ++end;
            if (end < text.size() && (text[end] == 'e' || text[end] == 'E')) {
                std::size_t ex = end + 1;
                if (ex < text.size() && (text[ex] == '+' || text[ex] == '-')) ++ex;
                if (ex < text.size() && std::isdigit(static_cast<unsigned char>(text[ex]))) {
                    while (ex < text.size() && std::isdigit(static_cast<unsigned char>(text[ex])))
                        ++ex;
                    end = ex;
                }
            }
            try {
                out.push_back({Token::Number, std::stod(text.substr(i, end - i)), "", i});
            } catch (const std::exception&) {
                throw LexError(i, "malformed number at offset " + std::to_string(i));
            }
            i = end;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t end = i;
            while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) ||
                                         text[end] == '_'))
                ++end;
            out.push_back({Token::Ident, 0.0, text.substr(i, end - i), i});
            i = end;
            continue;
        }
        Token::Kind k;
        switch (ch) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default:
                throw LexError(i, std::string("illegal character '") + ch + "' at offset " +
                                      std::to_string(i));
        }
        out.push_back({k, 0.0, "", i});
        ++i;
    }
    out.push_back({Token::End, 0.0, "", text.size()});
    return out;
}

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

struct AstNode {
    enum Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    double value = 0.0;    // Number
    std::string name;      // Variable
    AstPtr lhs, rhs;       // binary / unary (lhs only for Neg)
    int exponent = 0;      // Pow
};

namespace detail {

class Parser {
  public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    AstPtr run() {
        AstPtr e = expression();
        if (peek().kind != Token::End)
            throw ParseError(peek().pos, "trailing tokens at position " +
                                             std::to_string(peek().pos));
        return e;
    }

  private:
    const std::vector<Token>& toks_;
    std::size_t i_ = 0;

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }

    static AstPtr node(AstNode n) { return std::make_shared<AstNode>(std::move(n)); }

    AstPtr expression() {
        AstPtr e = term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool add = next().kind == Token::Plus;
            AstPtr r = term();
            e = node({add ? AstNode::Add : AstNode::Sub, 0.0, "", e, r, 0});
        }
        return e;
    }

    AstPtr term() {
        AstPtr e = unary();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            const bool mul = next().kind == Token::Star;
            AstPtr r = unary();
            e = node({mul ? AstNode::Mul : AstNode::Div, 0.0, "", e, r, 0});
        }
        return e;
    }

    AstPtr unary() {
        if (peek().kind == Token::Minus) {
            next();
            AstPtr e = unary();  // unary minus binds looser than ^
            return node({AstNode::Neg, 0.0, "", e, nullptr, 0});
        }
        return power();
    }

    AstPtr power() {
        AstPtr base = atom();
        if (peek().kind == Token::Caret) {
            const Token& caret = next();
            if (peek().kind != Token::Number)
                throw ParseError(caret.pos, "exponent must be a nonnegative integer literal");
            const Token& e = next();
            const int k = static_cast<int>(e.number);
            if (k < 0 || static_cast<double>(k) != e.number)
                throw ParseError(e.pos, "exponent must be a nonnegative integer literal");
            return node({AstNode::Pow, 0.0, "", base, nullptr, k});
        }
        return base;
    }

    AstPtr atom() {
        const Token& t = next();
        switch (t.kind) {
            case Token::Number:
                return node({AstNode::Number, t.number, "", nullptr, nullptr, 0});
            case Token::Ident:
                return node({AstNode::Variable, 0.0, t.text, nullptr, nullptr, 0});
            case Token::LParen: {
                AstPtr e = expression();
                if (peek().kind != Token::RParen)
                    throw ParseError(peek().pos, "expected ')' at position " +
                                                     std::to_string(peek().pos));
                next();
                return e;
            }
            default:
                throw ParseError(t.pos,
                                 "unexpected token at position " + std::to_string(t.pos));
        }
    }
};

}  // namespace detail

inline AstPtr parse(const std::vector<Token>& tokens) { return detail::Parser(tokens).run(); }

inline AstPtr parse_expression(const std::string& text) { return parse(tokenize(text)); }

using ParamMap = std::map<std::string, double>;

// Interpret the AST over the algebra ring: x becomes the series x0 + u, E the
// degree-1 polynomial constant series, division goes through series_recip.
template <class R>
SeriesT<R> eval_series(const AstPtr& ast, const ParamMap& env, double x0, int order) {
    auto constant = [&](R v) {
        SeriesT<R> s(order, x0);
        s.terms[0] = PolyT<R>::constant(v);
        return s;
    };
    switch (ast->kind) {
        case AstNode::Number:
            return constant(static_cast<R>(ast->value));
        case AstNode::Variable: {
            if (ast->name == "x") {
                SeriesT<R> s(order, x0);
                s.terms[0] = PolyT<R>::constant(static_cast<R>(x0));
                if (order >= 1) s.terms[1] = PolyT<R>::constant(R(1));
                return s;
            }
            if (ast->name == "E") {
                SeriesT<R> s(order, x0);
                s.terms[0] = PolyT<R>(std::vector<R>{R(0), R(1)});
                return s;
            }
            auto it = env.find(ast->name);
            if (it == env.end())
                throw UnboundVariable("unbound variable '" + ast->name + "'");
            return constant(static_cast<R>(it->second));
        }
        case AstNode::Neg:
            return series_scale(eval_series<R>(ast->lhs, env, x0, order), R(-1));
        case AstNode::Add:
            return series_add(eval_series<R>(ast->lhs, env, x0, order),
                              eval_series<R>(ast->rhs, env, x0, order));
        case AstNode::Sub:
            return series_add(eval_series<R>(ast->lhs, env, x0, order),
                              series_scale(eval_series<R>(ast->rhs, env, x0, order), R(-1)));
        case AstNode::Mul:
            return series_mul(eval_series<R>(ast->lhs, env, x0, order),
                              eval_series<R>(ast->rhs, env, x0, order));
        case AstNode::Div:
            return series_mul(eval_series<R>(ast->lhs, env, x0, order),
                              series_recip(eval_series<R>(ast->rhs, env, x0, order)));
        case AstNode::Pow: {
            SeriesT<R> base = eval_series<R>(ast->lhs, env, x0, order);
            SeriesT<R> acc(order, x0);
            acc.terms[0] = PolyT<R>::constant(R(1));
            for (int i = 0; i < ast->exponent; ++i) acc = series_mul(acc, base);
            return acc;
        }
    }
    throw Error("eval_series: unreachable");
}

inline double eval_numeric(const AstPtr& ast, const ParamMap& env, double x, double e) {
    switch (ast->kind) {
        case AstNode::Number:
            return ast->value;
        case AstNode::Variable: {
            if (ast->name == "x") return x;
            if (ast->name == "E") return e;
            auto it = env.find(ast->name);
            if (it == env.end())
                throw UnboundVariable("unbound variable '" + ast->name + "'");
            return it->second;
        }
        case AstNode::Neg:
            return -eval_numeric(ast->lhs, env, x, e);
        case AstNode::Add:
            return eval_numeric(ast->lhs, env, x, e) + eval_numeric(ast->rhs, env, x, e);
        case AstNode::Sub:
            return eval_numeric(ast->lhs, env, x, e) - eval_numeric(ast->rhs, env, x, e);
        case AstNode::Mul:
            return eval_numeric(ast->lhs, env, x, e) * eval_numeric(ast->rhs, env, x, e);
        case AstNode::Div:
            return eval_numeric(ast->lhs, env, x, e) / eval_numeric(ast->rhs, env, x, e);
        case AstNode::Pow:
            return std::pow(eval_numeric(ast->lhs, env, x, e), ast->exponent);
    }
    throw Error("eval_numeric: unreachable");
}

inline std::function<double(double, double)> make_callable(AstPtr ast, ParamMap env) {
    return [ast = std::move(ast), env = std::move(env)](double x, double e) {
        return eval_numeric(ast, env, x, e);
    };
}

// Collect the denominator of every division node as a numeric callable in x
// (at fixed E = 0; every denominator in scope is E-free) for pole detection.
inline void collect_denominators(const AstPtr& ast, const ParamMap& env,
                                 std::vector<std::function<double(double)>>& out) {
    if (!ast) return;
    if (ast->kind == AstNode::Div) {
        AstPtr den = ast->rhs;
        ParamMap env_copy = env;
        out.push_back([den, env_copy](double x) { return eval_numeric(den, env_copy, x, 0.0); });
    }
    collect_denominators(ast->lhs, env, out);
    collect_denominators(ast->rhs, env, out);
}

// Model-file format: `a0 = <expr>` (likewise b0, c0, d0), `param <name> =
// <number>`, `x0 = <number>`, `#` comments.
struct ModelFile {
    AstPtr a0, b0, c0, d0;
    ParamMap params;
    double x0 = 0.0;
};

inline ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file: " + path);
    ModelFile mf;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw Error(path + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail("expected '=' in definition");
        std::string lhs = line.substr(0, eq);
        std::string rhs = line.substr(eq + 1);
        auto trim = [](std::string s) {
            const std::size_t b2 = s.find_first_not_of(" \t");
            if (b2 == std::string::npos) return std::string();
            const std::size_t e2 = s.find_last_not_of(" \t");
            return s.substr(b2, e2 - b2 + 1);
        };
        lhs = trim(lhs);
        rhs = trim(rhs);
        if (rhs.empty()) fail("empty right-hand side");
        try {
            if (lhs == "a0" || lhs == "b0" || lhs == "c0" || lhs == "d0") {
                AstPtr ast = parse_expression(rhs);
                if (lhs == "a0") mf.a0 = ast;
                else if (lhs == "b0") mf.b0 = ast;
                else if (lhs == "c0") mf.c0 = ast;
                else mf.d0 = ast;
            } else if (lhs == "x0") {
                mf.x0 = std::stod(rhs);
            } else if (lhs.rfind("param", 0) == 0) {
                std::string name = trim(lhs.substr(5));
                if (name.empty()) fail("param line needs a name: param <name> = <number>");
                mf.params[name] = std::stod(rhs);
            } else {
                fail("unknown definition '" + lhs + "'");
            }
        } catch (const LexError& ex) {
            fail(std::string("lex error: ") + ex.what());
        } catch (const ParseError& ex) {
            fail(std::string("parse error: ") + ex.what());
        } catch (const std::invalid_argument&) {
            fail("expected a number on the right-hand side");
        }
    }
    if (!mf.a0 || !mf.b0 || !mf.c0 || !mf.d0)
        throw Error(path + ": missing definition (need all of a0, b0, c0, d0)");
    return mf;
}

// Build a CoefficientSet from a parsed model file (regular systems only; a
// denominator vanishing at x0 surfaces as SingularCoefficient).
template <class R>
CoefficientSetT<R> build_custom(const ModelFile& mf, int order) {
    CoefficientSetT<R> c;
    c.a0 = eval_series<R>(mf.a0, mf.params, mf.x0, order);
    c.b0 = eval_series<R>(mf.b0, mf.params, mf.x0, order);
    c.c0 = eval_series<R>(mf.c0, mf.params, mf.x0, order);
    c.d0 = eval_series<R>(mf.d0, mf.params, mf.x0, order);
    c.x0 = mf.x0;
    c.order = order;
    c.pole_order = 0;
    c.fa = make_callable(mf.a0, mf.params);
    c.fb = make_callable(mf.b0, mf.params);
    c.fc = make_callable(mf.c0, mf.params);
    c.fd = make_callable(mf.d0, mf.params);
    for (const AstPtr& a : {mf.a0, mf.b0, mf.c0, mf.d0})
        collect_denominators(a, mf.params, c.denominators);
    return c;
}

}  // namespace aim::expr

#endif
