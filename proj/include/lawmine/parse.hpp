#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "language.hpp"
#include "util.hpp"

namespace lawmine {

// Surface syntax, one constraint per line:
//
//   <conj> -> <disj-or-conj>      e.g.  Proto="TCP" -> DstPort!=53 | SrcPort!=80
//   <disj-or-conj>                e.g.  Bytes >= 20*Packets
//
// Predicates compare a variable against a quoted string, a number, or a
// linear term `c*Var + c0`. `&` joins conjuncts, `|` disjuncts; a consequent
// may use one of the two, not both. Comments start with '#'.

// =============================================================================
// Printing
// =============================================================================

inline std::string quote_text(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string predicate_text(const Predicate& p, const Vocabulary& vocab) {
    const Variable& subject = vocab.at(p.subject);
    std::string out = subject.name;
    out += cmp_op_text(p.op);
    if (p.linear) {
        const std::string other = vocab.at(p.expr.var).name;
        if (p.expr.coeff == Rational(1))
            out += other;
        else
            out += p.expr.coeff.str() + "*" + other;
        if (p.expr.offset > Rational(0))
            out += "+" + p.expr.offset.str();
        else if (p.expr.offset < Rational(0))
            out += "-" + (-p.expr.offset).str();
        return out;
    }
    if (subject.kind == VarKind::Nominal)
        out += quote_text(p.constant.text());
    else
        out += p.constant.number().str();
    return out;
}

inline std::string constraint_text(const Constraint& c, const Vocabulary& vocab) {
    std::string out;
    for (std::size_t i = 0; i < c.antecedent.size(); ++i) {
        if (i) out += " & ";
        out += predicate_text(c.antecedent[i], vocab);
    }
    if (!c.antecedent.empty()) out += " -> ";
    const char* sep = c.connective == Connective::And ? " & " : " | ";
    for (std::size_t i = 0; i < c.consequent.size(); ++i) {
        if (i) out += sep;
        out += predicate_text(c.consequent[i], vocab);
    }
    return out;
}

// =============================================================================
// Parsing
// =============================================================================

namespace detail {

enum class TokKind { Ident, Number, String, Op, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t')) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size() || src_[i_] == '#') return {TokKind::End, "", start};
        char c = src_[i_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum((unsigned char)src_[i_]) || src_[i_] == '_'))
                ++i_;
            return {TokKind::Ident, src_.substr(start, i_ - start), start};
        }
        if (std::isdigit((unsigned char)c)) {
            while (i_ < src_.size() &&
                   (std::isdigit((unsigned char)src_[i_]) || src_[i_] == '.'))
                ++i_;
            return {TokKind::Number, src_.substr(start, i_ - start), start};
        }
        if (c == '"') {
            std::string text;
            ++i_;
            while (i_ < src_.size() && src_[i_] != '"') {
                if (src_[i_] == '\\' && i_ + 1 < src_.size()) ++i_;
                text += src_[i_++];
            }
            if (i_ >= src_.size())
                fail(ErrorKind::SyntaxError,
                     "unterminated string at position " + std::to_string(start));
            ++i_;
            return {TokKind::String, text, start};
        }
        static const char* ops[] = {"->", "!=", "<=", ">=", "&", "|", "=", "<",
                                    ">",  "*",  "+",  "-"};
        for (const char* op : ops) {
            std::size_t n = std::char_traits<char>::length(op);
            if (src_.compare(i_, n, op) == 0) {
                i_ += n;
                return {TokKind::Op, op, start};
            }
        }
        fail(ErrorKind::SyntaxError, std::string("unexpected character '") + c +
                                         "' at position " + std::to_string(start));
    }

private:
    const std::string& src_;
    std::size_t i_ = 0;
};

class ConstraintParser {
public:
    ConstraintParser(const std::string& src, const Vocabulary& vocab)
        : vocab_(vocab), lex_(src) {
        advance();
    }

    Constraint parse() {
        std::vector<Predicate> first;
        Connective first_conn = Connective::Or;
        parse_side(first, first_conn);
        Constraint c;
        if (is_op("->")) {
            if (first_conn == Connective::Or && first.size() > 1)
                fail(ErrorKind::SyntaxError, "antecedent must be a conjunction");
            advance();
            c.antecedent = std::move(first);
            parse_side(c.consequent, c.connective);
        } else {
            c.consequent = std::move(first);
            c.connective = first_conn;
        }
        if (tok_.kind != TokKind::End)
            fail(ErrorKind::SyntaxError, "trailing input at position " +
                                             std::to_string(tok_.pos));
        if (c.consequent.size() < 2) c.connective = Connective::Or;
        check_constraint(c, vocab_);
        return c;
    }

private:
    const Vocabulary& vocab_;
    Lexer lex_;
    Token tok_{TokKind::End, "", 0};

    void advance() { tok_ = lex_.next(); }
    bool is_op(const char* t) const {
        return tok_.kind == TokKind::Op && tok_.text == t;
    }

    void parse_side(std::vector<Predicate>& out, Connective& conn) {
        out.push_back(parse_predicate());
        bool saw_and = false, saw_or = false;
        while (is_op("&") || is_op("|")) {
            (tok_.text == "&" ? saw_and : saw_or) = true;
            if (saw_and && saw_or)
                fail(ErrorKind::SyntaxError,
                     "mixed & and | at position " + std::to_string(tok_.pos));
            advance();
            out.push_back(parse_predicate());
        }
        conn = saw_and ? Connective::And : Connective::Or;
    }

    Predicate parse_predicate() {
        if (tok_.kind != TokKind::Ident)
            fail(ErrorKind::SyntaxError, "expected variable name at position " +
                                             std::to_string(tok_.pos));
        int subject = vocab_.find(tok_.text);
        if (subject < 0) fail(ErrorKind::UnknownVariable, tok_.text);
        advance();
        CmpOp op = parse_cmp_op();

        if (tok_.kind == TokKind::String) {
            Value v(tok_.text);
            advance();
            return make_pred(vocab_, subject, op, std::move(v));
        }

        bool neg = false;
        if (is_op("-")) {
            neg = true;
            advance();
        }
        if (tok_.kind == TokKind::Number) {
            Rational r = parse_number(neg);
            if (is_op("*")) {
                advance();
                int var = parse_var_ref();
                Rational offset = parse_offset();
                return make_linear_pred(vocab_, subject, op, r, var, offset);
            }
            return make_pred(vocab_, subject, op, Value(r));
        }
        if (tok_.kind == TokKind::Ident && !neg) {
            int var = parse_var_ref();
            Rational offset = parse_offset();
            return make_linear_pred(vocab_, subject, op, Rational(1), var, offset);
        }
        fail(ErrorKind::SyntaxError,
             "expected value at position " + std::to_string(tok_.pos));
    }

    CmpOp parse_cmp_op() {
        if (tok_.kind != TokKind::Op)
            fail(ErrorKind::SyntaxError, "expected comparison at position " +
                                             std::to_string(tok_.pos));
        CmpOp op;
        if (tok_.text == "=") op = CmpOp::Eq;
        else if (tok_.text == "!=") op = CmpOp::Ne;
        else if (tok_.text == "<") op = CmpOp::Lt;
        else if (tok_.text == "<=") op = CmpOp::Le;
        else if (tok_.text == ">") op = CmpOp::Gt;
        else if (tok_.text == ">=") op = CmpOp::Ge;
        else
            fail(ErrorKind::SyntaxError, "expected comparison at position " +
                                             std::to_string(tok_.pos));
        advance();
        return op;
    }

    Rational parse_number(bool neg) {
        Rational r;
        if (!Rational::parse(tok_.text, r))
            fail(ErrorKind::SyntaxError, "bad number '" + tok_.text +
                                             "' at position " + std::to_string(tok_.pos));
        advance();
        return neg ? -r : r;
    }

    int parse_var_ref() {
        if (tok_.kind != TokKind::Ident)
            fail(ErrorKind::SyntaxError, "expected variable name at position " +
                                             std::to_string(tok_.pos));
        int var = vocab_.find(tok_.text);
        if (var < 0) fail(ErrorKind::UnknownVariable, tok_.text);
        advance();
        return var;
    }

    Rational parse_offset() {
        if (is_op("+")) {
            advance();
            return parse_number(false);
        }
        if (is_op("-")) {
            advance();
            return parse_number(true);
        }
        return Rational(0);
    }
};

}  // namespace detail

inline Constraint parse_constraint(const std::string& text, const Vocabulary& vocab) {
    detail::ConstraintParser p(text, vocab);
    return p.parse();
}

// Parses a rule file: one constraint per line, '#' comments, blank lines
// ignored.
inline std::vector<Constraint> parse_constraints(const std::string& text,
                                                 const Vocabulary& vocab) {
    std::vector<Constraint> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = trim(text.substr(start, end - start));
        if (!line.empty() && line[0] != '#') out.push_back(parse_constraint(line, vocab));
        start = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace lawmine
