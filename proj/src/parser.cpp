/*
 *  Copyright (C) 2026  The elpkit authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "elp/syntax.hpp"

#include <cctype>

namespace elp {

namespace {

enum class Tok { LowerId, UpperId, Number, LParen, RParen, Comma, Dot, If, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        auto ident = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; };
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && ident(src_[pos_])) advance();
            t.text = std::string(src_.substr(start, pos_ - start));
            t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::UpperId : Tok::LowerId;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            t.text = std::string(src_.substr(start, pos_ - start));
            t.kind = Tok::Number;
            return t;
        }
        advance();
        switch (c) {
        case '(': t.kind = Tok::LParen; return t;
        case ')': t.kind = Tok::RParen; return t;
        case ',': t.kind = Tok::Comma; return t;
        case '.': t.kind = Tok::Dot; return t;
        case ':':
            if (pos_ < src_.size() && src_[pos_] == '-') {
                advance();
                t.kind = Tok::If;
                return t;
            }
            break;
        default: break;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

bool is_prefix_keyword(const Token& t) {
    if (t.kind == Tok::LowerId) return t.text == "not" || t.text == "enot";
    if (t.kind == Tok::UpperId) return t.text == "K" || t.text == "M" || t.text == "NOT";
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

    Program program() {
        Program p;
        while (cur_.kind != Tok::End) statement(p);
        p.constants = std::move(constants_);
        return p;
    }

    Atom single_atom() {
        Atom a = atom();
        expect_end();
        return a;
    }

    Literal single_literal() {
        Literal l = literal();
        if (cur_.kind == Tok::Dot) shift();
        expect_end();
        return l;
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw ParseError(msg, at.line, at.column);
    }

    void shift() { cur_ = lex_.next(); }

    void expect(Tok k, const char* what) {
        if (cur_.kind != k) fail(std::string("expected ") + what, cur_);
        shift();
    }

    void expect_end() {
        if (cur_.kind != Tok::End) fail("unexpected trailing input", cur_);
    }

    void statement(Program& p) {
        Rule r;
        if (cur_.kind == Tok::If) {
            shift();
            r.body = body();
            expect(Tok::Dot, "'.'");
            p.constraints.push_back(std::move(r));
            return;
        }
        if (is_prefix_keyword(cur_)) fail("rule head must be a plain atom", cur_);
        r.head = atom();
        if (cur_.kind == Tok::If) {
            shift();
            r.body = body();
        }
        expect(Tok::Dot, "'.' or ':-'");
        p.rules.push_back(std::move(r));
    }

    std::vector<Literal> body() {
        std::vector<Literal> out{literal()};
        while (cur_.kind == Tok::Comma) {
            shift();
            out.push_back(literal());
        }
        return out;
    }

    // Prefixes expand to sequences over {not, enot}; the sequence must be
    // one of the six literal forms.
    Literal literal() {
        Token start = cur_;
        std::string seq;
        while (is_prefix_keyword(cur_)) {
            const std::string& k = cur_.text;
            if (k == "not") seq += 'n';
            else if (k == "enot") seq += 'e';
            else if (k == "K") seq += "ne";
            else if (k == "M") seq += "en";
            else seq += "nen";
            shift();
        }
        Form f;
        if (seq.empty()) f = Form::POS;
        else if (seq == "n") f = Form::NAF;
        else if (seq == "e") f = Form::EPI;
        else if (seq == "en") f = Form::EPI_NAF;
        else if (seq == "ne") f = Form::NAF_EPI;
        else if (seq == "nen") f = Form::NAF_EPI_NAF;
        else fail("negation nesting beyond the six literal forms", start);
        return {atom(), f};
    }

    Atom atom() {
        if (cur_.kind != Tok::LowerId) fail("expected an atom", cur_);
        if (cur_.text == "not" || cur_.text == "enot") fail("'" + cur_.text + "' is reserved", cur_);
        Atom a(cur_.text);
        shift();
        if (cur_.kind == Tok::LParen) {
            shift();
            a.args.push_back(term());
            while (cur_.kind == Tok::Comma) {
                shift();
                a.args.push_back(term());
            }
            expect(Tok::RParen, "')'");
        }
        return a;
    }

    std::string term() {
        if (cur_.kind != Tok::LowerId && cur_.kind != Tok::UpperId && cur_.kind != Tok::Number)
            fail("expected a term", cur_);
        std::string t = cur_.text;
        if (cur_.kind != Tok::UpperId) constants_.insert(t);
        shift();
        return t;
    }

    Lexer lex_;
    Token cur_;
    std::set<std::string> constants_;
};

} // namespace

Program parse_program(std::string_view text) {
    return Parser(text).program();
}

Atom parse_atom(std::string_view text) {
    return Parser(text).single_atom();
}

Literal parse_literal(std::string_view text) {
    return Parser(text).single_literal();
}

} // namespace elp
