#include "homarea/errors.hpp"
#include "homarea/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace homarea {

namespace {

enum class Tok { ident, number, colon, lbrack, rbrack, comma, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : s_(text) {}

    Token next() {
        skip();
        Token t{Tok::end, "", line_, col_};
        if (i_ >= s_.size()) return t;
        char c = s_[i_];
        auto single = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            advance();
            return t;
        };
        switch (c) {
        case ':': return single(Tok::colon);
        case '[': return single(Tok::lbrack);
        case ']': return single(Tok::rbrack);
        case ',': return single(Tok::comma);
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::ident;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
                t.text += s_[i_];
                advance();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            t.kind = Tok::number;
            while (i_ < s_.size()) {
                char d = s_[i_];
                bool exp_sign = (d == '-' || d == '+') && !t.text.empty() &&
                                (t.text.back() == 'e' || t.text.back() == 'E');
                bool ok = std::isdigit(static_cast<unsigned char>(d)) || d == '.' || d == '/' || d == 'e' ||
                          d == 'E' || exp_sign || (t.text.empty() && (d == '-' || d == '+'));
                if (!ok) break;
                t.text += d;
                advance();
            }
            return t;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

    CurveFile parse() {
        std::optional<CurveKind> kind;
        std::optional<std::vector<Point>> p, q;
        std::optional<Rational> area;
        while (tok_.kind != Tok::end) {
            Token name = expect(Tok::ident, "a field name");
            expect(Tok::colon, "':'");
            auto dup = [&](bool seen) {
                if (seen) throw ParseError(name.line, name.col, "duplicate field '" + name.text + "'");
            };
            if (name.text == "kind") {
                dup(kind.has_value());
                Token v = expect(Tok::ident, "'paths' or 'cycles'");
                if (v.text == "paths") kind = CurveKind::paths;
                else if (v.text == "cycles") kind = CurveKind::cycles;
                else throw ParseError(v.line, v.col, "kind must be 'paths' or 'cycles'");
            } else if (name.text == "P") {
                dup(p.has_value());
                p = points();
            } else if (name.text == "Q") {
                dup(q.has_value());
                q = points();
            } else if (name.text == "sphere_area") {
                dup(area.has_value());
                area = number();
            } else {
                throw ParseError(name.line, name.col, "unknown field '" + name.text + "'");
            }
        }
        if (!kind) throw ParseError(tok_.line, tok_.col, "missing field 'kind'");
        if (!p) throw ParseError(tok_.line, tok_.col, "missing field 'P'");
        if (!q) throw ParseError(tok_.line, tok_.col, "missing field 'Q'");
        CurveFile f;
        f.kind = *kind;
        const bool closed = f.kind == CurveKind::cycles;
        f.p = Polyline(std::move(*p), closed);
        f.q = Polyline(std::move(*q), closed);
        f.sphere_area = area;
        return f;
    }

private:
    Token expect(Tok kind, const char *what) {
        if (tok_.kind != kind)
            throw ParseError(tok_.line, tok_.col,
                             std::string("expected ") + what + (tok_.kind == Tok::end ? " before end of file"
                                                                                     : ", found '" + tok_.text + "'"));
        Token t = tok_;
        tok_ = lex_.next();
        return t;
    }

    Rational number() {
        Token t = expect(Tok::number, "a number");
        auto v = parse_rational(t.text);
        if (!v) throw ParseError(t.line, t.col, "malformed number '" + t.text + "'");
        return *v;
    }

    std::vector<Point> points() {
        std::vector<Point> out;
        while (tok_.kind == Tok::lbrack) {
            expect(Tok::lbrack, "'['");
            Rational x = number();
            expect(Tok::comma, "','");
            Rational y = number();
            expect(Tok::rbrack, "']'");
            out.push_back({x, y});
        }
        if (out.empty()) throw ParseError(tok_.line, tok_.col, "expected a point '[x, y]'");
        return out;
    }

    Lexer lex_;
    Token tok_;
};

void write_points(std::ostream &os, const Polyline &poly) {
    for (const Point &v : poly.vertices()) os << " [" << to_string(v.x) << ", " << to_string(v.y) << "]";
    os << "\n";
}

} // namespace

CurveFile parse_curve_file(std::string_view text) { return Parser(text).parse(); }

CurveFile read_curve_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_file(ss.str());
}

std::string serialize_curve_file(const CurveFile &file) {
    std::ostringstream os;
    os << "kind: " << (file.kind == CurveKind::paths ? "paths" : "cycles") << "\n";
    os << "P:";
    write_points(os, file.p);
    os << "Q:";
    write_points(os, file.q);
    if (file.sphere_area) os << "sphere_area: " << to_string(*file.sphere_area) << "\n";
    return os.str();
}

} // namespace homarea
