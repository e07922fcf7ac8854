#include "coiso/parse.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

namespace coiso {

namespace {

// ---------------------------------------------------------------- lexer ---

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen,
                 lbracket, rbracket, comma, pipe, end };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::ostringstream msg;
        msg << "syntax error at byte " << tok_.offset << ": expected " << expected << ", found ";
        if (tok_.kind == Tok::end)
            msg << "end of input";
        else
            msg << "'" << tok_.text << "'";
        throw ParseError(tok_.offset, expected, msg.str());
    }

    Token expect(Tok kind, const std::string& expected) {
        if (tok_.kind != kind) fail(expected);
        return take();
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    Token tok_;

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        tok_.offset = pos_;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::end, pos_, ""};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            tok_ = {k, pos_, std::string(1, c)};
            ++pos_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            tok_ = {Tok::integer, start, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_ = {Tok::ident, start, src_.substr(start, pos_ - start)};
            return;
        }
        switch (c) {
            case '+': single(Tok::plus); return;
            case '-': single(Tok::minus); return;
            case '*': single(Tok::star); return;
            case '/': single(Tok::slash); return;
            case '^': single(Tok::caret); return;
            case '(': single(Tok::lparen); return;
            case ')': single(Tok::rparen); return;
            case '[': single(Tok::lbracket); return;
            case ']': single(Tok::rbracket); return;
            case ',': single(Tok::comma); return;
            case '|': single(Tok::pipe); return;
            default: {
                std::ostringstream msg;
                msg << "syntax error at byte " << pos_ << ": unexpected character '" << c << "'";
                throw ParseError(pos_, "token", msg.str());
            }
        }
    }
};

// ------------------------------------------------------- variable schemes ---

// Maps identifier tokens to 1-based flat variable indices.
struct VarScheme {
    std::function<std::size_t(const Token&)> resolve; // throws ParseError on bad names
    std::size_t nvars;
    std::string description;
};

long parse_long(const Token& t) {
    try {
        return std::stol(t.text);
    } catch (const std::exception&) {
        throw ParseError(t.offset, "integer", "integer literal out of range at byte " +
                                                  std::to_string(t.offset));
    }
}

VarScheme plain_scheme(const CoisoContext& ctx) {
    VarScheme s;
    s.nvars = ctx.n;
    s.description = "variable like x1..x" + std::to_string(ctx.n);
    std::size_t n = ctx.n;
    s.resolve = [n](const Token& t) -> std::size_t {
        if (t.text.size() < 2 || t.text[0] != 'x' ||
            !std::isdigit(static_cast<unsigned char>(t.text[1])))
            throw ParseError(t.offset, "variable like x1",
                             "unknown variable '" + t.text + "' at byte " + std::to_string(t.offset));
        long idx = std::stol(t.text.substr(1));
        if (idx < 1 || static_cast<std::size_t>(idx) > n)
            throw ParseError(t.offset, "coordinate index in 1.." + std::to_string(n),
                             "coordinate index out of range at byte " + std::to_string(t.offset));
        return static_cast<std::size_t>(idx);
    };
    return s;
}

VarScheme bar_scheme(std::size_t n, unsigned k) {
    VarScheme s;
    s.nvars = (k + 2) * n;
    s.description = "block variable a<i>, x<r>_<i> or b<i>";
    s.resolve = [n, k](const Token& t) -> std::size_t {
        const std::string& txt = t.text;
        auto bad = [&](const std::string& why) -> std::size_t {
            throw ParseError(t.offset, "block variable a<i>, x<r>_<i> or b<i>",
                             why + " at byte " + std::to_string(t.offset));
        };
        auto coord = [&](const std::string& digits) -> std::size_t {
            if (digits.empty()) return bad("malformed variable '" + txt + "'");
            long c = std::stol(digits);
            if (c < 1 || static_cast<std::size_t>(c) > n)
                return bad("coordinate index out of range in '" + txt + "'");
            return static_cast<std::size_t>(c);
        };
        if (txt[0] == 'a') return coord(txt.substr(1));
        if (txt[0] == 'b') return (k + 1) * n + coord(txt.substr(1));
        if (txt[0] == 'x') {
            auto us = txt.find('_');
            if (us == std::string::npos) return bad("middle-block variable needs the form x<r>_<i>");
            long r = 0;
            if (us == 1) return bad("malformed variable '" + txt + "'");
            r = std::stol(txt.substr(1, us - 1));
            if (r < 1 || static_cast<unsigned>(r) > k)
                return bad("middle block index out of range in '" + txt + "'");
            return static_cast<std::size_t>(r) * n + coord(txt.substr(us + 1));
        }
        return bad("unknown variable '" + txt + "'");
    };
    return s;
}

VarScheme koszul_scheme(std::size_t n) {
    VarScheme s;
    s.nvars = 2 * n;
    s.description = "block variable a<i> or b<i>";
    s.resolve = [n](const Token& t) -> std::size_t {
        const std::string& txt = t.text;
        auto bad = [&](const std::string& why) -> std::size_t {
            throw ParseError(t.offset, "block variable a<i> or b<i>",
                             why + " at byte " + std::to_string(t.offset));
        };
        if (txt.size() < 2) return bad("unknown variable '" + txt + "'");
        long c = 0;
        try {
            c = std::stol(txt.substr(1));
        } catch (const std::exception&) {
            return bad("malformed variable '" + txt + "'");
        }
        if (c < 1 || static_cast<std::size_t>(c) > n)
            return bad("coordinate index out of range in '" + txt + "'");
        if (txt[0] == 'a') return static_cast<std::size_t>(c);
        if (txt[0] == 'b') return n + static_cast<std::size_t>(c);
        return bad("unknown variable '" + txt + "'");
    };
    return s;
}

// --------------------------------------------------------------- parsing ---

// One additive term: sign * coefficient-monomial [* e[..] | * D[..]].
struct TermParts {
    Rational coeff{1};
    MultiIndex mono;
    std::optional<DirSet> dirs;        // raw, unsorted, possibly repeating
    std::optional<IndexTuple> tuple;   // cochain slots
    bool saw_dirs = false;
    bool saw_tuple = false;
};

enum class Allow { none, wedge, cochain };

class TermParser {
public:
    TermParser(Lexer& lex, const VarScheme& scheme, const CoisoContext* ctx, Allow allow)
        : lex_(lex), scheme_(scheme), ctx_(ctx), allow_(allow) {}

    // parses the '+/-' separated sum, invoking sink for each term
    void parse_sum(const std::function<void(const TermParts&)>& sink) {
        bool negative = false;
        if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus)
            negative = lex_.take().kind == Tok::minus;
        while (true) {
            TermParts t = parse_term();
            if (negative) t.coeff = -t.coeff;
            sink(t);
            if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
                negative = lex_.take().kind == Tok::minus;
                continue;
            }
            break;
        }
        if (lex_.peek().kind != Tok::end) lex_.fail("'+', '-' or end of input");
    }

private:
    Lexer& lex_;
    const VarScheme& scheme_;
    const CoisoContext* ctx_;
    Allow allow_;

    TermParts parse_term() {
        TermParts t;
        t.mono = MultiIndex(scheme_.nvars);
        while (true) {
            const Token& p = lex_.peek();
            if (p.kind == Tok::integer) {
                parse_rational(t);
            } else if (p.kind == Tok::ident && p.text == "e" && allow_ == Allow::wedge) {
                parse_dirs(t);
                return t; // wedge part terminates the term
            } else if (p.kind == Tok::ident && p.text == "D" && allow_ == Allow::cochain) {
                parse_tuple(t);
                return t;
            } else if (p.kind == Tok::ident) {
                parse_mono(t);
            } else {
                lex_.fail(factor_expectation());
            }
            if (lex_.peek().kind == Tok::star) {
                lex_.take();
                continue;
            }
            return t;
        }
    }

    std::string factor_expectation() const {
        std::string e = "rational or " + scheme_.description;
        if (allow_ == Allow::wedge) e += " or 'e['";
        if (allow_ == Allow::cochain) e += " or 'D['";
        return e;
    }

    void parse_rational(TermParts& t) {
        Token num = lex_.take();
        long n = parse_long(num);
        long d = 1;
        if (lex_.peek().kind == Tok::slash) {
            lex_.take();
            Token den = lex_.expect(Tok::integer, "denominator");
            d = parse_long(den);
            if (d == 0)
                throw ParseError(den.offset, "nonzero denominator",
                                 "zero denominator at byte " + std::to_string(den.offset));
        }
        t.coeff *= rat(n, d);
    }

    void parse_mono(TermParts& t) {
        Token v = lex_.take();
        std::size_t var = scheme_.resolve(v);
        unsigned exp = 1;
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            Token e = lex_.expect(Tok::integer, "exponent");
            long x = parse_long(e);
            if (x < 0)
                throw ParseError(e.offset, "non-negative exponent", "negative exponent");
            exp = static_cast<unsigned>(x);
        }
        t.mono.exp[var - 1] += exp;
    }

    void parse_dirs(TermParts& t) {
        lex_.take(); // 'e'
        lex_.expect(Tok::lbracket, "'['");
        DirSet dirs;
        if (lex_.peek().kind != Tok::rbracket) {
            while (true) {
                Token d = lex_.expect(Tok::integer, "direction index");
                long idx = parse_long(d);
                if (idx < 1 || (ctx_ && static_cast<std::size_t>(idx) > ctx_->n))
                    throw ParseError(d.offset, "direction index in 1.." + std::to_string(ctx_->n),
                                     "direction index out of range at byte " +
                                         std::to_string(d.offset));
                dirs.push_back(static_cast<unsigned>(idx));
                if (lex_.peek().kind == Tok::comma) {
                    lex_.take();
                    continue;
                }
                break;
            }
        }
        lex_.expect(Tok::rbracket, "']'");
        if (lex_.peek().kind == Tok::star) lex_.fail("'+', '-' or end of term after wedge part");
        t.dirs = dirs;
        t.saw_dirs = true;
    }

    void parse_tuple(TermParts& t) {
        lex_.take(); // 'D'
        lex_.expect(Tok::lbracket, "'['");
        IndexTuple tuple;
        if (lex_.peek().kind != Tok::rbracket) {
            while (true) {
                tuple.push_back(parse_midx());
                if (lex_.peek().kind == Tok::pipe) {
                    lex_.take();
                    continue;
                }
                break;
            }
        }
        lex_.expect(Tok::rbracket, "']'");
        if (lex_.peek().kind == Tok::star) lex_.fail("'+', '-' or end of term after slot part");
        t.tuple = tuple;
        t.saw_tuple = true;
    }

    MultiIndex parse_midx() {
        Token open = lex_.expect(Tok::lparen, "'('");
        MultiIndex m(ctx_->n);
        std::size_t count = 0;
        while (true) {
            Token e = lex_.expect(Tok::integer, "derivative order");
            long x = parse_long(e);
            if (x < 0) throw ParseError(e.offset, "non-negative order", "negative order");
            if (count >= ctx_->n)
                throw ParseError(e.offset, "exactly " + std::to_string(ctx_->n) + " entries",
                                 "multi-index has too many entries at byte " +
                                     std::to_string(e.offset));
            m.exp[count++] = static_cast<unsigned>(x);
            if (lex_.peek().kind == Tok::comma) {
                lex_.take();
                continue;
            }
            break;
        }
        lex_.expect(Tok::rparen, "')'");
        if (count != ctx_->n)
            throw ParseError(open.offset, "exactly " + std::to_string(ctx_->n) + " entries",
                             "multi-index needs exactly " + std::to_string(ctx_->n) +
                                 " entries at byte " + std::to_string(open.offset));
        return m;
    }
};

// -------------------------------------------------------------- printing ---

std::string mono_text(const MultiIndex& m, const std::function<std::string(std::size_t)>& name) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += name(i + 1);
        if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
}

// One printed additive term; `payload` is the trailing e[..]/D[..] part.
void emit_term(std::ostream& os, bool& first, const Rational& coeff, const std::string& mono,
               const std::string& payload) {
    Rational a = abs(coeff);
    bool neg = sgn(coeff) < 0;
    if (first) {
        if (neg) os << "-";
        first = false;
    } else {
        os << (neg ? " - " : " + ");
    }
    std::string body;
    if (!(a == 1) || (mono.empty() && payload.empty())) body = to_string(a);
    if (!mono.empty()) {
        if (!body.empty()) body += "*";
        body += mono;
    }
    if (!payload.empty()) {
        if (!body.empty()) body += "*";
        body += payload;
    }
    os << body;
}

std::string poly_text(const Poly& p, const std::function<std::string(std::size_t)>& name,
                      const std::string& payload = "") {
    if (p.is_zero()) return payload.empty() ? "0" : "";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        emit_term(os, first, it->second, mono_text(it->first, name), payload);
    return os.str();
}

std::string plain_name(std::size_t i) { return "x" + std::to_string(i); }

std::string join_nonempty(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) {
            if (p[0] == '-') {
                out += " - " + p.substr(1);
                continue;
            }
            out += " + ";
        }
        out += p;
    }
    return out.empty() ? "0" : out;
}

std::string dirs_payload(const DirSet& s) {
    std::string payload = "e[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) payload += ",";
        payload += std::to_string(s[i]);
    }
    payload += "]";
    return payload;
}

} // namespace

// ---------------------------------------------------------- entry points ---

Expr parse_expr(const std::string& src, ExprKind kind, const CoisoContext& ctx) {
    Lexer lex(src);
    VarScheme scheme = plain_scheme(ctx);
    switch (kind) {
        case ExprKind::poly: {
            Poly p(ctx.n);
            TermParser tp(lex, scheme, &ctx, Allow::none);
            tp.parse_sum([&](const TermParts& t) { p.add_term(t.mono, t.coeff); });
            return Expr{ctx, p};
        }
        case ExprKind::multivector: {
            MultiVector x(ctx);
            TermParser tp(lex, scheme, &ctx, Allow::wedge);
            tp.parse_sum([&](const TermParts& t) {
                Poly coeff(t.mono, t.coeff);
                DirSet dirs = t.saw_dirs ? *t.dirs : DirSet{};
                x += MultiVector::term(ctx, dirs, coeff);
            });
            return Expr{ctx, x};
        }
        case ExprKind::cochain: {
            std::vector<std::pair<IndexTuple, Poly>> raw;
            std::optional<unsigned> arity;
            std::size_t term_offset = 0;
            TermParser tp(lex, scheme, &ctx, Allow::cochain);
            tp.parse_sum([&](const TermParts& t) {
                IndexTuple tuple = t.saw_tuple ? *t.tuple : IndexTuple{};
                if (!arity) arity = static_cast<unsigned>(tuple.size());
                if (*arity != tuple.size())
                    throw ParseError(term_offset, "slot count " + std::to_string(*arity),
                                     "cochain terms have mismatched arities");
                raw.emplace_back(tuple, Poly(t.mono, t.coeff));
            });
            Cochain phi(ctx, arity.value_or(0));
            for (auto& [tuple, coeff] : raw) phi.add_term(tuple, coeff);
            return Expr{ctx, phi};
        }
    }
    throw std::logic_error("parse_expr: bad kind");
}

std::string print_poly(const Poly& p) { return poly_text(p, plain_name); }

std::string print_multivector(const MultiVector& x) {
    std::vector<std::string> parts;
    for (const auto& [s, f] : x.terms()) {
        std::string payload = s.empty() ? "" : dirs_payload(s);
        parts.push_back(poly_text(f, plain_name, payload));
    }
    return join_nonempty(parts);
}

std::string print_quotient(const QuotientMultiVector& x) {
    std::vector<std::string> parts;
    for (const auto& [s, f] : x.terms()) {
        std::string payload = s.empty() ? "" : dirs_payload(s);
        parts.push_back(poly_text(f, plain_name, payload));
    }
    return join_nonempty(parts);
}

std::string print_cochain(const Cochain& phi) {
    std::vector<std::string> parts;
    for (const auto& [tuple, f] : phi.terms()) {
        std::string payload;
        if (!tuple.empty()) {
            payload = "D[";
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i) payload += "|";
                payload += "(";
                for (std::size_t c = 0; c < tuple[i].size(); ++c) {
                    if (c) payload += ",";
                    payload += std::to_string(tuple[i].exp[c]);
                }
                payload += ")";
            }
            payload += "]";
        }
        parts.push_back(poly_text(f, plain_name, payload));
    }
    return join_nonempty(parts);
}

std::string print_expr(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::poly: return print_poly(e.poly());
        case ExprKind::multivector: return print_multivector(e.multivector());
        case ExprKind::cochain: return print_cochain(e.cochain());
    }
    throw std::logic_error("print_expr: bad kind");
}

namespace {

// scans for x<r>_ identifiers to infer the bar degree
unsigned scan_bar_degree(const std::string& src) {
    unsigned k = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] != 'x') continue;
        std::size_t j = i + 1;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        if (j < src.size() && src[j] == '_' && j > i + 1) {
            unsigned r = static_cast<unsigned>(std::stoul(src.substr(i + 1, j - i - 1)));
            k = std::max(k, r);
        }
    }
    return k;
}

std::string bar_name(std::size_t n, unsigned k, std::size_t flat) {
    std::size_t block = (flat - 1) / n;
    std::size_t coord = (flat - 1) % n + 1;
    if (block == 0) return "a" + std::to_string(coord);
    if (block == k + 1) return "b" + std::to_string(coord);
    return "x" + std::to_string(block) + "_" + std::to_string(coord);
}

} // namespace

BarChain parse_bar_chain(const std::string& src, std::size_t n, int k) {
    unsigned inferred = scan_bar_degree(src);
    unsigned kk = k >= 0 ? static_cast<unsigned>(k) : inferred;
    if (k >= 0 && inferred > kk)
        throw ParseError(0, "chain degree >= " + std::to_string(inferred),
                         "chain mentions middle block " + std::to_string(inferred) +
                             " beyond the requested degree");
    Lexer lex(src);
    VarScheme scheme = bar_scheme(n, kk);
    Poly value(scheme.nvars);
    TermParser tp(lex, scheme, nullptr, Allow::none);
    tp.parse_sum([&](const TermParts& t) { value.add_term(t.mono, t.coeff); });
    return BarChain(n, kk, value);
}

std::string print_bar_chain(const BarChain& c) {
    return poly_text(c.value, [&](std::size_t flat) { return bar_name(c.n, c.k, flat); });
}

KoszulChain parse_koszul_chain(const std::string& src, std::size_t n, int k) {
    Lexer lex(src);
    VarScheme scheme = koszul_scheme(n);
    CoisoContext dirs_ctx(n, 0); // only used for validating direction ranges
    std::vector<std::pair<DirSet, Poly>> raw;
    std::optional<unsigned> degree;
    if (k >= 0) degree = static_cast<unsigned>(k);
    TermParser tp(lex, scheme, &dirs_ctx, Allow::wedge);
    tp.parse_sum([&](const TermParts& t) {
        DirSet dirs = t.saw_dirs ? *t.dirs : DirSet{};
        // sort with sign; repeated directions collapse the term to zero
        int sign = 1;
        for (std::size_t i = 1; i < dirs.size(); ++i)
            for (std::size_t j = i; j > 0 && dirs[j - 1] >= dirs[j]; --j) {
                if (dirs[j - 1] == dirs[j]) sign = 0;
                std::swap(dirs[j - 1], dirs[j]);
                sign = -sign;
            }
        if (sign == 0) return;
        if (!degree) degree = static_cast<unsigned>(dirs.size());
        if (*degree != dirs.size())
            throw ParseError(0, "uniform exterior degree " + std::to_string(*degree),
                             "koszul chain mixes exterior degrees");
        Poly coeff(t.mono, sign < 0 ? Rational(-t.coeff) : t.coeff);
        raw.emplace_back(dirs, coeff);
    });
    KoszulChain out(n, degree.value_or(0));
    for (auto& [dirs, coeff] : raw) out.add_term(dirs, coeff);
    return out;
}

std::string print_koszul_chain(const KoszulChain& c) {
    std::vector<std::string> parts;
    auto name = [&](std::size_t flat) {
        return flat <= c.n ? "a" + std::to_string(flat) : "b" + std::to_string(flat - c.n);
    };
    for (const auto& [s, f] : c.terms) {
        std::string payload = dirs_payload(s);
        parts.push_back(poly_text(f, name, payload));
    }
    return join_nonempty(parts);
}

} // namespace coiso
