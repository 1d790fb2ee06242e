#include "dua/parser.hpp"

#include "dua/structure.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace dua {

namespace {

struct Token {
    enum class Kind { Number, Name, Op, End };
    Kind kind = Kind::End;
    std::string text;
    Int number;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_ = Token{};
        tok_.pos = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::Number;
            tok_.text = text_.substr(start, pos_ - start);
            tok_.number = Int(tok_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
                ++pos_;
            tok_.kind = Token::Kind::Name;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        static const std::string ops = "+-*/^()";
        if (ops.find(c) != std::string::npos) {
            tok_.kind = Token::Kind::Op;
            tok_.text = std::string(1, c);
            ++pos_;
            return;
        }
        throw parse_error("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token tok_;
};

// One evaluator per value domain; V needs ring operations and division.
template <typename V, typename Ctx>
class Evaluator {
public:
    Evaluator(Lexer& lex, const Ctx& ctx) : lex_(lex), ctx_(ctx) {}

    V parse() {
        V v = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw parse_error("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
        return v;
    }

private:
    bool is_op(const char* s) const {
        return lex_.peek().kind == Token::Kind::Op && lex_.peek().text == s;
    }

    V expr() {
        bool negate = false;
        if (is_op("-")) {
            lex_.take();
            negate = true;
        }
        V acc = term();
        if (negate) acc = ctx_.negate(acc);
        while (is_op("+") || is_op("-")) {
            bool minus = lex_.take().text == "-";
            V rhs = term();
            acc = minus ? ctx_.sub(acc, rhs) : ctx_.add(acc, rhs);
        }
        return acc;
    }

    V term() {
        V acc = factor();
        while (is_op("*") || is_op("/")) {
            Token op = lex_.take();
            V rhs = factor();
            acc = op.text == "*" ? ctx_.mul(acc, rhs) : ctx_.div(acc, rhs, op.pos);
        }
        return acc;
    }

    V factor() {
        V base = atom();
        if (is_op("^")) {
            Token caret = lex_.take();
            if (lex_.peek().kind != Token::Kind::Number)
                throw parse_error("exponent must be a natural number", caret.pos);
            Token e = lex_.take();
            if (!e.number.fits_uint_p())
                throw parse_error("exponent too large", e.pos);
            base = ctx_.pow(base, e.number.get_ui());
        }
        return base;
    }

    V atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            Token num = lex_.take();
            return ctx_.number(num.number);
        }
        if (t.kind == Token::Kind::Name) {
            Token name = lex_.take();
            return ctx_.symbol(name.text, name.pos);
        }
        if (is_op("(")) {
            lex_.take();
            V v = expr();
            if (!is_op(")")) throw parse_error("expected ')'", lex_.peek().pos);
            lex_.take();
            return v;
        }
        throw parse_error("expected a value", t.pos);
    }

    Lexer& lex_;
    const Ctx& ctx_;
};

std::optional<unsigned> t_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 't') return std::nullopt;
    for (std::size_t idx = 1; idx < name.size(); ++idx)
        if (!std::isdigit(static_cast<unsigned char>(name[idx]))) return std::nullopt;
    unsigned long v = std::stoul(name.substr(1));
    if (v == 0) return std::nullopt;
    return static_cast<unsigned>(v - 1);
}

struct ElementCtx {
    SpecPtr spec;
    mutable std::optional<std::pair<Element, Element>> hk;

    Element number(const Int& v) const {
        return Element::constant(spec, spec->field().elem(Rat(v)));
    }
    Element symbol(const std::string& name, std::size_t pos) const {
        if (name == "u") return Element::gen_u(spec);
        if (name == "d") return Element::gen_d(spec);
        if (name == "H" || name == "K") {
            if (!spec->has_roots()) throw parse_error("roots r,s required for " + name, pos);
            if (!hk) hk = make_HK(spec);
            return name == "H" ? hk->first : hk->second;
        }
        if (name == "zeta") {
            if (spec->field().cyclo_order() < 2)
                throw parse_error("zeta needs a cyclotomic coefficient field", pos);
            return Element::constant(spec, spec->field().zeta());
        }
        if (auto idx = t_index(name)) {
            if (!spec->field().is_scalar_kind()) {
                if (*idx >= spec->field().arity())
                    throw parse_error("unknown symbol " + name, pos);
                return Element::constant(spec, spec->field().t_var(*idx));
            }
            if (*idx >= spec->n()) throw parse_error("t index out of range: " + name, pos);
            return Element::gen_t(spec, *idx);
        }
        throw parse_error("unknown symbol " + name, pos);
    }
    Element negate(const Element& a) const { return -a; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element div(const Element& a, const Element& b, std::size_t pos) const {
        auto c = b.constant_value();
        if (!c || c->is_zero())
            throw parse_error("division needs a nonzero coefficient divisor", pos);
        return a.scale(c->inverse());
    }
    Element pow(const Element& a, unsigned e) const { return a.pow(e); }
};

struct FieldCtx {
    Field field;

    FieldElem number(const Int& v) const { return field.elem(Rat(v)); }
    FieldElem symbol(const std::string& name, std::size_t pos) const {
        if (name == "zeta") {
            if (field.cyclo_order() < 2)
                throw parse_error("zeta needs a cyclotomic field", pos);
            return field.zeta();
        }
        if (auto idx = t_index(name)) {
            if (field.is_scalar_kind())
                throw parse_error("t variables need a rational function field", pos);
            if (*idx >= field.arity()) throw parse_error("t index out of range: " + name, pos);
            return field.t_var(*idx);
        }
        throw parse_error("unknown symbol " + name, pos);
    }
    FieldElem negate(const FieldElem& a) const { return -a; }
    FieldElem add(const FieldElem& a, const FieldElem& b) const { return a + b; }
    FieldElem sub(const FieldElem& a, const FieldElem& b) const { return a - b; }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const { return a * b; }
    FieldElem div(const FieldElem& a, const FieldElem& b, std::size_t pos) const {
        if (b.is_zero()) throw parse_error("division by zero", pos);
        return a / b;
    }
    FieldElem pow(const FieldElem& a, unsigned e) const { return a.pow(static_cast<long>(e)); }
};

struct PolyCtx {
    std::vector<std::string> names;
    Field coeff_field;

    MultiPoly number(const Int& v) const {
        return MultiPoly::constant(static_cast<unsigned>(names.size()), Scalar(Rat(v)));
    }
    MultiPoly symbol(const std::string& name, std::size_t pos) const {
        for (std::size_t idx = 0; idx < names.size(); ++idx)
            if (names[idx] == name)
                return MultiPoly::variable(static_cast<unsigned>(names.size()),
                                           static_cast<unsigned>(idx));
        if (name == "zeta") {
            if (coeff_field.cyclo_order() < 2)
                throw parse_error("zeta needs a cyclotomic coefficient field", pos);
            return MultiPoly::constant(static_cast<unsigned>(names.size()),
                                       Scalar::zeta(coeff_field.cyclo_order()));
        }
        throw parse_error("unknown symbol " + name, pos);
    }
    MultiPoly negate(const MultiPoly& a) const { return -a; }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
    MultiPoly div(const MultiPoly& a, const MultiPoly& b, std::size_t pos) const {
        if (!b.is_constant() || b.is_zero())
            throw parse_error("division needs a nonzero scalar divisor", pos);
        return a.scale(b.constant_value().inverse());
    }
    MultiPoly pow(const MultiPoly& a, unsigned e) const { return a.pow(e); }
};

} // namespace

Element parse_expr(const std::string& text, const SpecPtr& spec) {
    Lexer lex(text);
    ElementCtx ctx{spec, std::nullopt};
    return Evaluator<Element, ElementCtx>(lex, ctx).parse();
}

FieldElem parse_field_elem(const std::string& text, const Field& field) {
    Lexer lex(text);
    FieldCtx ctx{field};
    return Evaluator<FieldElem, FieldCtx>(lex, ctx).parse();
}

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& names,
                     const Field& coeff_field) {
    Lexer lex(text);
    PolyCtx ctx{names, coeff_field};
    return Evaluator<MultiPoly, PolyCtx>(lex, ctx).parse();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string unquote(std::string s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

} // namespace

SpecPtr spec_load(const std::string& source) {
    std::map<std::string, std::string> kv;
    std::istringstream in(source);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("spec line " + std::to_string(lineno) + " is not key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = unquote(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty())
            throw parse_error("spec line " + std::to_string(lineno) + " is not key = value");
        if (kv.count(key)) throw parse_error("duplicate spec key " + key);
        kv[key] = value;
    }
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    unsigned n = 0;
    if (auto v = take("n")) n = static_cast<unsigned>(std::stoul(*v));
    std::string kind = "rational";
    if (auto v = take("field.kind"))
        kind = *v;
    else if (auto v2 = take("field"))
        kind = *v2;
    Field field = Field::rational();
    if (kind == "rational") {
        field = Field::rational();
        if (take("field.m") || take("field.arity"))
            throw parse_error("field.m / field.arity are not rational-field keys");
    } else if (kind == "cyclotomic") {
        auto m = take("field.m");
        if (!m) throw parse_error("cyclotomic field needs field.m");
        field = Field::cyclotomic(static_cast<unsigned>(std::stoul(*m)));
    } else if (kind == "rational_function") {
        auto arity = take("field.arity");
        if (!arity) throw parse_error("rational function field needs field.arity");
        unsigned order = 1;
        if (auto m = take("field.m")) order = static_cast<unsigned>(std::stoul(*m));
        field = Field::rational_function(static_cast<unsigned>(std::stoul(*arity)), order);
        if (n != 0) throw parse_error("rational function coefficients require n = 0");
    } else {
        throw parse_error("unknown field.kind " + kind);
    }

    std::optional<FieldElem> alpha, beta, r, s;
    if (auto v = take("alpha")) alpha = parse_field_elem(*v, field);
    if (auto v = take("beta")) beta = parse_field_elem(*v, field);
    if (auto v = take("r")) r = parse_field_elem(*v, field);
    if (auto v = take("s")) s = parse_field_elem(*v, field);
    if ((!alpha || !beta) && !(r && s))
        throw parse_error("spec needs alpha and beta, or both roots r and s");
    if (!alpha) alpha = *r + *s;
    if (!beta) beta = -(*r * *s);

    std::string phi_text = "0";
    if (auto v = take("phi")) phi_text = *v;

    if (!kv.empty()) throw parse_error("unknown spec key " + kv.begin()->first);

    if (field.is_scalar_kind()) {
        std::vector<std::string> names;
        for (unsigned idx = 0; idx < n; ++idx) names.push_back("t" + std::to_string(idx + 1));
        MultiPoly phi = parse_poly(phi_text, names, field);
        return AlgebraSpec::make(n, field, *alpha, *beta, r, s, phi);
    }
    FieldElem gamma = parse_field_elem(phi_text, field);
    return AlgebraSpec::make_classical(field, *alpha, *beta, r, s, gamma);
}

SpecPtr spec_load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open spec file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return spec_load(buf.str());
}

} // namespace dua
