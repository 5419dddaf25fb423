#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

#include "uqgl21/coeff.hpp"
#include "uqgl21/errors.hpp"

namespace uqgl21 {

namespace {

// Affine interpretation (a*N + b over rationals) of a parsed subtree, used
// to validate qnum/qpow arguments.
struct Affine {
    mpq_class a, b;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    CoeffFn parse() {
        CoeffFn e = expr().fn;
        skip_ws();
        if (i_ != s_.size()) throw ParseError("trailing characters in expression", i_);
        return e;
    }

  private:
    // Every subexpression carries its affine reading, when one exists.
    struct Val {
        CoeffFn fn;
        std::optional<Affine> aff;
    };

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    Val expr() {
        Val v = term();
        while (true) {
            if (eat('+')) {
                Val r = term();
                v.fn = v.fn + r.fn;
                v.aff = (v.aff && r.aff)
                            ? std::optional<Affine>({v.aff->a + r.aff->a, v.aff->b + r.aff->b})
                            : std::nullopt;
            } else if (eat('-')) {
                Val r = term();
                v.fn = v.fn - r.fn;
                v.aff = (v.aff && r.aff)
                            ? std::optional<Affine>({v.aff->a - r.aff->a, v.aff->b - r.aff->b})
                            : std::nullopt;
            } else {
                return v;
            }
        }
    }

    Val term() {
        Val v = unary();
        while (true) {
            if (eat('*')) {
                Val r = unary();
                v.fn = v.fn * r.fn;
                v.aff = mul_affine(v.aff, r.aff);
            } else if (eat('/')) {
                Val r = unary();
                v.fn = v.fn / r.fn;
                v.aff = div_affine(v.aff, r.aff);
            } else {
                return v;
            }
        }
    }

    static std::optional<Affine> mul_affine(const std::optional<Affine>& l,
                                            const std::optional<Affine>& r) {
        if (!l || !r) return std::nullopt;
        if (l->a == 0) return Affine{l->b * r->a, l->b * r->b};
        if (r->a == 0) return Affine{l->a * r->b, l->b * r->b};
        return std::nullopt;
    }
    static std::optional<Affine> div_affine(const std::optional<Affine>& l,
                                            const std::optional<Affine>& r) {
        if (!l || !r || r->a != 0 || r->b == 0) return std::nullopt;
        return Affine{l->a / r->b, l->b / r->b};
    }

    Val unary() {
        if (eat('-')) {
            Val v = unary();
            v.fn = -v.fn;
            if (v.aff) v.aff = Affine{-v.aff->a, -v.aff->b};
            return v;
        }
        return primary();
    }

    Val primary() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("unexpected end of expression", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Val v = expr();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            mpq_class v(mpz_class(s_.substr(b, i_ - b)));
            return {CoeffFn::constant(QScalar(v)), Affine{0, v}};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t b = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            std::string word = s_.substr(b, i_ - b);
            if (word == "N") return {CoeffFn::var_n(), Affine{1, 0}};
            if (word == "q")
                return {CoeffFn::q_power(0, HalfInt::whole(1)), std::nullopt};
            if (word == "qnum" || word == "qpow") {
                if (!eat('(')) throw ParseError("expected '(' after " + word, i_);
                Val arg = expr();
                if (!eat(')')) throw ParseError("expected ')'", i_);
                if (!arg.aff)
                    throw ParseError(word + " argument must be linear in N", b);
                const mpq_class &a = arg.aff->a, &bq = arg.aff->b;
                if (a.get_den() != 1)
                    throw ParseError(word + ": coefficient of N must be an integer", b);
                if (word == "qnum") {
                    if (bq.get_den() != 1)
                        throw ParseError("qnum: constant term must be an integer", b);
                    return {CoeffFn::q_number(a.get_num().get_si(), bq.get_num().get_si()),
                            std::nullopt};
                }
                mpq_class twice = 2 * bq;
                if (twice.get_den() != 1)
                    throw ParseError("qpow: constant term must be a half-integer", b);
                return {CoeffFn::q_power(a.get_num().get_si(),
                                         HalfInt(twice.get_num().get_si())),
                        std::nullopt};
            }
            throw ParseError("unknown name '" + word + "'", b);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

CoeffFn parse_coeff_fn(const std::string& text) { return Parser(text).parse(); }

CoeffFamily CoeffFamily::parse_file_text(const std::string& text) {
    CoeffFamily fam;
    fam.is_standard = false;
    std::array<bool, 4> seen{false, false, false, false};
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("coefficient file line " + std::to_string(lineno) +
                             ": expected 'Fi = <expr>'");
        std::string name = line.substr(b, eq - b);
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.size() != 2 || name[0] != 'F' || name[1] < '1' || name[1] > '4')
            throw ParseError("coefficient file line " + std::to_string(lineno) +
                             ": bad name '" + name + "'");
        int idx = name[1] - '1';
        fam.f[static_cast<std::size_t>(idx)] = parse_coeff_fn(line.substr(eq + 1));
        seen[static_cast<std::size_t>(idx)] = true;
    }
    for (int i = 0; i < 4; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw ParseError("coefficient file: missing F" + std::to_string(i + 1));
    return fam;
}

}  // namespace uqgl21
