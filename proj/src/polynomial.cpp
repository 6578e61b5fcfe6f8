#include "fol/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "fol/errors.hpp"

namespace fol {

namespace {

void check_same_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("polynomial variable counts differ: " + std::to_string(a.nvars()) +
                             " vs " + std::to_string(b.nvars()));
}

uint32_t degree_of(const Exponents& e) {
    uint32_t d = 0;
    for (uint32_t k : e) d += k;
    return d;
}

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger exponent vector first. Fixes the printing order.
bool grlex_desc(const Exponents& a, const Exponents& b) {
    uint32_t da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

} // namespace

Polynomial Polynomial::variable(size_t nvars, size_t index) {
    if (index >= nvars) throw DimensionError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    Polynomial p(nvars);
    p.terms_[e] = GaussianRational(1);
    return p;
}

Polynomial Polynomial::monomial(size_t nvars, const Exponents& e, const GaussianRational& c) {
    if (e.size() != nvars) throw DimensionError("exponent vector length mismatch");
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

bool Polynomial::independent_of(size_t var_index) const {
    for (const auto& [e, c] : terms_)
        if (e[var_index] != 0) return false;
    return true;
}

void Polynomial::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_nvars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_nvars(a, b);
    Polynomial r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    Polynomial r(p.nvars());
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms()) r.add_term(e, c * pc);
    return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial result = Polynomial::constant(nvars_, GaussianRational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial(size_t var_index) const {
    if (var_index >= nvars_) throw DimensionError("partial: variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Exponents d = e;
        d[var_index] -= 1;
        r.add_term(d, GaussianRational(long(e[var_index])) * c);
    }
    return r;
}

GaussianRational Polynomial::eval(const Point& x) const {
    if (x.size() != nvars_) throw DimensionError("eval: point dimension mismatch");
    // Per-variable power tables up to the degree actually used.
    std::vector<uint32_t> maxdeg(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (size_t k = 0; k < nvars_; ++k) maxdeg[k] = std::max(maxdeg[k], e[k]);
    std::vector<std::vector<GaussianRational>> pows(nvars_);
    for (size_t k = 0; k < nvars_; ++k) {
        pows[k].resize(maxdeg[k] + 1, GaussianRational(1));
        for (uint32_t d = 1; d <= maxdeg[k]; ++d) pows[k][d] = pows[k][d - 1] * x[k];
    }
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (size_t k = 0; k < nvars_; ++k)
            if (e[k] != 0) t *= pows[k][e[k]];
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::substitute_zero(const std::vector<size_t>& var_indices) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        bool killed = false;
        for (size_t v : var_indices) {
            if (v >= nvars_) throw DimensionError("substitute_zero: index out of range");
            if (e[v] != 0) {
                killed = true;
                break;
            }
        }
        if (!killed) r.terms_[e] = c;
    }
    return r;
}

Polynomial Polynomial::project_to(const std::vector<size_t>& keep) const {
    Polynomial r(keep.size());
    for (const auto& [e, c] : terms_) {
        Exponents ne(keep.size(), 0);
        uint32_t seen = 0;
        for (size_t j = 0; j < keep.size(); ++j) {
            ne[j] = e[keep[j]];
            seen += ne[j];
        }
        if (seen != degree_of(e))
            throw DimensionError("project_to: polynomial involves a dropped variable");
        r.terms_[ne] = c;
    }
    return r;
}

Polynomial Polynomial::embed(size_t new_nvars, const std::vector<size_t>& var_map) const {
    if (var_map.size() != nvars_) throw DimensionError("embed: variable map length mismatch");
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_nvars, 0);
        for (size_t j = 0; j < nvars_; ++j) {
            if (var_map[j] >= new_nvars) throw DimensionError("embed: mapped index out of range");
            ne[var_map[j]] = e[j];
        }
        r.terms_[ne] = c;
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grlex_desc(a->first, b->first); });

    auto monomial_str = [&](const Exponents& e) {
        std::string m;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!m.empty()) m += "*";
            m += "X" + std::to_string(k + 1);
            if (e[k] > 1) m += "^" + std::to_string(e[k]);
        }
        return m;
    };

    std::string out;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        std::string mono = monomial_str(e);
        std::string piece;
        bool negative = false;
        if (c.im() == 0) {
            mpq_class a = c.re();
            negative = a < 0;
            mpq_class mag = negative ? mpq_class(-a) : a;
            if (mono.empty())
                piece = mag.get_str();
            else if (mag == 1)
                piece = mono;
            else
                piece = mag.get_str() + "*" + mono;
        } else if (c.re() == 0) {
            mpq_class b = c.im();
            negative = b < 0;
            mpq_class mag = negative ? mpq_class(-b) : b;
            std::string coeff = (mag == 1) ? "i" : mag.get_str() + "*i";
            piece = mono.empty() ? coeff : coeff + "*" + mono;
        } else {
            // Mixed coefficient: parenthesize so sign handling stays local.
            std::string coeff = "(" + c.str() + ")";
            piece = mono.empty() ? coeff : coeff + "*" + mono;
        }
        if (out.empty())
            out = negative ? "-" + piece : piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expression parser: recursive descent over
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] base ('^' uint)?
//   base   := rational | 'i' | variable | '(' expr ')'
// '*' is mandatory between factors; '/' only occurs inside rational literals.
// ---------------------------------------------------------------------------

namespace {

class Parser {
  public:
    Parser(const std::string& text, size_t nvars) : s_(text), nvars_(nvars) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool neg = consume('-');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (consume('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        if (consume('-')) return -factor();
        Polynomial b = base();
        if (consume('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("exponent must be a non-negative integer literal");
            uint64_t e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 100000) fail("exponent too large");
                ++pos_;
            }
            return b.pow(static_cast<uint32_t>(e));
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (c == 'i' && !variable_ahead()) {
            ++pos_;
            return Polynomial::constant(nvars_, GaussianRational::i());
        }
        if (c == 'X' || c == 'x' || c == 'z' || c == 'Z') return variable();
        fail("expected a rational literal, 'i', a variable, or '('");
    }

    bool variable_ahead() {
        // 'i' is the imaginary unit; variables always carry a digit suffix.
        return false;
    }

    Polynomial rational_literal() {
        mpz_class num = integer_digits();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t slash = pos_;
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                pos_ = slash;
                fail("expected denominator digits after '/'");
            }
            mpz_class den = integer_digits();
            if (den == 0) {
                pos_ = slash;
                fail("zero denominator");
            }
            mpq_class q(num, den);
            q.canonicalize();
            return Polynomial::constant(nvars_, GaussianRational(q));
        }
        return Polynomial::constant(nvars_, GaussianRational(mpq_class(num)));
    }

    mpz_class integer_digits() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_];
            ++pos_;
        }
        return mpz_class(digits, 10);
    }

    Polynomial variable() {
        size_t start = pos_;
        ++pos_; // the X/z prefix
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            pos_ = start;
            fail("variable name requires a numeric index");
        }
        uint64_t idx = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            idx = idx * 10 + (s_[pos_] - '0');
            if (idx > 1000000) {
                pos_ = start;
                fail("variable index too large");
            }
            ++pos_;
        }
        if (idx == 0 || idx > nvars_) {
            pos_ = start;
            fail("variable index " + std::to_string(idx) + " out of range for " +
                 std::to_string(nvars_) + " variables");
        }
        return Polynomial::variable(nvars_, static_cast<size_t>(idx - 1));
    }

    const std::string& s_;
    size_t nvars_;
    size_t pos_ = 0;
};

} // namespace

Polynomial poly_parse(const std::string& text, size_t nvars) {
    if (nvars == 0) throw DimensionError("nvars must be positive");
    return Parser(text, nvars).run();
}

Polynomial poly_exact_div(const Polynomial& p, const Polynomial& q) {
    check_same_nvars(p, q);
    if (q.is_zero()) throw Error("exact division by the zero polynomial");
    Polynomial r = p;
    Polynomial h(p.nvars());
    // Leading term w.r.t. grlex; cancel repeatedly. Exactness is the
    // caller's invariant (Bareiss quotients); violations throw.
    auto leading = [](const Polynomial& f) {
        const Polynomial::TermMap& t = f.terms();
        auto best = t.begin();
        for (auto it = t.begin(); it != t.end(); ++it)
            if (grlex_desc(it->first, best->first)) best = it;
        return best;
    };
    auto lq = leading(q);
    while (!r.is_zero()) {
        auto lr = leading(r);
        Exponents e(p.nvars());
        for (size_t k = 0; k < p.nvars(); ++k) {
            if (lr->first[k] < lq->first[k]) throw Error("polynomial division is not exact");
            e[k] = lr->first[k] - lq->first[k];
        }
        Polynomial t = Polynomial::monomial(p.nvars(), e, lr->second / lq->second);
        h += t;
        r -= t * q;
    }
    return h;
}

} // namespace fol
