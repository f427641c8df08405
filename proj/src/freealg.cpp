#include "ncgb/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

namespace ncgb {

Algebra::Algebra(std::vector<std::string> names) : names_(std::move(names)) {}

AlgebraPtr Algebra::make(std::vector<std::string> names) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty() || (!std::isalpha((unsigned char)n[0]) && n[0] != '_'))
            throw UsageError("invalid variable name: '" + n + "'");
        for (char c : n)
            if (!std::isalnum((unsigned char)c) && c != '_')
                throw UsageError("invalid variable name: '" + n + "'");
        if (!seen.insert(n).second) throw UsageError("duplicate variable name: '" + n + "'");
    }
    return AlgebraPtr(new Algebra(std::move(names)));
}

std::optional<VarIndex> Algebra::find(std::string_view name) const {
    for (VarIndex i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarIndex Algebra::require(std::string_view name) const {
    auto v = find(name);
    if (!v) throw UsageError("unknown variable: '" + std::string(name) + "'");
    return *v;
}

bool Algebra::same_as(const Algebra& o) const { return this == &o || names_ == o.names_; }

Word Word::operator*(const Word& o) const {
    Word r;
    r.letters.reserve(letters.size() + o.letters.size());
    r.letters.insert(r.letters.end(), letters.begin(), letters.end());
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

Word Word::subword(std::size_t from, std::size_t len) const {
    return Word(std::vector<VarIndex>(letters.begin() + from, letters.begin() + from + len));
}

std::size_t Word::find(const Word& u, std::size_t from) const {
    if (u.letters.empty()) return from <= letters.size() ? from : npos;
    if (u.letters.size() > letters.size()) return npos;
    for (std::size_t i = from; i + u.letters.size() <= letters.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < u.letters.size(); ++j)
            if (letters[i + j] != u.letters[j]) {
                ok = false;
                break;
            }
        if (ok) return i;
    }
    return npos;
}

std::size_t Word::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (VarIndex v : letters) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

int canonical_cmp(const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.degree(); ++i)
        if (a.letters[i] != b.letters[i]) return a.letters[i] < b.letters[i] ? -1 : 1;
    return 0;
}

Polynomial::Polynomial(AlgebraPtr alg, std::vector<Term> terms) : alg_(std::move(alg)) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return canonical_cmp(x.word, y.word) > 0; });
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!terms_.empty() && terms_.back().word == t.word) {
            terms_.back().coeff = terms_.back().coeff + t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(AlgebraPtr alg, Rational c) {
    return Polynomial(std::move(alg), {Term(std::move(c), Word())});
}

Polynomial Polynomial::variable(AlgebraPtr alg, VarIndex v) {
    return Polynomial(std::move(alg), {Term(Rational(1), Word::single(v))});
}

Polynomial Polynomial::monomial(AlgebraPtr alg, Rational c, Word w) {
    return Polynomial(std::move(alg), {Term(std::move(c), std::move(w))});
}

std::size_t Polynomial::degree() const {
    std::size_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.word.degree());
    return d;
}

void Polynomial::check_same(const Polynomial& o) const {
    if (!alg_ || !o.alg_) {
        if (!(is_zero() || o.is_zero())) throw UsageError("polynomial without algebra");
        return;
    }
    if (!alg_->same_as(*o.alg_)) throw UsageError("polynomials over different algebras");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same(o);
    Polynomial r(alg_ ? alg_ : o.alg_);
    auto& out = r.terms_;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i >= terms_.size())
            c = -1;
        else if (j >= o.terms_.size())
            c = 1;
        else
            c = canonical_cmp(terms_[i].word, o.terms_[j].word);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back(Term(std::move(s), terms_[i].word));
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(alg_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back(a * b);
    return Polynomial(alg_ ? alg_ : o.alg_, std::move(prod));
}

Polynomial Polynomial::sandwich(const Term& l, const Term& r) const {
    Rational c = l.coeff * r.coeff;
    if (c.is_zero()) return Polynomial(alg_);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(Term(t.coeff * c, l.word * t.word * r.word));
    return Polynomial(alg_, std::move(ts));
}

bool Polynomial::operator==(const Polynomial& o) const {
    return terms_ == o.terms_;
}

bool Polynomial::scalar_multiple_of(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    Rational ratio = o.terms_[0].coeff / terms_[0].coeff;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].word != o.terms_[i].word) return false;
        if (terms_[i].coeff * ratio != o.terms_[i].coeff) return false;
    }
    return true;
}

AdjointMap::AdjointMap(AlgebraPtr alg, const std::vector<std::pair<VarIndex, VarIndex>>& pairs)
    : alg_(std::move(alg)) {
    partner_.assign(alg_->size(), kNoVar);
    for (auto [x, y] : pairs) {
        if (x >= partner_.size() || y >= partner_.size())
            throw UsageError("adjoint pair out of range");
        partner_[x] = y;
        partner_[y] = x;
    }
    for (VarIndex v = 0; v < partner_.size(); ++v)
        if (partner_[v] != kNoVar && partner_[partner_[v]] != v)
            throw UsageError("adjoint map is not involutive");
}

AdjointMap AdjointMap::by_suffix(const AlgebraPtr& alg, std::string_view suffix) {
    std::vector<std::pair<VarIndex, VarIndex>> pairs;
    for (VarIndex v = 0; v < alg->size(); ++v) {
        const std::string& n = alg->name(v);
        if (n.size() > suffix.size() && n.compare(n.size() - suffix.size(), suffix.size(),
                                                  suffix.data(), suffix.size()) == 0)
            continue;  // this is itself an adjoint name
        auto p = alg->find(n + std::string(suffix));
        if (p) pairs.emplace_back(v, *p);
    }
    return AdjointMap(alg, pairs);
}

VarIndex AdjointMap::partner(VarIndex v) const {
    if (!has(v)) throw UsageError("variable has no adjoint partner");
    return partner_[v];
}

Word adjoint_word(const Word& w, const AdjointMap& m) {
    Word r;
    r.letters.reserve(w.degree());
    for (std::size_t i = w.degree(); i-- > 0;) r.letters.push_back(m.partner(w.letters[i]));
    return r;
}

Polynomial adjoint(const Polynomial& p, const AdjointMap& m) {
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) ts.push_back(Term(t.coeff, adjoint_word(t.word, m)));
    return Polynomial(p.algebra(), std::move(ts));
}

std::vector<Polynomial> pinv(const AlgebraPtr& alg, VarIndex a, VarIndex b, VarIndex a_adj,
                             VarIndex b_adj) {
    auto mono = [&](std::initializer_list<VarIndex> vs) {
        return Polynomial::monomial(alg, Rational(1), Word(std::vector<VarIndex>(vs)));
    };
    return {
        mono({a, b, a}) - mono({a}),
        mono({b, a, b}) - mono({b}),
        mono({b_adj, a_adj}) - mono({a, b}),
        mono({a_adj, b_adj}) - mono({b, a}),
    };
}

std::vector<Polynomial> add_adj(const std::vector<Polynomial>& F, const AdjointMap& m) {
    std::vector<Polynomial> out = F;
    for (const auto& f : F) {
        Polynomial g = adjoint(f, m);
        bool redundant = false;
        for (const auto& h : out)
            if (h.scalar_multiple_of(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view src;
    std::size_t pos = 0;
    const AlgebraPtr& alg;

    explicit PolyParser(std::string_view s, const AlgebraPtr& a) : src(s), alg(a) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    Polynomial parse() {
        Polynomial r = Polynomial::zero(alg);
        bool first = true;
        while (!eof()) {
            int sign = 1;
            char c = peek();
            if (c == '+' || c == '-') {
                if (c == '-') sign = -1;
                ++pos;
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos);
            }
            Polynomial t = parse_product();
            r = sign > 0 ? r + t : r - t;
            first = false;
        }
        if (first) throw ParseError("empty polynomial", pos);
        return r;
    }

    Polynomial parse_product() {
        Polynomial r = parse_factor();
        while (peek() == '*') {
            ++pos;
            r = r * parse_factor();
        }
        return r;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos >= src.size()) throw ParseError("unexpected end of input", pos);
        char c = src[pos];
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            std::string numerator(src.substr(start, pos - start));
            if (pos < src.size() && src[pos] == '/') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
                if (dstart == pos) throw ParseError("expected denominator digits", pos);
                return Polynomial::constant(
                    alg, Rational(BigInt::from_decimal(numerator),
                                  BigInt::from_decimal(src.substr(dstart, pos - dstart))));
            }
            return Polynomial::constant(alg, Rational(BigInt::from_decimal(numerator), BigInt(1)));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
                ++pos;
            std::string name(src.substr(start, pos - start));
            auto v = alg->find(name);
            if (!v) throw ParseError("unknown identifier '" + name + "'", start);
            unsigned exp = 1;
            if (pos < src.size() && src[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
                if (estart == pos) throw ParseError("expected exponent digits", pos);
                exp = (unsigned)std::stoul(std::string(src.substr(estart, pos - estart)));
            }
            Word w;
            w.letters.assign(exp, *v);
            return Polynomial::monomial(alg, Rational(1), std::move(w));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

void append_word(std::ostringstream& os, const Word& w, const Algebra& alg) {
    std::size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        if (!first) os << "*";
        os << alg.name(w.letters[i]);
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
}

void append_term(std::ostringstream& os, const Term& t, const Algebra* alg, bool leading) {
    Rational c = t.coeff;
    bool neg = c.is_negative();
    if (neg) c = -c;
    if (leading) {
        if (neg) os << "-";
    } else {
        os << (neg ? " - " : " + ");
    }
    if (t.word.empty()) {
        os << c.str();
        return;
    }
    if (!c.is_one()) os << c.str() << "*";
    if (alg) append_word(os, t.word, *alg);
}

}  // namespace

Polynomial parse_polynomial(std::string_view src, const AlgebraPtr& alg) {
    PolyParser p(src, alg);
    return p.parse();
}

std::string format_word(const Word& w, const Algebra& alg) {
    if (w.empty()) return "1";
    std::ostringstream os;
    append_word(os, w, alg);
    return os.str();
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    // canonical storage is descending; print ascending like the session output
    const auto& ts = p.terms();
    for (std::size_t k = ts.size(); k-- > 0;)
        append_term(os, ts[k], p.algebra().get(), k + 1 == ts.size());
    return os.str();
}

std::string format_polynomial_sorted(const Polynomial& p,
                                     const std::vector<const Term*>& ascending) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < ascending.size(); ++k)
        append_term(os, *ascending[k], p.algebra().get(), k == 0);
    return os.str();
}

}  // namespace ncgb
