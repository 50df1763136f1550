#include "resemblance/ordinal.hpp"

#include <cctype>
#include <mutex>

namespace resemblance {

namespace {

const std::vector<Term> kEmpty;

int cmp_nat(const Nat& a, const Nat& b) { return a < b ? -1 : (a > b ? 1 : 0); }

int compare_exp(const Term& x, const Term& y) {
    if (x.eps >= 0 && y.eps >= 0) return x.eps < y.eps ? -1 : (x.eps > y.eps ? 1 : 0);
    if (x.eps >= 0) return compare(Ordinal::epsilon(x.eps), y.exponent);
    if (y.eps >= 0) return compare(x.exponent, Ordinal::epsilon(y.eps));
    return compare(x.exponent, y.exponent);
}

Term make_term(const Ordinal& e, const Nat& c) {
    if (auto k = epsilon_index(e)) return Term{Ordinal(), c, *k};
    return Term{e, c, -1};
}

} // namespace

Ordinal::Ordinal(unsigned long long n) {
    if (n) rep_ = std::make_shared<const std::vector<Term>>(std::vector<Term>{Term{Ordinal(), Nat(n), -1}});
}

Ordinal Ordinal::nat(const Nat& n) {
    if (n < 0) throw Error("SyntaxError", "negative natural");
    if (n == 0) return {};
    return from_terms({Term{Ordinal(), n, -1}});
}

Ordinal Ordinal::omega() { return from_terms({Term{Ordinal(1), Nat(1), -1}}); }

Ordinal Ordinal::epsilon(int k) {
    static std::mutex mu;
    static std::vector<Ordinal> cache;
    std::lock_guard lock(mu);
    while ((int)cache.size() <= k) {
        Ordinal o;
        o.rep_ = std::make_shared<const std::vector<Term>>(std::vector<Term>{Term{Ordinal(), Nat(1), (int)cache.size()}});
        cache.push_back(o);
    }
    return cache[k];
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    Ordinal o;
    if (!terms.empty()) o.rep_ = std::make_shared<const std::vector<Term>>(std::move(terms));
    return o;
}

const std::vector<Term>& Ordinal::terms() const { return rep_ ? *rep_ : kEmpty; }
size_t Ordinal::size() const { return terms().size(); }

bool Ordinal::is_nat() const {
    return !rep_ || (rep_->size() == 1 && (*rep_)[0].eps < 0 && (*rep_)[0].exponent.is_zero());
}

Nat Ordinal::nat_value() const {
    if (!is_nat()) throw Error("NotNatural", format(*this));
    return rep_ ? (*rep_)[0].coeff : Nat(0);
}

int compare(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    if (&x == &y) return 0;
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
        if (int c = compare_exp(x[i], y[i])) return c;
        if (int c = cmp_nat(x[i].coeff, y[i].coeff)) return c;
    }
    return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
}

Ordinal term_exponent(const Term& t) { return t.eps >= 0 ? Ordinal::epsilon(t.eps) : t.exponent; }
Ordinal single(const Term& t) { return Ordinal::from_terms({t}); }

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const auto& bt = b.terms();
    std::vector<Term> out;
    for (const auto& t : a.terms()) {
        int c = compare_exp(t, bt[0]);
        if (c > 0) {
            out.push_back(t);
        } else {
            if (c == 0) {
                Term m = bt[0];
                m.coeff += t.coeff;
                out.push_back(m);
                out.insert(out.end(), bt.begin() + 1, bt.end());
                return Ordinal::from_terms(std::move(out));
            }
            break;
        }
    }
    out.insert(out.end(), bt.begin(), bt.end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal mul_nat(const Ordinal& a, const Nat& n) {
    if (a.is_zero() || n == 0) return {};
    std::vector<Term> out = a.terms();
    out[0].coeff *= n;
    return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Ordinal lead = degree(a);
    Ordinal out;
    for (const auto& t : b.terms()) {
        Ordinal e = term_exponent(t);
        if (e.is_zero())
            out = add(out, mul_nat(a, t.coeff));
        else
            out = add(out, single(make_term(add(lead, e), t.coeff)));
    }
    return out;
}

Ordinal omega_pow(const Ordinal& a) { return single(make_term(a, 1)); }

Ordinal sub_left(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    size_t i = 0;
    for (; i < x.size() && i < y.size(); ++i) {
        int c = compare_exp(x[i], y[i]);
        if (c > 0) throw Error("Domain", "sub_left with a > b");
        if (c < 0) break;
        if (x[i].coeff != y[i].coeff) {
            if (x[i].coeff > y[i].coeff) throw Error("Domain", "sub_left with a > b");
            std::vector<Term> out;
            Term t = y[i];
            t.coeff -= x[i].coeff;
            out.push_back(t);
            out.insert(out.end(), y.begin() + i + 1, y.end());
            return Ordinal::from_terms(std::move(out));
        }
    }
    if (i == y.size() && i < x.size()) throw Error("Domain", "sub_left with a > b");
    return Ordinal::from_terms(std::vector<Term>(y.begin() + i, y.end()));
}

Ordinal degree(const Ordinal& a) { return a.is_zero() ? Ordinal() : term_exponent(a.terms()[0]); }

bool is_indecomposable(const Ordinal& a) { return a.size() == 1 && a.terms()[0].coeff == 1; }

std::optional<int> epsilon_index(const Ordinal& a) {
    if (a.size() == 1 && a.terms()[0].eps >= 0 && a.terms()[0].coeff == 1) return a.terms()[0].eps;
    return std::nullopt;
}

bool is_limit(const Ordinal& a) {
    if (a.is_zero()) return false;
    const Term& t = a.terms().back();
    return t.eps >= 0 || !t.exponent.is_zero();
}

bool is_successor(const Ordinal& a) { return !a.is_zero() && !is_limit(a); }

int max_epsilon(const Ordinal& a) {
    int m = -1;
    for (const auto& t : a.terms()) m = std::max(m, t.eps >= 0 ? t.eps : max_epsilon(t.exponent));
    return m;
}

Classification classify(const Ordinal& a) {
    Classification c{};
    c.kind = a.is_zero() ? Classification::Zero : is_limit(a) ? Classification::Limit : Classification::Successor;
    c.indecomposable = is_indecomposable(a);
    c.epsilon = epsilon_index(a).has_value();
    return c;
}

LastTerm cnf_last_term(const Ordinal& a) {
    if (a.is_zero()) throw Error("ZeroArgument", "cnf_last_term(0)");
    std::vector<Term> p = a.terms();
    Ordinal e = term_exponent(p.back());
    if (p.back().coeff == 1)
        p.pop_back();
    else
        p.back().coeff -= 1;
    return {Ordinal::from_terms(std::move(p)), e};
}

Ordinal rho_exponent(const Ordinal& rho) { return degree(rho); }

void check_rho(const Ordinal& rho) {
    if (!is_indecomposable(rho)) throw Error("NotIndecomposable", format(rho) + " is not of the form w^c");
}

RhoSplit rho_split(const Ordinal& a, const Ordinal& rho) {
    Ordinal c = rho_exponent(rho);
    std::vector<Term> hi, lo;
    for (const auto& t : a.terms()) (compare(term_exponent(t), c) >= 0 ? hi : lo).push_back(t);
    return {Ordinal::from_terms(std::move(hi)), Ordinal::from_terms(std::move(lo))};
}

Ordinal rho_quotient(const Ordinal& a, const Ordinal& rho) {
    Ordinal c = rho_exponent(rho);
    Ordinal out;
    for (const auto& t : a.terms()) {
        Ordinal e = term_exponent(t);
        if (compare(e, c) < 0) break;
        out = add(out, mul_nat(omega_pow(sub_left(c, e)), t.coeff));
    }
    return out;
}

bool divisible(const Ordinal& a, const Ordinal& rho) { return rho_split(a, rho).rem.is_zero(); }

bool limit_multiple(const Ordinal& a, const Ordinal& rho) {
    if (a.is_zero() || !divisible(a, rho)) return false;
    return compare(term_exponent(a.terms().back()), rho_exponent(rho)) > 0;
}

namespace {

std::string factor_str(const Ordinal& e);

std::string term_str(const Term& t) {
    std::string c = t.coeff.str();
    if (t.eps < 0 && t.exponent.is_zero()) return c;
    std::string base;
    if (t.eps >= 0)
        base = "e" + std::to_string(t.eps);
    else if (t.exponent == Ordinal(1))
        base = "w";
    else
        base = "w^" + factor_str(t.exponent);
    return t.coeff == 1 ? base : base + "*" + c;
}

std::string factor_str(const Ordinal& e) {
    if (e.is_nat() || is_indecomposable(e)) return term_str(e.terms()[0]);
    return "(" + format(e) + ")";
}

struct Parser {
    const std::string& s;
    int depth;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error("SyntaxError", what + " at position " + std::to_string(pos));
    }
    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return pos < s.size() && std::isdigit((unsigned char)s[pos]);
    }
    Nat number() {
        if (!peek_digit()) fail("expected a natural number");
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        return Nat(s.substr(start, pos - start));
    }
    bool peek_atom() {
        skip();
        return pos < s.size() && (s[pos] == 'w' || s[pos] == 'e');
    }
    Ordinal atom() {
        skip();
        if (eat('w')) {
            if (eat('^')) return omega_pow(factor());
            return Ordinal::omega();
        }
        if (eat('e')) {
            size_t at = pos;
            Nat k = number();
            if (k >= depth) {
                pos = at;
                throw Error("BoundExceeded", "e" + k.str() + " needs epsilon depth > " + k.str());
            }
            return Ordinal::epsilon((int)k);
        }
        fail("expected 'w' or 'e'");
    }
    Ordinal factor() {
        if (peek_digit()) return Ordinal::nat(number());
        if (eat('(')) {
            Ordinal o = ordinal();
            if (!eat(')')) fail("expected ')'");
            return o;
        }
        return atom();
    }
    Ordinal term() {
        if (peek_digit()) return Ordinal::nat(number());
        Ordinal a = atom();
        if (eat('*')) return mul_nat(a, number());
        return a;
    }
    Ordinal ordinal() {
        Ordinal o = term();
        while (eat('+')) o = add(o, term());
        return o;
    }
};

} // namespace

std::string format(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty()) out += "+";
        out += term_str(t);
    }
    return out;
}

Ordinal parse(const std::string& text, int eps_depth) {
    Parser p{text, eps_depth};
    Ordinal o = p.ordinal();
    p.skip();
    if (p.pos != text.size()) p.fail("unexpected character");
    return o;
}

} // namespace resemblance

namespace resemblance {

std::string format(const Ext& e) {
    if (e.kind == Ext::Unbounded) return "Unbounded";
    if (e.kind == Ext::Undetermined) return "Undetermined";
    return format(e.value);
}

} // namespace resemblance
