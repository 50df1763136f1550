#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace resemblance {

using Nat = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Term;

class Ordinal {
public:
    Ordinal() = default;
    Ordinal(unsigned long long n);

    static Ordinal nat(const Nat& n);
    static Ordinal omega();
    static Ordinal epsilon(int k);
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const;
    bool is_zero() const { return !rep_; }
    bool is_nat() const;
    Nat nat_value() const;
    size_t size() const;

private:
    std::shared_ptr<const std::vector<Term>> rep_;
};

// eps >= 0 marks the atom eps_k, whose exponent is eps_k itself
struct Term {
    Ordinal exponent;
    Nat coeff;
    int eps = -1;
};

enum class Cmp { LT, EQ, GT };

int compare(const Ordinal& a, const Ordinal& b);
inline Cmp compare3(const Ordinal& a, const Ordinal& b) {
    int c = compare(a, b);
    return c < 0 ? Cmp::LT : c > 0 ? Cmp::GT : Cmp::EQ;
}
inline bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Ordinal term_exponent(const Term& t);
Ordinal single(const Term& t);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal mul_nat(const Ordinal& a, const Nat& n);
Ordinal omega_pow(const Ordinal& a);
// the unique g with a + g = b; requires a <= b
Ordinal sub_left(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

Ordinal degree(const Ordinal& a);
bool is_indecomposable(const Ordinal& a);
std::optional<int> epsilon_index(const Ordinal& a);
bool is_limit(const Ordinal& a);
bool is_successor(const Ordinal& a);
int max_epsilon(const Ordinal& a);

struct Classification {
    enum Kind { Zero, Successor, Limit } kind;
    bool indecomposable;
    bool epsilon;
};
Classification classify(const Ordinal& a);

struct LastTerm {
    Ordinal prefix;
    Ordinal last_exponent;
};
LastTerm cnf_last_term(const Ordinal& a);

// a split as rho*delta + eps, where q = rho*delta
struct RhoSplit {
    Ordinal q;
    Ordinal rem;
};
RhoSplit rho_split(const Ordinal& a, const Ordinal& rho);
Ordinal rho_quotient(const Ordinal& a, const Ordinal& rho);
bool divisible(const Ordinal& a, const Ordinal& rho);
bool limit_multiple(const Ordinal& a, const Ordinal& rho);
Ordinal rho_exponent(const Ordinal& rho);
void check_rho(const Ordinal& rho);

std::string format(const Ordinal& a);
Ordinal parse(const std::string& text, int eps_depth = 1);

struct OrdLess {
    bool operator()(const Ordinal& a, const Ordinal& b) const { return compare(a, b) < 0; }
};

} // namespace resemblance

namespace resemblance {

struct Ext {
    enum Kind { Value, Unbounded, Undetermined };
    Kind kind = Undetermined;
    Ordinal value;

    static Ext of(Ordinal v) { return {Value, std::move(v)}; }
    static Ext unbounded() { return {Unbounded, {}}; }
    static Ext undetermined() { return {Undetermined, {}}; }
    bool known() const { return kind == Value; }
    // throws Undetermined rather than coercing
    const Ordinal& get() const {
        if (kind != Value) throw Error(kind == Unbounded ? "Unbounded" : "Undetermined", "no ordinal value");
        return value;
    }
};

std::string format(const Ext& e);

} // namespace resemblance
