#pragma once

#include "resemblance/ordinal.hpp"
#include "resemblance/rho_core.hpp"

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace resemblance {

using Trace = std::vector<std::string>;

struct Verdict {
    Tri value = Tri::Undetermined;
    Trace trace;
};

struct ComponentInfo {
    Ordinal alpha;
    Ext kappa;
    Ext max1;
    Trace kappa_trace;
    Trace max1_trace;
};

struct Max1Info {
    Ordinal lo;                 // certified lower bound
    std::optional<Ordinal> hi;  // certified upper bound, if any
    Trace trace;
    bool exact() const { return hi && *hi == lo; }
};

struct Config {
    Ordinal rho = 1;
    int eps_depth = 1;
    bool sequel = false;
};

class Calculus {
public:
    explicit Calculus(Config cfg = {});

    const Config& config() const { return cfg_; }
    const Ordinal& rho() const { return cfg_.rho; }

    ComponentInfo component(const Ordinal& a) const;
    Ordinal kappa(const Ordinal& a) const;
    Ext max1_kappa(const Ordinal& a) const;
    Ordinal max1_lower_bound(const Ordinal& a) const;

    Ext index(const Ordinal& b, Trace* trace = nullptr) const;
    Ordinal index_or_throw(const Ordinal& b) const;
    Max1Info max1_info(const Ordinal& b) const;
    Ext max1(const Ordinal& b) const;
    Verdict le1(const Ordinal& b1, const Ordinal& b2) const;

    Ordinal frt_iso(const Ordinal& a, const Ordinal& b, const Ordinal& x) const;
    Ordinal msl_translate(const Ordinal& base, const Ordinal& x) const;
    Ordinal lmsl_translate(const Ordinal& base1, const Ordinal& base2, const Ordinal& gamma,
                           const Ordinal& x) const;

    // epsilon atom above rho
    bool big_epsilon(const Ordinal& a) const;
    // least epsilon atom above rho, if representable
    std::optional<Ordinal> first_epsilon() const;
    // no <=2 link can end at or below x
    bool link_free_upto(const Ordinal& x) const;
    void check(const Ordinal& a) const;

private:
    struct Comp {
        Ext k, m;
        Trace kt, mt;
    };
    Comp comp(const Ordinal& a) const;
    Comp comp_indec(const Ordinal& t) const;
    std::optional<Ordinal> jump_exponent(const Ordinal& e) const;

    Config cfg_;
    Ordinal c_;
    Ordinal rho_omega_;
    std::optional<int> estar_;
    std::optional<Ordinal> undecided_;
    mutable std::shared_mutex mu_;
    mutable std::map<Ordinal, Comp, OrdLess> memo_;
};

void append(Trace& t, const Trace& more);
std::string join(const Trace& t);

} // namespace resemblance
