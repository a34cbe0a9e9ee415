#ifndef ICHAIN_MODEL_HPP
#define ICHAIN_MODEL_HPP

// One-dimensional two-state chain with site-dependent nearest-neighbour
// couplings. Bond x joins sites x-1 and x and carries coupling I_x; a
// disagreeing bond costs I_x. Sites outside the finite window [-n, n] are
// frozen to the boundary sign.

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ichain/errors.hpp"

namespace ichain {

enum class Spin : int { minus = -1, plus = 1 };

constexpr Spin operator-(Spin s) noexcept {
    return s == Spin::plus ? Spin::minus : Spin::plus;
}

constexpr int value(Spin s) noexcept { return static_cast<int>(s); }

inline Spin spin_from_int(int v) {
    if (v == 1) return Spin::plus;
    if (v == -1) return Spin::minus;
    throw DomainError("spin value must be +1 or -1, got " + std::to_string(v));
}

inline char spin_char(Spin s) noexcept { return s == Spin::plus ? '+' : '-'; }

namespace detail {

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_real(std::string_view text, std::string_view what) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty number in " + std::string(what));
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ParseError("malformed number '" + s + "' in " + std::string(what));
    }
    return v;
}

inline long long parse_integer(std::string_view text, std::string_view what) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty integer in " + std::string(what));
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno == ERANGE) {
        throw ParseError("malformed integer '" + s + "' in " + std::string(what));
    }
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

/// Coupling family x -> I_x.
class CouplingProfile {
public:
    struct Abs {};
    struct Linear {
        double a;
        double b;
    };
    struct Constant {
        double c;
    };
    struct Table {
        long long xmin;
        std::vector<double> values;
    };

    static CouplingProfile abs() { return CouplingProfile(Abs{}); }
    static CouplingProfile linear(double a, double b) { return CouplingProfile(Linear{a, b}); }
    static CouplingProfile constant(double c) { return CouplingProfile(Constant{c}); }
    static CouplingProfile table(long long xmin, std::vector<double> values) {
        if (values.empty()) throw DomainError("table profile needs at least one value");
        for (double v : values) {
            if (!std::isfinite(v)) throw DomainError("table profile values must be finite");
        }
        return CouplingProfile(Table{xmin, std::move(values)});
    }

    /// I_x. Table profiles throw DomainError outside [xmin, xmin + size).
    double operator()(long long x) const {
        return std::visit(
            [x](const auto& k) -> double {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, Abs>) {
                    return static_cast<double>(x < 0 ? -x : x);
                } else if constexpr (std::is_same_v<K, Linear>) {
                    return k.a + k.b * static_cast<double>(x < 0 ? -x : x);
                } else if constexpr (std::is_same_v<K, Constant>) {
                    return k.c;
                } else {
                    const long long i = x - k.xmin;
                    if (i < 0 || i >= static_cast<long long>(k.values.size())) {
                        throw DomainError("coupling index " + std::to_string(x) +
                                          " outside table domain [" + std::to_string(k.xmin) +
                                          ", " +
                                          std::to_string(k.xmin +
                                                         static_cast<long long>(k.values.size()) -
                                                         1) +
                                          "]");
                    }
                    return k.values[static_cast<std::size_t>(i)];
                }
            },
            kind_);
    }

    /// True when every bond index in [lo, hi] can be evaluated.
    bool covers(long long lo, long long hi) const {
        if (const auto* t = std::get_if<Table>(&kind_)) {
            return lo >= t->xmin && hi < t->xmin + static_cast<long long>(t->values.size());
        }
        return true;
    }

    const auto& kind() const noexcept { return kind_; }

    /// Canonical text form in the profile grammar.
    std::string to_string() const {
        return std::visit(
            [](const auto& k) -> std::string {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, Abs>) {
                    return "abs";
                } else if constexpr (std::is_same_v<K, Linear>) {
                    return "linear:" + detail::format_real(k.a) + ":" + detail::format_real(k.b);
                } else if constexpr (std::is_same_v<K, Constant>) {
                    return "constant:" + detail::format_real(k.c);
                } else {
                    std::string s = "table:" + std::to_string(k.xmin) + ":";
                    for (std::size_t i = 0; i < k.values.size(); ++i) {
                        if (i) s += ',';
                        s += detail::format_real(k.values[i]);
                    }
                    return s;
                }
            },
            kind_);
    }

private:
    using Kind = std::variant<Abs, Linear, Constant, Table>;
    explicit CouplingProfile(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

/// Parses `abs`, `constant:<c>`, `linear:<a>:<b>` or `table:<xmin>:<v0,v1,...>`.
inline CouplingProfile parse_profile(std::string_view spec) {
    const auto parts = detail::split(spec, ':');
    const std::string_view head = parts.front();
    const std::string ctx = "profile '" + std::string(spec) + "'";
    if (head == "abs" && parts.size() == 1) return CouplingProfile::abs();
    if (head == "constant" && parts.size() == 2) {
        return CouplingProfile::constant(detail::parse_real(parts[1], ctx));
    }
    if (head == "linear" && parts.size() == 3) {
        return CouplingProfile::linear(detail::parse_real(parts[1], ctx),
                                       detail::parse_real(parts[2], ctx));
    }
    if (head == "table" && parts.size() == 3) {
        const long long xmin = detail::parse_integer(parts[1], ctx);
        std::vector<double> values;
        for (auto v : detail::split(parts[2], ',')) values.push_back(detail::parse_real(v, ctx));
        return CouplingProfile::table(xmin, std::move(values));
    }
    throw ParseError("unrecognised " + ctx +
                     " (expected abs | constant:<c> | linear:<a>:<b> | table:<xmin>:<v0,...>)");
}

/// The window [-n, n].
struct Volume {
    int n = 0;

    explicit Volume(int n_) : n(n_) {
        if (n_ < 0) throw DomainError("volume radius must be nonnegative");
    }

    int sites() const noexcept { return 2 * n + 1; }
    int first() const noexcept { return -n; }
    int last() const noexcept { return n; }
    bool contains(long long x) const noexcept { return x >= -n && x <= n; }
    std::size_t index(int x) const noexcept { return static_cast<std::size_t>(x + n); }

    friend bool operator==(const Volume&, const Volume&) = default;
};

/// Inverse temperature, strictly positive and finite.
class Beta {
public:
    explicit Beta(double b) : beta_(b) {
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw DomainError("beta must be positive and finite, got " + detail::format_real(b));
        }
    }
    double value() const noexcept { return beta_; }

private:
    double beta_;
};

/// Spins on [-n, n] plus the sign frozen on the complement.
class Configuration {
public:
    Configuration(Volume v, std::vector<Spin> spins, Spin boundary)
        : volume_(v), spins_(std::move(spins)), boundary_(boundary) {
        if (spins_.size() != static_cast<std::size_t>(v.sites())) {
            throw PreconditionError("configuration needs " + std::to_string(v.sites()) +
                                    " spins, got " + std::to_string(spins_.size()));
        }
        for (Spin s : spins_) {
            if (s != Spin::plus && s != Spin::minus) {
                throw PreconditionError("spin values must be +1 or -1");
            }
        }
    }

    static Configuration uniform(Volume v, Spin s, Spin boundary) {
        return Configuration(v, std::vector<Spin>(static_cast<std::size_t>(v.sites()), s),
                             boundary);
    }

    /// Site x = -n + i carries bit i of `bits` (set bit = minus).
    static Configuration from_bits(Volume v, std::uint64_t bits, Spin boundary) {
        std::vector<Spin> s(static_cast<std::size_t>(v.sites()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            s[i] = ((bits >> i) & 1U) ? Spin::minus : Spin::plus;
        }
        return Configuration(v, std::move(s), boundary);
    }

    const Volume& volume() const noexcept { return volume_; }
    Spin boundary() const noexcept { return boundary_; }
    const std::vector<Spin>& spins() const noexcept { return spins_; }

    /// Spin at any integer site; the boundary sign outside the window.
    Spin at(long long x) const noexcept {
        return volume_.contains(x) ? spins_[static_cast<std::size_t>(x + volume_.n)] : boundary_;
    }

    void set(int x, Spin s) {
        if (!volume_.contains(x)) throw DomainError("site " + std::to_string(x) + " outside volume");
        spins_[volume_.index(x)] = s;
    }

    std::string to_string() const {
        std::string s;
        for (Spin v : spins_) s += spin_char(v);
        s += " | ";
        s += spin_char(boundary_);
        return s;
    }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    Volume volume_;
    std::vector<Spin> spins_;
    Spin boundary_;
};

inline double eval_coupling(const CouplingProfile& profile, long long x) { return profile(x); }

/// Finite-volume energy: internal bonds -n+1..n plus the two bonds into the
/// frozen exterior, I_{-n} [s(-n) != b] + I_{n+1} [s(n) != b].
inline double boundary_energy(const Configuration& c, const CouplingProfile& profile) {
    const int n = c.volume().n;
    const auto& s = c.spins();
    double h = 0.0;
    if (s.front() != c.boundary()) h += profile(-n);
    for (int x = -n + 1; x <= n; ++x) {
        if (s[static_cast<std::size_t>(x - 1 + n)] != s[static_cast<std::size_t>(x + n)]) {
            h += profile(x);
        }
    }
    if (s.back() != c.boundary()) h += profile(n + 1);
    return h;
}

/// Negates every spin and the boundary sign.
inline Configuration flip_boundary(const Configuration& c) {
    std::vector<Spin> s(c.spins());
    for (auto& v : s) v = -v;
    return Configuration(c.volume(), std::move(s), -c.boundary());
}

struct GrowthViolation {
    long long n;
    long long r;
    double lhs;  // I_n + I_{n+r}

    friend bool operator==(const GrowthViolation&, const GrowthViolation&) = default;
};

/// All (n, r) with n_min <= n <= n_max, 1 <= r <= r_max and I_n + I_{n+r} < r.
inline std::vector<GrowthViolation> check_condition6(const CouplingProfile& profile,
                                                     long long n_min, long long n_max,
                                                     long long r_max) {
    if (n_min > n_max) throw PreconditionError("check_condition6: n_min > n_max");
    if (r_max < 1) throw PreconditionError("check_condition6: r_max must be >= 1");
    std::vector<GrowthViolation> out;
    for (long long n = n_min; n <= n_max; ++n) {
        const double in = profile(n);
        for (long long r = 1; r <= r_max; ++r) {
            const double lhs = in + profile(n + r);
            if (lhs < static_cast<double>(r)) out.push_back({n, r, lhs});
        }
    }
    return out;
}

}  // namespace ichain

#endif  // ICHAIN_MODEL_HPP
