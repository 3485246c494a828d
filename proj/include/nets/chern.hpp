#pragma once

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nets/linalg.hpp"
#include "nets/mpoly.hpp"
#include "nets/rational.hpp"

namespace nets {

// ---------------------------------------------------------------------------
// Finite graded quotient rings with an integration functional.
//
// The rings used here are Chow rings of iterated projective bundles:
// generators of degree one with nilpotency bounds, one generator carrying a
// projective-bundle relation expressing its first out-of-basis power in
// lower powers, and a one-entry integration table on the top-degree basis
// monomial.
// ---------------------------------------------------------------------------

class GradedRing;

/// Ring element stored on the monomial basis of its ring.
class ChowClass {
public:
    using Mono = std::vector<int>;

    ChowClass() : ring_(nullptr) {}
    explicit ChowClass(const GradedRing* ring) : ring_(ring) {}

    const GradedRing* ring() const { return ring_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Mono, Rational>& terms() const { return t_; }

    void add_term(const Mono& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    ChowClass operator-() const {
        ChowClass r(ring_);
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }
    ChowClass operator+(const ChowClass& o) const {
        check_ring(o);
        ChowClass r = *this;
        if (!r.ring_) r.ring_ = o.ring_;
        for (const auto& [m, c] : o.t_) r.add_term(m, c);
        return r;
    }
    ChowClass operator-(const ChowClass& o) const { return *this + (-o); }
    ChowClass operator*(const Rational& s) const {
        ChowClass r(ring_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
        return r;
    }
    ChowClass operator*(const ChowClass& o) const;  // reduced product
    ChowClass& operator+=(const ChowClass& o) { *this = *this + o; return *this; }
    ChowClass& operator-=(const ChowClass& o) { *this = *this - o; return *this; }
    ChowClass& operator*=(const ChowClass& o) { *this = *this * o; return *this; }

    bool operator==(const ChowClass& o) const { return t_ == o.t_; }

    int degree_of(const Mono& m) const;
    ChowClass component(int degree) const;
    ChowClass pow(int k) const;

    /// Inverse of a class with unit constant term (geometric series in the
    /// nilpotent part).
    ChowClass unit_inverse() const;

    std::string to_string() const;

private:
    void check_ring(const ChowClass& o) const {
        if (ring_ && o.ring_ && ring_ != o.ring_) throw std::invalid_argument("ChowClass: ring mismatch");
    }

    const GradedRing* ring_;
    std::map<Mono, Rational> t_;
};

/// Q[g_0, .., g_{n-1}] modulo nilpotency bounds and at most one
/// projective-bundle relation; all generators in degree one.
class GradedRing {
public:
    struct Generator {
        std::string name;
        int degree = 1;
        int max_power;  // largest exponent kept in the basis
    };

    GradedRing(std::vector<Generator> gens, int top_degree)
        : gens_(std::move(gens)), top_(top_degree) {}

    /// Installs the relation g_i^(max_power+1) = rhs.
    void set_power_relation(size_t i, ChowClass rhs) {
        relation_var_ = i;
        relation_rhs_ = std::move(rhs);
        has_relation_ = true;
    }
    /// Integration table entry: the top-degree basis monomial with unit
    /// integral (projective-bundle normalization).
    void set_integral_monomial(ChowClass::Mono m) { integral_mono_ = std::move(m); }

    size_t ngens() const { return gens_.size(); }
    const Generator& gen(size_t i) const { return gens_[i]; }
    int top_degree() const { return top_; }

    ChowClass zero() const { return ChowClass(this); }
    ChowClass one() const { return element({}, Rational(1)); }
    ChowClass generator(size_t i) const {
        ChowClass::Mono m(gens_.size(), 0);
        m[i] = 1;
        return element(m, Rational(1));
    }
    ChowClass element(ChowClass::Mono m, const Rational& c) const {
        m.resize(gens_.size(), 0);
        ChowClass r(this);
        reduce_into(r, m, c);
        return r;
    }

    int mono_degree(const ChowClass::Mono& m) const {
        int d = 0;
        for (size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
        return d;
    }

    Rational integrate(const ChowClass& a) const {
        Rational r(0);
        for (const auto& [m, c] : a.terms())
            if (m == integral_mono_) r += c;
        return r;
    }

    /// Reduces c·m to basis form, accumulating into out.
    void reduce_into(ChowClass& out, const ChowClass::Mono& m, const Rational& c) const {
        if (c.is_zero()) return;
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (m[i] <= gens_[i].max_power) continue;
            if (has_relation_ && i == relation_var_) {
                ChowClass::Mono rest = m;
                rest[relation_var_] -= gens_[i].max_power + 1;
                for (const auto& [rm, rc] : relation_rhs_.terms()) {
                    ChowClass::Mono prod = rest;
                    for (size_t j = 0; j < gens_.size(); ++j) prod[j] += rm[j];
                    reduce_into(out, prod, c * rc);
                }
                return;
            }
            return;  // nilpotent overflow: the term dies
        }
        out.add_term(m, c);
    }

private:
    std::vector<Generator> gens_;
    int top_;
    bool has_relation_ = false;
    size_t relation_var_ = 0;
    ChowClass relation_rhs_;
    ChowClass::Mono integral_mono_;
};

inline ChowClass ChowClass::operator*(const ChowClass& o) const {
    check_ring(o);
    const GradedRing* ring = ring_ ? ring_ : o.ring_;
    if (!ring) throw std::invalid_argument("ChowClass: product without a ring");
    ChowClass r(ring);
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            Mono m(m1.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
            ring->reduce_into(r, m, c1 * c2);
        }
    return r;
}

inline int ChowClass::degree_of(const Mono& m) const { return ring_->mono_degree(m); }

inline ChowClass ChowClass::component(int degree) const {
    ChowClass r(ring_);
    for (const auto& [m, c] : t_)
        if (ring_->mono_degree(m) == degree) r.t_.emplace(m, c);
    return r;
}

inline ChowClass ChowClass::pow(int k) const {
    if (!ring_) throw std::invalid_argument("ChowClass: pow without a ring");
    ChowClass r = ring_->one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

inline ChowClass ChowClass::unit_inverse() const {
    if (!ring_) throw std::invalid_argument("ChowClass: inverse without a ring");
    ChowClass one = ring_->one();
    ChowClass n = *this - one;  // nilpotent part
    if (component(0) != one.component(0)) throw std::domain_error("ChowClass: inverse needs unit constant term");
    ChowClass r = one, p = one;
    for (int k = 1; k <= ring_->top_degree(); ++k) {
        p = p * n;
        if (p.is_zero()) break;
        r = (k % 2 == 0) ? r + p : r - p;
    }
    return r;
}

inline std::string ChowClass::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
        if (!s.empty()) s += " + ";
        s += c.to_string();
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            s += "*" + ring_->gen(i).name;
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Total Chern classes and splitting-principle functors.
// ---------------------------------------------------------------------------

/// Total Chern class of a bundle: the inhomogeneous ring element
/// 1 + c_1 + ... + c_rank, with the rank carried along.
struct TotalChernClass {
    int rank;
    ChowClass total;

    ChowClass component(int k) const { return total.component(k); }
};

inline TotalChernClass total_of_line(const ChowClass& c1) {
    const GradedRing* ring = c1.ring();
    return {1, ring->one() + c1};
}

inline TotalChernClass whitney_sum(const TotalChernClass& a, const TotalChernClass& b) {
    return {a.rank + b.rank, a.total * b.total};
}

inline TotalChernClass dual_bundle(const TotalChernClass& a) {
    const GradedRing* ring = a.total.ring();
    ChowClass t = ring->zero();
    for (int k = 0; k <= ring->top_degree(); ++k) {
        ChowClass comp = a.total.component(k);
        t += (k % 2 == 0) ? comp : -comp;
    }
    return {a.rank, t};
}

/// c(E ⊗ L) for a line bundle L: c_k = sum_j C(rank-j, k-j) c_j(E) L^(k-j).
inline TotalChernClass tensor_line(const TotalChernClass& a, const ChowClass& line_c1) {
    const GradedRing* ring = a.total.ring();
    ChowClass t = ring->zero();
    for (int k = 0; k <= ring->top_degree(); ++k) {
        ChowClass ck = ring->zero();
        for (int j = 0; j <= k; ++j) {
            if (a.rank - j < k - j) continue;
            Rational b = binomial(static_cast<unsigned long>(a.rank - j), static_cast<unsigned long>(k - j));
            if (b.is_zero()) continue;
            ck += a.total.component(j) * line_c1.pow(k - j) * b;
        }
        t += ck;
    }
    return {a.rank, t};
}

namespace detail {

/// Reduces an MPoly in root variables 0..rank-1 and elementary symmetric
/// variables rank..2rank-1 to a polynomial in the elementaries alone.
/// Throws if the input was not symmetric in the roots.
inline MPoly eliminate_roots(MPoly p, int rank) {
    size_t n = p.nvars();
    auto E = [&](int i) { return MPoly::var(n, static_cast<size_t>(rank + i)); };
    auto R = [&](int i) { return MPoly::var(n, static_cast<size_t>(i)); };
    if (rank >= 2) {
        // last root = E1 - (other roots)
        MPoly last = E(0);
        for (int i = 0; i + 1 < rank; ++i) last = last - R(i);
        p = p.substituted(static_cast<size_t>(rank - 1), last);
    } else if (rank == 1) {
        p = p.substituted(0, E(0));
    }
    if (rank == 2) {
        p = p.reduced_by_power_rule(0, 2, E(0) * R(0) - E(1));
    } else if (rank == 3) {
        // r1^2 -> (E1 - r0) r1 - (E2 - E1 r0 + r0^2), then r0^3 -> ...
        MPoly rule1 = (E(0) - R(0)) * R(1) - (E(1) - E(0) * R(0) + R(0) * R(0));
        MPoly rule0 = E(0) * R(0) * R(0) - E(1) * R(0) + E(2);
        for (int pass = 0; pass < 16; ++pass) {
            bool busy = p.max_exponent(1) >= 2 || p.max_exponent(0) >= 3;
            if (!busy) break;
            p = p.reduced_by_power_rule(1, 2, rule1);
            p = p.reduced_by_power_rule(0, 3, rule0);
        }
    }
    for (int i = 0; i < rank; ++i)
        if (p.depends_on(static_cast<size_t>(i)))
            throw std::logic_error("eliminate_roots: expression not symmetric in the Chern roots");
    return p;
}

/// Total Chern class from formal output roots, each root a linear
/// combination of the input bundle's Chern roots.
inline TotalChernClass from_root_combinations(const TotalChernClass& a,
                                              const std::vector<std::vector<int>>& out_roots) {
    int rank = a.rank;
    size_t nv = static_cast<size_t>(2 * rank);
    MPoly prod = MPoly::constant(nv, Rational(1));
    for (const auto& v : out_roots) {
        MPoly lin = MPoly::constant(nv, Rational(1));
        for (int i = 0; i < rank; ++i)
            if (v[static_cast<size_t>(i)] != 0)
                lin = lin + MPoly::var(nv, static_cast<size_t>(i)) * Rational(v[static_cast<size_t>(i)]);
        prod = prod * lin;
    }
    MPoly sym = eliminate_roots(std::move(prod), rank);
    const GradedRing* ring = a.total.ring();
    ChowClass t = ring->zero();
    for (const auto& [m, c] : sym.terms()) {
        ChowClass term = ring->one() * c;
        for (int i = 0; i < rank; ++i) {
            int e = m[static_cast<size_t>(rank + i)];
            if (e > 0) term = term * a.total.component(i + 1).pow(e);
        }
        t += term;
    }
    return {static_cast<int>(out_roots.size()), t};
}

}  // namespace detail

/// Sym^2 for rank <= 3.
inline TotalChernClass sym2_bundle(const TotalChernClass& a) {
    std::vector<std::vector<int>> roots;
    int r = a.rank;
    if (r < 1 || r > 3) throw std::invalid_argument("sym2_bundle: rank must be 1..3");
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            std::vector<int> v(static_cast<size_t>(r), 0);
            v[static_cast<size_t>(i)] += 1;
            v[static_cast<size_t>(j)] += 1;
            roots.push_back(v);
        }
    return detail::from_root_combinations(a, roots);
}

/// Sym^d of a rank-2 bundle, d <= 4.
inline TotalChernClass sym_rank2_bundle(const TotalChernClass& a, int d) {
    if (a.rank != 2) throw std::invalid_argument("sym_rank2_bundle: rank must be 2");
    if (d < 1 || d > 4) throw std::invalid_argument("sym_rank2_bundle: d must be 1..4");
    std::vector<std::vector<int>> roots;
    for (int i = 0; i <= d; ++i) roots.push_back({d - i, i});
    return detail::from_root_combinations(a, roots);
}

/// Exterior square for rank 2 or 3.
inline TotalChernClass wedge2_bundle(const TotalChernClass& a) {
    int r = a.rank;
    if (r < 2 || r > 3) throw std::invalid_argument("wedge2_bundle: rank must be 2 or 3");
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            std::vector<int> v(static_cast<size_t>(r), 0);
            v[static_cast<size_t>(i)] = 1;
            v[static_cast<size_t>(j)] = 1;
            roots.push_back(v);
        }
    return detail::from_root_combinations(a, roots);
}

// ---------------------------------------------------------------------------
// The degree-six integration table on the Chow ring of the net variety,
// and the thirteen-class basis ring built on top of it.
// ---------------------------------------------------------------------------

/// Exponents of a monomial g1^i g2^j g3^k d2^l in the Chern classes
/// g_i = c_i of the dual rank-3 bundle and d2 = c_2 of the rank-2 bundle.
struct NetMonomial {
    int i = 0, j = 0, k = 0, l = 0;
    int degree() const { return i + 2 * j + 3 * k + 2 * l; }
    NetMonomial operator*(const NetMonomial& o) const { return {i + o.i, j + o.j, k + o.k, l + o.l}; }
    bool operator<(const NetMonomial& o) const {
        return std::array<int, 4>{i, j, k, l} < std::array<int, 4>{o.i, o.j, o.k, o.l};
    }
    bool operator==(const NetMonomial& o) const { return i == o.i && j == o.j && k == o.k && l == o.l; }
};

/// Integral over the net variety of a degree-six monomial; zero off degree
/// six. The fourteen nonzero values are pinned by the localization
/// cross-check in the test and acceptance suites.
inline Rational integrate_net_monomial(const NetMonomial& m) {
    if (m.degree() != 6) return Rational(0);
    static const std::map<std::array<int, 4>, long> table = {
        {{6, 0, 0, 0}, 57}, {{4, 1, 0, 0}, 27}, {{4, 0, 0, 1}, 18}, {{3, 0, 1, 0}, 5},
        {{2, 2, 0, 0}, 14}, {{2, 1, 0, 1}, 9},  {{2, 0, 0, 2}, 6},  {{1, 1, 1, 0}, 3},
        {{1, 0, 1, 1}, 2},  {{0, 3, 0, 0}, 9},  {{0, 2, 0, 1}, 5},  {{0, 1, 0, 2}, 3},
        {{0, 0, 2, 0}, 1},  {{0, 0, 0, 3}, 2},
    };
    auto it = table.find({m.i, m.j, m.k, m.l});
    if (it == table.end()) throw std::logic_error("integrate_net_monomial: missing degree-6 monomial");
    return Rational(it->second);
}

inline const std::vector<NetMonomial>& net_degree6_monomials() {
    static const std::vector<NetMonomial> all = [] {
        std::vector<NetMonomial> v;
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 3; ++j)
                for (int k = 0; k <= 2; ++k)
                    for (int l = 0; l <= 3; ++l)
                        if (NetMonomial{i, j, k, l}.degree() == 6) v.push_back({i, j, k, l});
        return v;
    }();
    return all;
}

/// The Chow ring of the net variety on its thirteen-class basis, with
/// multiplication recovered from the integration table through Poincare
/// duality. Elements are coordinate vectors on the basis.
class NetChowRing {
public:
    static constexpr int dim = 13;

    struct BasisClass {
        NetMonomial mono;
        Rational coeff;
        int degree;
    };

    NetChowRing() {
        const std::array<std::array<int, 4>, dim> exps = {{{0, 0, 0, 0},
                                                           {1, 0, 0, 0},
                                                           {2, 0, 0, 0},
                                                           {0, 1, 0, 0},
                                                           {0, 0, 0, 1},
                                                           {3, 0, 0, 0},
                                                           {1, 1, 0, 0},
                                                           {1, 0, 0, 1},
                                                           {4, 0, 0, 0},
                                                           {2, 1, 0, 0},
                                                           {2, 0, 0, 1},
                                                           {5, 0, 0, 0},
                                                           {6, 0, 0, 0}}};
        for (int a = 0; a < dim; ++a) {
            NetMonomial m{exps[static_cast<size_t>(a)][0], exps[static_cast<size_t>(a)][1],
                          exps[static_cast<size_t>(a)][2], exps[static_cast<size_t>(a)][3]};
            Rational c = (a >= 11) ? Rational(1, 57) : Rational(1);
            basis_[static_cast<size_t>(a)] = {m, c, m.degree()};
        }
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                pairing_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                    basis_[static_cast<size_t>(a)].coeff * basis_[static_cast<size_t>(b)].coeff *
                    integrate_net_monomial(basis_[static_cast<size_t>(a)].mono * basis_[static_cast<size_t>(b)].mono);
        // the full multiplication table, so the ring is immutable afterwards
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                const BasisClass& A = basis_[static_cast<size_t>(a)];
                const BasisClass& B = basis_[static_cast<size_t>(b)];
                products_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                    coords_of_monomial(A.mono * B.mono, A.coeff * B.coeff);
            }
    }

    const BasisClass& basis(int a) const { return basis_[static_cast<size_t>(a)]; }
    int basis_degree(int a) const { return basis_[static_cast<size_t>(a)].degree; }
    Rational pairing(int a, int b) const { return pairing_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    std::vector<int> basis_of_degree(int d) const {
        std::vector<int> v;
        for (int a = 0; a < dim; ++a)
            if (basis_degree(a) == d) v.push_back(a);
        return v;
    }

    /// Coordinates of c·mono on the basis; zero when the degree exceeds six.
    std::vector<Rational> coords_of_monomial(const NetMonomial& m, const Rational& c) const {
        std::vector<Rational> x(dim);
        int d = m.degree();
        if (c.is_zero() || d > 6) return x;
        std::vector<int> mine = basis_of_degree(d);
        std::vector<int> comp = basis_of_degree(6 - d);
        Matrix g(mine.size(), std::vector<Rational>(mine.size()));
        for (size_t r = 0; r < comp.size(); ++r)
            for (size_t cidx = 0; cidx < mine.size(); ++cidx)
                g[r][cidx] = pairing(mine[cidx], comp[r]);
        std::vector<Rational> rhs(comp.size());
        for (size_t r = 0; r < comp.size(); ++r) {
            const BasisClass& e = basis_[static_cast<size_t>(comp[r])];
            rhs[r] = c * e.coeff * integrate_net_monomial(m * e.mono);
        }
        std::vector<Rational> sol = solve_linear(g, rhs);
        for (size_t cidx = 0; cidx < mine.size(); ++cidx) x[static_cast<size_t>(mine[cidx])] = sol[cidx];
        return x;
    }

    /// Coordinates of the product of two basis classes.
    const std::vector<Rational>& basis_product(int a, int b) const {
        return products_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

    /// Integral of a coordinate vector: the pairing with the unit class.
    Rational integrate(const std::vector<Rational>& x) const {
        Rational r(0);
        for (int a = 0; a < dim; ++a) r += x[static_cast<size_t>(a)] * pairing(a, 0);
        return r;
    }

    std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        std::vector<Rational> r(dim);
        for (int a = 0; a < dim; ++a) {
            if (x[static_cast<size_t>(a)].is_zero()) continue;
            for (int b = 0; b < dim; ++b) {
                if (y[static_cast<size_t>(b)].is_zero()) continue;
                const auto& prod = basis_product(a, b);
                Rational f = x[static_cast<size_t>(a)] * y[static_cast<size_t>(b)];
                for (int cidx = 0; cidx < dim; ++cidx) r[static_cast<size_t>(cidx)] += f * prod[static_cast<size_t>(cidx)];
            }
        }
        return r;
    }

private:
    std::array<BasisClass, dim> basis_;
    std::array<std::array<Rational, dim>, dim> pairing_;
    std::array<std::array<std::vector<Rational>, dim>, dim> products_;
};

inline const NetChowRing& net_chow_ring() {
    static const NetChowRing ring;
    return ring;
}

}  // namespace nets
