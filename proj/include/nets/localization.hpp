#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nets/linalg.hpp"
#include "nets/rep_ring.hpp"

namespace nets {

/// One isolated fixpoint of a torus action on a smooth orbifold, with the
/// tangent representation, the automorphism order of the parametrized
/// object, and the fiber representations of the integrand bundles.
struct FixpointRecord {
    std::string id;
    int aut = 1;
    VirtualRep tangent;
    Character psi;  // cotangent-line character at the first marking (trivial when unused)
    std::map<std::string, VirtualRep> bundles;
};

struct WeightDegeneracy : std::runtime_error {
    explicit WeightDegeneracy(const std::string& fixpoint_id)
        : std::runtime_error("zero tangent weight at fixpoint " + fixpoint_id), fixpoint(fixpoint_id) {}
    std::string fixpoint;
};

/// Weight data of one fixpoint specialized at a one-parameter subgroup.
class LocalWeights {
public:
    LocalWeights(const FixpointRecord& rec, const WeightVector& w) : rec_(rec), w_(w) {
        psi_ = rec.psi.weight(w);
    }

    const std::string& id() const { return rec_.id; }
    int aut() const { return rec_.aut; }
    const Rational& psi() const { return psi_; }

    const std::vector<Rational>& bundle_weights(const std::string& name) const {
        auto it = cache_.find(name);
        if (it != cache_.end()) return it->second;
        auto b = rec_.bundles.find(name);
        if (b == rec_.bundles.end())
            throw std::invalid_argument("LocalWeights: no bundle '" + name + "' at " + rec_.id);
        if (!b->second.is_effective())
            throw std::logic_error("LocalWeights: bundle '" + name + "' is not effective at " + rec_.id);
        return cache_.emplace(name, b->second.effective_weights(w_)).first->second;
    }

    /// Equivariant Chern class c_k of a named bundle at this fixpoint.
    Rational chern(const std::string& name, size_t k) const {
        return elementary_symmetric(bundle_weights(name), k);
    }
    /// Euler class = top Chern class of a named bundle.
    Rational euler(const std::string& name) const {
        const auto& ws = bundle_weights(name);
        return elementary_symmetric(ws, ws.size());
    }

    /// Product of the tangent weights; throws WeightDegeneracy on a zero.
    Rational tangent_euler() const {
        if (!rec_.tangent.is_effective())
            throw std::logic_error("LocalWeights: virtual tangent representation at " + rec_.id);
        Rational prod(1);
        for (const auto& [wt, mult] : rec_.tangent.weights(w_)) {
            if (wt.is_zero()) throw WeightDegeneracy(rec_.id);
            prod *= wt.pow(mult);
        }
        return prod;
    }

private:
    const FixpointRecord& rec_;
    WeightVector w_;
    Rational psi_;
    mutable std::map<std::string, std::vector<Rational>> cache_;
};

/// Polynomial in equivariant Chern classes of the named bundles and the
/// cotangent-line class, evaluated per fixpoint. The degree is tracked so
/// callers can apply the dimension sieve.
struct IntegrandSpec {
    int degree = 0;
    std::function<Rational(const LocalWeights&)> eval;
};

/// Confirms every tangent weight is nonzero; returns the offending id otherwise.
inline std::optional<std::string> find_degenerate_weight(const std::vector<FixpointRecord>& points,
                                                         const WeightVector& w) {
    for (const FixpointRecord& p : points)
        for (const auto& [wt, mult] : p.tangent.weights(w))
            if (wt.is_zero()) return p.id;
    return std::nullopt;
}

inline bool validate_weights(const std::vector<FixpointRecord>& points, const WeightVector& w) {
    return !find_degenerate_weight(points, w).has_value();
}

/// Exact fixed-point residue sum:
///   sum over fixpoints of P(local weights) / (|Aut| * product of tangent weights).
inline Rational bott_integral(const std::vector<FixpointRecord>& points, const IntegrandSpec& integrand,
                              const WeightVector& w) {
    Rational total(0);
    for (const FixpointRecord& p : points) {
        LocalWeights lw(p, w);
        Rational num = integrand.eval(lw);
        if (num.is_zero()) {
            lw.tangent_euler();  // still enforce nondegeneracy
            continue;
        }
        total += num / (Rational(p.aut) * lw.tangent_euler());
    }
    return total;
}

}  // namespace nets
