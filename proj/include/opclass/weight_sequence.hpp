#pragma once
// Weight sequences for unilateral weighted shifts: a finite prefix followed
// by a constant or periodic tail. This restriction makes every class
// predicate exactly decidable. The scalar type is either double or Rational;
// rational mode keeps all weight algebra exact.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "opclass/errors.hpp"
#include "opclass/rational.hpp"

namespace opclass {

template <typename S>
struct ConstantTail {
    S value;
};

template <typename S>
struct PeriodicTail {
    std::vector<S> cycle;  // length >= 1
};

namespace detail {

inline bool scalar_positive(double x) { return std::isfinite(x) && x > 0.0; }
inline bool scalar_positive(const Rational& x) { return x > 0; }

// Equality used by the exact predicates. Rational mode is exact; floating
// mode allows 1e-12 relative slack since weights are input data.
inline bool scalar_eq(double a, double b) {
    if (a == b) return true;
    return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}
inline bool scalar_eq(const Rational& a, const Rational& b) { return a == b; }

inline bool scalar_le(double a, double b) { return a <= b || scalar_eq(a, b); }
inline bool scalar_le(const Rational& a, const Rational& b) { return a <= b; }

}  // namespace detail

template <typename S>
class BasicWeightSequence {
public:
    using Scalar = S;
    using Tail = std::variant<ConstantTail<S>, PeriodicTail<S>>;

    BasicWeightSequence(std::vector<S> prefix, Tail tail)
        : prefix_(std::move(prefix)), tail_(std::move(tail)) {
        for (const auto& w : prefix_)
            if (!detail::scalar_positive(w))
                throw InvalidWeightError("weight sequence: prefix weights must be positive");
        if (const auto* c = std::get_if<ConstantTail<S>>(&tail_)) {
            if (!detail::scalar_positive(c->value))
                throw InvalidWeightError("weight sequence: tail constant must be positive");
        } else {
            const auto& cyc = std::get<PeriodicTail<S>>(tail_).cycle;
            if (cyc.empty())
                throw InvalidWeightError("weight sequence: periodic tail needs a nonempty cycle");
            for (const auto& w : cyc)
                if (!detail::scalar_positive(w))
                    throw InvalidWeightError("weight sequence: cycle weights must be positive");
        }
    }

    static BasicWeightSequence constant(S value) {
        return BasicWeightSequence({}, ConstantTail<S>{std::move(value)});
    }

    const std::vector<S>& prefix() const { return prefix_; }
    const Tail& tail() const { return tail_; }

    bool tail_is_constant() const { return std::holds_alternative<ConstantTail<S>>(tail_); }

    // Tail period; 1 for a constant tail.
    std::size_t tail_period() const {
        if (const auto* p = std::get_if<PeriodicTail<S>>(&tail_)) return p->cycle.size();
        return 1;
    }

    // Total function: prefix value for j < len(prefix), tail rule beyond.
    const S& at(std::size_t j) const {
        if (j < prefix_.size()) return prefix_[j];
        if (const auto* c = std::get_if<ConstantTail<S>>(&tail_)) return c->value;
        const auto& cyc = std::get<PeriodicTail<S>>(tail_).cycle;
        return cyc[(j - prefix_.size()) % cyc.size()];
    }

    BasicWeightSequence scaled(const S& factor) const {
        if (!detail::scalar_positive(factor))
            throw InvalidWeightError("weight sequence: scale factor must be positive");
        std::vector<S> pre = prefix_;
        for (auto& w : pre) w = w * factor;
        if (const auto* c = std::get_if<ConstantTail<S>>(&tail_))
            return BasicWeightSequence(std::move(pre), ConstantTail<S>{c->value * factor});
        auto cyc = std::get<PeriodicTail<S>>(tail_).cycle;
        for (auto& w : cyc) w = w * factor;
        return BasicWeightSequence(std::move(pre), PeriodicTail<S>{std::move(cyc)});
    }

    std::vector<S> first(std::size_t count) const {
        std::vector<S> out;
        out.reserve(count);
        for (std::size_t j = 0; j < count; ++j) out.push_back(at(j));
        return out;
    }

private:
    std::vector<S> prefix_;
    Tail tail_;
};

using WeightSequence = BasicWeightSequence<double>;
using RationalWeightSequence = BasicWeightSequence<Rational>;

inline WeightSequence to_float_sequence(const RationalWeightSequence& w) {
    std::vector<double> pre;
    pre.reserve(w.prefix().size());
    for (const auto& x : w.prefix()) pre.push_back(to_double(x));
    if (w.tail_is_constant())
        return WeightSequence(std::move(pre),
                              ConstantTail<double>{to_double(std::get<ConstantTail<Rational>>(w.tail()).value)});
    std::vector<double> cyc;
    for (const auto& x : std::get<PeriodicTail<Rational>>(w.tail()).cycle)
        cyc.push_back(to_double(x));
    return WeightSequence(std::move(pre), PeriodicTail<double>{std::move(cyc)});
}

// Moment sequence: gamma_0 = 1, gamma_{k+1} = alpha_k^2 * gamma_k. Exact in
// rational mode.
template <typename S>
struct MomentSequence {
    std::vector<S> gammas;  // gamma_0 .. gamma_{k_max}
};

template <typename S>
MomentSequence<S> moments(const BasicWeightSequence<S>& w, std::size_t k_max) {
    MomentSequence<S> m;
    m.gammas.reserve(k_max + 1);
    m.gammas.push_back(S(1));
    for (std::size_t k = 0; k < k_max; ++k) {
        const S& a = w.at(k);
        m.gammas.push_back(a * a * m.gammas.back());
    }
    return m;
}

}  // namespace opclass
