#pragma once

#include "tdc/potential.hpp"
#include "tdc/region.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdc {

/// Polynomial in the segment parameter u in [0, 1] (u = 0 at the tail).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    static Poly constant(const Rational& c);
    /// Affine: value a at u = 0, b at u = 1.
    static Poly linear(const Rational& a, const Rational& b);

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

    Rational operator()(const Rational& u) const;
    Poly derivative() const;
    /// Integral over [0, 1].
    Rational integral() const;
    /// p(offset + scale * u).
    Poly reparametrized(const Rational& offset, const Rational& scale) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct Bidegree {
    int p = 0;
    int q = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
    std::string to_string() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

/// Raised when an operation would leave bidegrees {0,1} x {0,1}.
class DegreeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A (p,q)-form on a scope with exact polynomial data per segment.
///   (0,0): the function along each segment; node values at member nodes.
///   (1,0): coefficient of d'x, x the arclength in the segment's direction.
///   (0,1): coefficient of d''x.
///   (1,1): density against the length measure, plus atoms at member nodes.
/// Data outside the scope is zero.
class Form {
public:
    static Form zero(const Scope& scope, Bidegree deg);
    /// Whole-graph (0,0)-form of a PL function.
    static Form function(const PLFunction& f);
    /// Whole-graph (1,1)-form of an atomic measure.
    static Form measure(const DiscreteMeasure& mu);

    Form(Scope scope, Bidegree deg, std::vector<Poly> segments, std::vector<Rational> nodes);

    const Scope& scope() const { return scope_; }
    Bidegree bidegree() const { return deg_; }
    const Poly& on_segment(std::size_t s) const { return segments_.at(s); }
    const std::vector<Poly>& segment_data() const { return segments_; }
    const Rational& at_node(std::size_t n) const { return nodes_.at(n); }
    const std::vector<Rational>& node_data() const { return nodes_; }

    /// Segment data read against orientation `sign` (+1 along, -1 reversed).
    /// Degree-one coefficients change sign under reversal.
    Poly on_segment(std::size_t s, int sign) const;

    bool is_zero() const;
    /// Zero on every leg segment; atoms may sit on any member node.
    bool is_compactly_supported() const;

    /// The same form on a finer subdivision.
    Form refined_to(const Subdivision::Ptr& finer) const;

    friend Form operator+(const Form& a, const Form& b);
    friend Form operator*(const Rational& s, const Form& f);
    friend bool operator==(const Form& a, const Form& b);

    /// Orientation table header, then `segment=data` and `node=value` lines
    /// for the nonzero entries.
    std::string to_text() const;

private:
    Scope scope_;
    Bidegree deg_;
    std::vector<Poly> segments_;
    std::vector<Rational> nodes_;
};

/// d'': (0,0) -> (0,1) and (1,0) -> (1,1). On (1,0) the atoms are the sums of
/// outgoing coefficients at member nodes. Throws DegreeError for q = 1.
Form d_second(const Form& w);

/// d': (0,0) -> (1,0) and (0,1) -> (1,1), with d' d'' = -d'' d'.
/// Throws DegreeError for p = 1.
Form d_prime(const Form& w);

/// Wedge product with graded-commutative signs. Forms on different
/// subdivisions of one graph are moved to the common refinement first and the
/// product lives on the intersection of the scopes.
Form wedge(const Form& a, const Form& b);

/// Total mass of a compactly supported (1,1)-form.
Rational integrate(const Form& w);

}  // namespace tdc
