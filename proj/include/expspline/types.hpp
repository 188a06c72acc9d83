#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace expspline {

using Cplx = std::complex<double>;

/// Thrown when an iterative evaluation fails to converge or a computed
/// quantity degenerates (distinct from precondition violations, which use
/// std::invalid_argument / std::domain_error).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Spline order z. The defining formulas require Re z > 1; operator orders
/// (fractional derivatives) only need Re z > 0 and are constructed through
/// operator_order(), which flags the relaxed constraint.
class ComplexOrder {
public:
    explicit ComplexOrder(Cplx value) : value_(value), relaxed_(false) {
        if (!(value.real() > 1.0))
            throw std::domain_error("ComplexOrder: Re z must be > 1, got Re z = " +
                                    std::to_string(value.real()));
        check_finite(value);
    }

    static ComplexOrder operator_order(Cplx value) {
        if (!(value.real() > 0.0))
            throw std::domain_error("ComplexOrder: operator order needs Re z > 0, got Re z = " +
                                    std::to_string(value.real()));
        check_finite(value);
        ComplexOrder o;
        o.value_ = value;
        o.relaxed_ = true;
        return o;
    }

    Cplx value() const { return value_; }
    bool relaxed() const { return relaxed_; }

private:
    ComplexOrder() : value_(2.0), relaxed_(false) {}
    static void check_finite(Cplx v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("ComplexOrder: components must be finite");
    }
    Cplx value_;
    bool relaxed_;
};

/// One complex exponential B-spline: order z (Re z > 1) and decay parameter
/// a >= 0. a = 0 reduces to the polynomial B-spline of complex order.
struct SplineSpec {
    ComplexOrder z;
    double a;

    SplineSpec(ComplexOrder order, double decay) : z(order), a(decay) {
        if (!(decay >= 0.0))
            throw std::domain_error("SplineSpec: a must be >= 0, got a = " + std::to_string(decay));
    }
    SplineSpec(Cplx order, double decay) : SplineSpec(ComplexOrder(order), decay) {}

    Cplx order() const { return z.value(); }
};

/// Two-parameter spline E_{(z,zeta)}^{(a,b)} = E_z^a * E_zeta^b.
struct BivariateSpec {
    ComplexOrder z;
    ComplexOrder zeta;
    double a;
    double b;

    BivariateSpec(ComplexOrder z_, ComplexOrder zeta_, double a_, double b_)
        : z(z_), zeta(zeta_), a(a_), b(b_) {
        if (!(a_ >= 0.0) || !(b_ >= 0.0))
            throw std::domain_error("BivariateSpec: parameters a, b must be >= 0");
    }
    BivariateSpec(Cplx z_, Cplx zeta_, double a_, double b_)
        : BivariateSpec(ComplexOrder(z_), ComplexOrder(zeta_), a_, b_) {}
};

} // namespace expspline
