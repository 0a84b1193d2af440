#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace magflow {

/// Real trigonometric polynomial on a D-dimensional product of circles.
///
/// A series is a finite sum  sum_k c_k exp(i * sum_d k_d w_d x_d)  with
/// hermitian coefficients (c_{-k} = conj(c_k)), stored once per {k,-k}
/// pair. The per-axis angular frequency w_d encodes the period
/// (w = 2*pi for period-1 chart axes, w = 1 for the fiber angle).
/// All derivatives are exact, term by term.
template <std::size_t D>
class TrigSeries {
public:
    using Wave = std::array<int, D>;

    explicit TrigSeries(std::array<double, D> angular = default_angular())
        : angular_(angular) {}

    static constexpr std::array<double, D> default_angular() {
        std::array<double, D> a{};
        for (std::size_t d = 0; d < D; ++d) a[d] = 2.0 * 3.14159265358979323846;
        return a;
    }

    /// Accumulate c * exp(i<k,wx>) + conj. Folds -k onto the canonical
    /// representative; the k = 0 term must be real (imag asserted small).
    void add(const Wave& k, std::complex<double> c);
    void add_cos(const Wave& k, double amp);  // amp * cos(<k,wx>)
    void add_sin(const Wave& k, double amp);  // amp * sin(<k,wx>)

    double value(const std::array<double, D>& x) const;
    void jet(const std::array<double, D>& x, double& value,
             std::array<double, D>& grad) const;
    void jet2(const std::array<double, D>& x, double& value,
              std::array<double, D>& grad,
              std::array<std::array<double, D>, D>& hess) const;

    /// Exact partial derivative as a new series.
    TrigSeries<D> derivative(std::size_t axis) const;

    /// Max |k_d| over stored terms.
    int degree(std::size_t axis) const;

    /// Mean value (the k = 0 coefficient).
    double mean() const;

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::array<double, D>& angular() const { return angular_; }

    struct Term {
        Wave k;
        std::complex<double> c;
    };
    const std::vector<Term>& terms() const { return terms_; }

private:
    static bool canonical(const Wave& k);  // first nonzero component > 0
    double phase(const Term& t, const std::array<double, D>& x) const;

    std::array<double, D> angular_;
    std::vector<Term> terms_;  // canonical half-spectrum, k = 0 first if present
};

using TrigSeries1 = TrigSeries<1>;
using TrigSeries2 = TrigSeries<2>;
using TrigSeries3 = TrigSeries<3>;

}  // namespace magflow
