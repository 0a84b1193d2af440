#include "magflow/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace magflow {

template <std::size_t D>
bool TrigSeries<D>::canonical(const Wave& k) {
    for (std::size_t d = 0; d < D; ++d) {
        if (k[d] > 0) return true;
        if (k[d] < 0) return false;
    }
    return true;  // k == 0
}

template <std::size_t D>
double TrigSeries<D>::phase(const Term& t, const std::array<double, D>& x) const {
    double p = 0.0;
    for (std::size_t d = 0; d < D; ++d) p += t.k[d] * angular_[d] * x[d];
    return p;
}

template <std::size_t D>
void TrigSeries<D>::add(const Wave& k, std::complex<double> c) {
    Wave kk = k;
    if (!canonical(kk)) {
        for (std::size_t d = 0; d < D; ++d) kk[d] = -kk[d];
        c = std::conj(c);
    }
    bool zero = true;
    for (std::size_t d = 0; d < D; ++d) zero = zero && kk[d] == 0;
    if (zero) c = std::complex<double>(c.real(), 0.0);
    for (auto& t : terms_) {
        if (t.k == kk) {
            t.c += c;
            return;
        }
    }
    terms_.push_back({kk, c});
}

template <std::size_t D>
void TrigSeries<D>::add_cos(const Wave& k, double amp) {
    add(k, std::complex<double>(amp / 2.0, 0.0));
    Wave mk;
    for (std::size_t d = 0; d < D; ++d) mk[d] = -k[d];
    if (mk != k) add(mk, std::complex<double>(amp / 2.0, 0.0));
}

template <std::size_t D>
void TrigSeries<D>::add_sin(const Wave& k, double amp) {
    // amp*sin = (amp/2i) e^{i} - (amp/2i) e^{-i}
    add(k, std::complex<double>(0.0, -amp / 2.0));
    Wave mk;
    for (std::size_t d = 0; d < D; ++d) mk[d] = -k[d];
    if (mk != k) add(mk, std::complex<double>(0.0, amp / 2.0));
}

template <std::size_t D>
double TrigSeries<D>::value(const std::array<double, D>& x) const {
    double v = 0.0;
    for (const auto& t : terms_) {
        const double p = phase(t, x);
        const double mult = canonical_is_zero(t.k) ? 1.0 : 2.0;
        v += mult * (t.c.real() * std::cos(p) - t.c.imag() * std::sin(p));
    }
    return v;
}

namespace {
template <std::size_t D>
bool is_zero_wave(const std::array<int, D>& k) {
    for (std::size_t d = 0; d < D; ++d)
        if (k[d] != 0) return false;
    return true;
}
}  // namespace

// small helper used above; kept out-of-line for clarity
template <std::size_t D>
static bool canonical_is_zero(const std::array<int, D>& k) {
    return is_zero_wave<D>(k);
}

template <std::size_t D>
void TrigSeries<D>::jet(const std::array<double, D>& x, double& value,
                        std::array<double, D>& grad) const {
    value = 0.0;
    grad.fill(0.0);
    for (const auto& t : terms_) {
        const double p = phase(t, x);
        const double mult = is_zero_wave<D>(t.k) ? 1.0 : 2.0;
        const double cp = std::cos(p), sp = std::sin(p);
        const double a = t.c.real(), b = t.c.imag();
        value += mult * (a * cp - b * sp);
        const double dv = -mult * (a * sp + b * cp);  // d/dp of (a cos - b sin)
        for (std::size_t d = 0; d < D; ++d) grad[d] += dv * t.k[d] * angular_[d];
    }
}

template <std::size_t D>
void TrigSeries<D>::jet2(const std::array<double, D>& x, double& value,
                         std::array<double, D>& grad,
                         std::array<std::array<double, D>, D>& hess) const {
    value = 0.0;
    grad.fill(0.0);
    for (auto& row : hess) row.fill(0.0);
    for (const auto& t : terms_) {
        const double p = phase(t, x);
        const double mult = is_zero_wave<D>(t.k) ? 1.0 : 2.0;
        const double cp = std::cos(p), sp = std::sin(p);
        const double a = t.c.real(), b = t.c.imag();
        const double v0 = mult * (a * cp - b * sp);
        const double v1 = -mult * (a * sp + b * cp);
        value += v0;
        for (std::size_t d = 0; d < D; ++d) {
            const double wd = t.k[d] * angular_[d];
            grad[d] += v1 * wd;
            for (std::size_t e = 0; e < D; ++e)
                hess[d][e] += -v0 * wd * t.k[e] * angular_[e];
        }
    }
}

template <std::size_t D>
TrigSeries<D> TrigSeries<D>::derivative(std::size_t axis) const {
    TrigSeries<D> out(angular_);
    for (const auto& t : terms_) {
        if (t.k[axis] == 0 && is_zero_wave<D>(t.k)) continue;
        const double w = t.k[axis] * angular_[axis];
        if (w == 0.0 && is_zero_wave<D>(t.k)) continue;
        // d/dx e^{ip} = i w e^{ip}; for the folded pair this stays hermitian.
        std::complex<double> c = t.c * std::complex<double>(0.0, w);
        if (c != std::complex<double>(0.0, 0.0)) out.add(t.k, c);
    }
    return out;
}

template <std::size_t D>
int TrigSeries<D>::degree(std::size_t axis) const {
    int deg = 0;
    for (const auto& t : terms_) deg = std::max(deg, std::abs(t.k[axis]));
    return deg;
}

template <std::size_t D>
double TrigSeries<D>::mean() const {
    for (const auto& t : terms_)
        if (is_zero_wave<D>(t.k)) return t.c.real();
    return 0.0;
}

template class TrigSeries<1>;
template class TrigSeries<2>;
template class TrigSeries<3>;

}  // namespace magflow
