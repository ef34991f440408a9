#ifndef SBS_DYNAMICS_HPP
#define SBS_DYNAMICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "sbs/error.hpp"
#include "sbs/scattering.hpp"

namespace sbs {

enum class DrivePort { optical_in, microwave_in };
enum class DriveKind { off, constant, tone, pulse };

/// Classical input field on one port, in the rotating frame of the
/// Langevin equations. A tone e^{-i nu t} probes the response at detunings
/// shifted by nu.
struct DriveSignal
{
    DriveKind kind = DriveKind::off;
    DrivePort port = DrivePort::optical_in;
    cplx amplitude{0.0, 0.0};
    double detuning = 0.0; // nu, tone only
    double t_on = 0.0;     // pulse only
    double t_off = 0.0;

    static DriveSignal constant(DrivePort port, cplx amplitude)
    {
        return {DriveKind::constant, port, amplitude};
    }
    static DriveSignal tone(DrivePort port, cplx amplitude, double detuning)
    {
        return {DriveKind::tone, port, amplitude, detuning};
    }
    static DriveSignal pulse(DrivePort port, cplx amplitude, double t_on, double t_off)
    {
        return {DriveKind::pulse, port, amplitude, 0.0, t_on, t_off};
    }

    cplx value(double t) const
    {
        switch (kind) {
        case DriveKind::off:
            return {};
        case DriveKind::constant:
            return amplitude;
        case DriveKind::tone:
            return amplitude * std::exp(cplx{0.0, -detuning * t});
        case DriveKind::pulse:
            return (t >= t_on && t < t_off) ? amplitude : cplx{};
        }
        return {};
    }
};

inline void validate(const DriveSignal& d)
{
    if (!std::isfinite(d.amplitude.real()) || !std::isfinite(d.amplitude.imag()))
        fail_validation("drive: amplitude must be finite");
    if (!std::isfinite(d.detuning))
        fail_validation("drive: detuning must be finite");
    if (d.kind == DriveKind::pulse && !(d.t_on < d.t_off))
        fail_validation("drive: pulse needs t_on < t_off (t_on=", d.t_on, ", t_off=", d.t_off, ")");
}

/// Mean-field time series. a_out and c_out follow from the input-output
/// relations at each sample.
struct Trace
{
    std::vector<double> times;
    std::vector<cplx> a;
    std::vector<cplx> b;
    std::vector<cplx> a_out;
    std::vector<cplx> c_out;

    std::size_t size() const { return times.size(); }
};

struct InitialState
{
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};
};

/// Largest rate that the step size has to resolve.
inline double fastest_rate(const ResonatorSpec& r, const DetuningConfig& det, cplx g0, double np,
                           std::span<const DriveSignal> drives)
{
    double rate = std::max({r.opt_total(), r.ac_total(), std::abs(g0) * std::sqrt(np),
                            std::abs(det.d_opt()), std::abs(det.d_ac()), std::abs(det.half_pump())});
    for (const auto& d : drives)
        if (d.kind == DriveKind::tone)
            rate = std::max(rate, std::abs(d.detuning));
    return rate;
}

/// Integrates the beam-splitter Langevin pair
///   i a' + (dw + i k) a + g0 sqrt(Np) b  = sqrt(2 k0) a_in
///   i b' + (dW + i G) b + g0* sqrt(Np) a = sqrt(2 G0) c_in
/// with classical RK4 at a fixed step. The step is T/ceil(T/dt) <= dt and
/// every `stride`-th state is recorded (the first and last always are).
inline Trace integrate(const ResonatorSpec& r, const DetuningConfig& det, cplx g0, double np,
                       std::span<const DriveSignal> drives, double t_end, double dt,
                       InitialState init = {}, std::size_t stride = 1)
{
    validate(r);
    for (const auto& d : drives)
        validate(d);
    if (!(np >= 0.0) || !std::isfinite(np))
        fail_validation("integrate: pump photon number ", np, " must be finite and >= 0");
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        fail_validation("integrate: T=", t_end, " must be positive");
    if (!(dt > 0.0))
        fail_validation("integrate: dt=", dt, " must be positive");
    if (stride == 0)
        fail_validation("integrate: stride must be >= 1");
    const double rate = fastest_rate(r, det, g0, np, drives);
    if (rate > 0.0 && !(dt < 0.1 / rate))
        fail_validation("integrate: dt=", dt, " violates the resolution guard dt < 0.1/", rate,
                        " = ", 0.1 / rate);

    const cplx i{0.0, 1.0};
    const cplx opt_pole = det.d_opt() + i * r.opt_total();
    const cplx ac_pole = det.d_ac() + i * r.ac_total();
    const cplx coupling = g0 * std::sqrt(np);
    const cplx coupling_c = std::conj(coupling);
    const double opt_port = std::sqrt(2.0 * r.opt_ext);
    const double ac_port = std::sqrt(2.0 * r.ac_ext);

    struct Inputs
    {
        cplx a_in, c_in;
    };
    const auto inputs = [&](double t) {
        Inputs in{};
        for (const auto& d : drives) {
            if (d.port == DrivePort::optical_in)
                in.a_in += d.value(t);
            else
                in.c_in += d.value(t);
        }
        return in;
    };
    using State = std::array<cplx, 2>;
    const auto rhs = [&](const State& x, const Inputs& in) -> State {
        return {i * (opt_pole * x[0] + coupling * x[1] - opt_port * in.a_in),
                i * (ac_pole * x[1] + coupling_c * x[0] - ac_port * in.c_in)};
    };

    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    const double h = t_end / static_cast<double>(steps);

    Trace tr;
    const std::size_t samples = steps / stride + 2;
    tr.times.reserve(samples);
    tr.a.reserve(samples);
    tr.b.reserve(samples);
    tr.a_out.reserve(samples);
    tr.c_out.reserve(samples);
    const auto record = [&](double t, const State& x) {
        const Inputs in = inputs(t);
        tr.times.push_back(t);
        tr.a.push_back(x[0]);
        tr.b.push_back(x[1]);
        tr.a_out.push_back(in.a_in - i * opt_port * x[0]);
        tr.c_out.push_back(in.c_in - i * ac_port * x[1]);
    };

    State x{init.a, init.b};
    record(0.0, x);
    for (std::size_t n = 0; n < steps; ++n) {
        const double t = h * static_cast<double>(n);
        const Inputs in0 = inputs(t);
        const Inputs in_mid = inputs(t + 0.5 * h);
        const Inputs in1 = inputs(t + h);

        const State k1 = rhs(x, in0);
        const State k2 = rhs({x[0] + 0.5 * h * k1[0], x[1] + 0.5 * h * k1[1]}, in_mid);
        const State k3 = rhs({x[0] + 0.5 * h * k2[0], x[1] + 0.5 * h * k2[1]}, in_mid);
        const State k4 = rhs({x[0] + h * k3[0], x[1] + h * k3[1]}, in1);
        for (int j = 0; j < 2; ++j)
            x[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);

        if (!std::isfinite(std::abs(x[0])) || !std::isfinite(std::abs(x[1])))
            throw NumericalError(detail::concat("integrate: non-finite state at t=", t + h));
        if ((n + 1) % stride == 0 || n + 1 == steps)
            record(h * static_cast<double>(n + 1), x);
    }
    return tr;
}

inline Trace integrate(const ResonatorSpec& r, const DetuningConfig& det, cplx g0, double np,
                       const std::vector<DriveSignal>& drives, double t_end, double dt,
                       InitialState init = {}, std::size_t stride = 1)
{
    return integrate(r, det, g0, np, std::span<const DriveSignal>(drives), t_end, dt, init, stride);
}

/// Complex eigenfrequencies of the undriven system. Each normal mode
/// evolves as exp(i Re(lambda) t) * exp(Im(lambda) t); they are the
/// eigenvalues of [[dw - i k, g*], [g, dW - i G]] with g = g0 sqrt(Np),
/// returned with the larger real part first.
inline std::array<cplx, 2> hybrid_eigenvalues(const ResonatorSpec& r, const DetuningConfig& det,
                                              cplx g0, double np)
{
    validate(r);
    if (!(np >= 0.0))
        fail_validation("hybrid_eigenvalues: Np must be >= 0");
    const cplx i{0.0, 1.0};
    const cplx opt = det.d_opt() - i * r.opt_total();
    const cplx ac = det.d_ac() - i * r.ac_total();
    const cplx mean = 0.5 * (opt + ac);
    const cplx half_diff = 0.5 * (opt - ac);
    const cplx root = std::sqrt(half_diff * half_diff + std::norm(g0) * np);
    std::array<cplx, 2> ev{mean + root, mean - root};
    if (ev[1].real() > ev[0].real())
        std::swap(ev[0], ev[1]);
    return ev;
}

} // namespace sbs

#endif // SBS_DYNAMICS_HPP
