// quadrature.cpp: Global adaptive Gauss–Kronrod 7/15

#include "nanogp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <string>

#include "nanogp/errors.hpp"

namespace nanogp::specfun {

namespace {

using Complex = std::complex<double>;

// Kronrod abscissae (positive half, descending) and weights; Gauss weights belong to the
// odd-indexed abscissae 1, 3, 5 and the centre 7.
constexpr std::array<double, 8> xgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> wgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a;
    double b;
    std::vector<Complex> est;
    std::vector<double> err;
    double badness;
};

struct ByBadness {
    bool operator()(const Interval* l, const Interval* r) const { return l->badness < r->badness; }
};

class Engine {
  public:
    Engine(const VectorIntegrand& f, int m, const QuadratureSpec& spec)
        : f_(f), m_(m), spec_(spec), buf_(m), total_(m), total_err_(m, 0.0) {}

    VectorQuadratureResult run(double a, double b) {
        std::deque<Interval> storage;
        std::priority_queue<Interval*, std::vector<Interval*>, ByBadness> heap;

        storage.push_back(evaluate(a, b));
        add(storage.back(), +1);
        storage.back().badness = badness(storage.back());
        heap.push(&storage.back());
        int intervals = 1;

        while (true) {
            if (converged()) {
                break;
            }
            if (intervals >= spec_.max_subdivisions || heap.empty()) {
                fail(intervals);
            }
            Interval* worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst->a + worst->b);
            if (!(mid > worst->a && mid < worst->b) || worst->badness == 0.0) {
                // cannot be refined further; leave it out of the queue
                continue;
            }
            add(*worst, -1);
            storage.push_back(evaluate(worst->a, mid));
            Interval* left = &storage.back();
            storage.push_back(evaluate(mid, worst->b));
            Interval* right = &storage.back();
            add(*left, +1);
            add(*right, +1);
            left->badness = badness(*left);
            right->badness = badness(*right);
            heap.push(left);
            heap.push(right);
            worst->est.clear();
            worst->err.clear();
            ++intervals;
        }
        VectorQuadratureResult out;
        out.value = total_;
        out.error = total_err_;
        out.subdivisions = intervals;
        return out;
    }

  private:
    Interval evaluate(double a, double b) {
        const double centre = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        std::vector<Complex> kron(m_, Complex{});
        std::vector<Complex> gauss(m_, Complex{});

        f_(centre, buf_);
        for (int i = 0; i < m_; ++i) {
            kron[i] += wgk[7] * buf_[i];
            gauss[i] += wg[3] * buf_[i];
        }
        for (int j = 0; j < 7; ++j) {
            const double dx = half * xgk[j];
            for (double x : {centre - dx, centre + dx}) {
                f_(x, buf_);
                for (int i = 0; i < m_; ++i) {
                    kron[i] += wgk[j] * buf_[i];
                    if (j % 2 == 1) {
                        gauss[i] += wg[j / 2] * buf_[i];
                    }
                }
            }
        }
        Interval iv{a, b, std::vector<Complex>(m_), std::vector<double>(m_), 0.0};
        for (int i = 0; i < m_; ++i) {
            iv.est[i] = kron[i] * half;
            iv.err[i] = std::abs((kron[i] - gauss[i]) * half);
        }
        return iv;
    }

    void add(const Interval& iv, int sign) {
        for (int i = 0; i < m_; ++i) {
            total_[i] += static_cast<double>(sign) * iv.est[i];
            total_err_[i] += static_cast<double>(sign) * iv.err[i];
        }
    }

    double tolerance(int i) const {
        return std::max(spec_.abs_tol, spec_.rel_tol * std::abs(total_[i]));
    }

    double badness(const Interval& iv) const {
        double worst = 0.0;
        for (int i = 0; i < m_; ++i) {
            if (iv.err[i] == 0.0) {
                continue;
            }
            const double tol = tolerance(i);
            worst = std::max(worst, tol > 0.0 ? iv.err[i] / tol
                                              : std::numeric_limits<double>::infinity());
        }
        return worst;
    }

    bool converged() const {
        for (int i = 0; i < m_; ++i) {
            if (total_err_[i] > tolerance(i)) {
                return false;
            }
        }
        return true;
    }

    [[noreturn]] void fail(int intervals) const {
        int worst = 0;
        double ratio = -1.0;
        for (int i = 0; i < m_; ++i) {
            const double tol = tolerance(i);
            const double r = tol > 0.0 ? total_err_[i] / tol : total_err_[i];
            if (r > ratio) {
                ratio = r;
                worst = i;
            }
        }
        throw ConvergenceError("adaptive_quadrature: tolerance not met after " +
                                   std::to_string(intervals) + " subdivisions (component " +
                                   std::to_string(worst) + ")",
                               total_[worst], total_err_[worst]);
    }

    const VectorIntegrand& f_;
    int m_;
    QuadratureSpec spec_;
    std::vector<Complex> buf_;
    std::vector<Complex> total_;
    std::vector<double> total_err_;
};

void validate(double a, double b, const QuadratureSpec& spec) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("adaptive_quadrature: need finite a < b");
    }
    if (!(spec.rel_tol > 0.0) || spec.abs_tol < 0.0 || spec.max_subdivisions < 1) {
        throw DomainError("adaptive_quadrature: invalid QuadratureSpec");
    }
}

} // namespace

VectorQuadratureResult adaptive_quadrature(const VectorIntegrand& f, int components, double a,
                                           double b, const QuadratureSpec& spec) {
    validate(a, b, spec);
    if (components < 1) {
        throw DomainError("adaptive_quadrature: need at least one component");
    }
    Engine engine(f, components, spec);
    return engine.run(a, b);
}

QuadratureResult adaptive_quadrature(const ScalarIntegrand& f, double a, double b,
                                     const QuadratureSpec& spec) {
    const VectorIntegrand wrapped = [&f](double x, std::span<Complex> out) { out[0] = f(x); };
    const auto r = adaptive_quadrature(wrapped, 1, a, b, spec);
    return {r.value[0], r.error[0], r.subdivisions};
}

} // namespace nanogp::specfun
